#include <doctest.h>

#include "cherednik/checks.hpp"
#include "cherednik/rank2.hpp"
#include "cherednik/verma.hpp"

using namespace cherednik;

namespace {

constexpr std::array<RootType, 3> kRank2{RootType::A2, RootType::B2, RootType::G2};

int r_max(RootType t, int n) { return t == RootType::B2 ? n / 2 : n / 3; }

std::vector<std::vector<Rat>> grid(RootType t) {
  std::vector<std::vector<Rat>> ks;
  if (t == RootType::A1 || t == RootType::A2) {
    for (int p = -14; p <= 4; ++p) ks.push_back({Rat(p, 6)});
  } else if (t == RootType::B2) {
    for (int p = -6; p <= 1; ++p)
      for (int q = -6; q <= 1; ++q) ks.push_back({Rat(p, 4), Rat(q, 4)});
  } else {
    for (int p = -5; p <= 1; ++p)
      for (int q = -5; q <= 1; ++q) ks.push_back({Rat(p, 6), Rat(q, 6)});
  }
  return ks;
}

}  // namespace

TEST_CASE("P_{n,r}: recursion equals closed form") {
  for (RootType t : kRank2)
    for (int n = 0; n <= 9; ++n)
      for (int r = 0; r <= r_max(t, n); ++r) {
        CAPTURE(type_label(t));
        CAPTURE(n);
        CAPTURE(r);
        CHECK(pnr(t, n, r) == pnr_closed(t, n, r));
      }
  CHECK(pnr(RootType::A2, 2, 1).is_zero());
  CHECK_THROWS_AS(pnr(RootType::A1, 2, 0), unsupported_error);
}

TEST_CASE("P_{n,r}: recursion equals direct Dunkl computation") {
  Rng rng(60);
  for (RootType t : kRank2) {
    const RootSystem& rs = root_system(t);
    for (int trial = 0; trial < 2; ++trial) {
      std::vector<Rat> k{random_rat(rng, 9, 4)};
      if (rs.num_orbits == 2) k.push_back(random_rat(rng, 9, 4));
      const auto [u, v] = table_point(t, k);
      for (int n = 0; n <= 4; ++n)
        for (int r = 0; r <= r_max(t, n); ++r) CHECK(pnr_direct(t, n, r, k) == pnr(t, n, r).eval(u, v));
    }
  }
}

TEST_CASE("P_{n,0} = F^n(E^n) is (-1)^n n! prod (hbar + i)") {
  for (RootType t : kRank2) {
    const auto names = table_variable_names(t);
    const int h = names[0] == "hbar" ? 0 : 1;
    const ParamPoly hb = ParamPoly::var(h);
    ParamPoly expected(1);
    for (int n = 1; n <= 6; ++n) {
      expected *= (hb + ParamPoly(n - 1)) * ParamPoly(-n);
      CHECK(pnr(t, n, 0) == expected);
    }
  }
}

TEST_CASE("phi_r: small cases and agreement with the conjectured closed form") {
  const ParamPoly kappa = ParamPoly::var(0), one(1);
  CHECK(phi(1) == kappa);
  CHECK(phi(2) == kappa * kappa - one);
  CHECK(phi(3) == kappa * (kappa * kappa - ParamPoly(4)));
  for (int r = 1; r <= 13; ++r) CHECK(phi(r) == phi_conjectured(r));
}

TEST_CASE("conjecture check reports the verified range") {
  const auto c = conjecture62_check(15);
  CHECK(c.max_q == 15);
  CHECK(c.verified_up_to == 31);
  CHECK_FALSE(c.first_failure.has_value());
  CHECK(conjecture62_check(0).verified_up_to == 1);
}

TEST_CASE("very_singular agrees with the Gram classifier for triv") {
  for (RootType t : kAllTypes)
    for (const auto& k : grid(t)) {
      CAPTURE(type_label(t));
      CAPTURE(k.front().str());
      CAPTURE(k.back().str());
      const auto vs = very_singular(t, k);
      const auto cl = classify(t, "triv", k);
      CHECK(vs.is_very_singular == cl.finite);
      if (cl.finite) CHECK(vs.m == cl.m);
    }
}

TEST_CASE("finite_dim_table agrees with the classifier for every irrep") {
  for (RootType t : kAllTypes) {
    const auto ks = grid(t);
    for (std::size_t i = 0; i < ks.size(); i += 3) {
      const auto table = finite_dim_table(t, ks[i]);
      REQUIRE(table.size() == irreps(t).size());
      for (const auto& e : table) {
        const auto cl = classify(t, e.chi, ks[i]);
        CHECK(e.finite == cl.finite);
        if (e.finite) CHECK(e.m == cl.m);
        if (irrep(t, e.chi).dim == 2) CHECK_FALSE(e.finite);
      }
    }
  }
}

TEST_CASE("very_singular examples") {
  // A2: hbar = 3k + 1 = -m with m != 2 (mod 3).
  CHECK(very_singular(RootType::A2, {Rat(-1, 3)}).m == 0);
  CHECK(very_singular(RootType::A2, {Rat(-4, 3)}).m == 3);
  CHECK_FALSE(very_singular(RootType::A2, {Rat(-1)}).is_very_singular);
  // B2 with hbar = -1 needs k1 = -1/2.
  CHECK(very_singular(RootType::B2, {Rat(-1, 2), Rat(-1, 2)}).is_very_singular);
  CHECK_FALSE(very_singular(RootType::B2, {Rat(-1), Rat(0)}).is_very_singular);
  // G2 with n = m + 1 divisible by 3 goes through phi_r.
  const auto g = very_singular(RootType::G2, {Rat(-1, 2), Rat(-1, 2)});
  CHECK(g.conditional);
  CHECK_FALSE(very_singular(RootType::G2, {Rat(1), Rat(1)}).is_very_singular);
}

TEST_CASE("singular multiplicities for constant k") {
  CHECK(singular_reference(RootType::A2, {Rat(-1, 3)}) == SingularRef::singular);
  CHECK(singular_reference(RootType::A2, {Rat(-1, 2)}) == SingularRef::singular);
  CHECK(singular_reference(RootType::A2, {Rat(-1, 4)}) == SingularRef::regular);
  CHECK(singular_reference(RootType::A2, {Rat(-1)}) == SingularRef::regular);
  CHECK(singular_reference(RootType::A2, {Rat(1, 3)}) == SingularRef::regular);
  CHECK(singular_reference(RootType::B2, {Rat(-1, 4), Rat(-1, 4)}) == SingularRef::singular);
  CHECK(singular_reference(RootType::B2, {Rat(-1, 4), Rat(-1, 2)}) == SingularRef::not_covered);
  CHECK(to_string(SingularRef::not_covered) == "not covered");
}
