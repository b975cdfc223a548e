#include <doctest.h>

#include "cherednik/checks.hpp"
#include "cherednik/verma.hpp"

using namespace cherednik;

namespace {

// (x^n v, x^n v) on A1: 8^n prod_{j <= n} (j + 2k [j odd]) for triv and
// (j - 2k [j odd]) for sgn, since (p - r p)/x is followed by r = -1 on V_sgn.
Rat a1_gram(bool sgn, const Rat& k, int n) {
  Rat g(1);
  for (int j = 1; j <= n; ++j)
    g *= Rat(8) * (Rat(j) + (j % 2 == 1 ? Rat(sgn ? -2 : 2) * k : Rat(0)));
  return g;
}

std::vector<Rat> random_k(Rng& rng, const RootSystem& rs) {
  std::vector<Rat> k{random_rat(rng, 12, 6)};
  if (rs.num_orbits == 2) k.push_back(random_rat(rng, 12, 6));
  return k;
}

VermaVector<QuadExt> random_vector(Rng& rng, const RootSystem& rs, const Irrep& chi, int n) {
  auto v = VermaVector<QuadExt>::zero(chi.dim);
  for (const Mono& e : monomials_of_degree(n, rs.rank))
    for (int j = 0; j < chi.dim; ++j)
      v.comp[j].add_term(e, random_quadext(rng, false));
  return v;
}

bool palindromic(const std::vector<std::size_t>& d) {
  return std::equal(d.begin(), d.end(), d.rbegin());
}

}  // namespace

TEST_CASE("A1 Gram entries match the product formula") {
  for (const char* chi : {"triv", "sgn"}) {
    const bool sgn = std::string(chi) == "sgn";
    for (const Rat& k : {Rat(-3, 2), Rat(1, 3), Rat(-1, 2), Rat(5)}) {
      for (int n = 0; n <= 6; ++n) {
        const auto g = gram_evaluated(RootType::A1, chi, {k}, n);
        REQUIRE(g.size == 1);
        CHECK(g.evaluated(0, 0) == QuadExt(a1_gram(sgn, k, n)));
        CHECK(g.rank == (a1_gram(sgn, k, n).is_zero() ? 0u : 1u));
      }
    }
  }
  const auto s = gram_symbolic(RootType::A1, "triv", 1);
  CHECK(s.symbolic_matrix(0, 0) == ParamPoly(8) + ParamPoly::var(0) * QuadExt(16));
  CHECK(gram_symbolic(RootType::A1, "sgn", 2).symbolic_matrix(0, 0) ==
        ParamPoly(8 * 8 * 2) * (ParamPoly(1) - ParamPoly::var(0) * QuadExt(2)));
}

TEST_CASE("Gram recursion agrees with the contravariant form computed directly") {
  Rng rng(50);
  for (RootType t : kAllTypes) {
    const RootSystem& rs = root_system(t);
    const auto kk = normalize_k(rs, random_k(rng, rs));
    const auto k = multiplicity_from(rs, kk);
    for (const auto& chi : irreps(t)) {
      GramSequence<QuadExt> seq(t, chi, k);
      for (int n = 0; n <= 3; ++n) {
        if (n > 0) seq.advance();
        const auto& g = seq.current();
        CHECK(g.is_symmetric());
        const auto monos = monomials_of_degree(n, rs.rank);
        for (const Mono& a : monos)
          for (int i = 0; i < chi.dim; ++i)
            for (const Mono& b : monos)
              for (int j = 0; j < chi.dim; ++j) {
                const auto u = VermaVector<QuadExt>::basis(chi.dim, a, i);
                const auto v = VermaVector<QuadExt>::basis(chi.dim, b, j);
                CHECK(g(mono_index(a) * chi.dim + i, mono_index(b) * chi.dim + j) ==
                      contravariant_form(rs, chi, u, v, k));
              }
      }
    }
  }
}

TEST_CASE("the contravariant form is W-invariant") {
  Rng rng(51);
  for (RootType t : kAllTypes) {
    const RootSystem& rs = root_system(t);
    const auto k = multiplicity_from(rs, normalize_k(rs, random_k(rng, rs)));
    for (const auto& chi : irreps(t)) {
      const auto u = random_vector(rng, rs, chi, 2), v = random_vector(rng, rs, chi, 2);
      const QuadExt base = contravariant_form(rs, chi, u, v, k);
      for (std::size_t w = 0; w < rs.order(); ++w)
        CHECK(contravariant_form(rs, chi, verma_act(rs, chi, w, u), verma_act(rs, chi, w, v), k) ==
              base);
    }
  }
}

TEST_CASE("distinct isotypic components of M_n are orthogonal") {
  Rng rng(52);
  for (RootType t : kAllTypes) {
    const RootSystem& rs = root_system(t);
    const auto k = multiplicity_from(rs, normalize_k(rs, random_k(rng, rs)));
    for (const auto& chi : irreps(t)) {
      GramSequence<QuadExt> seq(t, chi, k);
      for (int n = 1; n <= 3; ++n) {
        const auto& g = seq.advance();
        const auto& action = verma_w_action(t, chi, n);
        std::vector<Matrix<QuadExt>> proj;
        for (const auto& psi : irreps(t)) proj.push_back(isotypic_projector(rs, psi, action));
        for (std::size_t a = 0; a < proj.size(); ++a)
          for (std::size_t b = 0; b < proj.size(); ++b)
            if (a != b) CHECK((proj[a].transpose() * g * proj[b]).is_zero());
      }
    }
  }
}

TEST_CASE("radical rank does not depend on the spanning set") {
  // Spanning set {x^e (x) rho(w) e_j}: its Gram rank equals rank G_n.
  Rng rng(53);
  for (RootType t : {RootType::A2, RootType::B2}) {
    const RootSystem& rs = root_system(t);
    for (int trial = 0; trial < 3; ++trial) {
      const auto kk = normalize_k(rs, {Rat(-1, 2), Rat(-1, 2)});
      const auto k = multiplicity_from(rs, trial == 0 ? kk : normalize_k(rs, random_k(rng, rs)));
      for (const auto& chi : irreps(t)) {
        const int n = 2;
        std::vector<VermaVector<QuadExt>> span;
        for (const Mono& e : monomials_of_degree(n, rs.rank))
          for (std::size_t w = 0; w < rs.order(); w += 2)
            for (int j = 0; j < chi.dim; ++j) {
              auto v = VermaVector<QuadExt>::zero(chi.dim);
              for (int i = 0; i < chi.dim; ++i)
                v.comp[i].add_term(e, chi.rho[w](i, j));
              span.push_back(v);
            }
        Matrix<QuadExt> g(span.size(), span.size());
        for (std::size_t a = 0; a < span.size(); ++a)
          for (std::size_t b = 0; b < span.size(); ++b)
            g(a, b) = contravariant_form(rs, chi, span[a], span[b], k);
        GramSequence<QuadExt> seq(t, chi, k);
        seq.advance();
        CHECK(rank_over_field(g) == rank_over_field(seq.advance()));
      }
    }
  }
}

TEST_CASE("classification examples with known answers") {
  auto dims = [](RootType t, const char* chi, std::vector<Rat> k) {
    return classify(t, chi, k).graded_dims;
  };
  using V = std::vector<std::size_t>;
  // A1: dim L(triv, -1/2 - n) = 2n + 1, one dimension per degree.
  for (int n = 0; n <= 3; ++n)
    CHECK(dims(RootType::A1, "triv", {Rat(-1, 2) - Rat(n)}) == V(2 * n + 1, 1));
  CHECK(dims(RootType::A2, "triv", {Rat(-1, 3)}) == V{1});
  CHECK(dims(RootType::A2, "triv", {Rat(-4, 3)}) == V{1, 2, 3, 4, 3, 2, 1});
  CHECK(dims(RootType::A2, "sgn", {Rat(2, 3)}) == V{1, 2, 1});
  CHECK_FALSE(classify(RootType::A2, "triv", {Rat(-1)}).finite);
  CHECK(dims(RootType::B2, "triv", {Rat(-1, 2), Rat(-1, 2)}) == V{1, 2, 1});
  CHECK_FALSE(classify(RootType::B2, "triv", {Rat(1, 4), Rat(-5, 4)}).finite);
  CHECK_FALSE(classify(RootType::B2, "std", {Rat(1, 2), Rat(1, 2)}).finite);
  CHECK(dims(RootType::G2, "triv", {Rat(-1, 6), Rat(-1, 6)}) == V{1});

  const auto r = classify(RootType::A2, "triv", {Rat(-4, 3)});
  CHECK(r.m == 3);
  CHECK(r.dim == 16u);
  CHECK(r.b_chi == Rat(-3));
  CHECK(r.criterion == "both");
}

TEST_CASE("em criterion and Gram scan agree on rational grids") {
  struct Case {
    RootType t;
    std::vector<std::vector<Rat>> ks;
  };
  std::vector<Case> cases;
  {
    Case a1{RootType::A1, {}}, a2{RootType::A2, {}}, b2{RootType::B2, {}}, g2{RootType::G2, {}};
    for (int p = -12; p <= 4; ++p) a1.ks.push_back({Rat(p, 4)});
    for (int p = -10; p <= 4; ++p) a2.ks.push_back({Rat(p, 6)});
    for (int p = -4; p <= 1; ++p)
      for (int q = -4; q <= 1; ++q) b2.ks.push_back({Rat(p, 4), Rat(q, 4)});
    for (int p = -3; p <= 1; ++p)
      for (int q = -3; q <= 1; ++q) g2.ks.push_back({Rat(p, 6), Rat(q, 6)});
    cases = {a1, a2, b2, g2};
  }
  for (const auto& c : cases) {
    const RootSystem& rs = root_system(c.t);
    for (const auto& k : c.ks)
      for (const auto& chi : irreps(c.t)) {
        CAPTURE(type_label(c.t));
        CAPTURE(chi.label);
        CAPTURE(k.front().str());
        const auto em = em_criterion(c.t, chi.label, k);
        const int bound = em.m0 ? static_cast<int>(2 * *em.m0 + 4) : 10;
        const auto scan = graded_dims(c.t, chi.label, k, bound);
        CHECK(em.finite == scan.terminated);
        if (em.finite) {
          std::vector<std::size_t> d(scan.ranks.begin(), scan.ranks.end() - 1);
          CHECK(d.size() == static_cast<std::size_t>(2 * *em.m + 1));
          CHECK(palindromic(d));
          CHECK(d.front() == static_cast<std::size_t>(chi.dim));
          CHECK(em.b_chi == Rat(-*em.m));
          CHECK_NOTHROW(check_finite_structure(rs, chi, classify(c.t, chi.label, k)));
        }
      }
  }
}

TEST_CASE("graded dimensions are twist-invariant") {
  Rng rng(54);
  for (RootType t : kAllTypes) {
    const RootSystem& rs = root_system(t);
    for (int trial = 0; trial < 3; ++trial) {
      const auto k = normalize_k(rs, random_k(rng, rs));
      for (const auto& tau : irreps(t)) {
        if (tau.dim != 1) continue;
        auto kt = k;
        for (int i = 0; i < rs.num_orbits; ++i)
          if (tau.reflection_character[i] < 0) kt[i] = -kt[i];
        for (const auto& chi : irreps(t))
          CHECK(graded_dims(t, chi.label, k, 6).ranks ==
                graded_dims(t, tensor_with(t, chi, tau).label, kt, 6).ranks);
      }
    }
  }
}

TEST_CASE("symbolic Gram generic rank is full") {
  for (RootType t : kAllTypes)
    for (const auto& chi : irreps(t))
      for (int n = 0; n <= 2; ++n) {
        const auto g = gram_symbolic(t, chi.label, n);
        CHECK(g.rank == g.size);
        CHECK(g.nullity == 0);
        CHECK(g.symbolic_matrix.is_symmetric());
      }
  CHECK_THROWS_AS(gram_symbolic(RootType::A2, "triv", 4), unsupported_error);
}

TEST_CASE("ad(F)^n(p) against sigma(p)") {
  for (RootType t : kAllTypes) {
    CHECK(sigma_adF_check(t, 1, SigmaNormalization::as_stated));
    CHECK(sigma_adF_check(t, 3, SigmaNormalization::factorial));
    // Without the n! factor the identity already fails in degree 2.
    CHECK_FALSE(sigma_adF_check(t, 2, SigmaNormalization::as_stated));
  }
}

TEST_CASE("multiplicity validation") {
  const RootSystem& a1 = root_system(RootType::A1);
  const RootSystem& b2 = root_system(RootType::B2);
  CHECK(normalize_k(b2, {Rat(1, 3)}) == std::vector<Rat>{Rat(1, 3), Rat(1, 3)});
  CHECK(normalize_k(a1, {Rat(1, 3), Rat(1, 3)}) == std::vector<Rat>{Rat(1, 3)});
  CHECK_THROWS_AS(normalize_k(a1, {Rat(1, 3), Rat(1, 2)}), parse_error);
  CHECK_THROWS_AS(normalize_k(b2, {}), parse_error);
  CHECK_THROWS_AS(classify(RootType::A2, "tau", {Rat(1)}), parse_error);
}
