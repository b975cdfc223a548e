#include "cherednik/checks.hpp"

namespace cherednik {

Rat random_rat(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  return Rat(num(rng), den(rng));
}

QuadExt random_quadext(Rng& rng, bool with_sqrt3) {
  return QuadExt(random_rat(rng, 5, 4), with_sqrt3 ? random_rat(rng, 3, 2) : Rat(0));
}

Vec2 random_vec(Rng& rng, const RootSystem& rs) {
  const bool s3 = rs.type == RootType::A2 || rs.type == RootType::G2;
  Vec2 v{random_quadext(rng, s3), QuadExt(0)};
  if (rs.rank == 2) v[1] = random_quadext(rng, s3);
  return v;
}

std::vector<Mono> monomials_up_to(const RootSystem& rs, int d) {
  std::vector<Mono> out;
  for (int n = 0; n <= d; ++n)
    for (const Mono& e : monomials_of_degree(n, rs.rank)) out.push_back(e);
  return out;
}

QPoly random_qpoly(Rng& rng, const RootSystem& rs, int max_degree) {
  std::bernoulli_distribution keep(0.6);
  QPoly p;
  for (const Mono& e : monomials_up_to(rs, max_degree))
    if (keep(rng)) p.add_term(e, QuadExt(random_rat(rng, 6, 3)));
  if (p.is_zero()) p.add_term(monomials_of_degree(max_degree, rs.rank).front(), QuadExt(1));
  return p;
}

KPoly random_kpoly(Rng& rng, const RootSystem& rs, int max_degree) {
  return random_qpoly(rng, rs, max_degree).cast<ParamPoly>();
}

namespace {

KPoly mono(const Mono& e) { return KPoly::monomial(e, ParamPoly(1)); }

std::string describe(const RootSystem& rs, const std::string& what, const KPoly& p) {
  return type_label(rs.type) + ": " + what + " fails on " + p.str();
}

}  // namespace

std::string check_dunkl_commutativity(const RootSystem& rs, Rng& rng, int trials, int max_degree) {
  const auto k = symbolic_multiplicity();
  for (int t = 0; t < trials; ++t) {
    const Vec2 y = random_vec(rng, rs), z = random_vec(rng, rs);
    const KPoly p = random_kpoly(rng, rs, max_degree);
    const KPoly a = dunkl_apply(rs, y, dunkl_apply(rs, z, p, k), k);
    const KPoly b = dunkl_apply(rs, z, dunkl_apply(rs, y, p, k), k);
    if (!(a == b)) return describe(rs, "[T_y, T_y'] = 0", p);
  }
  return {};
}

std::string check_relation1(const RootSystem& rs, int max_degree) {
  const auto k = symbolic_multiplicity();
  for (int yi = 0; yi < rs.rank; ++yi)
    for (int xi = 0; xi < rs.rank; ++xi) {
      const Vec2 y = basis_vector(yi), x = basis_vector(xi);
      const KPoly xp = KPoly::variable(xi);
      for (const Mono& e : monomials_up_to(rs, max_degree)) {
        const KPoly p = mono(e);
        const KPoly lhs = dunkl_apply(rs, y, xp * p, k) - xp * dunkl_apply(rs, y, p, k);
        KPoly rhs = p.scaled(dot(y, x));
        // alpha and -alpha contribute equally to the sum over R.
        for (const auto& a : rs.positive) {
          const QuadExt c = dot(y, a.root) * dot(a.coroot, x);
          if (c.is_zero()) continue;
          rhs += weyl_act(rs.elements[a.reflection], p).scaled(k[a.orbit] * c);
        }
        if (!(lhs == rhs)) return describe(rs, "relation 1", p);
      }
    }
  return {};
}

std::string check_relation3(const RootSystem& rs, int max_degree) {
  const auto k = symbolic_multiplicity();
  for (std::size_t w = 0; w < rs.order(); ++w) {
    const Mat2& g = rs.elements[w];
    const Mat2& ginv = rs.elements[rs.inverse[w]];
    for (int yi = 0; yi < rs.rank; ++yi) {
      const Vec2 y = basis_vector(yi);
      for (const Mono& e : monomials_up_to(rs, max_degree)) {
        const KPoly p = mono(e);
        const KPoly lhs = weyl_act(g, dunkl_apply(rs, y, weyl_act(ginv, p), k));
        const KPoly rhs = dunkl_apply(rs, g.apply(y), p, k);
        if (!(lhs == rhs)) return describe(rs, "relation 3", p);
      }
    }
  }
  return {};
}

std::string check_sl2(const RootSystem& rs, int max_degree) {
  const Sl2Triple<ParamPoly> s(rs, symbolic_multiplicity());
  for (const Mono& e : monomials_up_to(rs, max_degree)) {
    const KPoly p = mono(e);
    const KPoly hp = s.apply_H(p);
    if (!(hp == s.euler(p) + s.g_k(p))) return describe(rs, "H = E(k) + g_k", p);
    const KPoly he = s.apply_H(s.apply_E(p)) - s.apply_E(hp);
    if (!(he == s.apply_E(p).scaled(QuadExt(2)))) return describe(rs, "[H, E] = 2E", p);
    const KPoly hf = s.apply_H(s.apply_F(p)) - s.apply_F(hp);
    if (!(hf == s.apply_F(p).scaled(QuadExt(-2)))) return describe(rs, "[H, F] = -2F", p);
  }
  return {};
}

std::string check_F_equivariance(const RootSystem& rs, int max_degree) {
  const Sl2Triple<ParamPoly> s(rs, symbolic_multiplicity());
  for (const Mono& e : monomials_up_to(rs, max_degree)) {
    const KPoly p = mono(e);
    for (const Mat2& g : rs.elements)
      if (!(s.apply_F(weyl_act(g, p)) == weyl_act(g, s.apply_F(p))))
        return describe(rs, "F w = w F", p);
  }
  return {};
}

std::string check_power_contraction(const RootSystem& rs, int p_max) {
  const auto k = symbolic_multiplicity();
  const Sl2Triple<ParamPoly> s(rs, k);
  const ParamPoly h = hbar(rs, k);
  KPoly power = s.E();
  for (int p = 0; p <= p_max; ++p) {
    KPoly x = power;
    for (int i = 0; i <= p; ++i) x = s.apply_F(x);
    ParamPoly expected(p % 2 == 0 ? -1 : 1);
    for (int i = 0; i <= p; ++i) expected *= (h + ParamPoly(i)) * ParamPoly(i + 1);
    if (!(x == KPoly::constant(expected)))
      return type_label(rs.type) + ": F^(p+1)(E^(p+1)) closed form fails at p = " + std::to_string(p) + ": got " +
             x.str();
    power = power * s.E();
  }
  return {};
}

}  // namespace cherednik
