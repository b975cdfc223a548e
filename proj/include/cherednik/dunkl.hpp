#pragma once

// Dunkl operators on P and on M(chi) = P (x) V_chi, the sl(2)-triple
// (E, F, H), the Euler operator E(k), g_k, a_tau(k) and hbar.
//
// Operators are applied extensionally. S is QuadExt (evaluated
// multiplicities) or ParamPoly (symbolic, variables k1 and k2).

#include <vector>

#include "cherednik/polyalg.hpp"
#include "cherednik/rootsys.hpp"
#include "cherednik/wrep.hpp"

namespace cherednik {

Multiplicity<ParamPoly> symbolic_multiplicity();
Multiplicity<QuadExt> evaluated_multiplicity(const Rat& k1, const Rat& k2);

// Coordinate basis vector eps_i of a.
inline Vec2 basis_vector(int i) {
  Vec2 v{QuadExt(0), QuadExt(0)};
  v.at(i) = QuadExt(1);
  return v;
}

// (p - r_alpha p) / alpha.
template <class S>
MPoly<S> reflection_quotient(const RootSystem& rs, const PositiveRoot& a, const MPoly<S>& p) {
  auto q = try_div_linear(p - weyl_act(rs.elements[a.reflection], p), a.root);
  if (!q) throw invariant_violation("reflection difference not divisible by its root");
  return *q;
}

// T_y(k) p = d_y p + sum_{alpha > 0} k_alpha <alpha, y> (p - r_alpha p) / alpha.
template <class S>
MPoly<S> dunkl_apply(const RootSystem& rs, const Vec2& y, const MPoly<S>& p,
                     const Multiplicity<S>& k) {
  MPoly<S> out = p.directional(y);
  for (const auto& a : rs.positive) {
    QuadExt c = dot(a.root, y);
    if (c.is_zero() || k[a.orbit].is_zero()) continue;
    out += reflection_quotient(rs, a, p).scaled(k[a.orbit] * c);
  }
  return out;
}

// Element of M(chi): one polynomial per basis vector of V_chi.
template <class S>
struct VermaVector {
  std::vector<MPoly<S>> comp;

  static VermaVector zero(int dim) { return VermaVector{std::vector<MPoly<S>>(dim)}; }
  static VermaVector basis(int dim, const Mono& e, int j) {
    VermaVector v = zero(dim);
    v.comp[j] = MPoly<S>::monomial(e, S(QuadExt(1)));
    return v;
  }
  bool is_zero() const {
    for (const auto& p : comp)
      if (!p.is_zero()) return false;
    return true;
  }
  VermaVector& operator+=(const VermaVector& o) {
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
    return *this;
  }
  template <class C>
  VermaVector scaled(const C& c) const {
    VermaVector r = *this;
    for (auto& p : r.comp) p = p.scaled(c);
    return r;
  }
  friend bool operator==(const VermaVector& a, const VermaVector& b) { return a.comp == b.comp; }
};

// (T_y v)_i = d_y v_i + sum_alpha k_alpha <alpha, y> sum_j rho(r_alpha)_ij D_alpha(v_j).
template <class S>
VermaVector<S> dunkl_module_apply(const RootSystem& rs, const Irrep& chi, const Vec2& y,
                                  const VermaVector<S>& v, const Multiplicity<S>& k) {
  VermaVector<S> out = VermaVector<S>::zero(chi.dim);
  for (int i = 0; i < chi.dim; ++i) out.comp[i] = v.comp[i].directional(y);
  for (const auto& a : rs.positive) {
    QuadExt c = dot(a.root, y);
    if (c.is_zero() || k[a.orbit].is_zero()) continue;
    const auto& rho = chi.rho[a.reflection];
    for (int j = 0; j < chi.dim; ++j) {
      if (v.comp[j].is_zero()) continue;
      MPoly<S> d = reflection_quotient(rs, a, v.comp[j]).scaled(k[a.orbit] * c);
      for (int i = 0; i < chi.dim; ++i)
        if (!rho(i, j).is_zero()) out.comp[i] += d.scaled(rho(i, j));
    }
  }
  return out;
}

// a_tau(k) = sum_i k_i |R_i+| tau(r_i) / tau(1).
template <class S>
S a_tau(const RootSystem& rs, const Irrep& tau, const Multiplicity<S>& k) {
  S acc;
  for (int i = 0; i < rs.num_orbits; ++i)
    acc += k[i] * QuadExt(Rat(rs.orbit_size[i] * tau.reflection_character[i], tau.dim));
  return acc;
}

// b_chi(k) = l/2 + a_chi(k); hbar = b_triv(k).
template <class S>
S b_chi(const RootSystem& rs, const Irrep& chi, const Multiplicity<S>& k) {
  return S(QuadExt(Rat(rs.rank, 2))) + a_tau(rs, chi, k);
}

template <class S>
S hbar(const RootSystem& rs, const Multiplicity<S>& k) {
  return b_chi(rs, irreps(rs.type).front(), k);
}

// E = 1/2 sum z_i^2, F = -1/2 sum T_{B(z_i)}^2 over a B*-orthonormal frame z,
// written without the frame: F = -1/2 sum_kl B*_kl T_k T_l with T_k the Dunkl
// operator along eps_k, and E(k) = sum_j x_j T_j.
template <class S>
class Sl2Triple {
 public:
  Sl2Triple(const RootSystem& rs, Multiplicity<S> k)
      : rs_(&rs), k_(std::move(k)), e_(rs.invariants.front().template cast<S>()) {}

  const MPoly<S>& E() const { return e_; }
  const Multiplicity<S>& k() const { return k_; }

  MPoly<S> T(int i, const MPoly<S>& p) const { return dunkl_apply(*rs_, basis_vector(i), p, k_); }

  MPoly<S> apply_E(const MPoly<S>& p) const { return e_ * p; }

  MPoly<S> apply_F(const MPoly<S>& p) const {
    std::vector<MPoly<S>> t;
    for (int l = 0; l < rs_->rank; ++l) t.push_back(T(l, p));
    MPoly<S> out;
    for (int i = 0; i < rs_->rank; ++i) {
      MPoly<S> u;
      for (int l = 0; l < rs_->rank; ++l)
        if (!rs_->metric(i, l).is_zero()) u += t[l].scaled(rs_->metric(i, l));
      out += T(i, u);
    }
    return out.scaled(QuadExt(Rat(-1, 2)));
  }

  // H = [E, F].
  MPoly<S> apply_H(const MPoly<S>& p) const { return apply_E(apply_F(p)) - apply_F(apply_E(p)); }

  MPoly<S> euler(const MPoly<S>& p) const {
    MPoly<S> out;
    for (int j = 0; j < rs_->rank; ++j) out += MPoly<S>::variable(j) * T(j, p);
    return out;
  }

  // g_k = l/2 + sum_{alpha > 0} k_alpha r_alpha.
  MPoly<S> g_k(const MPoly<S>& p) const {
    MPoly<S> out = p.scaled(QuadExt(Rat(rs_->rank, 2)));
    for (const auto& a : rs_->positive)
      if (!k_[a.orbit].is_zero()) out += weyl_act(rs_->elements[a.reflection], p).scaled(k_[a.orbit]);
    return out;
  }

 private:
  const RootSystem* rs_;
  Multiplicity<S> k_;
  MPoly<S> e_;
};

// Per-type closed form of hbar as a polynomial in (k1, k2):
// A1: 1/2 + k, A2: 3k + 1, B2: 2(k1 + k2) + 1, G2: 1 + 3(k1 + k2).
ParamPoly hbar_formula(RootType type);

// Throws invariant_violation unless l/2 + a_triv(k) and -F(E) both equal
// hbar_formula(type) symbolically.
void check_hbar_calibration(RootType type);

}  // namespace cherednik
