#pragma once

// The graded polynomial algebra P = S(a*) in at most two variables x1, x2,
// with coefficients in QuadExt (evaluated multiplicities) or ParamPoly
// (symbolic multiplicities).

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/scalars.hpp"
#include "cherednik/vec2.hpp"

namespace cherednik {

using Mono = Exp2;

inline int mono_degree(const Mono& e) { return e[0] + e[1]; }

// Monomials of degree n in graded-lex order: x1^n, x1^(n-1) x2, ..., x2^n.
// For rank 1 only x1^n.
std::vector<Mono> monomials_of_degree(int n, int rank);

template <class S>
class MPoly {
 public:
  using Terms = std::map<Mono, S, GradedOrder>;

  MPoly() = default;

  static MPoly constant(const S& c) { return monomial({0, 0}, c); }
  static MPoly monomial(const Mono& e, const S& c) {
    MPoly p;
    p.add_term(e, c);
    return p;
  }
  static MPoly variable(int i) {
    Mono e{0, 0};
    e.at(i) = 1;
    return monomial(e, S(QuadExt(1)));
  }
  // c[0] x1 + c[1] x2
  static MPoly linear_form(const Vec2& c) {
    MPoly p;
    p.add_term({1, 0}, S(c[0]));
    p.add_term({0, 1}, S(c[1]));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : mono_degree(terms_.rbegin()->first); }
  int min_degree() const { return terms_.empty() ? -1 : mono_degree(terms_.begin()->first); }
  bool is_homogeneous() const { return degree() == min_degree(); }

  S coeff(const Mono& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S() : it->second;
  }

  void add_term(const Mono& e, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly homogeneous_part(int d) const {
    MPoly r;
    for (const auto& [e, c] : terms_)
      if (mono_degree(e) == d) r.terms_.emplace(e, c);
    return r;
  }

  MPoly partial(int i) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Mono f = e;
      --f[i];
      r.add_term(f, c * QuadExt(e[i]));
    }
    return r;
  }

  // Directional derivative along y in a.
  MPoly directional(const Vec2& y) const {
    MPoly r;
    if (!y[0].is_zero()) r += partial(0).scaled(y[0]);
    if (!y[1].is_zero()) r += partial(1).scaled(y[1]);
    return r;
  }

  template <class C>
  MPoly scaled(const C& c) const {
    MPoly r;
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
  }

  template <class U>
  MPoly<U> cast() const {
    MPoly<U> r;
    for (const auto& [e, c] : terms_) r.add_term(e, U(c));
    return r;
  }

  MPoly pow(int n) const {
    MPoly r = constant(S(QuadExt(1)));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (int i = 0; i < 2; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string coef = coefficient_str(c);
      std::string term;
      if (mono.empty())
        term = coef;
      else if (coef == "1")
        term = mono;
      else if (coef == "-1")
        term = "-" + mono;
      else
        term = coef + "*" + mono;
      if (!first && term.front() != '-') os << "+";
      os << term;
      first = false;
    }
    return os.str();
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) {
    MPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using QPoly = MPoly<QuadExt>;
using KPoly = MPoly<ParamPoly>;

namespace detail {

// Expansion of (L0)^a (L1)^b where Lj = sum_i m(i, j) x_i, memoized per call.
class SubstitutionCache {
 public:
  explicit SubstitutionCache(const Mat2& m);
  const QPoly& image(const Mono& e);

 private:
  std::array<std::vector<QPoly>, 2> powers_;
  std::map<Mono, QPoly, GradedOrder> images_;
};

}  // namespace detail

// Natural W-action: the algebra automorphism x_j -> sum_i m(i, j) x_i, i.e.
// the linear form with coordinate vector c goes to m c.
template <class S>
MPoly<S> weyl_act(const Mat2& m, const MPoly<S>& p) {
  detail::SubstitutionCache cache(m);
  MPoly<S> r;
  for (const auto& [e, c] : p.terms())
    for (const auto& [f, q] : cache.image(e).terms()) r.add_term(f, c * q);
  return r;
}

// Exact quotient p / alpha for a nonzero linear form alpha = a1 x1 + a2 x2,
// or nullopt when alpha does not divide p.
template <class S>
std::optional<MPoly<S>> try_div_linear(const MPoly<S>& p, const Vec2& alpha) {
  if (is_zero(alpha)) throw algebra_error("division by zero");
  MPoly<S> q;
  if (p.is_zero()) return q;
  const bool use_first = !alpha[0].is_zero();
  const QuadExt lead_inv = (use_first ? alpha[0] : alpha[1]).inv();
  const QuadExt& other = use_first ? alpha[1] : alpha[0];
  for (int d = p.min_degree(); d <= p.degree(); ++d) {
    // c_i = coefficient of x1^(d-i) x2^i
    std::vector<S> c(d + 1);
    bool any = false;
    for (int i = 0; i <= d; ++i) {
      c[i] = p.coeff({d - i, i});
      any = any || !c[i].is_zero();
    }
    if (!any) continue;
    if (d == 0) return std::nullopt;
    if (use_first) {
      // (a x1 + b x2) * sum q_i x1^(d-1-i) x2^i:  a q_i + b q_(i-1) = c_i
      S prev;
      for (int i = 0; i < d; ++i) {
        S qi = (c[i] - prev * other) * lead_inv;
        q.add_term({d - 1 - i, i}, qi);
        prev = std::move(qi);
      }
      if (!(c[d] == prev * other)) return std::nullopt;
    } else {
      // b x2 divides p_d exactly when the pure x1^d coefficient vanishes.
      if (!c[0].is_zero()) return std::nullopt;
      for (int i = 1; i <= d; ++i) q.add_term({d - i, i - 1}, c[i] * lead_inv);
    }
  }
  return q;
}

template <class S>
MPoly<S> div_linear(const MPoly<S>& p, const Vec2& alpha) {
  auto q = try_div_linear(p, alpha);
  if (!q) throw algebra_error("non-divisible");
  return *q;
}

}  // namespace cherednik
