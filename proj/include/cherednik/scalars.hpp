#pragma once

// Exact coefficient arithmetic: rationals, the field Q(sqrt 3), and
// polynomials over Q(sqrt 3) in the two multiplicity parameters.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cherednik/errors.hpp"

namespace cherednik {

// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT: integers embed implicitly
  Rat(long num, long den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p" or "p/q" with an optional sign, no whitespace.
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  // Value as a machine integer, if integral and in range.
  std::optional<long> to_long() const;

  Rat inv() const;
  Rat abs() const;
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

// a + b*sqrt(3) with a, b rational.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long a) : a_(a) {}  // NOLINT
  QuadExt(Rat a) : a_(std::move(a)) {}  // NOLINT: Q embeds in Q(sqrt 3)
  QuadExt(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt sqrt3() { return QuadExt(Rat(0), Rat(1)); }

  const Rat& rational_part() const { return a_; }
  const Rat& sqrt3_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // Field norm a^2 - 3b^2.
  Rat norm() const { return a_ * a_ - Rat(3) * b_ * b_; }
  QuadExt conj() const { return QuadExt(a_, -b_); }
  QuadExt inv() const;
  // Sign under the real embedding sqrt 3 -> 1.732...
  int sign() const;

  // "a", "b*s3" or "a+b*s3" (a minus sign replaces "+" when b < 0).
  std::string str() const;
  // Inverse of str(); also accepts any expression ParamPoly::parse accepts
  // that evaluates to a constant.
  static QuadExt parse(std::string_view text);

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_); }
  QuadExt& operator+=(const QuadExt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

 private:
  Rat a_;
  Rat b_;
};

using Exp2 = std::array<int, 2>;

// Ascending total degree, then descending exponent of the first variable.
struct GradedOrder {
  bool operator()(const Exp2& x, const Exp2& y) const {
    int dx = x[0] + x[1], dy = y[0] + y[1];
    if (dx != dy) return dx < dy;
    return x[0] > y[0];
  }
};

// Element of K[u, v], K = Q(sqrt 3). The two variables are the multiplicity
// parameters (k1, k2) in most of the library; the rank-2 tables reuse the
// type for (hbar), (k1, hbar) and (hbar, kappa).
class ParamPoly {
 public:
  using Terms = std::map<Exp2, QuadExt, GradedOrder>;

  ParamPoly() = default;
  explicit ParamPoly(const QuadExt& c);
  explicit ParamPoly(long c) : ParamPoly(QuadExt(c)) {}

  static ParamPoly var(int i);
  static ParamPoly monomial(Exp2 e, const QuadExt& c);
  // c0 + c1*u + c2*v
  static ParamPoly linear(const QuadExt& c0, const QuadExt& c1, const QuadExt& c2);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  QuadExt coeff(const Exp2& e) const;
  QuadExt constant_term() const { return coeff({0, 0}); }
  int total_degree() const;
  int degree_in(int var) const;

  QuadExt eval(const QuadExt& u, const QuadExt& v) const;
  // Ring homomorphism u -> su, v -> sv.
  ParamPoly substitute(const ParamPoly& su, const ParamPoly& sv) const;
  ParamPoly pow(int e) const;

  // Monomials in GradedOrder; names default to k1, k2.
  std::string str(const std::array<std::string, 2>& names = {"k1", "k2"}) const;
  // Parses +, -, *, ^ (non-negative integer exponent), division by
  // constants, parentheses, rationals, s3 and the two variable names.
  static ParamPoly parse(std::string_view text,
                         const std::array<std::string, 2>& names = {"k1", "k2"});

  friend ParamPoly operator+(const ParamPoly& x, const ParamPoly& y);
  friend ParamPoly operator-(const ParamPoly& x, const ParamPoly& y);
  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
  friend ParamPoly operator*(const ParamPoly& x, const QuadExt& c);
  friend ParamPoly operator*(const QuadExt& c, const ParamPoly& x) { return x * c; }
  friend ParamPoly operator-(const ParamPoly& x);
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

  // Adds c * x^e, dropping the term if the result is zero.
  void add_term(const Exp2& e, const QuadExt& c);

 private:
  Terms terms_;
};

// Exact quotient a / b in K[u, v], or nullopt if b does not divide a.
std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b);

// Renders a coefficient so it can be juxtaposed with a monomial: "3", "-1/2",
// "(1+2*s3)".
std::string coefficient_str(const QuadExt& c);
std::string coefficient_str(const ParamPoly& c);

}  // namespace cherednik
