#include "cherednik/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cherednik {

Rat::Rat(long num, long den) {
  if (den == 0) throw algebra_error("division by zero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!digits_ok(num) || !digits_ok(den))
    throw parse_error("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  return Rat(q);
}

std::optional<long> Rat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
  return v_.get_num().get_si();
}

Rat Rat::inv() const {
  if (is_zero()) throw algebra_error("division by zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rat(r);
}

Rat Rat::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return Rat(r);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw algebra_error("division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

// ---------------------------------------------------------------------------

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return QuadExt(x.a_ * y.a_);
  return QuadExt(x.a_ * y.a_ + Rat(3) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

QuadExt QuadExt::inv() const {
  if (is_zero()) throw algebra_error("division by zero");
  if (b_.is_zero()) return QuadExt(a_.inv());
  Rat n = norm().inv();
  return QuadExt(a_ * n, -b_ * n);
}

int QuadExt::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs; a^2 = 3b^2 is impossible for nonzero rationals.
  return a_ * a_ > Rat(3) * b_ * b_ ? sa : sb;
}

std::string QuadExt::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s3 = b_ == Rat(1) ? "s3" : (b_ == Rat(-1) ? "-s3" : b_.str() + "*s3");
  if (a_.is_zero()) return s3;
  if (b_.sign() < 0) return a_.str() + s3;
  return a_.str() + "+" + s3;
}

// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(const QuadExt& c) {
  if (!c.is_zero()) terms_.emplace(Exp2{0, 0}, c);
}

ParamPoly ParamPoly::var(int i) {
  Exp2 e{0, 0};
  e.at(i) = 1;
  return monomial(e, QuadExt(1));
}

ParamPoly ParamPoly::monomial(Exp2 e, const QuadExt& c) {
  ParamPoly p;
  p.add_term(e, c);
  return p;
}

ParamPoly ParamPoly::linear(const QuadExt& c0, const QuadExt& c1, const QuadExt& c2) {
  ParamPoly p;
  p.add_term({0, 0}, c0);
  p.add_term({1, 0}, c1);
  p.add_term({0, 1}, c2);
  return p;
}

void ParamPoly::add_term(const Exp2& e, const QuadExt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0});
}

QuadExt ParamPoly::coeff(const Exp2& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QuadExt() : it->second;
}

int ParamPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return e[0] + e[1];
}

int ParamPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

QuadExt ParamPoly::eval(const QuadExt& u, const QuadExt& v) const {
  QuadExt acc;
  for (const auto& [e, c] : terms_) {
    QuadExt t = c;
    for (int i = 0; i < e[0]; ++i) t *= u;
    for (int i = 0; i < e[1]; ++i) t *= v;
    acc += t;
  }
  return acc;
}

ParamPoly ParamPoly::pow(int e) const {
  ParamPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

ParamPoly ParamPoly::substitute(const ParamPoly& su, const ParamPoly& sv) const {
  std::vector<ParamPoly> upow{ParamPoly(1)}, vpow{ParamPoly(1)};
  ParamPoly acc;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(upow.size()) <= e[0]) upow.push_back(upow.back() * su);
    while (static_cast<int>(vpow.size()) <= e[1]) vpow.push_back(vpow.back() * sv);
    acc += upow[e[0]] * vpow[e[1]] * c;
  }
  return acc;
}

std::string coefficient_str(const QuadExt& c) {
  if (c.is_rational() || c.rational_part().is_zero()) return c.str();
  return "(" + c.str() + ")";
}

std::string coefficient_str(const ParamPoly& c) {
  if (c.terms().size() == 1 && c.is_constant()) return coefficient_str(c.constant_term());
  return "(" + c.str() + ")";
}

std::string ParamPoly::str(const std::array<std::string, 2>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < 2; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef;
    if (mono.empty()) {
      coef = c.str();
    } else if (c == QuadExt(1)) {
      coef = "";
    } else if (c == QuadExt(-1)) {
      coef = "-";
    } else {
      coef = coefficient_str(c) + "*";
    }
    std::string term = coef + mono;
    if (!first && term.front() != '-') os << "+";
    os << term;
    first = false;
  }
  return os.str();
}

ParamPoly operator+(const ParamPoly& x, const ParamPoly& y) {
  ParamPoly r = x;
  r += y;
  return r;
}

ParamPoly operator-(const ParamPoly& x, const ParamPoly& y) {
  ParamPoly r = x;
  r -= y;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly operator-(const ParamPoly& x) {
  ParamPoly r;
  for (const auto& [e, c] : x.terms_) r.terms_.emplace(e, -c);
  return r;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
  ParamPoly r;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) r.add_term({ex[0] + ey[0], ex[1] + ey[1]}, cx * cy);
  return r;
}

ParamPoly operator*(const ParamPoly& x, const QuadExt& c) {
  ParamPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, cx] : x.terms_) r.terms_.emplace(e, cx * c);
  return r;
}

namespace {

// Leading term under lex order with the first variable dominant.
std::pair<Exp2, QuadExt> lex_leading(const ParamPoly& p) {
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (it->first > best->first) best = it;
  return *best;
}

}  // namespace

std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw algebra_error("division by zero");
  auto [eb, cb] = lex_leading(b);
  QuadExt cb_inv = cb.inv();
  ParamPoly rem = a, quot;
  while (!rem.is_zero()) {
    auto [er, cr] = lex_leading(rem);
    if (er[0] < eb[0] || er[1] < eb[1]) return std::nullopt;
    ParamPoly t = ParamPoly::monomial({er[0] - eb[0], er[1] - eb[1]}, cr * cb_inv);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

}  // namespace cherednik

namespace cherednik {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::array<std::string, 2>& names)
      : text_(text), names_(names) {}

  ParamPoly run() {
    ParamPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what + " at offset " + std::to_string(pos_) + " in '" +
                      std::string(text_) + "'");
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamPoly expr() {
    ParamPoly p = term();
    for (;;) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }
  ParamPoly term() {
    ParamPoly p = unary();
    for (;;) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        ParamPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        p = p * d.constant_term().inv();
      } else {
        return p;
      }
    }
  }
  ParamPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    ParamPoly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }
  ParamPoly atom() {
    skip_space();
    if (accept('(')) {
      ParamPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ParamPoly(QuadExt(Rat::parse(text_.substr(start, pos_ - start))));
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) fail("expected operand");
    if (word == "s3") return ParamPoly(QuadExt::sqrt3());
    for (int i = 0; i < 2; ++i)
      if (word == names_[i]) return ParamPoly::var(i);
    fail("unknown symbol '" + std::string(word) + "'");
  }

  std::string_view text_;
  const std::array<std::string, 2>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text, const std::array<std::string, 2>& names) {
  return PolyParser(text, names).run();
}

QuadExt QuadExt::parse(std::string_view text) {
  const ParamPoly p = ParamPoly::parse(text, {"", ""});
  if (!p.is_constant()) throw parse_error("not a constant: '" + std::string(text) + "'");
  return p.constant_term();
}

}  // namespace cherednik
