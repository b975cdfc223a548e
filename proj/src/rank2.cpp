#include "cherednik/rank2.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

#include "cherednik/dunkl.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

namespace {

void require_rank2(RootType type) {
  if (type == RootType::A1) throw unsupported_error("P_{n,r} is defined for A2, B2 and G2 only");
}

// r is in range when d*r <= n, d = 3 (A2, G2) or 2 (B2).
int step(RootType type) { return type == RootType::B2 ? 2 : 3; }

bool in_range(RootType type, int n, int r) { return n >= 0 && r >= 0 && step(type) * r <= n; }

ParamPoly constant(const Rat& c) { return ParamPoly(QuadExt(c)); }

// x + c with x a table variable.
ParamPoly shifted(int var, long c) { return ParamPoly::var(var) + ParamPoly(c); }

Rat factorial(int n) {
  Rat f(1);
  for (int i = 2; i <= n; ++i) f *= Rat(i);
  return f;
}

Rat sign_pow(int e) { return e % 2 == 0 ? Rat(1) : Rat(-1); }

ParamPoly exact_quotient(const ParamPoly& a, const ParamPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw invariant_violation("closed form: inexact division of " + a.str() + " by " + b.str());
  return *q;
}

class PnrTables {
 public:
  ParamPoly get(RootType type, int n, int r) {
    std::lock_guard lock(mu_);
    auto& t = tables_[static_cast<int>(type)];
    if (t.empty()) t.push_back({ParamPoly(1)});
    while (static_cast<int>(t.size()) <= n) extend(type, t);
    if (r < 0 || r >= static_cast<int>(t[n].size())) return {};
    return t[n][r];
  }

 private:
  static void extend(RootType type, std::vector<std::vector<ParamPoly>>& t) {
    const int n = static_cast<int>(t.size()) - 1;  // compute row n + 1
    const auto& row = t[n];
    auto at = [&](int r) { return r >= 0 && r < static_cast<int>(row.size()) ? row[r] : ParamPoly(); };
    std::vector<ParamPoly> next;
    for (int r = 0; in_range(type, n + 1, r); ++r) {
      ParamPoly v;
      switch (type) {
        case RootType::A2:
          // r(2r-1) P_{n,r-1} - (n+1-3r)(hbar+n+3r) P_{n,r}
          v = at(r - 1) * ParamPoly(r * (2L * r - 1)) -
              at(r) * shifted(0, n + 3L * r) * ParamPoly(n + 1L - 3L * r);
          break;
        case RootType::B2:
          // -2r(2k1+2r-1) P_{n,r-1} - (n+1-2r)(hbar+n+2r) P_{n,r}
          v = at(r - 1) * (ParamPoly::var(0) * ParamPoly(2) + ParamPoly(2L * r - 1)) *
                  ParamPoly(-2L * r) -
              at(r) * shifted(1, n + 2L * r) * ParamPoly(n + 1L - 2L * r);
          break;
        case RootType::G2:
          // -(n+1-3r)(hbar+n+3r) P_{n,r} + r kappa P_{n,r-1} - r(r-1)/9 P_{n,r-2}
          v = at(r) * shifted(0, n + 3L * r) * ParamPoly(-(n + 1L - 3L * r)) +
              at(r - 1) * ParamPoly::var(1) * ParamPoly(r) -
              at(r - 2) * constant(Rat(r * (r - 1L), 9));
          break;
        case RootType::A1:
          break;
      }
      next.push_back(std::move(v));
    }
    t.push_back(std::move(next));
  }

  std::mutex mu_;
  std::map<int, std::vector<std::vector<ParamPoly>>> tables_;
};

PnrTables& tables() {
  static PnrTables t;
  return t;
}

}  // namespace

std::array<std::string, 2> table_variable_names(RootType type) {
  switch (type) {
    case RootType::B2: return {"k1", "hbar"};
    case RootType::G2: return {"hbar", "kappa"};
    default: return {"hbar", "v"};
  }
}

std::pair<QuadExt, QuadExt> table_point(RootType type, const std::vector<Rat>& k) {
  const RootSystem& rs = root_system(type);
  const auto kk = multiplicity_from(rs, k);
  const QuadExt h = hbar(rs, kk);
  switch (type) {
    case RootType::B2: return {kk[0], h};
    case RootType::G2: return {h, kk[1] - kk[0]};
    default: return {h, QuadExt(0)};
  }
}

ParamPoly pnr(RootType type, int n, int r) {
  require_rank2(type);
  if (!in_range(type, n, r)) return {};
  return tables().get(type, n, r);
}

ParamPoly pnr_closed(RootType type, int n, int r) {
  require_rank2(type);
  if (!in_range(type, n, r)) return {};
  switch (type) {
    case RootType::A2: {
      // a_{n,r} f_{n,r}(hbar)
      Rat a = sign_pow(n + r) * factorial(n);
      for (int i = 0; i < r; ++i) a = a / Rat(3);
      for (int i = 1; i <= r; ++i) a *= Rat(2L * i - 1);
      ParamPoly num(1), den(1);
      for (int j = 0; j < n; ++j) num *= shifted(0, j);
      for (int i = 0; i < r; ++i) den *= shifted(0, 3L * i + 2);
      return exact_quotient(num, den) * QuadExt(a);
    }
    case RootType::B2: {
      // (-1)^n n! g_{n,r}(k1, hbar)
      ParamPoly num(1), den(1);
      for (int i = 1; i <= r; ++i)
        num *= ParamPoly::var(0) * ParamPoly(2) + ParamPoly(2L * i - 1);
      for (int j = 0; j < n; ++j) num *= shifted(1, j);
      for (int i = 1; i <= r; ++i) den *= shifted(1, 2L * i - 1);
      return exact_quotient(num, den) * QuadExt(sign_pow(n) * factorial(n));
    }
    case RootType::G2: {
      // (-1)^(n+r) (n!/3^r) Phi_r(hbar, kappa) a_{n,r}(hbar)
      Rat c = sign_pow(n + r) * factorial(n);
      for (int i = 0; i < r; ++i) c = c / Rat(3);
      ParamPoly num(1), den(1);
      for (int i = 0; i < n; ++i) num *= shifted(0, i);
      for (int j = 0; j < r; ++j) den *= shifted(0, 2L + 3L * j);
      return exact_quotient(num, den) * Phi(r) * QuadExt(c);
    }
    case RootType::A1:
      break;
  }
  return {};
}

namespace {

// F applied to a symbolic invariant, divided by the expected power of E.
ParamPoly f_ratio(const RootSystem& rs, const KPoly& x, int e_power) {
  const Sl2Triple<ParamPoly> sl2(rs, symbolic_multiplicity());
  const KPoly fx = sl2.apply_F(x);
  const KPoly target = sl2.E().pow(e_power);
  const auto& [mono, coef] = *target.terms().begin();
  const ParamPoly c = fx.coeff(mono) * coef.constant_term().inv();
  if (!(target.scaled(c) == fx))
    throw invariant_violation(type_label(rs.type) + ": F(Q) is not a multiple of E^" +
                              std::to_string(e_power));
  return c;
}

QuadExt compute_normalization(RootType type) {
  const RootSystem& rs = root_system(type);
  const KPoly q = rs.invariants.at(1).cast<ParamPoly>();
  const auto k = symbolic_multiplicity();
  switch (type) {
    case RootType::A2: {
      ParamPoly lambda = f_ratio(rs, q * q, 2);
      if (!lambda.is_constant() || lambda.is_zero())
        throw invariant_violation("A2: F(Q2^2) / E^2 depends on k: " + lambda.str());
      return lambda.constant_term();
    }
    case RootType::B2: {
      const ParamPoly c = f_ratio(rs, q, 1);
      const ParamPoly target = (k[0] * ParamPoly(2) + ParamPoly(1)) * ParamPoly(-2);
      auto nu = divide_exact(target, c);
      if (!nu || !nu->is_constant())
        throw invariant_violation("B2: F(Q) is not a constant multiple of (2k1+1) E: " + c.str());
      return nu->constant_term();
    }
    case RootType::G2: {
      const ParamPoly c = f_ratio(rs, q, 2);
      auto lambda = divide_exact(k[1] - k[0], c);
      if (!lambda || !lambda->is_constant())
        throw invariant_violation("G2: F(Q') is not a constant multiple of kappa E^2: " + c.str());
      return lambda->constant_term();
    }
    case RootType::A1:
      break;
  }
  throw unsupported_error("no second generator for A1");
}

}  // namespace

QuadExt normalization_constant(RootType type) {
  require_rank2(type);
  static std::once_flag flags[4];
  static QuadExt values[4];
  const int i = static_cast<int>(type);
  std::call_once(flags[i], [&] { values[i] = compute_normalization(type); });
  return values[i];
}

QuadExt pnr_direct(RootType type, int n, int r, const std::vector<Rat>& k) {
  require_rank2(type);
  if (n > 6) throw unsupported_error("pnr_direct is limited to n <= 6");
  if (!in_range(type, n, r)) return QuadExt(0);
  const RootSystem& rs = root_system(type);
  const Sl2Triple<QuadExt> sl2(rs, multiplicity_from(rs, k));
  const QPoly& q = rs.invariants.at(1);
  const QuadExt c = normalization_constant(type);
  QPoly x;
  QuadExt scale(1);
  switch (type) {
    case RootType::A2:
      // Q = Q2 / sqrt(lambda); Q^(2r) = Q2^(2r) / lambda^r
      x = sl2.E().pow(n - 3 * r) * q.pow(2 * r);
      for (int i = 0; i < r; ++i) scale = scale * c.inv();
      break;
    case RootType::B2:
      x = sl2.E().pow(n - 2 * r) * q.scaled(c).pow(r);
      break;
    case RootType::G2:
      x = q.scaled(c).pow(r) * sl2.E().pow(n - 3 * r);
      break;
    case RootType::A1:
      break;
  }
  for (int i = 0; i < n; ++i) x = sl2.apply_F(x);
  if (x.degree() > 0) throw invariant_violation("F^n(P_2n) is not a constant");
  return x.coeff({0, 0}) * scale;
}

ParamPoly Phi(int p) {
  // Phi_p = kappa Phi_(p-1) + ((p-1)/3)(hbar + 3p - 4) Phi_(p-2)
  ParamPoly prev(1), cur = ParamPoly::var(1);
  if (p == 0) return prev;
  for (int i = 2; i <= p; ++i) {
    ParamPoly next = ParamPoly::var(1) * cur + shifted(0, 3L * i - 4) * prev * constant(Rat(i - 1, 3));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ParamPoly phi(int r) {
  // Phi recursion with hbar fixed to -(3r - 1); kappa is variable 0.
  const long h = -(3L * r - 1);
  const ParamPoly kappa = ParamPoly::var(0);
  ParamPoly prev(1), cur = kappa;
  if (r == 0) return prev;
  for (int i = 2; i <= r; ++i) {
    ParamPoly next = kappa * cur + prev * constant(Rat((i - 1L) * (h + 3L * i - 4), 3));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ParamPoly phi_conjectured(int r) {
  const ParamPoly kappa = ParamPoly::var(0);
  const ParamPoly k2 = kappa * kappa;
  const int q = r / 2;
  ParamPoly out = r % 2 == 0 ? ParamPoly(1) : kappa;
  for (long j = 1; j <= q; ++j) {
    const long root = r % 2 == 0 ? 2 * j - 1 : 2 * j;
    out *= k2 - ParamPoly(root * root);
  }
  return out;
}

ConjectureReport conjecture62_check(int q_max) {
  if (q_max < 0) throw parse_error("max-q must be non-negative");
  ConjectureReport rep;
  rep.max_q = q_max;
  for (int r = 0; r <= 2 * q_max + 1; ++r) {
    if (!(phi(r) == phi_conjectured(r))) {
      rep.first_failure = r;
      break;
    }
    rep.verified_up_to = r;
  }
  return rep;
}

VerySingular very_singular(RootType type, const std::vector<Rat>& k) {
  const RootSystem& rs = root_system(type);
  const auto kk = multiplicity_from(rs, k);
  const QuadExt hq = hbar(rs, kk);
  VerySingular out;
  if (!hq.is_rational()) return out;
  const Rat h = -hq.rational_part();
  if (!h.is_integer() || h.sign() < 0) return out;
  const long m = *h.to_long();
  bool finite = false;
  switch (type) {
    case RootType::A1:
      finite = true;
      break;
    case RootType::A2:
      finite = m % 3 != 2;
      break;
    case RootType::B2:
      if (m % 2 == 0) {
        finite = true;
      } else {
        // k1 = -(2j - 1)/2 with 1 <= j <= (m + 1)/2
        const Rat two_j = Rat(1) - Rat(2) * kk[0].rational_part();
        if (two_j.is_integer() && two_j.sign() > 0) {
          const long tj = *two_j.to_long();
          finite = tj % 2 == 0 && tj / 2 <= (m + 1) / 2;
        }
      }
      break;
    case RootType::G2: {
      const long n = m + 1;
      if (n % 3 != 0) {
        finite = true;
      } else {
        out.conditional = true;
        const long r = n / 3;
        const Rat kappa = (kk[1] - kk[0]).rational_part().abs();
        if (kappa.is_integer() && kappa < Rat(r)) {
          const long kv = *kappa.to_long();
          finite = (r % 2 == 0) ? kv % 2 == 1 : kv % 2 == 0;
        }
      }
      break;
    }
  }
  out.is_very_singular = finite;
  if (finite) out.m = m;
  return out;
}

std::vector<TableEntry> finite_dim_table(RootType type, const std::vector<Rat>& k) {
  const RootSystem& rs = root_system(type);
  const auto norm = normalize_k(rs, k);
  std::vector<TableEntry> out;
  for (const Irrep& chi : irreps(type)) {
    TableEntry e;
    e.chi = chi.label;
    if (chi.dim == 1) {
      auto tk = twist_multiplicity<Rat>(chi, {norm[0], norm.size() > 1 ? norm[1] : norm[0]});
      std::vector<Rat> kt{tk[0]};
      if (rs.num_orbits == 2) kt.push_back(tk[1]);
      const VerySingular vs = very_singular(type, kt);
      e.finite = vs.is_very_singular;
      e.m = vs.m;
      e.conditional = vs.conditional;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string to_string(SingularRef s) {
  switch (s) {
    case SingularRef::singular: return "singular";
    case SingularRef::regular: return "regular";
    case SingularRef::not_covered: return "not covered";
  }
  return "?";
}

namespace {

// k = j/d - p with 1 <= j <= d-1, p >= 1, d a primitive degree.
bool constant_rule(const RootSystem& rs, const Rat& k) {
  if (k.sign() >= 0 || k.is_integer()) return false;
  for (int d : rs.degrees)
    if ((k * Rat(d)).is_integer()) return true;
  return false;
}

bool is_negative_half_integer(const Rat& x) {
  // x = -1/2 - n, n >= 0
  const Rat y = -x - Rat(1, 2);
  return y.is_integer() && y.sign() >= 0;
}

}  // namespace

SingularRef singular_reference(RootType type, const std::vector<Rat>& k) {
  const RootSystem& rs = root_system(type);
  const auto n = normalize_k(rs, k);
  switch (type) {
    case RootType::A1:
    case RootType::A2:
      return constant_rule(rs, n[0]) ? SingularRef::singular : SingularRef::regular;
    case RootType::B2:
      if (!(n[0] == n[1])) return SingularRef::not_covered;
      return constant_rule(rs, n[0]) ? SingularRef::singular : SingularRef::regular;
    case RootType::G2: {
      if (is_negative_half_integer(n[0]) || is_negative_half_integer(n[1]))
        return SingularRef::singular;
      // 3(k1 + k2) = -j - 3n, j in {1, 2, 4, 5}
      const Rat s = Rat(3) * (n[0] + n[1]);
      if (s.is_integer() && s.sign() < 0) {
        const long v = *(-s).to_long();
        if (v % 3 != 0) return SingularRef::singular;
      }
      return SingularRef::regular;
    }
  }
  return SingularRef::not_covered;
}

}  // namespace cherednik
