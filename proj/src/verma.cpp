#include "cherednik/verma.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace cherednik {

std::size_t mono_index(const Mono& e) { return static_cast<std::size_t>(e[1]); }

std::size_t verma_dim(const RootSystem& rs, const Irrep& chi, int n) {
  if (n < 0) return 0;
  return monomials_of_degree(n, rs.rank).size() * static_cast<std::size_t>(chi.dim);
}

namespace {

using CacheKey = std::tuple<int, std::string, int>;

template <class V>
class Registry {
 public:
  template <class Build>
  const V& get(const CacheKey& key, Build&& build) {
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto value = std::make_shared<const V>(build());
    std::lock_guard lock(mu_);
    return *map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<CacheKey, std::shared_ptr<const V>> map_;
};

DegreePieces build_pieces(const RootSystem& rs, const Irrep& chi, int n) {
  DegreePieces out;
  out.degree = n;
  const std::size_t src = verma_dim(rs, chi, n), dst = verma_dim(rs, chi, n - 1);
  const auto d = static_cast<std::size_t>(chi.dim);
  for (int dir = 0; dir < 2; ++dir) {
    out.partial[dir] = Matrix<QuadExt>(dst, src);
    for (int o = 0; o < 2; ++o) out.refl[dir][o] = Matrix<QuadExt>(dst, src);
  }
  for (const Mono& e : monomials_of_degree(n, rs.rank)) {
    const std::size_t a = mono_index(e);
    for (int dir = 0; dir < rs.rank; ++dir) {
      if (e[dir] == 0) continue;
      Mono f = e;
      --f[dir];
      for (std::size_t j = 0; j < d; ++j)
        out.partial[dir](mono_index(f) * d + j, a * d + j) = QuadExt(e[dir]);
    }
    const QPoly xe = QPoly::monomial(e, QuadExt(1));
    for (const auto& root : rs.positive) {
      const QPoly q = reflection_quotient(rs, root, xe);
      const auto& rho = chi.rho[root.reflection];
      for (int dir = 0; dir < rs.rank; ++dir) {
        const QuadExt c = root.root[dir];
        if (c.is_zero()) continue;
        auto& target = out.refl[dir][root.orbit];
        for (const auto& [f, coef] : q.terms())
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
              const QuadExt& r = rho(i, j);
              if (!r.is_zero()) target(mono_index(f) * d + i, a * d + j) += c * coef * r;
            }
      }
    }
  }
  return out;
}

std::vector<Matrix<QuadExt>> build_w_action(const RootSystem& rs, const Irrep& chi, int n) {
  const auto monos = monomials_of_degree(n, rs.rank);
  const auto d = static_cast<std::size_t>(chi.dim);
  const std::size_t size = monos.size() * d;
  std::vector<Matrix<QuadExt>> out;
  for (std::size_t w = 0; w < rs.order(); ++w) {
    Matrix<QuadExt> m(size, size);
    detail::SubstitutionCache cache(rs.elements[w]);
    const auto& rho = chi.rho[w];
    for (const Mono& e : monos) {
      const std::size_t a = mono_index(e);
      for (const auto& [f, c] : cache.image(e).terms())
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (!rho(i, j).is_zero()) m(mono_index(f) * d + i, a * d + j) += c * rho(i, j);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Registry<DegreePieces>& pieces_registry() {
  static Registry<DegreePieces> r;
  return r;
}

Registry<std::vector<Matrix<QuadExt>>>& action_registry() {
  static Registry<std::vector<Matrix<QuadExt>>> r;
  return r;
}

template <class S>
void add_scaled(Matrix<S>& acc, const Matrix<QuadExt>& m, const S& c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) acc(i, j) += c * m(i, j);
}

}  // namespace

const DegreePieces& degree_pieces(RootType type, const Irrep& chi, int n) {
  if (n < 1) throw algebra_error("Dunkl pieces need degree >= 1");
  return pieces_registry().get({static_cast<int>(type), chi.label, n},
                               [&] { return build_pieces(root_system(type), chi, n); });
}

const std::vector<Matrix<QuadExt>>& verma_w_action(RootType type, const Irrep& chi, int n) {
  return action_registry().get({static_cast<int>(type), chi.label, n},
                               [&] { return build_w_action(root_system(type), chi, n); });
}

template <class S>
Matrix<S> module_dunkl_matrix(RootType type, const Irrep& chi, int n, const Vec2& y,
                              const Multiplicity<S>& k) {
  const RootSystem& rs = root_system(type);
  const DegreePieces& p = degree_pieces(type, chi, n);
  Matrix<S> out(p.partial[0].rows(), p.partial[0].cols());
  for (int dir = 0; dir < rs.rank; ++dir) {
    if (y[dir].is_zero()) continue;
    add_scaled(out, p.partial[dir], S(y[dir]));
    for (int o = 0; o < rs.num_orbits; ++o) add_scaled(out, p.refl[dir][o], k[o] * y[dir]);
  }
  return out;
}

template <class S>
Matrix<S> module_F_matrix(RootType type, const Irrep& chi, int n, const Multiplicity<S>& k) {
  const RootSystem& rs = root_system(type);
  Matrix<S> out(verma_dim(rs, chi, n - 2), verma_dim(rs, chi, n));
  for (int a = 0; a < rs.rank; ++a) {
    // T_a after sum_b G_ab T_b
    Vec2 y = rs.metric.apply(basis_vector(a));
    Matrix<S> inner = module_dunkl_matrix(type, chi, n, y, k);
    Matrix<S> outer = module_dunkl_matrix(type, chi, n - 1, basis_vector(a), k);
    out = out + outer * inner;
  }
  return out.scaled(S(QuadExt(Rat(-1, 2))));
}

template <class S>
S contravariant_form(const RootSystem& rs, const Irrep& chi, const VermaVector<S>& u,
                     const VermaVector<S>& v, const Multiplicity<S>& k) {
  auto degree_of = [](const VermaVector<S>& x) {
    for (const auto& p : x.comp)
      if (!p.is_zero()) return p.degree();
    return -1;
  };
  const int du = degree_of(u), dv = degree_of(v);
  if (du < 0 || dv < 0 || du != dv) return S();
  const std::array<Vec2, 2> b{b_map(rs, basis_vector(0)), b_map(rs, basis_vector(1))};
  S acc;
  for (int j = 0; j < chi.dim; ++j)
    for (const auto& [e, c] : u.comp[j].terms()) {
      VermaVector<S> w = v;
      for (int i = 0; i < 2; ++i)
        for (int t = 0; t < e[i]; ++t) w = dunkl_module_apply(rs, chi, b[i], w, k);
      acc += c * w.comp[j].coeff({0, 0});
    }
  return acc;
}

template <class S>
VermaVector<S> verma_act(const RootSystem& rs, const Irrep& chi, std::size_t w,
                         const VermaVector<S>& v) {
  VermaVector<S> out = VermaVector<S>::zero(chi.dim);
  for (int j = 0; j < chi.dim; ++j) {
    if (v.comp[j].is_zero()) continue;
    MPoly<S> img = weyl_act(rs.elements[w], v.comp[j]);
    for (int i = 0; i < chi.dim; ++i)
      if (!chi.rho[w](i, j).is_zero()) out.comp[i] += img.scaled(chi.rho[w](i, j));
  }
  return out;
}

template <class S>
GramSequence<S>::GramSequence(RootType type, const Irrep& chi, Multiplicity<S> k)
    : type_(type), chi_(&chi), k_(std::move(k)) {
  gram_ = Matrix<S>(chi.dim, chi.dim);
  for (int j = 0; j < chi.dim; ++j) gram_(j, j) = S(QuadExt(1));
}

template <class S>
const Matrix<S>& GramSequence<S>::advance() {
  const RootSystem& rs = root_system(type_);
  const int n = degree_ + 1;
  const auto d = static_cast<std::size_t>(chi_->dim);
  std::array<Matrix<S>, 2> lowered;
  for (int i = 0; i < rs.rank; ++i)
    lowered[i] = gram_ * module_dunkl_matrix(type_, *chi_, n, b_map(rs, basis_vector(i)), k_);
  const auto monos = monomials_of_degree(n, rs.rank);
  Matrix<S> next(monos.size() * d, monos.size() * d);
  for (const Mono& e : monos) {
    const int i = e[0] > 0 ? 0 : 1;
    Mono p = e;
    --p[i];
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t row = mono_index(e) * d + j, src = mono_index(p) * d + j;
      for (std::size_t c = 0; c < next.cols(); ++c) next(row, c) = lowered[i](src, c);
    }
  }
  gram_ = std::move(next);
  degree_ = n;
  return gram_;
}

template class GramSequence<QuadExt>;
template class GramSequence<ParamPoly>;
template Matrix<QuadExt> module_dunkl_matrix(RootType, const Irrep&, int, const Vec2&,
                                             const Multiplicity<QuadExt>&);
template Matrix<ParamPoly> module_dunkl_matrix(RootType, const Irrep&, int, const Vec2&,
                                               const Multiplicity<ParamPoly>&);
template Matrix<QuadExt> module_F_matrix(RootType, const Irrep&, int, const Multiplicity<QuadExt>&);
template Matrix<ParamPoly> module_F_matrix(RootType, const Irrep&, int,
                                           const Multiplicity<ParamPoly>&);
template QuadExt contravariant_form(const RootSystem&, const Irrep&, const VermaVector<QuadExt>&,
                                    const VermaVector<QuadExt>&, const Multiplicity<QuadExt>&);
template ParamPoly contravariant_form(const RootSystem&, const Irrep&,
                                      const VermaVector<ParamPoly>&,
                                      const VermaVector<ParamPoly>&,
                                      const Multiplicity<ParamPoly>&);
template VermaVector<QuadExt> verma_act(const RootSystem&, const Irrep&, std::size_t,
                                        const VermaVector<QuadExt>&);
template VermaVector<ParamPoly> verma_act(const RootSystem&, const Irrep&, std::size_t,
                                          const VermaVector<ParamPoly>&);

std::vector<Rat> normalize_k(const RootSystem& rs, const std::vector<Rat>& k) {
  if (k.empty() || k.size() > 2) throw parse_error("expected one or two multiplicity values");
  if (rs.num_orbits == 1) {
    if (k.size() == 2 && !(k[0] == k[1]))
      throw parse_error(type_label(rs.type) + " has a single root orbit; k1 and k2 must agree");
    return {k[0]};
  }
  return k.size() == 1 ? std::vector<Rat>{k[0], k[0]} : k;
}

Multiplicity<QuadExt> multiplicity_from(const RootSystem& rs, const std::vector<Rat>& k) {
  auto n = normalize_k(rs, k);
  return evaluated_multiplicity(n[0], n.size() > 1 ? n[1] : n[0]);
}

GramReport gram_evaluated(RootType type, const std::string& chi_label, const std::vector<Rat>& k,
                          int n) {
  if (n < 0) throw parse_error("degree must be non-negative");
  const RootSystem& rs = root_system(type);
  const Irrep& chi = irrep(type, chi_label);
  GramReport r;
  r.type = type;
  r.chi = chi.label;
  r.k = normalize_k(rs, k);
  r.degree = n;
  GramSequence<QuadExt> seq(type, chi, multiplicity_from(rs, k));
  while (seq.degree() < n) seq.advance();
  r.evaluated = seq.current();
  r.size = r.evaluated.rows();
  r.rank = rank_over_field(r.evaluated);
  r.nullity = r.size - r.rank;
  return r;
}

GramReport gram_symbolic(RootType type, const std::string& chi_label, int n) {
  if (n < 0) throw parse_error("degree must be non-negative");
  if (n > 3) throw unsupported_error("symbolic Gram matrices are limited to degree <= 3");
  const Irrep& chi = irrep(type, chi_label);
  GramReport r;
  r.type = type;
  r.chi = chi.label;
  r.symbolic = true;
  r.degree = n;
  GramSequence<ParamPoly> seq(type, chi, symbolic_multiplicity());
  while (seq.degree() < n) seq.advance();
  r.symbolic_matrix = seq.current();
  r.size = r.symbolic_matrix.rows();
  r.rank = rank_bareiss(r.symbolic_matrix);
  r.nullity = r.size - r.rank;
  return r;
}

GradedDims graded_dims(RootType type, const std::string& chi_label, const std::vector<Rat>& k,
                       int N) {
  const RootSystem& rs = root_system(type);
  const Irrep& chi = irrep(type, chi_label);
  GramSequence<QuadExt> seq(type, chi, multiplicity_from(rs, k));
  GradedDims out;
  std::size_t total = 0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) seq.advance();
    const std::size_t rk = rank_over_field(seq.current());
    out.ranks.push_back(rk);
    total += rk;
    if (rk == 0) {
      out.terminated = true;
      out.total = total;
      break;
    }
  }
  return out;
}

namespace {

std::optional<long> natural_value(const Rat& x) {
  if (!x.is_integer() || x.sign() < 0) return std::nullopt;
  return x.to_long();
}

}  // namespace

ClassifyResult em_criterion(RootType type, const std::string& chi_label,
                            const std::vector<Rat>& k) {
  const RootSystem& rs = root_system(type);
  const Irrep& chi = irrep(type, chi_label);
  const auto kk = multiplicity_from(rs, k);
  ClassifyResult r;
  r.type = type;
  r.chi = chi.label;
  r.k = normalize_k(rs, k);
  r.criterion = "em";
  const QuadExt b = b_chi(rs, chi, kk);
  if (!b.is_rational()) throw invariant_violation("b_chi(k) is irrational for rational k");
  r.b_chi = b.rational_part();
  r.m0 = natural_value(-r.b_chi);
  if (!r.m0) return r;

  const long m = *r.m0;
  const int top = static_cast<int>(2 * m + 2);
  // Row functional P -> [F^(m+1) P]_0 component 0, propagated degree by degree.
  std::vector<QuadExt> row(static_cast<std::size_t>(chi.dim));
  row[0] = QuadExt(1);
  for (int n = 2; n <= top; n += 2) {
    Matrix<QuadExt> f = module_F_matrix(type, chi, n, kk);
    std::vector<QuadExt> next(f.cols());
    for (std::size_t i = 0; i < f.rows(); ++i) {
      if (row[i].is_zero()) continue;
      for (std::size_t j = 0; j < f.cols(); ++j)
        if (!f(i, j).is_zero()) next[j] += row[i] * f(i, j);
    }
    row = std::move(next);
  }
  const Matrix<QuadExt> proj = isotypic_projector(rs, chi, verma_w_action(type, chi, top));
  bool vanishes = true;
  for (std::size_t c : echelon_pivots(proj)) {
    QuadExt s;
    for (std::size_t i = 0; i < proj.rows(); ++i)
      if (!row[i].is_zero() && !proj(i, c).is_zero()) s += row[i] * proj(i, c);
    if (!s.is_zero()) {
      vanishes = false;
      break;
    }
  }
  r.finite = vanishes;
  if (vanishes) r.m = m;
  return r;
}

void check_finite_structure(const RootSystem& rs, const Irrep& chi, const ClassifyResult& r) {
  auto fail = [&](const std::string& what) {
    throw invariant_violation("finite L(" + chi.label + ") over " + type_label(rs.type) + ": " +
                              what);
  };
  if (!r.finite || !r.m) fail("not a finite verdict");
  const auto& d = r.graded_dims;
  const std::size_t top = static_cast<std::size_t>(2 * *r.m);
  if (d.size() != top + 1) fail("expected 2m+1 graded pieces");
  for (std::size_t i = 0; i <= top; ++i)
    if (d[i] != d[top - i]) fail("graded dimensions are not palindromic");
  if (d[0] != static_cast<std::size_t>(chi.dim)) fail("dims[0] != dim chi");
  if (chi.label == "triv" && top >= 1 && d[1] != 0 && d[1] != static_cast<std::size_t>(rs.rank))
    fail("L_1(triv) is neither 0 nor a*");
  // a_chi(k) = -(m + l/2)
  if (!(r.b_chi == Rat(-*r.m))) fail("b_chi(k) != -m");
}

ClassifyResult classify(RootType type, const std::string& chi_label, const std::vector<Rat>& k,
                        int default_bound) {
  const RootSystem& rs = root_system(type);
  const Irrep& chi = irrep(type, chi_label);
  ClassifyResult r = em_criterion(type, chi_label, k);
  const int bound = r.m0 ? static_cast<int>(2 * *r.m0 + 4) : default_bound;
  const GradedDims g = graded_dims(type, chi_label, k, bound);
  if (g.terminated != r.finite)
    throw invariant_violation("criteria disagree for L(" + chi.label + ") over " +
                              type_label(type) + ": em says " +
                              (r.finite ? "finite" : "infinite") + ", Gram scan to degree " +
                              std::to_string(bound) + " says " +
                              (g.terminated ? "finite" : "no zero found"));
  r.graded_dims = g.ranks;
  if (g.terminated) {
    r.graded_dims.pop_back();
    r.dim = g.total;
  }
  r.criterion = "both";
  if (r.finite) check_finite_structure(rs, chi, r);
  return r;
}

bool sigma_adF_check(RootType type, int d, SigmaNormalization norm) {
  if (d > 3) throw unsupported_error("sigma_adF_check is limited to degree <= 3");
  const RootSystem& rs = root_system(type);
  const Sl2Triple<ParamPoly> sl2(rs, symbolic_multiplicity());
  const std::array<Vec2, 2> b{b_map(rs, basis_vector(0)), b_map(rs, basis_vector(1))};
  // ad(F)^n(p) applied to q.
  auto ad = [&](auto&& self, int n, const KPoly& p, const KPoly& q) -> KPoly {
    if (n == 0) return p * q;
    return sl2.apply_F(self(self, n - 1, p, q)) - self(self, n - 1, p, sl2.apply_F(q));
  };
  std::vector<KPoly> basis;
  for (int n = 0; n <= d; ++n)
    for (const Mono& e : monomials_of_degree(n, rs.rank))
      basis.push_back(KPoly::monomial(e, ParamPoly(1)));
  for (int n = 0; n <= d; ++n)
    for (const Mono& e : monomials_of_degree(n, rs.rank)) {
      const KPoly p = KPoly::monomial(e, ParamPoly(1));
      for (const KPoly& q : basis) {
        KPoly lhs = ad(ad, n, p, q);
        if (n % 2 == 1) lhs = -lhs;
        KPoly rhs = q;
        for (int i = 0; i < 2; ++i)
          for (int t = 0; t < e[i]; ++t) rhs = dunkl_apply(rs, b[i], rhs, sl2.k());
        if (norm == SigmaNormalization::factorial) {
          long fact = 1;
          for (int i = 2; i <= n; ++i) fact *= i;
          rhs = rhs.scaled(QuadExt(fact));
        }
        if (!(lhs == rhs)) return false;
      }
    }
  return true;
}

}  // namespace cherednik
