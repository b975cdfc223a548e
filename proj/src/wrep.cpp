#include "cherednik/wrep.hpp"

#include <algorithm>
#include <mutex>

namespace cherednik {

namespace {

Matrix<QuadExt> scalar_matrix(int sign) {
  Matrix<QuadExt> m(1, 1);
  m(0, 0) = QuadExt(sign);
  return m;
}

Matrix<QuadExt> to_matrix(const Mat2& g) {
  Matrix<QuadExt> m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = g(i, j);
  return m;
}

// Sign of a linear character on each element, from the signs on the simple
// reflections of each orbit.
std::vector<int> linear_character(const RootSystem& rs, std::array<int, 2> orbit_sign) {
  std::vector<int> out;
  for (const auto& word : rs.words) {
    int s = 1;
    for (int g : word) s *= orbit_sign[rs.positive[rs.simple[g]].orbit];
    out.push_back(s);
  }
  return out;
}

Irrep one_dimensional(const RootSystem& rs, std::string label, std::array<int, 2> orbit_sign) {
  Irrep r;
  r.label = std::move(label);
  r.dim = 1;
  for (int s : linear_character(rs, orbit_sign)) {
    r.rho.push_back(scalar_matrix(s));
    r.character.push_back(QuadExt(s));
  }
  r.reflection_character = orbit_sign;
  if (rs.num_orbits == 1) r.reflection_character[1] = 0;
  return r;
}

Irrep two_dimensional(const RootSystem& rs, std::string label, std::array<int, 2> orbit_sign) {
  Irrep r;
  r.label = std::move(label);
  r.dim = 2;
  auto twist = linear_character(rs, orbit_sign);
  for (std::size_t w = 0; w < rs.order(); ++w) {
    Matrix<QuadExt> m = to_matrix(rs.elements[w]).scaled(QuadExt(twist[w]));
    r.character.push_back(m(0, 0) + m(1, 1));
    r.rho.push_back(std::move(m));
  }
  // Reflections have trace 0 in dimension 2.
  r.reflection_character = {0, 0};
  return r;
}

}  // namespace

std::vector<Irrep> build_irreps(const RootSystem& rs) {
  std::vector<Irrep> out;
  out.push_back(one_dimensional(rs, "triv", {1, 1}));
  out.push_back(one_dimensional(rs, "sgn", {-1, -1}));
  switch (rs.type) {
    case RootType::A1:
      break;
    case RootType::A2:
      out.push_back(two_dimensional(rs, "std", {1, 1}));
      break;
    case RootType::B2:
      out.push_back(two_dimensional(rs, "std", {1, 1}));
      out.push_back(one_dimensional(rs, "chi1", {-1, 1}));
      out.push_back(one_dimensional(rs, "chi2", {1, -1}));
      break;
    case RootType::G2:
      out.push_back(one_dimensional(rs, "tau", {1, -1}));
      out.push_back(one_dimensional(rs, "sgn_tau", {-1, 1}));
      out.push_back(two_dimensional(rs, "std", {1, 1}));
      out.push_back(two_dimensional(rs, "std_tau", {1, -1}));
      break;
  }
  return out;
}

void validate_irreps(const RootSystem& rs, const std::vector<Irrep>& reps) {
  auto fail = [&](const std::string& what) {
    throw invariant_violation(type_label(rs.type) + " irreps: " + what);
  };
  const std::size_t n = rs.order();
  std::size_t dim_sq = 0;
  for (const auto& r : reps) {
    dim_sq += static_cast<std::size_t>(r.dim * r.dim);
    auto id = Matrix<QuadExt>::identity(r.dim);
    for (std::size_t a = 0; a < n; ++a) {
      if (!(r.rho[a].transpose() * r.rho[a] == id)) fail(r.label + " not orthogonal");
      for (std::size_t b = 0; b < n; ++b)
        if (!(r.rho[a] * r.rho[b] == r.rho[rs.table[a][b]])) fail(r.label + " not a homomorphism");
    }
    for (const auto& pr : rs.positive) {
      const QuadExt& c = r.character[pr.reflection];
      if (!(c == QuadExt(r.reflection_character[pr.orbit]))) fail(r.label + " reflection character");
    }
  }
  if (dim_sq != n) fail("sum of squared dimensions differs from |W|");
  // <chi, psi> = delta over the whole group (characters are real).
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      QuadExt s;
      for (std::size_t w = 0; w < n; ++w) s += reps[i].character[w] * reps[j].character[w];
      if (!(s == QuadExt(i == j ? static_cast<long>(n) : 0L))) fail("character orthogonality");
    }
}

const std::vector<Irrep>& irreps(RootType type) {
  static std::once_flag flags[4];
  static std::vector<Irrep> cache[4];
  const int i = static_cast<int>(type);
  std::call_once(flags[i], [&] {
    const RootSystem& rs = root_system(type);
    cache[i] = build_irreps(rs);
    validate_irreps(rs, cache[i]);
  });
  return cache[i];
}

const Irrep& irrep(RootType type, std::string_view label) {
  for (const auto& r : irreps(type))
    if (r.label == label) return r;
  throw parse_error("unknown irrep '" + std::string(label) + "' for type " + type_label(type));
}

const Irrep& tensor_with(RootType type, const Irrep& chi, const Irrep& tau) {
  if (tau.dim != 1) throw algebra_error("tensor_with expects a one-dimensional character");
  for (const auto& r : irreps(type)) {
    if (r.dim != chi.dim) continue;
    bool same = true;
    for (std::size_t w = 0; w < r.character.size() && same; ++w)
      same = r.character[w] == chi.character[w] * tau.character[w];
    if (same) return r;
  }
  throw invariant_violation("chi (x) tau is not irreducible");
}

std::vector<Matrix<QuadExt>> regular_representation(const RootSystem& rs) {
  const std::size_t n = rs.order();
  std::vector<Matrix<QuadExt>> out;
  for (std::size_t a = 0; a < n; ++a) {
    Matrix<QuadExt> m(n, n);
    for (std::size_t b = 0; b < n; ++b) m(rs.table[a][b], b) = QuadExt(1);
    out.push_back(std::move(m));
  }
  return out;
}

Matrix<QuadExt> isotypic_projector(const RootSystem& rs, const Irrep& chi,
                                   const std::vector<Matrix<QuadExt>>& action) {
  const std::size_t n = rs.order();
  if (action.size() != n) throw invariant_violation("action must list one matrix per element");
  // Spot-check: generators composed with a few elements.
  for (std::size_t s : rs.simple) {
    std::size_t g = rs.index_of(reflection_matrix(rs.positive[s].root));
    for (std::size_t w = 0; w < std::min<std::size_t>(n, 3); ++w)
      if (!(action[g] * action[w] == action[rs.table[g][w]]))
        throw invariant_violation("isotypic_projector: input is not a W-representation");
  }
  const std::size_t d = action[0].rows();
  Matrix<QuadExt> e(d, d);
  for (std::size_t w = 0; w < n; ++w) {
    const QuadExt& c = chi.character[rs.inverse[w]];
    if (c.is_zero()) continue;
    e = e + action[w].scaled(c);
  }
  return e.scaled(QuadExt(Rat(chi.dim, static_cast<long>(n))));
}

}  // namespace cherednik

namespace cherednik {

std::vector<ConjugacyClass> conjugacy_classes(const RootSystem& rs) {
  const std::size_t n = rs.order();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> out;
  for (std::size_t g = 0; g < n; ++g) {
    if (seen[g]) continue;
    ConjugacyClass c;
    c.representative = g;
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t conj = rs.table[rs.table[h][g]][rs.inverse[h]];
      if (!seen[conj]) {
        seen[conj] = true;
        ++c.size;
      }
    }
    for (int s : rs.words[g]) c.name += "s" + std::to_string(s + 1);
    if (c.name.empty()) c.name = "e";
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cherednik
