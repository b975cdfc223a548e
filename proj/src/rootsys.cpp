#include "cherednik/rootsys.hpp"

#include <deque>
#include <mutex>

namespace cherednik {

std::string type_label(RootType t) {
  switch (t) {
    case RootType::A1: return "A1";
    case RootType::A2: return "A2";
    case RootType::B2: return "B2";
    case RootType::G2: return "G2";
  }
  return "?";
}

RootType parse_root_type(std::string_view label) {
  for (RootType t : kAllTypes)
    if (type_label(t) == label) return t;
  throw parse_error("unknown root system label '" + std::string(label) + "'");
}

Mat2 reflection_matrix(const Vec2& alpha) {
  // I - 2 alpha alpha^T / (alpha . alpha)
  QuadExt s = QuadExt(2) * dot(alpha, alpha).inv();
  Mat2 r = Mat2::identity();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) -= s * alpha[i] * alpha[j];
  return r;
}

std::size_t RootSystem::index_of(const Mat2& g) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return i;
  throw invariant_violation("matrix is not an element of W(" + type_label(type) + ")");
}

std::vector<Vec2> RootSystem::all_roots() const {
  std::vector<Vec2> out;
  for (const auto& r : positive) {
    out.push_back(r.root);
    out.push_back(QuadExt(-1) * r.root);
  }
  return out;
}

QuadExt metric_form(const RootSystem& rs, const Vec2& x, const Vec2& z) {
  return dot(x, rs.metric.apply(z));
}

Vec2 b_map(const RootSystem& rs, const Vec2& x) { return rs.metric.apply(x); }

Vec2 b_inv(const RootSystem& rs, const Vec2& y) { return rs.metric_inv.apply(y); }

namespace {

struct RootSpec {
  Vec2 root;
  int orbit;
};

std::vector<RootSpec> positive_roots(RootType t, std::vector<std::size_t>& simple) {
  const QuadExt s3 = QuadExt::sqrt3();
  const Rat half(1, 2), three_halves(3, 2);
  switch (t) {
    case RootType::A1:
      simple = {0};
      return {{{QuadExt(1), QuadExt(0)}, 0}};
    case RootType::A2:
      simple = {0, 1};
      return {{{QuadExt(1), QuadExt(0)}, 0},
              {{QuadExt(-half), QuadExt(half) * s3}, 0},
              {{QuadExt(half), QuadExt(half) * s3}, 0}};
    case RootType::B2:
      // simple roots: x2 (short) and x1 - x2 (long)
      simple = {1, 3};
      return {{{QuadExt(1), QuadExt(0)}, 0},
              {{QuadExt(0), QuadExt(1)}, 0},
              {{QuadExt(1), QuadExt(1)}, 1},
              {{QuadExt(1), QuadExt(-1)}, 1}};
    case RootType::G2:
      // alpha1 = (1, 0) short, alpha2 = (-3/2, sqrt3/2) long
      simple = {0, 3};
      return {{{QuadExt(1), QuadExt(0)}, 0},
              {{QuadExt(-half), QuadExt(half) * s3}, 0},
              {{QuadExt(half), QuadExt(half) * s3}, 0},
              {{QuadExt(-three_halves), QuadExt(half) * s3}, 1},
              {{QuadExt(three_halves), QuadExt(half) * s3}, 1},
              {{QuadExt(0), s3}, 1}};
  }
  return {};
}

std::vector<int> primitive_degrees(RootType t) {
  switch (t) {
    case RootType::A1: return {2};
    case RootType::A2: return {2, 3};
    case RootType::B2: return {2, 4};
    case RootType::G2: return {2, 6};
  }
  return {};
}

// Average of w(p) over W.
QPoly symmetrize(const RootSystem& rs, const QPoly& p) {
  QPoly acc;
  for (const auto& g : rs.elements) acc += weyl_act(g, p);
  return acc.scaled(QuadExt(Rat(1, static_cast<long>(rs.order()))));
}

QPoly higher_invariant(const RootSystem& rs) {
  switch (rs.type) {
    case RootType::A1:
      break;
    case RootType::A2: {
      // First cubic monomial with nonzero symmetrization; x1^3 is odd under
      // the reflection in x1 and averages to zero.
      for (const Mono& e : monomials_of_degree(3, 2)) {
        QPoly q = symmetrize(rs, QPoly::monomial(e, QuadExt(1)));
        if (q.is_zero()) continue;
        return q.scaled(q.terms().begin()->second.inv());
      }
      throw invariant_violation("A2: no cubic invariant found");
    }
    case RootType::B2:
      return QPoly::monomial({2, 2}, QuadExt(1));
    case RootType::G2: {
      // z^6 + zbar^6 with z = x1 + i x2
      QPoly q;
      q.add_term({6, 0}, QuadExt(2));
      q.add_term({4, 2}, QuadExt(-30));
      q.add_term({2, 4}, QuadExt(30));
      q.add_term({0, 6}, QuadExt(-2));
      return q;
    }
  }
  return {};
}

}  // namespace

RootSystem build_root_system(RootType type) {
  RootSystem rs;
  rs.type = type;
  rs.rank = type == RootType::A1 ? 1 : 2;
  rs.degrees = primitive_degrees(type);

  auto specs = positive_roots(type, rs.simple);
  for (const auto& spec : specs) {
    PositiveRoot r;
    r.root = spec.root;
    r.coroot = (QuadExt(2) * dot(spec.root, spec.root).inv()) * spec.root;
    r.orbit = spec.orbit;
    rs.orbit_size[spec.orbit]++;
    rs.positive.push_back(r);
  }
  rs.num_orbits = rs.orbit_size[1] > 0 ? 2 : 1;

  // Breadth-first closure from the identity under left multiplication by the
  // simple reflections.
  std::vector<Mat2> gens;
  for (std::size_t s : rs.simple) gens.push_back(reflection_matrix(rs.positive[s].root));
  rs.elements.push_back(Mat2::identity());
  rs.words.push_back({});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Mat2 next = gens[g] * rs.elements[cur];
      bool seen = false;
      for (const auto& e : rs.elements) seen = seen || e == next;
      if (seen) continue;
      std::vector<int> word{static_cast<int>(g)};
      word.insert(word.end(), rs.words[cur].begin(), rs.words[cur].end());
      rs.elements.push_back(next);
      rs.words.push_back(std::move(word));
      queue.push_back(rs.elements.size() - 1);
    }
  }

  const std::size_t n = rs.order();
  rs.table.assign(n, std::vector<std::size_t>(n));
  rs.inverse.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rs.table[i][j] = rs.index_of(rs.elements[i] * rs.elements[j]);
      if (rs.table[i][j] == 0) rs.inverse[i] = j;
    }
  for (auto& r : rs.positive) r.reflection = rs.index_of(reflection_matrix(r.root));

  // B*(x_i, x_j); both signs of every root contribute equally.
  for (const auto& r : rs.positive)
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) rs.metric(i, j) += QuadExt(2) * r.coroot[i] * r.coroot[j];
  if (rs.rank == 1) {
    rs.metric_inv(0, 0) = rs.metric(0, 0).inv();
  } else {
    QuadExt det_inv = rs.metric.det().inv();
    rs.metric_inv(0, 0) = rs.metric(1, 1) * det_inv;
    rs.metric_inv(1, 1) = rs.metric(0, 0) * det_inv;
    rs.metric_inv(0, 1) = -rs.metric(0, 1) * det_inv;
    rs.metric_inv(1, 0) = -rs.metric(1, 0) * det_inv;
  }

  // E = 1/2 sum_ij (B*^-1)_ij x_i x_j, which is 1/2 sum z_i^2 for any
  // B*-orthonormal frame z.
  QPoly e;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      Mono m{0, 0};
      m[i]++;
      m[j]++;
      e.add_term(m, QuadExt(Rat(1, 2)) * rs.metric_inv(i, j));
    }
  rs.invariants.push_back(e);
  if (rs.rank == 2) rs.invariants.push_back(higher_invariant(rs));
  return rs;
}

void validate_root_system(const RootSystem& rs) {
  auto fail = [&](const std::string& what) {
    throw invariant_violation(type_label(rs.type) + ": " + what);
  };
  static const std::array<std::size_t, 4> expected_order{2, 6, 8, 12};
  if (rs.order() != expected_order[static_cast<int>(rs.type)]) fail("unexpected |W|");

  for (std::size_t i = 0; i < rs.order(); ++i)
    if (!(rs.elements[rs.table[i][rs.inverse[i]]] == Mat2::identity())) fail("bad inverse");

  const auto roots = rs.all_roots();
  auto is_root = [&](const Vec2& v) {
    for (const auto& r : roots)
      if (r == v) return true;
    return false;
  };
  for (const auto& r : rs.positive) {
    if (!(dot(r.coroot, r.root) == QuadExt(2))) fail("<a^v, a> != 2");
    const Mat2& s = rs.elements[r.reflection];
    if (!(rs.elements[rs.table[r.reflection][r.reflection]] == Mat2::identity()))
      fail("reflection is not an involution");
    if (!(s.apply(r.root) == QuadExt(-1) * r.root)) fail("reflection does not negate its root");
    // hyperplane alpha = 0 in a is fixed (orthogonal complement of the root)
    Vec2 perp{-r.root[1], r.root[0]};
    if (rs.rank == 2 && !(s.apply(perp) == perp)) fail("reflection moves its hyperplane");
  }
  for (const auto& g : rs.elements)
    for (const auto& r : rs.positive) {
      Vec2 img = g.apply(r.root);
      if (!is_root(img)) fail("W does not preserve R");
      // orbit stability: the image has the same length
      if (!(dot(img, img) == dot(r.root, r.root))) fail("W does not preserve orbits");
    }

  if (!(rs.metric.transpose() == rs.metric)) fail("metric not symmetric");
  if (rs.metric(0, 0).sign() <= 0) fail("metric not positive definite");
  if (rs.rank == 2 && rs.metric.det().sign() <= 0) fail("metric not positive definite");
  for (const auto& g : rs.elements)
    if (!(g.transpose() * rs.metric * g == rs.metric)) fail("metric not W-invariant");

  for (const auto& q : rs.invariants)
    for (const auto& g : rs.elements)
      if (!(weyl_act(g, q) == q)) fail("generator is not W-invariant");
}

const RootSystem& root_system(RootType type) {
  static std::once_flag flags[4];
  static RootSystem systems[4];
  const int i = static_cast<int>(type);
  std::call_once(flags[i], [&] {
    systems[i] = build_root_system(type);
    validate_root_system(systems[i]);
  });
  return systems[i];
}

}  // namespace cherednik
