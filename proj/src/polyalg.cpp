#include "cherednik/polyalg.hpp"

namespace cherednik {

std::vector<Mono> monomials_of_degree(int n, int rank) {
  if (rank == 1) return {Mono{n, 0}};
  std::vector<Mono> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) out.push_back({n - i, i});
  return out;
}

namespace detail {

SubstitutionCache::SubstitutionCache(const Mat2& m) {
  for (int j = 0; j < 2; ++j) {
    powers_[j].push_back(QPoly::constant(QuadExt(1)));
    powers_[j].push_back(QPoly::linear_form({m(0, j), m(1, j)}));
  }
}

const QPoly& SubstitutionCache::image(const Mono& e) {
  auto it = images_.find(e);
  if (it != images_.end()) return it->second;
  for (int j = 0; j < 2; ++j)
    while (static_cast<int>(powers_[j].size()) <= e[j])
      powers_[j].push_back(powers_[j].back() * powers_[j][1]);
  return images_.emplace(e, powers_[0][e[0]] * powers_[1][e[1]]).first->second;
}

}  // namespace detail

}  // namespace cherednik
