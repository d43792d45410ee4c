#include "digspec/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace digspec {

std::uint64_t seed_from_env() {
  if (const char* raw = std::getenv("DIGSPEC_SEED")) {
    try {
      return std::stoull(raw);
    } catch (const std::exception&) {
    }
  }
  return 42;
}

Digraph random_digraph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.push_back({u, v});
  return make_digraph(n, std::move(arcs));
}

Digraph random_bipartite_digraph(Rng& rng, int n, double p) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "bipartite digraph needs n >= 2");
  std::vector<int> side(static_cast<std::size_t>(n));
  std::bernoulli_distribution half(0.5);
  do {
    for (int& s : side) s = half(rng) ? 1 : 0;
  } while (std::count(side.begin(), side.end(), 0) == 0 || std::count(side.begin(), side.end(), 1) == 0);

  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> direction(0, 2);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (side[u] == side[v] || !coin(rng)) continue;
      const int how = direction(rng);
      if (how != 1) arcs.push_back({u, v});
      if (how != 0) arcs.push_back({v, u});
    }
  }
  return make_digraph(n, std::move(arcs));
}

Matrix<double> random_matrix(Rng& rng, int rows, int cols) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  Matrix<double> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

}  // namespace digspec
