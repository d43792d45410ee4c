#include "digspec/digraph.hpp"

#include <algorithm>
#include <queue>

namespace digspec {

std::string to_string(const Arc& arc) {
  return "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")";
}

bool Digraph::has_arc(int tail, int head) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

Digraph make_digraph(int n, std::vector<Arc> arcs) {
  if (n < 0) throw Error(ErrorCode::InvalidOrder, "negative order " + std::to_string(n));
  for (const Arc& arc : arcs) {
    if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "arc " + to_string(arc) + " has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (arc.tail == arc.head) throw Error(ErrorCode::LoopArc, "arc " + to_string(arc) + " is a loop");
  }
  std::sort(arcs.begin(), arcs.end());
  auto dup = std::adjacent_find(arcs.begin(), arcs.end());
  if (dup != arcs.end()) throw Error(ErrorCode::DuplicateArc, "arc " + to_string(*dup) + " appears twice");
  return Digraph(n, std::move(arcs));
}

Digraph directed_path(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "directed path needs n >= 1, got " + std::to_string(n));
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return make_digraph(n, std::move(arcs));
}

Digraph directed_cycle(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "directed cycle needs n >= 2, got " + std::to_string(n));
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return make_digraph(n, std::move(arcs));
}

Digraph oriented_star(int x, int y) {
  if (x < 0 || y < 0 || x + y < 1) {
    throw Error(ErrorCode::InvalidOrder,
                "oriented star needs x, y >= 0 and x + y >= 1, got x=" + std::to_string(x) + " y=" + std::to_string(y));
  }
  std::vector<Arc> arcs;
  for (int i = 1; i <= x; ++i) arcs.push_back({0, i});
  for (int j = 1; j <= y; ++j) arcs.push_back({x + j, 0});
  return make_digraph(x + y + 1, std::move(arcs));
}

Digraph disjoint_union(const Digraph& first, const Digraph& second) {
  std::vector<Arc> arcs(first.arcs().begin(), first.arcs().end());
  const int shift = first.order();
  for (const Arc& arc : second.arcs()) arcs.push_back({arc.tail + shift, arc.head + shift});
  return make_digraph(first.order() + second.order(), std::move(arcs));
}

Digraph symmetric_closure(const Digraph& d) {
  std::vector<Arc> arcs;
  for (const Arc& arc : d.arcs()) {
    arcs.push_back(arc);
    arcs.push_back({arc.head, arc.tail});
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return make_digraph(d.order(), std::move(arcs));
}

Digraph relabel(const Digraph& d, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != d.order()) {
    throw Error(ErrorCode::IndexError, "permutation length does not match the order");
  }
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& arc : d.arcs()) arcs.push_back({perm[arc.tail], perm[arc.head]});
  return make_digraph(d.order(), std::move(arcs));
}

std::vector<int> out_degrees(const Digraph& d) {
  std::vector<int> deg(d.order(), 0);
  for (const Arc& arc : d.arcs()) ++deg[arc.tail];
  return deg;
}

std::vector<int> in_degrees(const Digraph& d) {
  std::vector<int> deg(d.order(), 0);
  for (const Arc& arc : d.arcs()) ++deg[arc.head];
  return deg;
}

std::int64_t zagreb_plus(const Digraph& d) {
  std::int64_t total = 0;
  for (int k : out_degrees(d)) total += static_cast<std::int64_t>(k) * k;
  return total;
}

std::vector<int> outdegree_sequence(const Digraph& d) {
  auto deg = out_degrees(d);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

namespace {

std::vector<std::vector<int>> underlying_neighbors(const Digraph& d) {
  std::vector<std::vector<int>> adj(d.order());
  for (const Arc& arc : d.arcs()) {
    adj[arc.tail].push_back(arc.head);
    adj[arc.head].push_back(arc.tail);
  }
  return adj;
}

}  // namespace

std::optional<Bipartition> bipartition(const Digraph& d) {
  const auto adj = underlying_neighbors(d);
  std::vector<int> color(d.order(), -1);
  for (int start = 0; start < d.order(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          frontier.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < d.order(); ++v) (color[v] == 0 ? parts.part_a : parts.part_b).push_back(v);
  return parts;
}

std::vector<std::vector<int>> weak_components(const Digraph& d) {
  const auto adj = underlying_neighbors(d);
  std::vector<bool> seen(d.order(), false);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < d.order(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int v : adj[comp[i]]) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

int underlying_edge_count(const Digraph& d) {
  int edges = 0;
  for (const Arc& arc : d.arcs()) {
    // count a digon once, from its lower-tail arc
    if (arc.tail < arc.head || !d.has_arc(arc.head, arc.tail)) ++edges;
  }
  return edges;
}

StructureFlags classify(const Digraph& d) {
  StructureFlags flags;
  const int n = d.order();
  flags.connected = weak_components(d).size() == 1;

  bool has_digon = false;
  for (const Arc& arc : d.arcs()) has_digon = has_digon || d.has_arc(arc.head, arc.tail);
  const int edges = underlying_edge_count(d);
  flags.oriented_tree = flags.connected && static_cast<int>(d.arc_count()) == n - 1 && !has_digon;
  flags.unicyclic = flags.connected && edges == n;

  // Kahn's algorithm; a digon is a directed 2-cycle.
  auto indeg = in_degrees(d);
  std::vector<std::vector<int>> succ(n);
  for (const Arc& arc : d.arcs()) succ[arc.tail].push_back(arc.head);
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++removed;
    for (int v : succ[u])
      if (--indeg[v] == 0) ready.push_back(v);
  }
  flags.acyclic = removed == n;
  return flags;
}

}  // namespace digspec
