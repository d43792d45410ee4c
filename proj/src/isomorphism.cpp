#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "digspec/digraph.hpp"

namespace digspec {

namespace {

constexpr int kMaxIsoOrder = 64;

struct BitAdjacency {
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> in;
  std::vector<std::pair<int, int>> degree;  // (out, in)

  explicit BitAdjacency(const Digraph& d) : out(d.order(), 0), in(d.order(), 0), degree(d.order(), {0, 0}) {
    for (const Arc& arc : d.arcs()) {
      out[arc.tail] |= std::uint64_t{1} << arc.head;
      in[arc.head] |= std::uint64_t{1} << arc.tail;
      ++degree[arc.tail].first;
      ++degree[arc.head].second;
    }
  }

  bool arc(int u, int v) const { return (out[u] >> v) & 1U; }
};

class Matcher {
 public:
  Matcher(const BitAdjacency& g1, const BitAdjacency& g2) : g1_(g1), g2_(g2) {
    const int n = static_cast<int>(g1.out.size());
    map_.assign(n, -1);
    used_.assign(n, false);
    build_order(n);
  }

  bool run() { return extend(0); }

 private:
  // Rare degree classes first, then stay adjacent to already placed vertices
  // so arc-consistency checks bite early.
  void build_order(int n) {
    std::vector<int> class_size(n, 0);
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (g1_.degree[u] == g1_.degree[w]) ++class_size[u];

    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      int best_links = -1;
      for (int u = 0; u < n; ++u) {
        if (placed[u]) continue;
        int links = 0;
        for (int p : order_) links += g1_.arc(u, p) + g1_.arc(p, u);
        if (best == -1 || links > best_links ||
            (links == best_links && class_size[u] < class_size[best])) {
          best = u;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool consistent(int u, int v) const {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int p = order_[i];
      const int q = map_[p];
      if (q == -1) break;
      if (g1_.arc(u, p) != g2_.arc(v, q) || g1_.arc(p, u) != g2_.arc(q, v)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (int v = 0; v < static_cast<int>(used_.size()); ++v) {
      if (used_[v] || g2_.degree[v] != g1_.degree[u] || !consistent(u, v)) continue;
      map_[u] = v;
      used_[v] = true;
      if (extend(depth + 1)) return true;
      map_[u] = -1;
      used_[v] = false;
    }
    return false;
  }

  const BitAdjacency& g1_;
  const BitAdjacency& g2_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

bool is_isomorphic(const Digraph& first, const Digraph& second) {
  if (first.order() != second.order()) {
    throw Error(ErrorCode::OrderMismatch,
                "orders " + std::to_string(first.order()) + " and " + std::to_string(second.order()) + " differ");
  }
  if (first.order() > kMaxIsoOrder) {
    throw Error(ErrorCode::InvalidOrder, "isomorphism test supports n <= " + std::to_string(kMaxIsoOrder));
  }
  if (first.arc_count() != second.arc_count()) return false;
  if (first == second) return true;

  const BitAdjacency g1(first);
  const BitAdjacency g2(second);
  auto d1 = g1.degree;
  auto d2 = g2.degree;
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;

  return Matcher(g1, g2).run();
}

}  // namespace digspec
