#ifndef DIGSPEC_DIGRAPH_HPP
#define DIGSPEC_DIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "digspec/error.hpp"

namespace digspec {

/// Ordered vertex pair (tail -> head), 0-indexed.
struct Arc {
  int tail = 0;
  int head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& arc);

/// Loop-free, duplicate-free digraph on vertices 0..n-1.
///
/// Arcs are kept sorted lexicographically, so two digraphs with the same
/// labeled arc set compare equal regardless of construction order. Instances
/// are immutable once built; use make_digraph() to validate raw input.
class Digraph {
 public:
  Digraph() = default;

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  bool has_arc(int tail, int head) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

  friend Digraph make_digraph(int n, std::vector<Arc> arcs);

 private:
  Digraph(int n, std::vector<Arc> sorted_arcs) : n_(n), arcs_(std::move(sorted_arcs)) {}

  int n_ = 0;
  std::vector<Arc> arcs_;
};

/// Validates and canonicalizes an arc list. Throws Error with LoopArc,
/// DuplicateArc or VertexOutOfRange naming the offending arc, or
/// InvalidOrder for negative n.
Digraph make_digraph(int n, std::vector<Arc> arcs);

// Generators. Vertex 0 is v_1 of the usual drawings.
Digraph directed_path(int n);
Digraph directed_cycle(int n);
/// Center 0; out-leaves 1..x; in-leaves x+1..x+y.
Digraph oriented_star(int x, int y);
Digraph disjoint_union(const Digraph& first, const Digraph& second);
Digraph symmetric_closure(const Digraph& d);
/// Image of d under the vertex map v -> perm[v].
Digraph relabel(const Digraph& d, std::span<const int> perm);

std::vector<int> out_degrees(const Digraph& d);
std::vector<int> in_degrees(const Digraph& d);
/// Sum of squared outdegrees.
std::int64_t zagreb_plus(const Digraph& d);
/// Outdegrees sorted descending.
std::vector<int> outdegree_sequence(const Digraph& d);

struct Bipartition {
  std::vector<int> part_a;
  std::vector<int> part_b;
};

/// Two-coloring of the underlying graph, computed per weak component with
/// the lowest vertex of each component in part_a. Isolated vertices land in
/// part_a. Empty when the underlying graph has an odd cycle.
std::optional<Bipartition> bipartition(const Digraph& d);

std::vector<std::vector<int>> weak_components(const Digraph& d);

struct StructureFlags {
  bool connected = false;
  bool oriented_tree = false;
  bool unicyclic = false;
  bool acyclic = false;
};

/// Structural class of d. A digon contributes a single edge to the
/// underlying simple graph, so unicyclic means "connected with exactly n
/// underlying edges".
StructureFlags classify(const Digraph& d);

/// Number of unordered vertex pairs joined by at least one arc.
int underlying_edge_count(const Digraph& d);

/// Backtracking isomorphism test with (outdegree, indegree) class pruning.
/// Throws OrderMismatch when the orders differ.
bool is_isomorphic(const Digraph& first, const Digraph& second);

}  // namespace digspec

#endif  // DIGSPEC_DIGRAPH_HPP
