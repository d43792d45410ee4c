#ifndef DIGSPEC_ENUMERATION_HPP
#define DIGSPEC_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "digspec/digraph.hpp"

namespace digspec {

enum class StructureClass { All, OrientedTrees, Unicyclic, ConnectedOnly };

/// Finite labeled search space: every digraph of order n with at most
/// max_arcs arcs that belongs to the given class.
struct EnumerationSpec {
  int n = 0;
  int max_arcs = 0;
  StructureClass structure = StructureClass::All;
};

bool matches_class(const Digraph& d, StructureClass structure);

/// The n(n-1) possible arcs in lexicographic order. Position in this list is
/// the arc's index in subset encodings.
std::vector<Arc> arc_universe(int n);

/// C(m, k) in 64 bits; callers keep m <= 62.
std::uint64_t binomial(int m, int k);

/// Number of arc subsets with 0..max_arcs elements.
std::uint64_t subset_count(int n, int max_arcs);

/// Walks a contiguous slice [begin, end) of the global subset sequence:
/// subsets ordered by cardinality, lexicographic within a cardinality.
/// Disjoint slices can be walked by independent workers.
class ArcSubsetCursor {
 public:
  ArcSubsetCursor(int n, int max_arcs, std::uint64_t begin, std::uint64_t end);

  /// Advances to the next subset; false once the slice is exhausted.
  bool next();

  std::uint64_t index() const noexcept { return index_; }
  /// Arc-universe indices of the current subset, ascending.
  std::span<const int> subset() const noexcept { return combo_; }
  int universe_size() const noexcept { return m_; }

 private:
  void seek(std::uint64_t global);

  int n_;
  int m_;
  int max_arcs_;
  std::uint64_t end_;
  std::uint64_t index_;
  bool started_ = false;
  std::vector<int> combo_;
};

/// Digraph for an arc-universe subset.
Digraph subset_digraph(int n, std::span<const Arc> universe, std::span<const int> subset);

/// Calls visit for every digraph in the space, in enumeration order. Throws
/// SearchSpaceTooLarge for class All when n(n-1) > 40, or when the raw
/// subset count exceeds 2^40.
void enumerate_digraphs(const EnumerationSpec& spec, const std::function<void(const Digraph&)>& visit);

}  // namespace digspec

#endif  // DIGSPEC_ENUMERATION_HPP
