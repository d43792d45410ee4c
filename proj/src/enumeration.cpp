#include "digspec/enumeration.hpp"

#include <string>

namespace digspec {

bool matches_class(const Digraph& d, StructureClass structure) {
  switch (structure) {
    case StructureClass::All: return true;
    case StructureClass::OrientedTrees: return classify(d).oriented_tree;
    case StructureClass::Unicyclic: return classify(d).unicyclic;
    case StructureClass::ConnectedOnly: return classify(d).connected;
  }
  return false;
}

std::vector<Arc> arc_universe(int n) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return arcs;
}

std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(result);
}

std::uint64_t subset_count(int n, int max_arcs) {
  const int m = n * (n - 1);
  std::uint64_t total = 0;
  for (int k = 0; k <= max_arcs && k <= m; ++k) total += binomial(m, k);
  return total;
}

ArcSubsetCursor::ArcSubsetCursor(int n, int max_arcs, std::uint64_t begin, std::uint64_t end)
    : n_(n), m_(n * (n - 1)), max_arcs_(std::min(max_arcs, n * (n - 1))), end_(end), index_(begin) {
  end_ = std::min(end_, subset_count(n_, max_arcs_));
}

void ArcSubsetCursor::seek(std::uint64_t global) {
  int k = 0;
  while (global >= binomial(m_, k)) {
    global -= binomial(m_, k);
    ++k;
  }
  // unrank `global` among k-subsets of [0, m) in lexicographic order
  combo_.assign(k, 0);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t block = binomial(m_ - next - 1, k - i - 1);
      if (global < block) break;
      global -= block;
      ++next;
    }
    combo_[i] = next++;
  }
}

bool ArcSubsetCursor::next() {
  if (!started_) {
    started_ = true;
    if (index_ >= end_) return false;
    seek(index_);
    return true;
  }
  if (++index_ >= end_) return false;

  const int k = static_cast<int>(combo_.size());
  int i = k - 1;
  while (i >= 0 && combo_[i] == m_ - k + i) --i;
  if (i < 0) {
    combo_.resize(k + 1);
    for (int j = 0; j <= k; ++j) combo_[j] = j;
    return true;
  }
  ++combo_[i];
  for (int j = i + 1; j < k; ++j) combo_[j] = combo_[j - 1] + 1;
  return true;
}

Digraph subset_digraph(int n, std::span<const Arc> universe, std::span<const int> subset) {
  std::vector<Arc> arcs;
  arcs.reserve(subset.size());
  for (int idx : subset) arcs.push_back(universe[idx]);
  return make_digraph(n, std::move(arcs));
}

void enumerate_digraphs(const EnumerationSpec& spec, const std::function<void(const Digraph&)>& visit) {
  const int n = spec.n;
  if (n < 0) throw Error(ErrorCode::InvalidOrder, "negative order");
  const int m = n * (n - 1);
  if (spec.max_arcs < 0 || spec.max_arcs > m) {
    throw Error(ErrorCode::InvalidOrder, "max_arcs must lie in [0, " + std::to_string(m) + "]");
  }
  if (spec.structure == StructureClass::All && m > 40) {
    throw Error(ErrorCode::SearchSpaceTooLarge, "n(n-1) = " + std::to_string(m) + " exceeds 40");
  }
  if (m > 62 || subset_count(n, spec.max_arcs) > (std::uint64_t{1} << 40)) {
    throw Error(ErrorCode::SearchSpaceTooLarge, "more than 2^40 arc subsets for n = " + std::to_string(n));
  }

  const auto universe = arc_universe(n);
  ArcSubsetCursor cursor(n, spec.max_arcs, 0, subset_count(n, spec.max_arcs));
  while (cursor.next()) {
    Digraph d = subset_digraph(n, universe, cursor.subset());
    if (matches_class(d, spec.structure)) visit(d);
  }
}

}  // namespace digspec
