#include "digspec/determination.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace digspec {

int trace_arc_bound(int n, double target_trace_sum) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "trace bound needs n >= 1");
  const int cap = n * (n - 1);
  int a = 0;
  // a^2/n + a <= target, scaled by n to stay in integers where possible
  while (a < cap) {
    const double next = a + 1.0;
    if (next * next + n * next > n * target_trace_sum) break;
    ++a;
  }
  return a;
}

namespace {

constexpr int kMaxPrunedOrder = 7;
constexpr int kMaxUnprunedOrder = 5;

// Candidate matrices never exceed 7x7; fixed capacity keeps them off the heap.
using CandidateMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 8, 8>;

struct Mate {
  std::uint64_t index;
  Digraph digraph;
};

// Keeps the first member of each isomorphism class, in arrival order.
void add_if_new_class(std::vector<Mate>& classes, Mate candidate) {
  for (const Mate& existing : classes) {
    if (is_isomorphic(existing.digraph, candidate.digraph)) return;
  }
  classes.push_back(std::move(candidate));
}

// sigma_1 of a 2x2 block [[a, b], [c, d]].
double sigma1_2x2(double a, double b, double c, double d) {
  const double frob = a * a + b * b + c * c + d * d;
  const double det = a * d - b * c;
  const double disc = std::max(0.0, frob * frob - 4.0 * det * det);
  return std::sqrt(0.5 * (frob + std::sqrt(disc)));
}

struct SearchContext {
  const Digraph& target;
  MatrixKind kind;
  const EnumerationSpec& space;
  const SearchOptions& options;
  const SingularSpectrum& target_spectrum;
  std::int64_t target_trace;  // Zg+ + a for L/Q, a for A
  int max_arcs;
  std::vector<Arc> universe;

  std::atomic<std::uint64_t> examined{0};
  std::atomic<std::uint64_t> survivors{0};
  std::uint64_t total = 0;
  std::mutex progress_mutex{};
};

struct WorkerResult {
  std::uint64_t examined = 0;
  std::uint64_t after_trace = 0;
  std::uint64_t after_sigma1 = 0;
  std::uint64_t matches = 0;
  std::uint64_t zero_checked = 0;
  std::uint64_t zero_violations = 0;
  std::vector<Mate> mates;
};

int count_weak_components(int n, std::span<const Arc> universe, std::span<const int> subset) {
  int parent[16];
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = n;
  for (int idx : subset) {
    const int a = find(universe[idx].tail);
    const int b = find(universe[idx].head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

void run_worker(SearchContext& ctx, std::uint64_t begin, std::uint64_t end, WorkerResult& out) {
  const int n = ctx.space.n;
  const double sigma1_limit = ctx.target_spectrum.largest() + kSpectrumTolerance;
  const double sign = ctx.kind == MatrixKind::Laplacian ? -1.0 : 1.0;
  const bool prune = ctx.options.prune;
  const int target_arcs = static_cast<int>(ctx.target.arc_count());

  ArcSubsetCursor cursor(n, ctx.max_arcs, begin, end);
  std::vector<int> outdeg(static_cast<std::size_t>(n));
  CandidateMatrix m(n, n);
  std::uint64_t since_report = 0;

  while (cursor.next()) {
    ++out.examined;
    if (ctx.options.progress && ++since_report == ctx.options.progress_interval) {
      since_report = 0;
      const auto seen = ctx.examined.fetch_add(ctx.options.progress_interval) + ctx.options.progress_interval;
      std::lock_guard lock(ctx.progress_mutex);
      ctx.options.progress({seen, ctx.survivors.load(), ctx.total});
    }
    const auto subset = cursor.subset();

    if (prune) {
      if (ctx.kind == MatrixKind::Adjacency) {
        if (static_cast<int>(subset.size()) != target_arcs) continue;
      } else {
        std::fill(outdeg.begin(), outdeg.end(), 0);
        for (int idx : subset) ++outdeg[ctx.universe[idx].tail];
        std::int64_t trace = static_cast<std::int64_t>(subset.size());
        for (int k : outdeg) trace += static_cast<std::int64_t>(k) * k;
        if (trace != ctx.target_trace) continue;
      }
    }
    ++out.after_trace;

    m.setZero();
    for (int idx : subset) {
      const Arc& arc = ctx.universe[idx];
      if (ctx.kind == MatrixKind::Adjacency) {
        m(arc.tail, arc.head) = 1.0;
      } else {
        m(arc.tail, arc.head) = sign;
        m(arc.tail, arc.tail) += 1.0;
      }
    }

    if (prune) {
      // Interlacing: sigma_1(M) >= sigma_1 of any principal submatrix.
      bool too_large = false;
      for (int idx : subset) {
        const int u = ctx.universe[idx].tail;
        const int v = ctx.universe[idx].head;
        if (sigma1_2x2(m(u, u), m(u, v), m(v, u), m(v, v)) > sigma1_limit) {
          too_large = true;
          break;
        }
      }
      if (too_large) continue;
    }
    ++out.after_sigma1;

    if (ctx.space.structure != StructureClass::All &&
        !matches_class(subset_digraph(n, ctx.universe, subset), ctx.space.structure)) {
      continue;
    }

    const auto spectrum = singular_values(m, ctx.kind);
    if (ctx.kind == MatrixKind::Laplacian && count_weak_components(n, ctx.universe, subset) >= 2) {
      ++out.zero_checked;
      if (spectrum.zero_multiplicity(kSpectrumTolerance) < 2) ++out.zero_violations;
    }
    if (!spectra_equal(spectrum, ctx.target_spectrum)) continue;
    ++out.matches;
    ctx.survivors.fetch_add(1);

    Digraph candidate = subset_digraph(n, ctx.universe, subset);
    if (is_isomorphic(candidate, ctx.target)) continue;
    add_if_new_class(out.mates, {cursor.index(), std::move(candidate)});
  }
}

}  // namespace

CospectralReport cospectral_mates(const Digraph& target, MatrixKind kind, const EnumerationSpec& space,
                                  const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const int n = target.order();
  if (space.n != n) {
    throw Error(ErrorCode::OrderMismatch, "search order " + std::to_string(space.n) + " differs from target order " +
                                              std::to_string(n));
  }
  if (kind == MatrixKind::Raw) throw Error(ErrorCode::InvalidOrder, "mate search needs kind A, L or Q");
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "mate search needs n >= 1");
  const int limit = options.prune ? kMaxPrunedOrder : kMaxUnprunedOrder;
  if (n > limit) {
    throw Error(ErrorCode::SearchSpaceTooLarge, std::string(options.prune ? "pruned" : "unpruned") +
                                                    " search is limited to n <= " + std::to_string(limit));
  }
  const int full = n * (n - 1);
  if (space.max_arcs < 0 || space.max_arcs > full) {
    throw Error(ErrorCode::InvalidOrder, "max_arcs must lie in [0, " + std::to_string(full) + "]");
  }

  CospectralReport report;
  report.target = target;
  report.kind = kind;
  report.pruned = options.prune;
  report.target_spectrum = singular_values(target, kind);

  std::int64_t target_trace = static_cast<std::int64_t>(target.arc_count());
  if (kind != MatrixKind::Adjacency) target_trace += zagreb_plus(target);

  int max_arcs = space.max_arcs;
  if (options.prune) {
    if (kind == MatrixKind::Adjacency) {
      max_arcs = std::min(max_arcs, static_cast<int>(std::lround(report.target_spectrum.sum_of_squares())));
    } else {
      max_arcs = std::min(max_arcs, trace_arc_bound(n, report.target_spectrum.sum_of_squares() + 1e-6));
    }
  }
  report.max_arcs = max_arcs;

  SearchContext ctx{target, kind, space, options, report.target_spectrum, target_trace, max_arcs, arc_universe(n)};
  ctx.total = subset_count(n, max_arcs);

  const int jobs = std::max(1, options.jobs);
  std::vector<WorkerResult> results(static_cast<std::size_t>(jobs));
  const std::uint64_t chunk = (ctx.total + jobs - 1) / jobs;
  if (jobs == 1) {
    run_worker(ctx, 0, ctx.total, results[0]);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      const std::uint64_t begin = std::min(ctx.total, chunk * w);
      const std::uint64_t end = std::min(ctx.total, begin + chunk);
      workers.emplace_back([&, w, begin, end] {
        try {
          run_worker(ctx, begin, end, results[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Worker ranges are increasing, so concatenation preserves global order and
  // the first class member seen is the lowest-index one.
  std::vector<Mate> merged;
  for (auto& r : results) {
    report.candidates_examined += r.examined;
    report.candidates_after_trace_filter += r.after_trace;
    report.candidates_after_sigma1_filter += r.after_sigma1;
    report.spectrum_matches += r.matches;
    report.zero_law_checked += r.zero_checked;
    report.zero_law_violations += r.zero_violations;
    for (auto& mate : r.mates) add_if_new_class(merged, std::move(mate));
  }
  for (auto& mate : merged) {
    report.mate_indices.push_back(mate.index);
    report.mates.push_back(std::move(mate.digraph));
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

CospectralReport cospectral_mates(const Digraph& target, MatrixKind kind, const SearchOptions& options) {
  const int n = target.order();
  return cospectral_mates(target, kind, EnumerationSpec{n, n * (n - 1), StructureClass::All}, options);
}

bool recheck_mates(const CospectralReport& report) {
  const auto target_spectrum = singular_values(report.target, report.kind);
  for (std::size_t i = 0; i < report.mates.size(); ++i) {
    const Digraph& mate = report.mates[i];
    const Digraph rebuilt = make_digraph(mate.order(), {mate.arcs().begin(), mate.arcs().end()});
    if (!spectra_equal(singular_values(rebuilt, report.kind), target_spectrum)) return false;
    if (is_isomorphic(rebuilt, report.target)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (is_isomorphic(rebuilt, report.mates[j])) return false;
  }
  return true;
}

std::vector<CospectralPair> known_cospectral_families(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidOrder, "cospectral families need n >= 3");
  std::vector<CospectralPair> pairs;
  auto add = [&](std::string label, MatrixKind kind, Digraph first, Digraph second) {
    CospectralPair pair;
    pair.label = std::move(label);
    pair.kind = kind;
    pair.first_spectrum = singular_values(first, kind);
    pair.second_spectrum = singular_values(second, kind);
    pair.isomorphic = is_isomorphic(first, second);
    pair.first = std::move(first);
    pair.second = std::move(second);
    pairs.push_back(std::move(pair));
  };
  const std::string ns = std::to_string(n);
  add("P" + ns + " ~ C" + std::to_string(n - 1) + "+K1", MatrixKind::Adjacency, directed_path(n),
      disjoint_union(directed_cycle(n - 1), directed_path(1)));
  for (int x = 0; 2 * x < n - 1; ++x) {
    const int y = n - 1 - x;
    add("S" + ns + "(" + std::to_string(x) + "," + std::to_string(y) + ") ~ S" + ns + "(" + std::to_string(y) + "," +
            std::to_string(x) + ")",
        MatrixKind::Adjacency, oriented_star(x, y), oriented_star(y, x));
  }
  // Last arc of the path turned around: every outdegree stays <= 1, so the
  // rows of L and Q are the same up to order and sign.
  std::vector<Arc> bent;
  for (int v = 0; v + 2 < n; ++v) bent.push_back({v, v + 1});
  bent.push_back({n - 1, n - 2});
  const Digraph bent_path = make_digraph(n, std::move(bent));
  for (MatrixKind kind : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
    add("S" + ns + "(0," + std::to_string(n - 1) + ") ~ S" + ns + "(1," + std::to_string(n - 2) + ")", kind,
        oriented_star(0, n - 1), oriented_star(1, n - 2));
    add("P" + ns + " ~ P" + ns + " with last arc reversed", kind, directed_path(n), bent_path);
  }
  return pairs;
}

namespace {

// Every 2x2 minor vanishes and some entry is nonzero.
bool has_rank_one(const Matrix<double>& m) {
  if (m.cwiseAbs().maxCoeff() == 0.0) return false;
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = i + 1; k < n; ++k)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = j + 1; l < n; ++l)
          if (m(i, j) * m(k, l) != m(i, l) * m(k, j)) return false;
  return true;
}

}  // namespace

RankOneSummary rank_one_classes(int n, MatrixKind kind) {
  if (n < 2 || n > kMaxUnprunedOrder) throw Error(ErrorCode::SearchSpaceTooLarge, "rank-one scan needs 2 <= n <= 5");
  RankOneSummary summary;
  summary.n = n;
  summary.kind = kind;
  std::vector<Mate> classes;
  std::uint64_t index = 0;
  enumerate_digraphs({n, n * (n - 1), StructureClass::All}, [&](const Digraph& d) {
    if (has_rank_one(digraph_matrix(d, kind))) add_if_new_class(classes, {index, d});
    ++index;
  });
  const Digraph star = oriented_star(n - 1, 0);
  const double star_sigma = std::sqrt(static_cast<double>((n - 1) * (n - 1) + (n - 1)));
  int connected = 0;
  int with_sigma = 0;
  bool star_connected = false;
  bool star_sigma_match = false;
  for (const Mate& c : classes) {
    const bool is_star = is_isomorphic(c.digraph, star);
    if (classify(c.digraph).connected) {
      ++connected;
      star_connected = star_connected || is_star;
    }
    if (std::abs(singular_values(c.digraph, kind).largest() - star_sigma) <= kSpectrumTolerance) {
      ++with_sigma;
      star_sigma_match = star_sigma_match || is_star;
    }
    summary.classes.push_back(c.digraph);
  }
  summary.star_unique_connected = connected == 1 && star_connected;
  summary.star_unique_with_sigma1 = with_sigma == 1 && star_sigma_match;
  return summary;
}

Digraph named_target(Shape shape, int n) {
  switch (shape) {
    case Shape::Cycle: return directed_cycle(n);
    case Shape::Path: return directed_path(n);
    case Shape::Star: return oriented_star(n - 1, 0);
  }
  throw Error(ErrorCode::Internal, "unknown shape");
}

std::vector<Digraph> expected_adjacency_mates(Shape shape, int n) {
  switch (shape) {
    case Shape::Path:
      if (n >= 3) return {disjoint_union(directed_cycle(n - 1), directed_path(1))};
      return {};
    case Shape::Star:
      if (n >= 3) return {oriented_star(0, n - 1)};
      return {};
    case Shape::Cycle:
      if (n >= 4) return {disjoint_union(directed_cycle(n - 2), directed_cycle(2))};
      return {};
  }
  return {};
}

bool meets_expectation(Shape shape, int n, const CospectralReport& report) {
  if (report.kind != MatrixKind::Adjacency) return report.mates.empty();
  const auto expected = expected_adjacency_mates(shape, n);
  if (expected.empty()) return report.mates.empty();
  for (const Digraph& want : expected) {
    const bool found = std::any_of(report.mates.begin(), report.mates.end(),
                                   [&](const Digraph& mate) { return is_isomorphic(mate, want); });
    if (!found) return false;
  }
  return true;
}

bool DeterminationReport::passed() const {
  for (const auto& check : checks)
    if (!check.expectation_met || !check.recheck_passed) return false;
  for (const auto& pair : families)
    if (!pair.confirmed()) return false;
  if (zero_law_violations != 0) return false;
  for (const auto& summary : {rank_one_l, rank_one_q}) {
    if (summary && !(summary->star_unique_connected && summary->star_unique_with_sigma1)) return false;
  }
  return true;
}

DeterminationReport verify_determination(int n, const SearchOptions& options) {
  if (n < 4 || n > kMaxPrunedOrder) throw Error(ErrorCode::InvalidOrder, "determination check needs 4 <= n <= 7");
  DeterminationReport out;
  out.n = n;
  const std::string ns = std::to_string(n);
  const std::pair<Shape, std::string> targets[] = {
      {Shape::Cycle, "C" + ns}, {Shape::Path, "P" + ns}, {Shape::Star, "S" + ns + "(" + std::to_string(n - 1) + ",0)"}};
  for (const auto& [shape, name] : targets) {
    for (MatrixKind kind : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian, MatrixKind::Adjacency}) {
      TargetCheck check;
      check.target_name = name;
      check.kind = kind;
      check.report = cospectral_mates(named_target(shape, n), kind, options);
      check.expectation_met = meets_expectation(shape, n, check.report);
      check.recheck_passed = recheck_mates(check.report);
      if (kind != MatrixKind::Adjacency) {
        check.expectation = "no mates";
      } else {
        const auto expected = expected_adjacency_mates(shape, n);
        check.expectation = expected.empty() ? "no mates" : "contains known mate";
      }
      out.zero_law_checked += check.report.zero_law_checked;
      out.zero_law_violations += check.report.zero_law_violations;
      out.checks.push_back(std::move(check));
    }
  }
  out.families = known_cospectral_families(n);
  if (n <= kMaxUnprunedOrder) {
    out.rank_one_l = rank_one_classes(n, MatrixKind::Laplacian);
    out.rank_one_q = rank_one_classes(n, MatrixKind::SignlessLaplacian);
  }
  return out;
}

}  // namespace digspec
