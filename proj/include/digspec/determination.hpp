#ifndef DIGSPEC_DETERMINATION_HPP
#define DIGSPEC_DETERMINATION_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digspec/digraph.hpp"
#include "digspec/closed_forms.hpp"
#include "digspec/enumeration.hpp"
#include "digspec/linalg.hpp"

namespace digspec {

// ---------------------------------------------------------------------------
// Fixture digraphs and shifted Laplacians

/// A small digraph used as a principal-submatrix witness, with the sigma_1
/// value reported for it alongside the drawing.
struct Fixture {
  std::string name;
  Digraph digraph;
  double reported_sigma1 = 0.0;
  double tolerance = 0.0;
};

/// L(base) plus a 0/1 diagonal shift.
struct ShiftedFixture {
  std::string name;
  std::string base;
  std::vector<double> shift;
  Matrix<double> matrix;
  double reported_sigma1 = 0.0;
  double tolerance = 0.0;
};

struct FixtureCatalog {
  std::vector<Fixture> digraphs;       // T1..T7, U1..U4
  std::vector<ShiftedFixture> shifted;  // M1..M10

  const Fixture& digraph(std::string_view name) const;
  const ShiftedFixture& matrix(std::string_view name) const;
};

const FixtureCatalog& fixtures();

/// Reported Laplacian spectrum of U1, to 4 decimals.
std::vector<double> reported_u1_spectrum();

struct FixtureCheck {
  std::string name;
  double computed = 0.0;
  double reported = 0.0;
  double tolerance = 0.0;

  double difference() const;
  bool passed() const { return difference() <= tolerance; }
};

/// sigma_1 of every fixture Laplacian and shifted matrix against the
/// reported figure. Digraphs first (catalog order), then M1..M10.
std::vector<FixtureCheck> verify_fixture_norms();

// ---------------------------------------------------------------------------
// Cospectral-mate search

/// Largest a with a^2/n + a <= target_trace_sum. Since Zg+ >= a^2/n by
/// Cauchy-Schwarz and sum sigma_i(L)^2 = Zg+ + a, no digraph with more arcs
/// can reach that Laplacian trace sum.
int trace_arc_bound(int n, double target_trace_sum);

struct SearchProgress {
  std::uint64_t examined = 0;
  std::uint64_t survivors = 0;
  std::uint64_t total = 0;
};

struct SearchOptions {
  /// Arc bound, trace-identity and sigma_1 filters. Off means every
  /// candidate gets a full spectrum.
  bool prune = true;
  int jobs = 1;
  std::function<void(const SearchProgress&)> progress;
  std::uint64_t progress_interval = std::uint64_t{1} << 22;
};

struct CospectralReport {
  Digraph target;
  MatrixKind kind = MatrixKind::Laplacian;
  SingularSpectrum target_spectrum;
  /// One labeled representative per isomorphism class, the first one met in
  /// enumeration order, sorted by that position.
  std::vector<Digraph> mates;
  std::vector<std::uint64_t> mate_indices;

  bool pruned = true;
  int max_arcs = 0;
  std::uint64_t candidates_examined = 0;
  std::uint64_t candidates_after_trace_filter = 0;
  std::uint64_t candidates_after_sigma1_filter = 0;
  std::uint64_t spectrum_matches = 0;

  /// For kind L: candidates with >= 2 weak components whose spectrum was
  /// computed, and how many of them had fewer than two zero singular values.
  std::uint64_t zero_law_checked = 0;
  std::uint64_t zero_law_violations = 0;

  std::chrono::duration<double> elapsed{0.0};
};

/// Every labeled digraph in `space` that shares the target's singular
/// values for `kind`, reduced to isomorphism classes other than the target's.
/// Throws OrderMismatch if space.n differs from the target order and
/// SearchSpaceTooLarge above n = 7 (pruned) or n = 5 (unpruned).
CospectralReport cospectral_mates(const Digraph& target, MatrixKind kind, const EnumerationSpec& space,
                                  const SearchOptions& options = {});

/// Full labeled space of the target's order.
CospectralReport cospectral_mates(const Digraph& target, MatrixKind kind, const SearchOptions& options = {});

/// Re-derives every mate claim from scratch: spectrum recomputed from the arc
/// set, non-isomorphism against the target and pairwise among mates.
bool recheck_mates(const CospectralReport& report);

// ---------------------------------------------------------------------------
// Known cospectral families

struct CospectralPair {
  std::string label;
  MatrixKind kind = MatrixKind::Adjacency;
  Digraph first;
  Digraph second;
  SingularSpectrum first_spectrum;
  SingularSpectrum second_spectrum;
  bool isomorphic = false;

  bool spectra_match() const { return spectra_equal(first_spectrum, second_spectrum); }
  bool confirmed() const { return !isomorphic && spectra_match(); }
};

/// (P_n, C_{n-1} u K_1) under A; (S_n(x,y), S_n(y,x)) under A for each
/// x < y with x + y = n - 1; (S_n(0,n-1), S_n(1,n-2)) under L and Q;
/// P_n and P_n with its last arc reversed under L and Q.
std::vector<CospectralPair> known_cospectral_families(int n);

// ---------------------------------------------------------------------------
// Rank-one Laplacians

struct RankOneSummary {
  int n = 0;
  MatrixKind kind = MatrixKind::Laplacian;
  /// Isomorphism classes of order-n digraphs whose matrix has rank 1.
  std::vector<Digraph> classes;
  /// S_n(n-1,0) is the only weakly connected class.
  bool star_unique_connected = false;
  /// S_n(n-1,0) is the only class with sigma_1 = sqrt((n-1)^2 + (n-1)).
  bool star_unique_with_sigma1 = false;
};

/// Exhaustive over the labeled space; n <= 5.
RankOneSummary rank_one_classes(int n, MatrixKind kind);

// ---------------------------------------------------------------------------
// Determination check for C_n, P_n and S_n(n-1,0)

struct TargetCheck {
  std::string target_name;
  MatrixKind kind = MatrixKind::Laplacian;
  std::string expectation;
  bool expectation_met = false;
  bool recheck_passed = false;
  CospectralReport report;
};

struct DeterminationReport {
  int n = 0;
  std::vector<TargetCheck> checks;
  std::vector<CospectralPair> families;
  std::uint64_t zero_law_checked = 0;
  std::uint64_t zero_law_violations = 0;
  std::optional<RankOneSummary> rank_one_l;
  std::optional<RankOneSummary> rank_one_q;

  bool passed() const;
};

/// Digraphs a named target is expected to have as A-mates (up to isomorphism).
std::vector<Digraph> expected_adjacency_mates(Shape shape, int n);

/// Whether a finished search agrees with the determination result for a
/// named family: no mates under L or Q, and the expected mates under A.
bool meets_expectation(Shape shape, int n, const CospectralReport& report);

Digraph named_target(Shape shape, int n);

/// Runs the mate search for C_n, P_n, S_n(n-1,0) under L, Q and A.
/// 4 <= n <= 7. Rank-one summaries are included for n <= 5.
DeterminationReport verify_determination(int n, const SearchOptions& options = {});

}  // namespace digspec

#endif  // DIGSPEC_DETERMINATION_HPP
