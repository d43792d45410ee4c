#ifndef DIGSPEC_VERIFICATION_HPP
#define DIGSPEC_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace digspec {

/// One line of a verification table. `value` is compared against `limit`
/// in the direction the check needs; report-only rows always pass.
struct CheckRow {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool passed = true;
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRow> rows;

  bool passed() const;
  const CheckRow* first_failure() const;
};

/// Sine-square sums for n = 2..n_max, the Laplacian trace identity on 1000
/// random digraphs of order <= min(n_max, 12), and the cycle/path trace-norm
/// relations for n = 2..min(n_max, 200).
SuiteResult identities_suite(int n_max, std::uint64_t seed);

/// sigma_1 of every fixture against its reported value, plus the U1 spectrum.
SuiteResult fixtures_suite();

/// `count` random bipartite digraphs of order 2..n_max: L and Q spectra agree
/// and S Q S reproduces L.
SuiteResult bipartite_suite(int n_max, int count, std::uint64_t seed);

/// Schur determinant identity on `count` random 6x6 block matrices, and both
/// interlacing chains on `count` random principal submatrices.
SuiteResult interlacing_suite(int count, std::uint64_t seed);

}  // namespace digspec

#endif  // DIGSPEC_VERIFICATION_HPP
