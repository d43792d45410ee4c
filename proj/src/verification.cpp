#include "digspec/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "digspec/closed_forms.hpp"
#include "digspec/determination.hpp"
#include "digspec/random.hpp"

namespace digspec {

bool SuiteResult::passed() const { return first_failure() == nullptr; }

const CheckRow* SuiteResult::first_failure() const {
  for (const auto& row : rows)
    if (!row.passed) return &row;
  return nullptr;
}

namespace {

CheckRow at_most(std::string name, double value, double limit, std::string note = {}) {
  return {std::move(name), value, limit, value <= limit, std::move(note)};
}

}  // namespace

SuiteResult identities_suite(int n_max, std::uint64_t seed) {
  SuiteResult result{"identities", {}};
  double full = 0.0;
  double half = 0.0;
  for (int n = 2; n <= n_max; ++n) {
    const auto r = sine_identities(n);
    full = std::max(full, r.full_turn);
    half = std::max(half, r.half_turn);
  }
  const std::string range = "n=2.." + std::to_string(n_max);
  result.rows.push_back(at_most("sum sin^2(j pi/n) = n/2, " + range, full, 1e-9));
  result.rows.push_back(at_most("sum sin^2(j pi/2n) = (n-1)/2, " + range, half, 1e-9));

  Rng rng(seed);
  const int order_cap = std::max(1, std::min(n_max, 12));
  std::uniform_int_distribution<int> order(1, order_cap);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  double trace = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Digraph d = random_digraph(rng, order(rng), density(rng));
    const double expected = static_cast<double>(zagreb_plus(d) + static_cast<std::int64_t>(d.arc_count()));
    trace = std::max(trace, std::abs(singular_values(d, MatrixKind::Laplacian).sum_of_squares() - expected));
  }
  result.rows.push_back(at_most("sum sigma_L^2 = Zg+ + a, 1000 random digraphs n<=" + std::to_string(order_cap), trace,
                                1e-9));

  const int relation_cap = std::min(n_max, 200);
  double rel_l = 0.0;
  double rel_q = 0.0;
  double gap = 0.0;
  for (int n = 2; n <= relation_cap; ++n) {
    const double lc = laplacian_cycle_formula(n).trace_norm;
    const double lp = laplacian_path_formula(n).trace_norm;
    const double qc = signless_cycle_formula(n).trace_norm;
    const double qp = signless_path_formula(n).trace_norm;
    rel_l = std::max(rel_l, std::abs((lc - lp) - relation_L(n)));
    rel_q = std::max(rel_q, std::abs((qc - qp) - relation_Q(n).value));
    gap = std::max(gap, std::abs((qc - lc) - lq_cycle_gap(n)));
  }
  const std::string rel_range = "n=2.." + std::to_string(relation_cap);
  result.rows.push_back(at_most("||L(C)|| - ||L(P)|| = 1 - tan(pi/4n), " + rel_range, rel_l, 1e-9));
  result.rows.push_back(at_most("||Q(C)|| - ||Q(P)|| by parity, " + rel_range, rel_q, 1e-9, "even n inferred"));
  result.rows.push_back(at_most("||Q(C)|| - ||L(C)|| = 0 or 2tan(pi/4n), " + rel_range, gap, 1e-9));
  return result;
}

SuiteResult fixtures_suite() {
  SuiteResult result{"fixtures", {}};
  for (const auto& check : verify_fixture_norms()) {
    CheckRow row;
    row.name = "sigma_1(" + check.name + ") vs reported " + std::to_string(check.reported);
    row.value = check.difference();
    row.limit = check.tolerance;
    row.passed = check.passed();
    row.note = "computed " + std::to_string(check.computed);
    result.rows.push_back(std::move(row));
  }
  const auto u1 = singular_values(fixtures().digraph("U1").digraph, MatrixKind::Laplacian);
  result.rows.push_back(at_most("L(U1) spectrum vs [2, 1.7321, 1, 0]",
                                max_abs_difference(u1.values, reported_u1_spectrum()), 0.0005));
  return result;
}

SuiteResult bipartite_suite(int n_max, int count, std::uint64_t seed) {
  SuiteResult result{"bipartite", {}};
  Rng rng(seed);
  const int cap = std::max(2, std::min(n_max, 12));
  std::uniform_int_distribution<int> order(2, cap);
  std::uniform_real_distribution<double> density(0.1, 1.0);
  double spectrum_gap = 0.0;
  double similarity = 0.0;
  int missing = 0;
  for (int i = 0; i < count; ++i) {
    const Digraph d = random_bipartite_digraph(rng, order(rng), density(rng));
    const auto parts = bipartition(d);
    if (!parts) {
      ++missing;
      continue;
    }
    spectrum_gap = std::max(spectrum_gap, max_abs_difference(singular_values(d, MatrixKind::Laplacian).values,
                                                             singular_values(d, MatrixKind::SignlessLaplacian).values));
    similarity = std::max(similarity, bipartite_similarity_residual(d, *parts));
  }
  const std::string label = std::to_string(count) + " random bipartite digraphs n<=" + std::to_string(cap);
  result.rows.push_back(at_most("bipartition found, " + label, missing, 0.0));
  result.rows.push_back(at_most("sigma(L) = sigma(Q), " + label, spectrum_gap, 1e-8));
  result.rows.push_back(at_most("max|S Q S - L|, " + label, similarity, 1e-12));
  return result;
}

SuiteResult interlacing_suite(int count, std::uint64_t seed) {
  SuiteResult result{"interlacing", {}};
  Rng rng(seed);
  std::uniform_int_distribution<int> split(1, 5);
  double schur = 0.0;
  for (int i = 0; i < count; ++i) {
    Matrix<double> m = random_matrix(rng, 6, 6);
    const int leading = split(rng);
    const int trailing = 6 - leading;
    m.bottomRightCorner(trailing, trailing) += Matrix<double>::Identity(trailing, trailing) * (trailing + 1.0);
    const auto s = schur_complement(m, leading);
    schur = std::max(schur, s.identity_residual() / (1.0 + std::abs(s.det_m)));
  }
  result.rows.push_back(at_most("|det M - det D det(M/D)| / (1+|det M|), " + std::to_string(count) + " draws", schur,
                                1e-8));

  std::uniform_int_distribution<int> size(1, 5);
  double worst_upper = std::numeric_limits<double>::infinity();
  int lower_violations = 0;
  std::vector<int> all(6);
  for (int i = 0; i < count; ++i) {
    const Matrix<double> m = random_matrix(rng, 6, 6);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> indices(all.begin(), all.begin() + size(rng));
    std::sort(indices.begin(), indices.end());
    const auto report = check_interlacing(m, indices);
    worst_upper = std::min(worst_upper, report.worst_upper_margin);
    if (!report.holds_lower_chain) ++lower_violations;
  }
  CheckRow upper{"sigma_k(M) >= sigma_k(B), worst margin over " + std::to_string(count) + " draws", worst_upper,
                 -kInterlacingTolerance, worst_upper >= -kInterlacingTolerance, {}};
  result.rows.push_back(std::move(upper));
  result.rows.push_back({"sigma_k(B) >= sigma_{k+r}(M) violations (reported only)", static_cast<double>(lower_violations),
                         0.0, true, "lower chain indexed by submatrix order"});
  return result;
}

}  // namespace digspec
