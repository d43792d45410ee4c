#include <doctest.h>

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "digspec/closed_forms.hpp"

using namespace digspec;
using doctest::Approx;
using std::numbers::pi;

namespace {

// JacobiSVD works on M directly, so zero singular values come out at
// eps * ||M|| rather than sqrt(eps).
std::vector<double> oracle(const Digraph& d, MatrixKind kind) {
  Eigen::JacobiSVD<Matrix<double>> svd(digraph_matrix(d, kind));
  const Vector<double> s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double gap(const FormulaResult& f) {
  return max_abs_difference(f.spectrum.values, oracle(formula_digraph(f), formula_kind(f)));
}

}  // namespace

TEST_CASE("named values") {
  const auto lc4 = laplacian_cycle_formula(4);
  CHECK(max_abs_difference(lc4.spectrum.values, std::vector{2.0, std::sqrt(2.0), std::sqrt(2.0), 0.0}) <= 1e-15);
  CHECK(lc4.trace_norm == Approx(2.0 / std::tan(pi / 8)).epsilon(1e-14));
  CHECK(std::abs(lc4.trace_norm - 4.828427125) <= 1e-8);
  CHECK(std::abs(laplacian_path_formula(4).trace_norm - 4.027339492) <= 1e-8);
  CHECK(std::abs(signless_cycle_formula(5).trace_norm - 6.472135955) <= 1e-8);
  CHECK(spectral_norm_L_cycle(4) == Approx(2.0));
  CHECK(spectral_norm_L_cycle(5) == Approx(2.0 * std::cos(pi / 10)));
}

TEST_CASE("cycle and path formulas against an SVD oracle") {
  for (int n = 2; n <= 80; ++n) {
    CAPTURE(n);
    CHECK(gap(laplacian_cycle_formula(n)) <= 1e-12);
    CHECK(gap(laplacian_path_formula(n)) <= 1e-12);
    CHECK(gap(signless_cycle_formula(n)) <= 1e-12);
    CHECK(gap(signless_path_formula(n)) <= 1e-12);
  }
  for (int n : {2, 7, 64, 120}) {
    CHECK(numeric_deviation(laplacian_cycle_formula(n)) <= 1e-8);
    CHECK(numeric_deviation(signless_path_formula(n)) <= 1e-8);
  }
}

TEST_CASE("trace norms are sums of the spectra") {
  for (int n = 2; n <= 40; ++n) {
    for (const auto& f : {laplacian_cycle_formula(n), laplacian_path_formula(n), signless_cycle_formula(n),
                          signless_path_formula(n)}) {
      CHECK(f.trace_norm == Approx(f.spectrum.sum()).epsilon(1e-13));
      CHECK(f.spectrum.size() == static_cast<std::size_t>(n));
    }
  }
  CHECK(laplacian_cycle_formula(6).family == Family::CycleL);
  CHECK(family_name(Family::PathQ) == "path-Q");
}

TEST_CASE("star spectra") {
  for (int x = 0; x <= 10; ++x)
    for (int y = 0; x + y <= 10; ++y) {
      if (x + y == 0) continue;
      CAPTURE(x);
      CAPTURE(y);
      const auto f = star_formula(x, y);
      REQUIRE(f.params);
      CHECK(f.n == x + y + 1);
      CHECK(gap(f) <= 1e-12);
      CHECK(max_abs_difference(f.spectrum.values, oracle(oriented_star(x, y), MatrixKind::SignlessLaplacian)) <=
            1e-12);
      CHECK(f.trace_norm == Approx(f.spectrum.sum()).epsilon(1e-13));
    }
  // y = 0: one nonzero value sqrt((n-1)^2 + (n-1))
  const auto out = star_formula(5, 0);
  CHECK(out.spectrum.values.front() == Approx(std::sqrt(30.0)));
  CHECK(out.spectrum.zero_multiplicity(1e-12) == 5);
}

TEST_CASE("single-root star trace norm") {
  CHECK(star_single_root_trace_norm(0, 4) == Approx(star_formula(0, 4).trace_norm).epsilon(1e-14));
  for (int x = 1; x <= 6; ++x)
    for (int y = 1; y <= 6; ++y) {
      const auto f = star_formula(x, y);
      const double missing = f.trace_norm - star_single_root_trace_norm(x, y);
      CHECK(missing > 0.0);
      // the gap is the smaller-root singular value (exactly 1 when x = 1)
      CHECK(std::any_of(f.spectrum.values.begin(), f.spectrum.values.end(),
                        [&](double v) { return std::abs(v - missing) <= 1e-12; }));
      CHECK((x == 1) == (std::abs(missing - 1.0) <= 1e-12));
    }
}

TEST_CASE("relations between families") {
  for (int n = 2; n <= 200; ++n) {
    const double lc = laplacian_cycle_formula(n).trace_norm;
    const double lp = laplacian_path_formula(n).trace_norm;
    const double qc = signless_cycle_formula(n).trace_norm;
    const double qp = signless_path_formula(n).trace_norm;
    const double tan4 = std::tan(pi / (4.0 * n));
    CHECK(std::abs(lc - lp - (1.0 - tan4)) <= 1e-9);
    CHECK(std::abs(relation_L(n) - (1.0 - tan4)) <= 1e-15);
    const auto rq = relation_Q(n);
    CHECK(rq.inferred == (n % 2 == 0));
    CHECK(std::abs(qc - qp - rq.value) <= 1e-9);
    CHECK(std::abs(qc - lc - (n % 2 == 0 ? 0.0 : 2.0 * tan4)) <= 1e-9);
    CHECK(lq_cycle_gap(n) == Approx(n % 2 == 0 ? 0.0 : 2.0 * tan4));
  }
}

TEST_CASE("sine sums") {
  for (int n : {2, 3, 10, 101, 1000}) {
    const auto r = sine_identities(n);
    CHECK(r.full_turn <= 1e-9);
    CHECK(r.half_turn <= 1e-9);
  }
  for (long den = 1; den <= 40; ++den)
    for (long num = 0; num <= den; ++num) CHECK(sin_pi_ratio(num, den) == Approx(std::sin(pi * num / den)));
}

TEST_CASE("adjacency formulas") {
  for (int n = 3; n <= 12; ++n) {
    for (Shape shape : {Shape::Cycle, Shape::Path}) {
      const Digraph d = shape == Shape::Cycle ? directed_cycle(n) : directed_path(n);
      CHECK(max_abs_difference(adjacency_formula(shape, n).values, oracle(d, MatrixKind::Adjacency)) <= 1e-12);
    }
    for (int x = 0; x < n; ++x) {
      const int y = n - 1 - x;
      CHECK(max_abs_difference(adjacency_formula(Shape::Star, n, StarParams{x, y}).values,
                               oracle(oriented_star(x, y), MatrixKind::Adjacency)) <= 1e-12);
    }
  }
}

TEST_CASE("formula input errors") {
  for (auto fn : {laplacian_cycle_formula, laplacian_path_formula, signless_cycle_formula, signless_path_formula}) {
    CHECK_THROWS_AS(fn(1), Error);
  }
  CHECK_THROWS_AS(star_formula(0, 0), Error);
  CHECK_THROWS_AS(star_single_root_trace_norm(3, 0), Error);
  CHECK(parse_shape("star") == Shape::Star);
  CHECK_THROWS_AS(parse_shape("wheel"), Error);
}
