#include <cmath>

#include "digspec/determination.hpp"

namespace digspec {

namespace {

constexpr double kTwoDecimals = 0.005;
constexpr double kFourDecimals = 0.0005;

// Arc sets transcribed from the drawings with v_k -> k-1.
FixtureCatalog build_catalog() {
  FixtureCatalog catalog;
  auto add = [&](std::string name, int n, std::vector<Arc> arcs, double sigma1, double tol) {
    catalog.digraphs.push_back({std::move(name), make_digraph(n, std::move(arcs)), sigma1, tol});
  };
  // Oriented trees on 4 vertices, outdegree sequence [2,1,0,0].
  add("T1", 4, {{3, 0}, {0, 1}, {0, 2}}, 2.61, kTwoDecimals);
  add("T2", 4, {{0, 1}, {0, 2}, {2, 3}}, 2.49, kTwoDecimals);
  add("T3", 4, {{0, 1}, {0, 2}, {3, 2}}, 2.49, kTwoDecimals);
  // 5-vertex witnesses: T4 inside unicyclic digraphs, T5..T7 inside trees
  // with outdegree sequence [1^4, 0].
  add("T4", 5, {{0, 1}, {1, 2}, {2, 3}, {4, 2}}, 2.0421, kFourDecimals);
  add("T5", 5, {{0, 1}, {1, 2}, {3, 1}, {4, 1}}, std::sqrt(5.0), 1e-8);
  add("T6", 5, {{0, 1}, {1, 2}, {2, 3}, {4, 2}}, 2.0421, kFourDecimals);
  add("T7", 5, {{1, 0}, {2, 1}, {3, 2}, {4, 2}}, 2.0421, kFourDecimals);
  // Unicyclic, outdegree sequence [1^4].
  add("U1", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}, 2.0, kFourDecimals);
  add("U2", 5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 2}}, 2.2361, kFourDecimals);
  add("U3", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}}, 2.042, kFourDecimals);
  add("U4", 5, {{0, 1}, {1, 2}, {2, 3}, {4, 3}, {3, 1}}, 2.0743, kFourDecimals);

  auto shift = [&](std::string name, const std::string& base, std::vector<double> diag, double sigma1, double tol) {
    Matrix<double> m = laplacian(catalog.digraph(base).digraph);
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) += diag[i];
    catalog.shifted.push_back({std::move(name), base, std::move(diag), std::move(m), sigma1, tol});
  };
  shift("M1", "T1", {1, 1, 0, 0}, 3.44, kTwoDecimals);
  shift("M2", "T1", {1, 0, 0, 0}, 3.45, kTwoDecimals);
  shift("M3", "T1", {0, 1, 0, 0}, 2.64, kTwoDecimals);
  shift("M4", "T2", {0, 1, 0, 1}, 2.53, kTwoDecimals);
  shift("M5", "T2", {0, 1, 0, 0}, 2.53, kTwoDecimals);
  shift("M6", "T2", {0, 0, 0, 1}, 2.49, kTwoDecimals);
  shift("M7", "T3", {0, 1, 1, 0}, 2.58, kTwoDecimals);
  shift("M8", "T3", {0, 1, 0, 0}, 2.53, kTwoDecimals);
  shift("M9", "T3", {0, 0, 1, 0}, 2.55, kTwoDecimals);
  shift("M10", "T7", {1, 0, 0, 0, 0}, 2.0491, kFourDecimals);
  return catalog;
}

}  // namespace

const Fixture& FixtureCatalog::digraph(std::string_view name) const {
  for (const auto& f : digraphs)
    if (f.name == name) return f;
  throw Error(ErrorCode::IndexError, "no fixture named " + std::string(name));
}

const ShiftedFixture& FixtureCatalog::matrix(std::string_view name) const {
  for (const auto& f : shifted)
    if (f.name == name) return f;
  throw Error(ErrorCode::IndexError, "no shifted fixture named " + std::string(name));
}

const FixtureCatalog& fixtures() {
  static const FixtureCatalog catalog = build_catalog();
  return catalog;
}

std::vector<double> reported_u1_spectrum() { return {2.0, 1.7321, 1.0, 0.0}; }

double FixtureCheck::difference() const { return std::abs(computed - reported); }

std::vector<FixtureCheck> verify_fixture_norms() {
  std::vector<FixtureCheck> rows;
  for (const auto& f : fixtures().digraphs) {
    rows.push_back({f.name, singular_values(f.digraph, MatrixKind::Laplacian).largest(), f.reported_sigma1,
                    f.tolerance});
  }
  for (const auto& m : fixtures().shifted) {
    rows.push_back({m.name, singular_values(m.matrix).largest(), m.reported_sigma1, m.tolerance});
  }
  return rows;
}

}  // namespace digspec
