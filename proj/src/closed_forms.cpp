#include "digspec/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace digspec {

namespace {

constexpr double kPi = std::numbers::pi;

void require_order(int n, int minimum, std::string_view what) {
  if (n < minimum) {
    throw Error(ErrorCode::InvalidOrder,
                std::string(what) + " needs n >= " + std::to_string(minimum) + ", got " + std::to_string(n));
  }
}

FormulaResult finish(Family family, int n, MatrixKind kind, std::vector<double> values, double trace_norm) {
  std::sort(values.begin(), values.end(), std::greater<>());
  FormulaResult result;
  result.family = family;
  result.n = n;
  result.spectrum.kind = kind;
  result.spectrum.values = std::move(values);
  result.trace_norm = trace_norm;
  return result;
}

double cot(double angle) { return std::cos(angle) / std::sin(angle); }

}  // namespace

std::string_view shape_name(Shape shape) {
  switch (shape) {
    case Shape::Path: return "path";
    case Shape::Cycle: return "cycle";
    case Shape::Star: return "star";
  }
  return "?";
}

Shape parse_shape(std::string_view name) {
  if (name == "path") return Shape::Path;
  if (name == "cycle") return Shape::Cycle;
  if (name == "star") return Shape::Star;
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::CycleL: return "cycle-L";
    case Family::PathL: return "path-L";
    case Family::CycleQ: return "cycle-Q";
    case Family::PathQ: return "path-Q";
    case Family::Star: return "star";
  }
  return "?";
}

double sin_pi_ratio(long num, long den) {
  if (2 * num > den) num = den - num;
  return std::sin(kPi * static_cast<double>(num) / static_cast<double>(den));
}

FormulaResult laplacian_cycle_formula(int n) {
  require_order(n, 2, "cycle formula");
  std::vector<double> values;
  for (int j = 0; j < n; ++j) values.push_back(2.0 * sin_pi_ratio(j, n));
  return finish(Family::CycleL, n, MatrixKind::Laplacian, std::move(values), 2.0 * cot(kPi / (2.0 * n)));
}

FormulaResult laplacian_path_formula(int n) {
  require_order(n, 2, "path formula");
  std::vector<double> values;
  for (int j = 0; j < n; ++j) values.push_back(2.0 * sin_pi_ratio(j, 2L * n));
  return finish(Family::PathL, n, MatrixKind::Laplacian, std::move(values), cot(kPi / (4.0 * n)) - 1.0);
}

FormulaResult signless_cycle_formula(int n) {
  require_order(n, 2, "cycle formula");
  std::vector<double> values;
  // |cos(j pi / n)| = sin(|n - 2j| pi / 2n)
  for (int j = 0; j < n; ++j) values.push_back(2.0 * sin_pi_ratio(std::abs(n - 2 * j), 2L * n));
  const double norm = n % 2 == 0 ? 2.0 * cot(kPi / (2.0 * n)) : 2.0 / std::sin(kPi / (2.0 * n));
  return finish(Family::CycleQ, n, MatrixKind::SignlessLaplacian, std::move(values), norm);
}

FormulaResult signless_path_formula(int n) {
  FormulaResult result = laplacian_path_formula(n);
  result.family = Family::PathQ;
  result.spectrum.kind = MatrixKind::SignlessLaplacian;
  return result;
}

namespace {

struct StarRoots {
  double larger;
  double smaller;
};

// Roots of t^2 - b t + c with b = x + x^2 + y + 1, c = x + x^2 + xy.
StarRoots star_roots(int x, int y) {
  const double b = static_cast<double>(x) + static_cast<double>(x) * x + y + 1.0;
  const double c = static_cast<double>(x) + static_cast<double>(x) * x + static_cast<double>(x) * y;
  const double disc = std::max(0.0, b * b - 4.0 * c);
  const double larger = 0.5 * (b + std::sqrt(disc));
  const double smaller = larger > 0.0 ? c / larger : 0.0;
  return {larger, smaller};
}

}  // namespace

FormulaResult star_formula(int x, int y) {
  if (x < 0 || y < 0 || x + y < 1) {
    throw Error(ErrorCode::InvalidOrder, "star formula needs x, y >= 0 and x + y >= 1");
  }
  const int n = x + y + 1;
  std::vector<double> values;
  if (y == 0) {
    values.assign(static_cast<std::size_t>(n - 1), 0.0);
    const double m = n - 1;
    values.push_back(std::sqrt(m * m + m));
  } else {
    values.assign(static_cast<std::size_t>(x), 0.0);
    values.insert(values.end(), static_cast<std::size_t>(y - 1), 1.0);
    const StarRoots roots = star_roots(x, y);
    values.push_back(std::sqrt(roots.larger));
    values.push_back(std::sqrt(roots.smaller));
  }
  double total = 0.0;
  for (double v : values) total += v;
  FormulaResult result = finish(Family::Star, n, MatrixKind::Laplacian, std::move(values), total);
  result.params = StarParams{x, y};
  return result;
}

double star_single_root_trace_norm(int x, int y) {
  if (x < 0 || y < 1) throw Error(ErrorCode::InvalidOrder, "single-root display needs y >= 1");
  return (y - 1) + std::sqrt(star_roots(x, y).larger);
}

double relation_L(int n) {
  require_order(n, 2, "relation");
  return 1.0 - std::tan(kPi / (4.0 * n));
}

RelationValue relation_Q(int n) {
  require_order(n, 2, "relation");
  const double t = std::tan(kPi / (4.0 * n));
  if (n % 2 == 0) return {1.0 - t, true};
  return {1.0 + t, false};
}

double lq_cycle_gap(int n) {
  require_order(n, 2, "cycle gap");
  return n % 2 == 0 ? 0.0 : 2.0 * std::tan(kPi / (4.0 * n));
}

SineResiduals sine_identities(int n) {
  require_order(n, 2, "sine identities");
  double full = 0.0;
  double half = 0.0;
  for (int j = 0; j < n; ++j) {
    const double a = sin_pi_ratio(j, n);
    const double b = sin_pi_ratio(j, 2L * n);
    full += a * a;
    half += b * b;
  }
  return {std::abs(full - n / 2.0), std::abs(half - (n - 1) / 2.0)};
}

double spectral_norm_L_cycle(int n) {
  require_order(n, 2, "spectral norm");
  return n % 2 == 0 ? 2.0 : 2.0 * std::cos(kPi / (2.0 * n));
}

SingularSpectrum adjacency_formula(Shape shape, int n, std::optional<StarParams> params) {
  SingularSpectrum spectrum;
  spectrum.kind = MatrixKind::Adjacency;
  switch (shape) {
    case Shape::Cycle:
      require_order(n, 2, "cycle");
      spectrum.values.assign(static_cast<std::size_t>(n), 1.0);
      break;
    case Shape::Path:
      require_order(n, 1, "path");
      spectrum.values.assign(static_cast<std::size_t>(n - 1), 1.0);
      spectrum.values.push_back(0.0);
      break;
    case Shape::Star: {
      if (!params || params->x < 0 || params->y < 0 || params->x + params->y < 1) {
        throw Error(ErrorCode::InvalidOrder, "star needs x, y >= 0 and x + y >= 1");
      }
      const int order = params->x + params->y + 1;
      if (n != 0 && n != order) throw Error(ErrorCode::InvalidOrder, "star order must equal x + y + 1");
      spectrum.values.assign(static_cast<std::size_t>(order - 2), 0.0);
      spectrum.values.push_back(std::sqrt(static_cast<double>(params->x)));
      spectrum.values.push_back(std::sqrt(static_cast<double>(params->y)));
      std::sort(spectrum.values.begin(), spectrum.values.end(), std::greater<>());
      break;
    }
  }
  return spectrum;
}

Digraph formula_digraph(const FormulaResult& result) {
  switch (result.family) {
    case Family::CycleL:
    case Family::CycleQ: return directed_cycle(result.n);
    case Family::PathL:
    case Family::PathQ: return directed_path(result.n);
    case Family::Star: return oriented_star(result.params->x, result.params->y);
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

MatrixKind formula_kind(const FormulaResult& result) { return result.spectrum.kind; }

double numeric_deviation(const FormulaResult& result) {
  // Extended precision: in double, sqrt of a Gram eigenvalue that should be
  // zero comes out near 1e-8 for n in the hundreds.
  const auto numeric = singular_values<long double>(formula_digraph(result), formula_kind(result));
  double worst = numeric.size() == result.spectrum.size() ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < numeric.size() && i < result.spectrum.size(); ++i) {
    worst = std::max(worst, static_cast<double>(std::abs(numeric.values[i] - result.spectrum.values[i])));
  }
  return worst;
}

}  // namespace digspec
