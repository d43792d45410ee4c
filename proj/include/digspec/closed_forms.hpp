#ifndef DIGSPEC_CLOSED_FORMS_HPP
#define DIGSPEC_CLOSED_FORMS_HPP

#include <optional>
#include <string_view>

#include "digspec/digraph.hpp"
#include "digspec/linalg.hpp"

namespace digspec {

enum class Shape { Path, Cycle, Star };

std::string_view shape_name(Shape shape);
Shape parse_shape(std::string_view name);

enum class Family { CycleL, PathL, CycleQ, PathQ, Star };

std::string_view family_name(Family family);

struct StarParams {
  int x = 0;  ///< arcs out of the center
  int y = 0;  ///< arcs into the center
};

/// Closed-form spectrum and trace norm of one family member.
struct FormulaResult {
  Family family = Family::CycleL;
  int n = 0;
  std::optional<StarParams> params;
  SingularSpectrum spectrum;
  double trace_norm = 0.0;
};

/// sin(pi * num / den) for 0 <= num <= den, argument folded into [0, pi/2].
double sin_pi_ratio(long num, long den);

// Directed cycle and path. All throw InvalidOrder for n < 2.
FormulaResult laplacian_cycle_formula(int n);
FormulaResult laplacian_path_formula(int n);
FormulaResult signless_cycle_formula(int n);
FormulaResult signless_path_formula(int n);

/// Oriented star S_n(x, y): L and Q share this spectrum. trace_norm is the
/// sum of the full spectrum, both quadratic-root terms included.
FormulaResult star_formula(int x, int y);

/// (y - 1) + sqrt(larger quadratic root): the single-root trace norm
/// expression. Differs from star_formula().trace_norm by sqrt(smaller root),
/// which vanishes only when x = 0.
double star_single_root_trace_norm(int x, int y);

/// ||L(C_n)||_* - ||L(P_n)||_* = 1 - tan(pi/4n).
double relation_L(int n);

struct RelationValue {
  double value = 0.0;
  /// True for even n, where the value follows from L/Q equality on
  /// bipartite digraphs rather than a direct computation.
  bool inferred = false;
};

/// ||Q(C_n)||_* - ||Q(P_n)||_*: 1 + tan(pi/4n) for odd n, 1 - tan(pi/4n) for even n.
RelationValue relation_Q(int n);

/// ||Q(C_n)||_* - ||L(C_n)||_*: 0 for even n, 2 tan(pi/4n) for odd n.
double lq_cycle_gap(int n);

struct SineResiduals {
  double full_turn = 0.0;  ///< |sum_j sin^2(j pi / n) - n/2|
  double half_turn = 0.0;  ///< |sum_j sin^2(j pi / 2n) - (n-1)/2|
};

SineResiduals sine_identities(int n);

/// Largest Laplacian singular value of C_n: 2 for even n, 2cos(pi/2n) for odd n.
double spectral_norm_L_cycle(int n);

/// Adjacency singular values: 1^(n) for the cycle, 1^(n-1),0 for the path,
/// sqrt(x), sqrt(y), 0^(n-2) for the star (n taken from x + y + 1).
SingularSpectrum adjacency_formula(Shape shape, int n, std::optional<StarParams> params = std::nullopt);

/// The digraph a formula describes.
Digraph formula_digraph(const FormulaResult& result);
/// The matrix kind a formula describes; stars report L.
MatrixKind formula_kind(const FormulaResult& result);

/// Max elementwise gap between the formula spectrum and the numeric spectrum
/// of the constructed matrix, computed in long double.
double numeric_deviation(const FormulaResult& result);

}  // namespace digspec

#endif  // DIGSPEC_CLOSED_FORMS_HPP
