#ifndef DIGSPEC_LINALG_HPP
#define DIGSPEC_LINALG_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "digspec/digraph.hpp"
#include "digspec/error.hpp"

namespace digspec {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian, Raw };

inline std::string_view kind_symbol(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "A";
    case MatrixKind::Laplacian: return "L";
    case MatrixKind::SignlessLaplacian: return "Q";
    case MatrixKind::Raw: return "raw";
  }
  return "?";
}

/// Parses "A", "L" or "Q".
inline MatrixKind parse_kind(std::string_view symbol) {
  if (symbol == "A") return MatrixKind::Adjacency;
  if (symbol == "L") return MatrixKind::Laplacian;
  if (symbol == "Q") return MatrixKind::SignlessLaplacian;
  throw Error(ErrorCode::ParseError, "unknown matrix kind '" + std::string(symbol) + "'");
}

// ---------------------------------------------------------------------------
// Digraph matrices

template <typename Scalar = double>
Matrix<Scalar> adjacency_matrix(const Digraph& d) {
  Matrix<Scalar> a = Matrix<Scalar>::Zero(d.order(), d.order());
  for (const Arc& arc : d.arcs()) a(arc.tail, arc.head) = Scalar(1);
  return a;
}

/// Diagonal matrix of outdegrees.
template <typename Scalar = double>
Matrix<Scalar> outdegree_matrix(const Digraph& d) {
  Matrix<Scalar> delta = Matrix<Scalar>::Zero(d.order(), d.order());
  for (const Arc& arc : d.arcs()) delta(arc.tail, arc.tail) += Scalar(1);
  return delta;
}

/// L = outdegree matrix - A.
template <typename Scalar = double>
Matrix<Scalar> laplacian(const Digraph& d) {
  return outdegree_matrix<Scalar>(d) - adjacency_matrix<Scalar>(d);
}

/// Q = outdegree matrix + A.
template <typename Scalar = double>
Matrix<Scalar> signless_laplacian(const Digraph& d) {
  return outdegree_matrix<Scalar>(d) + adjacency_matrix<Scalar>(d);
}

template <typename Scalar = double>
Matrix<Scalar> digraph_matrix(const Digraph& d, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return adjacency_matrix<Scalar>(d);
    case MatrixKind::Laplacian: return laplacian<Scalar>(d);
    case MatrixKind::SignlessLaplacian: return signless_laplacian<Scalar>(d);
    case MatrixKind::Raw: break;
  }
  throw Error(ErrorCode::InvalidOrder, "a digraph has no raw matrix");
}

/// Square matrix type with the row shape of Derived (keeps fixed max sizes).
template <typename Derived>
using SquareOf = Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Derived::RowsAtCompileTime, 0,
                               Derived::MaxRowsAtCompileTime, Derived::MaxRowsAtCompileTime>;

/// Column vector type with the row shape of Derived.
template <typename Derived>
using ColumnOf = Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1, 0,
                               Derived::MaxRowsAtCompileTime, 1>;

/// M * M^T.
template <typename Derived>
SquareOf<Derived> gram(const Eigen::MatrixBase<Derived>& m) {
  return m * m.transpose();
}

// ---------------------------------------------------------------------------
// Symmetric eigenvalues by cyclic Jacobi rotations

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kJacobiRelativeTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

namespace detail {

template <typename Derived>
typename Derived::Scalar off_diagonal_norm(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (Eigen::Index q = 1; q < a.cols(); ++q) sum += a.col(q).head(q).squaredNorm();
  using std::sqrt;
  return sqrt(Scalar(2) * sum);
}

// One rotation J^T A J zeroing a(p, q), p < q, touching only the upper
// triangle. Updates use the tau = s / (1 + c) increment form, which keeps
// eigenvalues near zero accurate to far better than eps * ||A||.
template <typename Scalar, int R, int C, int O, int MR, int MC>
void rotate(Eigen::Matrix<Scalar, R, C, O, MR, MC>& a, Eigen::Index p, Eigen::Index q) {
  using std::abs;
  using std::sqrt;
  const Scalar apq = a(p, q);
  const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
  Scalar t;
  if (abs(theta) > Scalar(1e150)) {
    t = Scalar(1) / (Scalar(2) * theta);
  } else {
    t = Scalar(1) / (abs(theta) + sqrt(Scalar(1) + theta * theta));
    // signbit, not < 0: at theta = +-0 the sign of a(p, q) must still decide,
    // so that conjugating by a +-1 diagonal flips every rotation exactly.
    if (std::signbit(theta)) t = -t;
  }
  const Scalar c = Scalar(1) / sqrt(Scalar(1) + t * t);
  const Scalar s = t * c;
  const Scalar tau = s / (Scalar(1) + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = Scalar(0);
  auto turn = [&](Scalar& x, Scalar& y) {
    const Scalar g = x;
    const Scalar h = y;
    x = g - s * (h + g * tau);
    y = h + s * (g - h * tau);
  };
  const Eigen::Index n = a.rows();
  // Raw column-major indexing; Eigen's operator() costs about 15% here.
  static_assert(!(O & Eigen::RowMajor), "rotate expects column-major storage");
  Scalar* data = a.data();
  Scalar* col_p = data + p * n;
  Scalar* col_q = data + q * n;
  for (Eigen::Index j = 0; j < p; ++j) turn(col_p[j], col_q[j]);
  for (Eigen::Index j = p + 1; j < q; ++j) turn(data[p + j * n], col_q[j]);
  for (Eigen::Index j = q + 1; j < n; ++j) turn(data[p + j * n], data[q + j * n]);
}

}  // namespace detail

/// Eigenvalues of a real symmetric matrix, sorted descending.
///
/// Cyclic-by-row Jacobi: each sweep annihilates every off-diagonal pair
/// (p, q), p < q, in row order. Stops once the off-diagonal Frobenius norm
/// is at most 1e-12 * (1 + ||S||_F). Throws NotSymmetric when
/// max|S - S^T| > 1e-12 and NoConvergence after 100 sweeps.
template <typename Derived>
ColumnOf<Derived> symmetric_eigenvalues(const Eigen::MatrixBase<Derived>& s) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  if (s.rows() != s.cols()) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  const Eigen::Index n = s.rows();
  if (n == 0) return ColumnOf<Derived>();
  if ((s - s.transpose()).cwiseAbs().maxCoeff() > Scalar(kSymmetryTolerance)) {
    throw Error(ErrorCode::NotSymmetric, "max |S - S^T| exceeds 1e-12");
  }

  typename Derived::PlainObject a = s;
  // Only the upper triangle is read from here on.
  const Scalar threshold = Scalar(kJacobiRelativeTolerance) * (Scalar(1) + a.norm());
  // Entries below this cannot keep the off-diagonal norm above threshold.
  const Scalar negligible = threshold / Scalar(2 * n);

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (abs(a(p, q)) <= negligible) continue;
        detail::rotate(a, p, q);
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence, "Jacobi sweep cap of " + std::to_string(kJacobiMaxSweeps) + " reached");
  }

  ColumnOf<Derived> eig = a.diagonal();
  std::sort(eig.data(), eig.data() + n, std::greater<Scalar>());
  return eig;
}

// ---------------------------------------------------------------------------
// Singular values and trace norm

/// Nonnegative values sorted descending, tagged with the matrix they came from.
template <typename Scalar>
struct BasicSingularSpectrum {
  MatrixKind kind = MatrixKind::Raw;
  std::vector<Scalar> values;

  std::size_t size() const noexcept { return values.size(); }
  Scalar sum() const {
    Scalar total(0);
    for (const Scalar& v : values) total += v;
    return total;
  }
  Scalar sum_of_squares() const {
    Scalar total(0);
    for (const Scalar& v : values) total += v * v;
    return total;
  }
  std::size_t zero_multiplicity(Scalar tolerance) const {
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [&](const Scalar& v) { return v <= tolerance; }));
  }
  Scalar largest() const { return values.empty() ? Scalar(0) : values.front(); }
};

using SingularSpectrum = BasicSingularSpectrum<double>;

/// Gram eigenvalues in [-1e-9, 0] are roundoff and clamp to zero; anything
/// more negative is a solver fault.
inline constexpr double kGramClampWindow = 1e-9;
/// Two spectra are equal when their sorted entries agree to this tolerance.
inline constexpr double kSpectrumTolerance = 1e-7;

template <typename Derived>
BasicSingularSpectrum<typename Derived::Scalar> singular_values(const Eigen::MatrixBase<Derived>& m,
                                                                MatrixKind kind = MatrixKind::Raw) {
  using Scalar = typename Derived::Scalar;
  using std::sqrt;
  const auto eig = symmetric_eigenvalues(gram(m));
  BasicSingularSpectrum<Scalar> spectrum;
  spectrum.kind = kind;
  spectrum.values.reserve(static_cast<std::size_t>(eig.size()));
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    Scalar lambda = eig(i);
    if (lambda < Scalar(-kGramClampWindow)) {
      throw Error(ErrorCode::Internal, "Gram matrix eigenvalue " + std::to_string(static_cast<double>(lambda)) +
                                           " below the clamp window");
    }
    spectrum.values.push_back(lambda > Scalar(0) ? sqrt(lambda) : Scalar(0));
  }
  return spectrum;
}

template <typename Scalar = double>
BasicSingularSpectrum<Scalar> singular_values(const Digraph& d, MatrixKind kind) {
  return singular_values(digraph_matrix<Scalar>(d, kind), kind);
}

/// Sum of singular values.
template <typename Derived>
typename Derived::Scalar trace_norm(const Eigen::MatrixBase<Derived>& m) {
  return singular_values(m).sum();
}

template <typename Scalar>
Scalar max_abs_difference(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return std::numeric_limits<Scalar>::infinity();
  Scalar worst(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    using std::abs;
    worst = std::max(worst, Scalar(abs(a[i] - b[i])));
  }
  return worst;
}

template <typename Scalar>
bool spectra_equal(const BasicSingularSpectrum<Scalar>& a, const BasicSingularSpectrum<Scalar>& b,
                   Scalar tolerance = Scalar(kSpectrumTolerance)) {
  return max_abs_difference(a.values, b.values) <= tolerance;
}

// ---------------------------------------------------------------------------
// Submatrices, determinant, Schur complement, interlacing

/// Rows and columns of m restricted to indices, in the given order.
template <typename Derived>
Matrix<typename Derived::Scalar> principal_submatrix(const Eigen::MatrixBase<Derived>& m,
                                                     std::span<const int> indices) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::IndexError, "principal submatrix of a non-square matrix");
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  for (int i : indices) {
    if (i < 0 || i >= n) throw Error(ErrorCode::IndexError, "index " + std::to_string(i) + " out of range");
    if (taken[i]) throw Error(ErrorCode::IndexError, "index " + std::to_string(i) + " repeated");
    taken[i] = true;
  }
  const auto r = static_cast<Eigen::Index>(indices.size());
  Matrix<typename Derived::Scalar> sub(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) sub(i, j) = m(indices[i], indices[j]);
  return sub;
}

inline constexpr double kSingularityTolerance = 1e-9;

/// LU with partial pivoting. Returns exactly zero when a pivot falls below
/// 1e-9 times the largest entry magnitude.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  if (m.rows() != m.cols()) throw Error(ErrorCode::IndexError, "determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> lu = m;
  const Scalar scale = lu.cwiseAbs().maxCoeff();
  if (scale == Scalar(0)) return Scalar(0);
  const Scalar tiny = Scalar(kSingularityTolerance) * scale;

  Scalar det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    lu.col(k).tail(n - k).cwiseAbs().maxCoeff(&pivot);
    pivot += k;
    if (abs(lu(pivot, k)) <= tiny) return Scalar(0);
    if (pivot != k) {
      lu.row(k).swap(lu.row(pivot));
      det = -det;
    }
    det *= lu(k, k);
    const Eigen::Index rest = n - k - 1;
    if (rest == 0) break;
    lu.col(k).tail(rest) /= lu(k, k);
    lu.bottomRightCorner(rest, rest).noalias() -= lu.col(k).tail(rest) * lu.row(k).tail(rest);
  }
  return det;
}

template <typename Scalar>
struct SchurResult {
  Matrix<Scalar> complement;  ///< M/D = A - B D^{-1} C
  Scalar det_m;
  Scalar det_d;
  Scalar det_complement;

  /// |det M - det D * det(M/D)|
  Scalar identity_residual() const {
    using std::abs;
    return abs(det_m - det_d * det_complement);
  }
};

/// Splits M = [[A, B], [C, D]] with A of order `leading` and D the trailing
/// block, and returns M/D with the three determinants of the product identity.
/// Throws SingularBlock when |det D| <= 1e-9.
template <typename Derived>
SchurResult<typename Derived::Scalar> schur_complement(const Eigen::MatrixBase<Derived>& m, Eigen::Index leading) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::IndexError, "Schur complement of a non-square matrix");
  if (leading < 0 || leading >= n) {
    throw Error(ErrorCode::IndexError, "block split must leave a nonempty trailing block");
  }
  const Eigen::Index trailing = n - leading;
  const Matrix<Scalar> d = m.bottomRightCorner(trailing, trailing);
  const Scalar det_d = determinant(d);
  if (abs(det_d) <= Scalar(kSingularityTolerance)) {
    throw Error(ErrorCode::SingularBlock, "trailing block has |det| <= 1e-9");
  }
  Matrix<Scalar> complement = m.topLeftCorner(leading, leading) -
                              m.topRightCorner(leading, trailing) *
                                  d.partialPivLu().solve(m.bottomLeftCorner(trailing, leading));
  const Scalar det_c = determinant(complement);
  return {std::move(complement), determinant(m), det_d, det_c};
}

struct InterlacingReport {
  /// sigma_k(M) >= sigma_k(B) for k = 1..r
  bool holds_upper = true;
  /// sigma_k(B) >= sigma_{k+r}(M) for k = 1..r, with sigma_j = 0 past n
  bool holds_lower_chain = true;
  double worst_upper_margin = 0.0;
  double worst_lower_margin = 0.0;
  /// First k (1-based) violating the lower chain, 0 if none.
  int lower_violation_k = 0;
};

inline constexpr double kInterlacingTolerance = 1e-9;

/// Compares singular values of m with those of its principal submatrix on
/// indices. Only the upper chain holds for every matrix; the lower
/// chain is evaluated with r the submatrix order.
template <typename Derived>
InterlacingReport check_interlacing(const Eigen::MatrixBase<Derived>& m, std::span<const int> indices) {
  const auto big = singular_values(m);
  const auto small = singular_values(principal_submatrix(m, indices));
  const std::size_t r = small.size();
  InterlacingReport report;
  report.worst_upper_margin = std::numeric_limits<double>::infinity();
  report.worst_lower_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < r; ++k) {
    const double upper = static_cast<double>(big.values[k] - small.values[k]);
    const double tail = k + r < big.size() ? static_cast<double>(big.values[k + r]) : 0.0;
    const double lower = static_cast<double>(small.values[k]) - tail;
    report.worst_upper_margin = std::min(report.worst_upper_margin, upper);
    report.worst_lower_margin = std::min(report.worst_lower_margin, lower);
    if (lower < -kInterlacingTolerance && report.lower_violation_k == 0) report.lower_violation_k = static_cast<int>(k + 1);
  }
  if (r == 0) report.worst_upper_margin = report.worst_lower_margin = 0.0;
  report.holds_upper = report.worst_upper_margin >= -kInterlacingTolerance;
  report.holds_lower_chain = report.worst_lower_margin >= -kInterlacingTolerance;
  return report;
}

/// For a bipartite digraph with parts (a, b): reorders vertices so part a
/// comes first, forms S = diag(I_a, -I_b) and returns max|S Q S - L|.
/// Zero means Q and L are orthogonally similar, hence share singular values.
template <typename Scalar = double>
Scalar bipartite_similarity_residual(const Digraph& d, const Bipartition& parts) {
  std::vector<int> order(parts.part_a);
  order.insert(order.end(), parts.part_b.begin(), parts.part_b.end());
  if (static_cast<int>(order.size()) != d.order()) {
    throw Error(ErrorCode::IndexError, "bipartition does not cover every vertex");
  }
  const Matrix<Scalar> l = principal_submatrix(laplacian<Scalar>(d), order);
  const Matrix<Scalar> q = principal_submatrix(signless_laplacian<Scalar>(d), order);
  Vector<Scalar> signs = Vector<Scalar>::Ones(d.order());
  signs.tail(static_cast<Eigen::Index>(parts.part_b.size())).setConstant(Scalar(-1));
  const auto s = signs.asDiagonal();
  if (d.order() == 0) return Scalar(0);
  return (s * q * s - l).cwiseAbs().maxCoeff();
}

}  // namespace digspec

#endif  // DIGSPEC_LINALG_HPP
