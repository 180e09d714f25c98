#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "framecurv/expr.hpp"

namespace framecurv {

/// Minimum |det E| for the frame matrix E(q) = [X1(q) | X2(q)].
inline constexpr double kFrameEpsilon = 1e-10;

using Point = std::array<double, 2>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Local coordinates: two variable names and a closed box.
struct Chart {
  std::array<std::string, 2> vars;
  std::array<Interval, 2> domain;

  /// Throws PreconditionViolated unless the variables are distinct
  /// identifiers and every interval has lo < hi.
  void validate() const;
};

/// Components of a vector field along d/dvars[0], d/dvars[1].
struct VectorField {
  std::array<Expr, 2> components;
};

struct ChartFrame {
  Chart chart;
  VectorField x1;
  VectorField x2;

  /// Parses component text over the chart variables.
  static ChartFrame parse(Chart chart, const std::array<std::string, 2>& x1,
                          const std::array<std::string, 2>& x2);
};

/// Constant pairings g(X1,X1) = a11, g(X1,X2) = g(X2,X1) = a12,
/// g(X2,X2) = a22, i.e. the Gram matrix [[a11, a12], [a12, a22]].
struct MetricConstants {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;

  double det() const noexcept { return a11 * a22 - a12 * a12; }
  bool degenerate() const noexcept { return det() == 0.0; }
  /// Index one in dimension two.
  bool lorentzian() const noexcept { return det() < 0.0; }
};

/// Coefficients of [X1, X2] in the frame: [X1, X2] = c1 X1 + c2 X2.
struct StructuralFunctions {
  Expr c1;
  Expr c2;
};

/// A vector field written in the frame: x1 * X1 + x2 * X2.
struct FrameVector {
  Expr x1;
  Expr x2;
};

/// Levi-Civita connection of the frame. d[i][j] holds D_{X(i+1)} X(j+1).
struct ConnectionData {
  Expr a;
  Expr b;
  std::array<std::array<FrameVector, 2>, 2> d;
};

/// Frame components of R_{X1 X2} X1 scaled by det: R = (xi1 X1 + xi2 X2) / det.
struct XiPair {
  Expr xi1;
  Expr xi2;
};

/// Points used to enforce "at every point" preconditions: the n x n grid
/// plus `random_points` uniform interior points drawn with `seed`.
struct SamplingOptions {
  int grid = 21;
  int random_points = 20;
  std::uint64_t seed = 42;
};

struct Sample {
  Point point;
  double value;
};

/// n x n uniform grid over the domain with each interval inset by 1e-6 of
/// its length; row-major with the first variable outermost.
std::vector<Point> grid_points(const Chart& chart, int n);

/// Deterministic uniform points in the same inset box.
std::vector<Point> random_points(const Chart& chart, int count, std::uint64_t seed);

std::vector<Point> validation_points(const Chart& chart, const SamplingOptions& options);

/// X f = X^1 d_1 f + X^2 d_2 f in chart coordinates.
Expr directional_derivative(const Chart& chart, const VectorField& x, const Expr& f);

/// det [X1 | X2] = X1^1 X2^2 - X2^1 X1^2.
Expr frame_determinant(const ChartFrame& frame);

/// Throws SingularFrame if |det E| <= kFrameEpsilon at any validation point.
void check_frame(const ChartFrame& frame, const SamplingOptions& options = {});

/// Coordinate components of [X1, X2]^k = X1(X2^k) - X2(X1^k).
VectorField commutator(const ChartFrame& frame);

/// Solves E c = comm by Cramer's rule. Throws SingularFrame when the frame
/// degenerates at a validation point.
StructuralFunctions structural_functions(const ChartFrame& frame, const VectorField& comm,
                                         const SamplingOptions& options = {});

/// A = a11 c1 + a12 c2 and B = a12 c1 + a22 c2.
std::pair<Expr, Expr> connection_ab(const MetricConstants& metric, const StructuralFunctions& c);

/// The four covariant derivatives, from the Koszul pairings
/// g(D_i X_j, X_k) = (0, -A | A, 0 | 0, -B | B, 0) solved against the
/// Gram matrix:
///
///     D_1 X1 = A/det (a12, -a11)    D_1 X2 = A/det (a22, -a12)
///     D_2 X1 = B/det (a12, -a11)    D_2 X2 = B/det (a22, -a12)
///
/// Throws DegenerateMetric if det = 0.
ConnectionData covariant_derivatives(const MetricConstants& metric, const Expr& a, const Expr& b);

/// D_V W for frame vectors V, W using the Leibniz rule
/// D_{X_i}(w1 X1 + w2 X2) = (X_i w1) X1 + (X_i w2) X2 + w1 D_i X1 + w2 D_i X2.
FrameVector covariant_derivative(const ChartFrame& frame, const ConnectionData& conn,
                                 const FrameVector& v, const FrameVector& w);

/// Expands R_{X1 X2} X1 = D_{[X1,X2]} X1 - D_{X1} D_{X2} X1 + D_{X2} D_{X1} X1
/// step by step through covariant_derivative and returns det times its
/// frame components. Throws DegenerateMetric if det = 0.
XiPair riemann_frame_components(const MetricConstants& metric, const ChartFrame& frame,
                                const StructuralFunctions& c, const ConnectionData& conn);

/// g(u, v) for frame vectors.
Expr pairing(const MetricConstants& metric, const FrameVector& u, const FrameVector& v);

/// Q(X1, X2) = a11 a22 - a12^2.
double q_value(const MetricConstants& metric);

/// Closed form K = (a12 xi1 + a22 xi2) / det^2 with
///
///     xi1 = a12 [ (c1 A + c2 B) - X1 B + X2 A ]
///     xi2 = a11 [ -(c1 A + c2 B) + X1 B - X2 A ]
///
/// Throws DegenerateMetric if det = 0.
Expr k_closed_form(const MetricConstants& metric, const ChartFrame& frame,
                   const StructuralFunctions& c);

/// Full derivation: commutator, structural functions, connection,
/// R_{X1 X2} X1 and finally g(R, X2) / Q.
Expr k_pipeline(const MetricConstants& metric, const ChartFrame& frame,
                const SamplingOptions& options = {});

/// K = -c1^2 + c2^2 - X2 c1 - X1 c2, valid when the metric is (-1, 0, 1).
Expr k_orthonormal(const ChartFrame& frame, const StructuralFunctions& c);

/// K = [-a11 c1^2 - a22 c2^2 - a11 X2 c1 + a22 X1 c2] / (a11 a22) for an
/// orthogonal frame. Throws PreconditionViolated unless a12 = 0 and
/// a11, a22 are nonzero.
Expr k_orthogonal(const MetricConstants& metric, const ChartFrame& frame,
                  const StructuralFunctions& c);

/// Same numerator as k_orthogonal divided by a11 alone. This variant is
/// off by the factor a22 and exists so that the discrepancy can be shown.
Expr k_orthogonal_a11(const MetricConstants& metric, const ChartFrame& frame,
                      const StructuralFunctions& c);

/// Evaluates on grid_points(chart, n). DomainError carries the offending
/// point. Throws PreconditionViolated if n < 2.
std::vector<Sample> eval_on_grid(const Expr& k, const Chart& chart, int n);

std::vector<Sample> eval_at(const Expr& k, const std::vector<Point>& points);

}  // namespace framecurv
