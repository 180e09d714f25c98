#pragma once

#include <array>
#include <functional>

#include "framecurv/frame.hpp"

namespace framecurv {

using Matrix2 = std::array<std::array<Expr, 2>, 2>;

/// gamma[k][i][j] = Gamma^k_{ij}.
using Christoffels = std::array<std::array<std::array<Expr, 2>, 2>, 2>;

/// Coordinate form of the metric fixed by a frame and its constant
/// pairings: G = E^-T A E^-1, where E = [X1 | X2].
struct CoordinateMetric {
  std::array<std::string, 2> vars;
  Matrix2 g;
  Matrix2 g_inv;
  Expr det_g;
};

/// Sign convention for the curvature operator.
enum class CurvatureSign {
  /// R_{XY} Z = D_{[X,Y]} Z - [D_X, D_Y] Z. Library default; with this sign
  /// g(R_{vw} v, w) / Q(v, w) is the sectional curvature.
  BracketFirst,
  /// R_{XY} Z = [D_X, D_Y] Z - D_{[X,Y]} Z.
  CommutatorFirst,
};

/// Throws SingularFrame if det E simplifies to zero.
CoordinateMetric coordinate_metric(const ChartFrame& frame, const MetricConstants& metric);

/// Gamma^k_{ij} = 1/2 g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij}).
/// Throws DegenerateMetric if det G simplifies to zero.
Christoffels christoffels(const CoordinateMetric& cm);

/// Coordinate components of R_{d1 d2} d1 under the given sign convention.
std::array<Expr, 2> riemann_vector(const CoordinateMetric& cm, const Christoffels& gamma,
                                   CurvatureSign sign = CurvatureSign::BracketFirst);

/// Sectional curvature from the coordinate metric alone:
/// g(R_{d1 d2} d1, d2) / Q(d1, d2). Built once, evaluated per point.
class CurvatureOracle {
 public:
  CurvatureOracle(const ChartFrame& frame, const MetricConstants& metric,
                  CurvatureSign sign = CurvatureSign::BracketFirst);

  /// Throws SingularFrame, DegenerateMetric or DomainError at bad points.
  double at(const Point& p) const;

  const CoordinateMetric& metric() const noexcept { return cm_; }
  const Christoffels& gamma() const noexcept { return gamma_; }
  /// g(R_{d1 d2} d1, d2) as an expression.
  const Expr& numerator() const noexcept { return numerator_; }

 private:
  CoordinateMetric cm_;
  Christoffels gamma_;
  Expr numerator_;
  Program program_;
};

double k_oracle(const ChartFrame& frame, const MetricConstants& metric, const Point& p);

/// (f(p + h e_slot) - f(p - h e_slot)) / 2h.
double central_difference(const std::function<double(const Point&)>& f, const Point& p,
                          std::size_t slot, double h);

/// Christoffel symbols at p from central differences of the numerically
/// evaluated metric. Independent of the symbolic route in christoffels().
double christoffel_fd_at(const CoordinateMetric& cm, const Point& p, std::size_t k,
                         std::size_t i, std::size_t j, double h);

/// Left-invariant metric on the two-dimensional non-abelian Lie group,
/// parametrized by B = [[a, b], [c, d]].
struct LeftInvariantFixture {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double det_b() const noexcept { return a * d - b * c; }
  /// a11 = c^2 - a^2, a12 = cd - ab, a22 = d^2 - b^2.
  MetricConstants metric() const noexcept {
    return {c * c - a * a, c * d - a * b, d * d - b * b};
  }
  /// Closed-form curvature a11 / det(B)^2.
  double expected_curvature() const noexcept {
    const double db = det_b();
    return metric().a11 / (db * db);
  }
};

}  // namespace framecurv
