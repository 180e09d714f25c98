#include "framecurv/oracle.hpp"

#include <cmath>

namespace framecurv {

namespace {

std::vector<Expr> program_outputs(const Expr& numerator, const CoordinateMetric& cm,
                                  const Expr& det_e) {
  return {numerator, cm.det_g, det_e};
}

Expr dd(const Expr& e, const CoordinateMetric& cm, std::size_t slot) {
  return differentiate(e, cm.vars[slot]);
}

}  // namespace

CoordinateMetric coordinate_metric(const ChartFrame& frame, const MetricConstants& metric) {
  const Expr det_e = simplify(frame_determinant(frame));
  if (det_e.is_constant(0.0)) throw SingularFrame("frame determinant is identically zero");

  // E = [[e00, e01], [e10, e11]] with columns X1, X2.
  const Expr& e00 = frame.x1.components[0];
  const Expr& e10 = frame.x1.components[1];
  const Expr& e01 = frame.x2.components[0];
  const Expr& e11 = frame.x2.components[1];
  const Matrix2 inv{{{e11 / det_e, -e01 / det_e}, {-e10 / det_e, e00 / det_e}}};
  const double a[2][2] = {{metric.a11, metric.a12}, {metric.a12, metric.a22}};

  CoordinateMetric cm;
  cm.vars = frame.chart.vars;
  // G_ij = sum_kl inv_ki a_kl inv_lj
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Expr sum;
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) sum = sum + a[k][l] * (inv[k][i] * inv[l][j]);
      }
      cm.g[i][j] = simplify(sum);
    }
  }
  cm.det_g = cm.g[0][0] * cm.g[1][1] - cm.g[0][1] * cm.g[1][0];
  cm.g_inv = {{{cm.g[1][1] / cm.det_g, -cm.g[0][1] / cm.det_g},
               {-cm.g[1][0] / cm.det_g, cm.g[0][0] / cm.det_g}}};
  return cm;
}

Christoffels christoffels(const CoordinateMetric& cm) {
  if (simplify(cm.det_g).is_constant(0.0))
    throw DegenerateMetric("coordinate metric determinant is identically zero");
  // dg[m][i][j] = d_m g_ij
  std::array<Matrix2, 2> dg;
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) dg[m][i][j] = dd(cm.g[i][j], cm, m);
    }
  }
  Christoffels gamma;
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        Expr sum;
        for (std::size_t l = 0; l < 2; ++l)
          sum = sum + cm.g_inv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        gamma[k][i][j] = 0.5 * sum;
      }
    }
  }
  return gamma;
}

std::array<Expr, 2> riemann_vector(const CoordinateMetric& cm, const Christoffels& gamma,
                                   CurvatureSign sign) {
  // [D_1, D_2] d_s = (d_1 Gamma^r_{2s} - d_2 Gamma^r_{1s}
  //                   + Gamma^r_{1l} Gamma^l_{2s} - Gamma^r_{2l} Gamma^l_{1s}) d_r
  // and [d_1, d_2] = 0, so the two conventions differ only by sign.
  constexpr std::size_t s = 0;
  std::array<Expr, 2> out;
  for (std::size_t r = 0; r < 2; ++r) {
    Expr commutator = dd(gamma[r][1][s], cm, 0) - dd(gamma[r][0][s], cm, 1);
    for (std::size_t l = 0; l < 2; ++l)
      commutator = commutator + gamma[r][0][l] * gamma[l][1][s] - gamma[r][1][l] * gamma[l][0][s];
    out[r] = sign == CurvatureSign::BracketFirst ? -commutator : commutator;
  }
  return out;
}

CurvatureOracle::CurvatureOracle(const ChartFrame& frame, const MetricConstants& metric,
                                 CurvatureSign sign)
    : cm_(coordinate_metric(frame, metric)),
      gamma_(christoffels(cm_)),
      numerator_([&] {
        const auto r = riemann_vector(cm_, gamma_, sign);
        // g(R, d2) = R^0 g_01 + R^1 g_11
        return r[0] * cm_.g[0][1] + r[1] * cm_.g[1][1];
      }()),
      program_(program_outputs(numerator_, cm_, frame_determinant(frame))) {}

double CurvatureOracle::at(const Point& p) const {
  const std::vector<double> v = program_.run(p);
  if (!(std::abs(v[2]) > kFrameEpsilon)) throw SingularFrame("frame is singular at sample point");
  if (v[1] == 0.0) throw DegenerateMetric("coordinate metric is degenerate at sample point");
  const double k = v[0] / v[1];
  if (!std::isfinite(k)) throw DomainError("curvature is not finite", {p[0], p[1]});
  return k;
}

double k_oracle(const ChartFrame& frame, const MetricConstants& metric, const Point& p) {
  return CurvatureOracle(frame, metric).at(p);
}

double central_difference(const std::function<double(const Point&)>& f, const Point& p,
                          std::size_t slot, double h) {
  Point plus = p;
  Point minus = p;
  plus[slot] += h;
  minus[slot] -= h;
  return (f(plus) - f(minus)) / (2.0 * h);
}

double christoffel_fd_at(const CoordinateMetric& cm, const Point& p, std::size_t k,
                         std::size_t i, std::size_t j, double h) {
  auto entry = [&](std::size_t a, std::size_t b) {
    return [&cm, a, b](const Point& q) { return eval(cm.g[a][b], q); };
  };
  auto dg = [&](std::size_t m, std::size_t a, std::size_t b) {
    return central_difference(entry(a, b), p, m, h);
  };
  double g[2][2];
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) g[a][b] = eval(cm.g[a][b], p);
  }
  const double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const double g_inv[2][2] = {{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}};
  double sum = 0.0;
  for (std::size_t l = 0; l < 2; ++l)
    sum += g_inv[k][l] * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
  return 0.5 * sum;
}

}  // namespace framecurv
