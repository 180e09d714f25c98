#include "framecurv/frame.hpp"

#include <cmath>
#include <random>

namespace framecurv {

namespace {

constexpr double kInset = 1e-6;

Interval inset(const Interval& iv) {
  const double margin = kInset * (iv.hi - iv.lo);
  return {iv.lo + margin, iv.hi - margin};
}

void require_nondegenerate(const MetricConstants& metric) {
  if (metric.degenerate())
    throw DegenerateMetric("metric constants are degenerate: a11*a22 - a12^2 = 0");
}

const FrameVector kX1{Expr::constant(1.0), Expr::constant(0.0)};
const FrameVector kX2{Expr::constant(0.0), Expr::constant(1.0)};

FrameVector scaled(const Expr& s, const FrameVector& v) { return {s * v.x1, s * v.x2}; }
FrameVector operator+(const FrameVector& u, const FrameVector& v) { return {u.x1 + v.x1, u.x2 + v.x2}; }
FrameVector operator-(const FrameVector& u, const FrameVector& v) { return {u.x1 - v.x1, u.x2 - v.x2}; }

// Shared numerator of the orthogonal-frame formulas.
Expr orthogonal_numerator(const MetricConstants& metric, const ChartFrame& frame,
                          const StructuralFunctions& c) {
  if (metric.a12 != 0.0)
    throw PreconditionViolated("orthogonal formula requires a12 = 0");
  if (metric.a11 == 0.0 || metric.a22 == 0.0)
    throw PreconditionViolated("orthogonal formula requires a11 != 0 and a22 != 0");
  const Expr x2c1 = directional_derivative(frame.chart, frame.x2, c.c1);
  const Expr x1c2 = directional_derivative(frame.chart, frame.x1, c.c2);
  return -metric.a11 * (c.c1 * c.c1) - metric.a22 * (c.c2 * c.c2) - metric.a11 * x2c1 +
         metric.a22 * x1c2;
}

}  // namespace

void Chart::validate() const {
  if (vars[0] == vars[1]) throw PreconditionViolated("chart variables must be distinct");
  for (std::size_t i = 0; i < 2; ++i) {
    if (vars[i].empty()) throw PreconditionViolated("chart variable names must be nonempty");
    const Interval& iv = domain[i];
    if (!(std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo < iv.hi))
      throw PreconditionViolated("domain of '" + vars[i] + "' must satisfy lo < hi");
  }
}

ChartFrame ChartFrame::parse(Chart chart, const std::array<std::string, 2>& x1,
                             const std::array<std::string, 2>& x2) {
  chart.validate();
  const std::span<const std::string> vars(chart.vars);
  VectorField f1{{parse_expr(x1[0], vars), parse_expr(x1[1], vars)}};
  VectorField f2{{parse_expr(x2[0], vars), parse_expr(x2[1], vars)}};
  return ChartFrame{std::move(chart), std::move(f1), std::move(f2)};
}

std::vector<Point> grid_points(const Chart& chart, int n) {
  if (n < 2) throw PreconditionViolated("grid size must be at least 2");
  const Interval u = inset(chart.domain[0]);
  const Interval v = inset(chart.domain[1]);
  const auto step = [n](const Interval& iv, int i) {
    return iv.lo + (iv.hi - iv.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) points.push_back({step(u, i), step(v, j)});
  }
  return points;
}

std::vector<Point> random_points(const Chart& chart, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Interval u = inset(chart.domain[0]);
  const Interval v = inset(chart.domain[1]);
  std::uniform_real_distribution<double> du(u.lo, u.hi);
  std::uniform_real_distribution<double> dv(v.lo, v.hi);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const double a = du(rng);
    points.push_back({a, dv(rng)});
  }
  return points;
}

std::vector<Point> validation_points(const Chart& chart, const SamplingOptions& options) {
  std::vector<Point> points = grid_points(chart, options.grid);
  const auto extra = random_points(chart, options.random_points, options.seed);
  points.insert(points.end(), extra.begin(), extra.end());
  return points;
}

Expr directional_derivative(const Chart& chart, const VectorField& x, const Expr& f) {
  return x.components[0] * differentiate(f, chart.vars[0]) +
         x.components[1] * differentiate(f, chart.vars[1]);
}

Expr frame_determinant(const ChartFrame& frame) {
  const auto& e1 = frame.x1.components;
  const auto& e2 = frame.x2.components;
  return e1[0] * e2[1] - e2[0] * e1[1];
}

void check_frame(const ChartFrame& frame, const SamplingOptions& options) {
  const Expr det = simplify(frame_determinant(frame));
  if (det.is_constant(0.0)) throw SingularFrame("frame determinant is identically zero");
  const Expr dets[] = {det};
  const Program program(dets);
  for (const Point& p : validation_points(frame.chart, options)) {
    const double value = program.run(p)[0];
    if (!(std::abs(value) > kFrameEpsilon)) {
      throw SingularFrame("frame is singular near (" + std::to_string(p[0]) + ", " +
                          std::to_string(p[1]) + "): det = " + std::to_string(value));
    }
  }
}

VectorField commutator(const ChartFrame& frame) {
  VectorField out;
  for (std::size_t k = 0; k < 2; ++k) {
    out.components[k] =
        directional_derivative(frame.chart, frame.x1, frame.x2.components[k]) -
        directional_derivative(frame.chart, frame.x2, frame.x1.components[k]);
  }
  return out;
}

StructuralFunctions structural_functions(const ChartFrame& frame, const VectorField& comm,
                                         const SamplingOptions& options) {
  check_frame(frame, options);
  const auto& e1 = frame.x1.components;
  const auto& e2 = frame.x2.components;
  const auto& w = comm.components;
  const Expr det = frame_determinant(frame);
  return {simplify((w[0] * e2[1] - e2[0] * w[1]) / det),
          simplify((e1[0] * w[1] - w[0] * e1[1]) / det)};
}

std::pair<Expr, Expr> connection_ab(const MetricConstants& metric, const StructuralFunctions& c) {
  return {metric.a11 * c.c1 + metric.a12 * c.c2, metric.a12 * c.c1 + metric.a22 * c.c2};
}

ConnectionData covariant_derivatives(const MetricConstants& metric, const Expr& a,
                                     const Expr& b) {
  require_nondegenerate(metric);
  const double det = metric.det();
  const Expr sa = a / det;
  const Expr sb = b / det;
  ConnectionData conn;
  conn.a = a;
  conn.b = b;
  conn.d[0][0] = {sa * metric.a12, sa * -metric.a11};
  conn.d[0][1] = {sa * metric.a22, sa * -metric.a12};
  conn.d[1][0] = {sb * metric.a12, sb * -metric.a11};
  conn.d[1][1] = {sb * metric.a22, sb * -metric.a12};
  return conn;
}

FrameVector covariant_derivative(const ChartFrame& frame, const ConnectionData& conn,
                                 const FrameVector& v, const FrameVector& w) {
  const VectorField* fields[] = {&frame.x1, &frame.x2};
  const Expr* along[] = {&v.x1, &v.x2};
  FrameVector out{Expr::constant(0.0), Expr::constant(0.0)};
  for (std::size_t i = 0; i < 2; ++i) {
    if (along[i]->is_constant(0.0)) continue;
    const Chart& chart = frame.chart;
    FrameVector di{directional_derivative(chart, *fields[i], w.x1),
                   directional_derivative(chart, *fields[i], w.x2)};
    di = di + scaled(w.x1, conn.d[i][0]) + scaled(w.x2, conn.d[i][1]);
    out = out + scaled(*along[i], di);
  }
  return out;
}

XiPair riemann_frame_components(const MetricConstants& metric, const ChartFrame& frame,
                                const StructuralFunctions& c, const ConnectionData& conn) {
  require_nondegenerate(metric);
  const FrameVector bracket{c.c1, c.c2};
  const FrameVector d2x1 = covariant_derivative(frame, conn, kX2, kX1);
  const FrameVector d1x1 = covariant_derivative(frame, conn, kX1, kX1);
  const FrameVector r = covariant_derivative(frame, conn, bracket, kX1) -
                        covariant_derivative(frame, conn, kX1, d2x1) +
                        covariant_derivative(frame, conn, kX2, d1x1);
  const double det = metric.det();
  return {simplify(det * r.x1), simplify(det * r.x2)};
}

Expr pairing(const MetricConstants& metric, const FrameVector& u, const FrameVector& v) {
  return metric.a11 * (u.x1 * v.x1) + metric.a12 * (u.x1 * v.x2 + u.x2 * v.x1) +
         metric.a22 * (u.x2 * v.x2);
}

double q_value(const MetricConstants& metric) { return metric.a11 * metric.a22 - metric.a12 * metric.a12; }

Expr k_closed_form(const MetricConstants& metric, const ChartFrame& frame,
                   const StructuralFunctions& c) {
  require_nondegenerate(metric);
  const auto [a, b] = connection_ab(metric, c);
  const Expr s = c.c1 * a + c.c2 * b;
  const Expr x1b = directional_derivative(frame.chart, frame.x1, b);
  const Expr x2a = directional_derivative(frame.chart, frame.x2, a);
  const Expr xi1 = metric.a12 * (s - x1b + x2a);
  const Expr xi2 = metric.a11 * (-s + x1b - x2a);
  const double det = metric.det();
  return simplify((metric.a12 * xi1 + metric.a22 * xi2) / (det * det));
}

Expr k_pipeline(const MetricConstants& metric, const ChartFrame& frame,
                const SamplingOptions& options) {
  require_nondegenerate(metric);
  const VectorField comm = commutator(frame);
  const StructuralFunctions c = structural_functions(frame, comm, options);
  const auto [a, b] = connection_ab(metric, c);
  const ConnectionData conn = covariant_derivatives(metric, a, b);
  const XiPair xi = riemann_frame_components(metric, frame, c, conn);
  const double q = q_value(metric);
  const FrameVector r{xi.xi1 / q, xi.xi2 / q};
  return simplify(pairing(metric, r, kX2) / q);
}

Expr k_orthonormal(const ChartFrame& frame, const StructuralFunctions& c) {
  const Expr x2c1 = directional_derivative(frame.chart, frame.x2, c.c1);
  const Expr x1c2 = directional_derivative(frame.chart, frame.x1, c.c2);
  return simplify(-(c.c1 * c.c1) + c.c2 * c.c2 - x2c1 - x1c2);
}

Expr k_orthogonal(const MetricConstants& metric, const ChartFrame& frame,
                  const StructuralFunctions& c) {
  return simplify(orthogonal_numerator(metric, frame, c) / (metric.a11 * metric.a22));
}

Expr k_orthogonal_a11(const MetricConstants& metric, const ChartFrame& frame,
                      const StructuralFunctions& c) {
  return simplify(orthogonal_numerator(metric, frame, c) / metric.a11);
}

std::vector<Sample> eval_at(const Expr& k, const std::vector<Point>& points) {
  const Expr outputs[] = {k};
  const Program program(outputs);
  std::vector<Sample> samples;
  samples.reserve(points.size());
  for (const Point& p : points) samples.push_back({p, program.run(p)[0]});
  return samples;
}

std::vector<Sample> eval_on_grid(const Expr& k, const Chart& chart, int n) {
  return eval_at(k, grid_points(chart, n));
}

}  // namespace framecurv
