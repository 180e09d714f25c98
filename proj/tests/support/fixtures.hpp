#pragma once

#include <charconv>
#include <cmath>
#include <random>
#include <string>

#include "framecurv/frame.hpp"
#include "framecurv/oracle.hpp"

namespace framecurv::testing {

/// Shortest round-trip text for a double, parenthesized when negative.
inline std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  return v < 0.0 ? "(" + s + ")" : s;
}

inline MetricConstants orthonormal_metric() { return {-1.0, 0.0, 1.0}; }

/// Anti-de Sitter plane, g = -cosh^2(theta) dphi^2 + dtheta^2, with the
/// orthonormal frame X1 = d_phi / cosh(theta), X2 = d_theta.
inline ChartFrame ads_frame() {
  Chart chart{{"phi", "theta"}, {{{0.0, 6.28}, {-1.5, 1.5}}}};
  return ChartFrame::parse(chart, {"1/cosh(theta)", "0"}, {"0", "1"});
}

/// X1 = (y, 0), X2 = (0, y) on y in [0.5, 3]; [X1, X2] = -X1.
inline ChartFrame half_plane_frame() {
  Chart chart{{"x", "y"}, {{{-1.0, 1.0}, {0.5, 3.0}}}};
  return ChartFrame::parse(chart, {"y", "0"}, {"0", "y"});
}

/// Y1 = alpha X1 + gamma X2, Y2 = beta X1 + delta X2 over half_plane_frame.
inline ChartFrame y_frame(double alpha, double beta, double gamma, double delta) {
  Chart chart{{"x", "y"}, {{{-1.0, 1.0}, {0.5, 3.0}}}};
  return ChartFrame::parse(chart, {num(alpha) + "*y", num(gamma) + "*y"},
                           {num(beta) + "*y", num(delta) + "*y"});
}

/// Constant components: coordinate fields up to a constant linear map.
inline ChartFrame constant_frame(double e00, double e10, double e01, double e11) {
  Chart chart{{"u", "v"}, {{{-1.0, 1.0}, {-1.0, 1.0}}}};
  return ChartFrame::parse(chart, {num(e00), num(e10)}, {num(e01), num(e11)});
}

/// X1 = d_phi / (1 + theta^2), X2 = d_theta: K = -2 / (1 + theta^2).
/// (The tempting 1/cosh(2 theta) gives constant K = -4.)
inline ChartFrame nonconstant_frame() {
  Chart chart{{"phi", "theta"}, {{{0.0, 6.28}, {-1.5, 1.5}}}};
  return ChartFrame::parse(chart, {"1/(1 + theta^2)", "0"}, {"0", "1"});
}

/// |a - b| <= tol * max(1, |a|, |b|).
inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct RandomManifold {
  ChartFrame frame;
  MetricConstants metric;
  std::string description;
};

/// Random (frame, metric) pairs: each frame component is a polynomial of
/// degree <= 2 in (x, y), sometimes wrapped in sin or cosh; frames are
/// rejected unless |det E| >= min_det on a 15 x 15 grid of the domain.
/// Metric constants are uniform in [-2, 2] with |det| >= 0.25 and the
/// signature alternating between calls.
class ManifoldGenerator {
 public:
  explicit ManifoldGenerator(std::uint64_t seed, double min_det = 0.2)
      : rng_(seed), min_det_(min_det) {}

  RandomManifold next() {
    const bool lorentzian = (count_++ % 2) == 0;
    for (;;) {
      Chart chart{{"x", "y"}, {{{-0.8, 0.8}, {-0.8, 0.8}}}};
      const std::array<std::string, 2> x1{component(true), component(false)};
      const std::array<std::string, 2> x2{component(false), component(true)};
      ChartFrame frame = ChartFrame::parse(chart, x1, x2);
      if (!well_conditioned(frame)) continue;
      const MetricConstants m = metric(lorentzian);
      std::string desc = "X1=(" + x1[0] + ", " + x1[1] + ") X2=(" + x2[0] + ", " + x2[1] +
                         ") a=(" + num(m.a11) + ", " + num(m.a12) + ", " + num(m.a22) + ")";
      return {std::move(frame), m, std::move(desc)};
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::string polynomial(bool diagonal) {
    static const char* const kMonomials[] = {"x", "y", "x^2", "x*y", "y^2"};
    std::string s = num(diagonal ? uniform(0.8, 1.6) : uniform(-0.6, 0.6));
    for (const char* m : kMonomials) {
      if (uniform(0.0, 1.0) < 0.6) s += " + " + num(uniform(-0.7, 0.7)) + "*" + m;
    }
    return s;
  }

  std::string component(bool diagonal) {
    const double r = uniform(0.0, 1.0);
    if (r < 0.2) return "sin(" + polynomial(diagonal) + ")";
    if (r < 0.4) return "cosh(" + polynomial(false) + ")";
    return polynomial(diagonal);
  }

  MetricConstants metric(bool lorentzian) {
    for (;;) {
      const MetricConstants m{uniform(-2.0, 2.0), uniform(-2.0, 2.0), uniform(-2.0, 2.0)};
      if (std::abs(m.det()) < 0.25) continue;
      if (m.lorentzian() == lorentzian) return m;
    }
  }

  bool well_conditioned(const ChartFrame& frame) const {
    const Expr det = frame_determinant(frame);
    for (const Point& p : grid_points(frame.chart, 15)) {
      const double d = eval(det, p);
      if (!(std::abs(d) >= min_det_)) return false;
    }
    return true;
  }

  std::mt19937_64 rng_;
  double min_det_;
  int count_ = 0;
};

}  // namespace framecurv::testing
