#include <doctest.h>

#include <cmath>

#include "framecurv/oracle.hpp"
#include "support/fixtures.hpp"

using namespace framecurv;
using namespace framecurv::testing;

namespace {

double at(const Expr& e, const Point& p) { return eval(e, p); }

}  // namespace

TEST_CASE("coordinate metric") {
  const ChartFrame ads = ads_frame();
  const CoordinateMetric cm = coordinate_metric(ads, orthonormal_metric());
  for (const Point& p : random_points(ads.chart, 20, 1)) {
    const double ch = std::cosh(p[1]);
    CHECK(close_rel(at(cm.g[0][0], p), -ch * ch, 1e-12));
    CHECK(at(cm.g[0][1], p) == 0.0);
    CHECK(close_rel(at(cm.g[1][1], p), 1.0, 1e-12));
  }

  const MetricConstants m{0.5, -1.25, 2};
  const CoordinateMetric id = coordinate_metric(constant_frame(1, 0, 0, 1), m);
  CHECK(id.g[0][0].constant_value() == m.a11);
  CHECK(id.g[0][1].constant_value() == m.a12);
  CHECK(id.g[1][0].constant_value() == m.a12);
  CHECK(id.g[1][1].constant_value() == m.a22);

  const ChartFrame y = y_frame(1, 0, 0, 1);
  const CoordinateMetric cy = coordinate_metric(y, orthonormal_metric());
  for (const Point& p : random_points(y.chart, 20, 2)) {
    const double yy = p[1] * p[1];
    CHECK(close_rel(at(cy.g[0][0], p), -1.0 / yy, 1e-12));
    CHECK(close_rel(at(cy.g[1][1], p), 1.0 / yy, 1e-12));
    CHECK(at(cy.g[0][1], p) == 0.0);
  }

  // G = E^-T A E^-1 and G G^-1 = I on a random manifold.
  ManifoldGenerator gen(5);
  for (int i = 0; i < 5; ++i) {
    const auto rm = gen.next();
    const CoordinateMetric g = coordinate_metric(rm.frame, rm.metric);
    for (const Point& p : random_points(rm.frame.chart, 10, 3)) {
      const VectorField* xs[] = {&rm.frame.x1, &rm.frame.x2};
      const double a[2][2] = {{rm.metric.a11, rm.metric.a12}, {rm.metric.a12, rm.metric.a22}};
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t s = 0; s < 2; ++s) {
          double pair = 0.0;
          double ident = 0.0;
          for (std::size_t u = 0; u < 2; ++u) {
            ident += at(g.g[r][u], p) * at(g.g_inv[u][s], p);
            for (std::size_t v = 0; v < 2; ++v)
              pair += at(xs[r]->components[u], p) * at(g.g[u][v], p) * at(xs[s]->components[v], p);
          }
          CHECK(std::abs(pair - a[r][s]) <= 1e-9);
          CHECK(std::abs(ident - (r == s ? 1.0 : 0.0)) <= 1e-9);
        }
      }
    }
  }

  const ChartFrame singular = ChartFrame::parse(ads.chart, {"1", "1"}, {"2", "2"});
  CHECK_THROWS_AS(coordinate_metric(singular, orthonormal_metric()), SingularFrame);
}

TEST_CASE("christoffel symbols") {
  const CoordinateMetric flat = coordinate_metric(constant_frame(2, 1, 0, 1), {-1, 0.5, 1});
  for (const auto& k : christoffels(flat)) {
    for (const auto& i : k) {
      for (const auto& e : i) CHECK(simplify(e).is_constant(0.0));
    }
  }

  const ChartFrame ads = ads_frame();
  const CoordinateMetric cm = coordinate_metric(ads, orthonormal_metric());
  const Christoffels gamma = christoffels(cm);
  for (const Point& p : random_points(ads.chart, 20, 4)) {
    // Gamma^theta_{phi phi} = cosh sinh for g = -cosh^2 dphi^2 + dtheta^2.
    CHECK(close_rel(at(gamma[1][0][0], p), std::cosh(p[1]) * std::sinh(p[1]), 1e-12));
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          const double sym = at(gamma[k][i][j], p);
          CHECK(at(gamma[k][j][i], p) == sym);
          const double fd = christoffel_fd_at(cm, p, k, i, j, 1e-5);
          CHECK(std::abs(sym - fd) <= 1e-6 * std::max(1.0, std::abs(sym)));
        }
      }
    }
  }
}

TEST_CASE("symbolic dGamma agrees with finite differences") {
  ManifoldGenerator gen(8);
  for (int n = 0; n < 5; ++n) {
    const auto rm = gen.next();
    const CoordinateMetric cm = coordinate_metric(rm.frame, rm.metric);
    const Christoffels gamma = christoffels(cm);
    for (const Point& p : random_points(rm.frame.chart, 5, 6)) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t m = 0; m < 2; ++m) {
              const Expr& g = gamma[k][i][j];
              const double sym = at(differentiate(g, cm.vars[m]), p);
              const double fd = central_difference([&](const Point& q) { return at(g, q); }, p, m, 1e-5);
              CHECK(std::abs(sym - fd) <= 1e-5 * std::max(1.0, std::abs(sym)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("oracle curvature on fixtures") {
  const ChartFrame ads = ads_frame();
  const CurvatureOracle oracle(ads, orthonormal_metric());
  const CurvatureOracle flipped(ads, orthonormal_metric(), CurvatureSign::CommutatorFirst);
  for (const Point& p : grid_points(ads.chart, 10)) {
    CHECK(std::abs(oracle.at(p) + 1.0) <= 1e-8);
    CHECK(std::abs(flipped.at(p) - 1.0) <= 1e-8);
  }
  CHECK(std::abs(k_oracle(ads, orthonormal_metric(), {1.0, 0.3}) + 1.0) <= 1e-8);

  const CurvatureOracle varying(nonconstant_frame(), orthonormal_metric());
  const CurvatureOracle doubled(ChartFrame::parse(ads.chart, {"1/cosh(2*theta)", "0"}, {"0", "1"}),
                                orthonormal_metric());
  for (const Point& p : random_points(ads.chart, 10, 9)) {
    CHECK(close_rel(varying.at(p), -2.0 / (1.0 + p[1] * p[1]), 1e-8));
    CHECK(close_rel(doubled.at(p), -4.0, 1e-8));
  }

  const CurvatureOracle flat(constant_frame(1, 0, 0, 1), {3, 1, -2});
  CHECK(flat.at({0.1, 0.2}) == 0.0);

  const LeftInvariantFixture fx{2, 1, 1, 1};
  CHECK(fx.det_b() == 1.0);
  CHECK(fx.expected_curvature() == -3.0);
  CHECK(fx.metric().det() == -fx.det_b() * fx.det_b());
  const CurvatureOracle lie(half_plane_frame(), fx.metric());
  for (const Point& p : random_points(half_plane_frame().chart, 10, 7))
    CHECK(std::abs(lie.at(p) + 3.0) <= 1e-8);
}

TEST_CASE("oracle reports singular points") {
  const Chart chart{{"x", "y"}, {{{-1.0, 1.0}, {-1.0, 1.0}}}};
  const ChartFrame f = ChartFrame::parse(chart, {"x", "0"}, {"0", "1"});
  const CurvatureOracle oracle(f, orthonormal_metric());
  CHECK_THROWS_AS(oracle.at({0.0, 0.5}), Error);
  CHECK_NOTHROW(oracle.at({0.5, 0.5}));
}

TEST_CASE("oracle agrees with the closed form on random manifolds") {
  ManifoldGenerator gen(4242);
  for (int i = 0; i < 10; ++i) {
    const auto rm = gen.next();
    CAPTURE(rm.description);
    const Expr k = k_closed_form(rm.metric, rm.frame, structural_functions(rm.frame, commutator(rm.frame)));
    const CurvatureOracle oracle(rm.frame, rm.metric);
    for (const Point& p : random_points(rm.frame.chart, 25, 100 + i)) {
      const double ko = oracle.at(p);
      CHECK(std::abs(ko - at(k, p)) <= 1e-6 * std::max(1.0, std::abs(ko)));
    }
  }
}
