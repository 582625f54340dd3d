#include "scpath/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace scpath {

namespace {

constexpr double kInsideTolerance = 1e-9;

// Sign of the curvature the circle's turn holds while on its arc, in the
// forward-equivalent frame of that turn (backward travel flips it).
double virtual_sign(const OmegaCircle& c) {
  const double s = handedness_sign(c.handedness);
  return c.travel == Travel::forward ? s : -s;
}

}  // namespace

double normalize_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("normalize_angle: non-finite angle");
  }
  double r = std::remainder(theta, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Configuration::Configuration(double x_, double y_, double theta_, double kappa_)
    : x(x_), y(y_), theta(normalize_angle(theta_)), kappa(kappa_) {}

Configuration Configuration::flipped() const {
  return Configuration(x, y, theta + kPi, -kappa);
}

Configuration transform_config(const Configuration& q, double rotation, const Vec2& translation) {
  const Vec2 p = q.position().rotated(rotation) + translation;
  return Configuration(p.x, p.y, q.theta + rotation, q.kappa);
}

std::optional<TangentPair> circle_tangent_configs(const OmegaCircle& circle_a,
                                                  const OmegaCircle& circle_b,
                                                  TangentKind kind) {
  if (!(circle_a.radius > 0.0) || !(circle_b.radius > 0.0)) {
    throw std::invalid_argument("circle_tangent_configs: radius must be positive");
  }
  const TangentKind expected = circle_a.handedness == circle_b.handedness
                                   ? TangentKind::external
                                   : TangentKind::internal;
  if (kind != expected) {
    throw std::invalid_argument("circle_tangent_configs: kind does not match handedness pair");
  }

  const double sa = virtual_sign(circle_a);
  const double sb = virtual_sign(circle_b);
  const double ra = circle_a.radius;
  const double rb = circle_b.radius;

  // A straight connection without a gear change exists when the two turns run
  // in the same gear, which is when the stored travels differ (circle_b comes
  // from the time-reversed construction). Otherwise the connection carries a
  // cusp and the entry heading is parallel instead of anti-parallel in the
  // forward-equivalent frame.
  const bool gear_change = circle_a.travel == circle_b.travel;

  // Auxiliary frame: circle_a centered at the origin and the connecting
  // segment horizontal. Offsets of the tangent configurations from their
  // circle centers:
  const Vec2 off_a{ra * std::sin(circle_a.mu), -sa * ra * std::cos(circle_a.mu)};
  const Vec2 off_b = gear_change
                         ? Vec2{rb * std::sin(circle_b.mu), -sb * rb * std::cos(circle_b.mu)}
                         : Vec2{-rb * std::sin(circle_b.mu), sb * rb * std::cos(circle_b.mu)};

  const Vec2 delta = circle_b.center() - circle_a.center();
  const double d = delta.norm();

  // Collinearity fixes the auxiliary center height of circle_b; the center
  // distance fixes its abscissa. A negative radicand means the circles are
  // too close for this tangent.
  const double y_cb = off_a.y - off_b.y;
  const double disc = d * d - y_cb * y_cb;
  if (disc < 0.0) return std::nullopt;
  const double x_cb = std::sqrt(disc);

  // Rotation carrying the auxiliary picture onto the original circles. The
  // auxiliary center direction is generally nonzero (unequal radii or the
  // internal case), so it has to be subtracted from the original center
  // direction; the two-argument arctangent keeps quadrants right.
  const double gamma = std::atan2(y_cb, x_cb);
  const double beta = std::atan2(delta.y, delta.x);
  const double chi = beta - gamma;

  const Vec2 pa = circle_a.center() + off_a.rotated(chi);
  const Vec2 pb = circle_b.center() + off_b.rotated(chi);

  // Tangent points must not fall strictly inside the opposite circle.
  if ((pa - circle_b.center()).norm() - rb < -kInsideTolerance) return std::nullopt;
  if ((pb - circle_a.center()).norm() - ra < -kInsideTolerance) return std::nullopt;

  // The vehicle leaves circle_a moving along chi; the segment must not run
  // against that motion.
  if ((pb - pa).dot(unit_vector(chi)) < -kInsideTolerance) return std::nullopt;

  const double theta_a = chi + (circle_a.travel == Travel::backward ? kPi : 0.0);
  const double theta_b = chi + (circle_b.travel == Travel::backward ? kPi : 0.0) +
                         (gear_change ? 0.0 : kPi);

  TangentPair pair;
  pair.a = Configuration(pa.x, pa.y, theta_a, 0.0);
  pair.b = Configuration(pb.x, pb.y, theta_b, 0.0);
  return pair;
}

}  // namespace scpath
