#pragma once

#include <cmath>
#include <optional>

namespace scpath {

inline constexpr double kPi = 3.14159265358979323846;

/// Planar vector with the handful of operations the planner needs.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {k * x, k * y}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 rotated(double angle) const {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * x - s * y, s * x + c * y};
  }
};

inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

enum class Handedness { left, right };
enum class Travel { forward, backward };

/// +1 for left (counter-clockwise) turns, -1 for right turns.
inline double handedness_sign(Handedness h) { return h == Handedness::left ? 1.0 : -1.0; }

inline Travel opposite(Travel t) {
  return t == Travel::forward ? Travel::backward : Travel::forward;
}

/// Normalizes an angle into (-pi, pi]. Throws std::invalid_argument on
/// non-finite input.
double normalize_angle(double theta);

/// Planar pose plus path curvature. theta is normalized to (-pi, pi] on
/// construction and stays normalized through transforms.
struct Configuration {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double kappa = 0.0;

  Configuration() = default;
  Configuration(double x_, double y_, double theta_, double kappa_);

  Vec2 position() const { return {x, y}; }

  /// Same point with the heading turned by pi and the curvature negated.
  /// Maps a reverse-gear state onto its forward-equivalent problem and back.
  Configuration flipped() const;
};

/// Rotates q about the origin by `rotation`, then translates. The heading is
/// incremented and renormalized; kappa is untouched.
Configuration transform_config(const Configuration& q, double rotation, const Vec2& translation);

/// Circle of reachable turn end configurations. A turn exits onto its Omega
/// circle at any radial angle; the exit heading differs from the circle's
/// tangential angle by mu (sign per handedness and travel).
struct OmegaCircle {
  double center_x = 0.0;
  double center_y = 0.0;
  double radius = 0.0;  ///< > 0, >= arc radius of the underlying turn
  double mu = 0.0;      ///< heading offset from the tangential angle
  Handedness handedness = Handedness::left;
  Travel travel = Travel::forward;

  Vec2 center() const { return {center_x, center_y}; }
};

enum class TangentKind { external, internal };

struct TangentPair {
  Configuration a;  ///< departure configuration on circle_a
  Configuration b;  ///< entry configuration on circle_b
};

/// Finds the pair of zero-curvature configurations that connect two Omega
/// circles with a straight segment: circle_a belongs to the turn the vehicle
/// leaves, circle_b to the turn it enters (built on the time-reversed goal
/// problem, i.e. also a departing turn). Both returned headings are equal and
/// the segment between the points has that inclination.
///
/// `kind` must be external for equal handedness and internal for opposite
/// handedness. Returns nullopt when no tangent exists: the center distance is
/// too small for the required offset, a tangent point falls strictly inside
/// the other circle, or the segment would have to be traversed against the
/// direction of motion.
std::optional<TangentPair> circle_tangent_configs(const OmegaCircle& circle_a,
                                                  const OmegaCircle& circle_b,
                                                  TangentKind kind);

}  // namespace scpath
