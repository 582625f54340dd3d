#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scpath/geometry.hpp"

namespace scpath {

/// Default arc-length sampling step, meters.
inline constexpr double kDefaultStep = 0.01;

/// Shortest admissible transition length; stands in for zero-length
/// transitions between equal curvatures.
inline constexpr double kMinSegmentLength = 1e-9;

/// Steering-actuator limits plus the fixed speed at which rate and
/// acceleration profiles are checked.
struct VehicleLimits {
  double wheelbase_L = 2.5;     ///< meters, > 0
  double phi_max = 0.4636;      ///< rad, < pi/2
  double phi_dot_max = 0.5;     ///< rad/s
  double phi_ddot_max = 1.0;    ///< rad/s^2
  double speed_v = 5.0;         ///< m/s, profile-checking speed

  double kappa_max() const { return std::tan(phi_max) / wheelbase_L; }
  double min_turn_radius() const { return 1.0 / kappa_max(); }

  /// Throws std::invalid_argument if any limit is non-positive, phi_max is
  /// not below pi/2, or a value is non-finite.
  void validate() const;

  /// FNV-1a over the raw limit values; keys precomputed segment caches.
  std::uint64_t fingerprint() const;
};

/// Curvature polynomial kappa(s) = a3 s^3 + a2 s^2 + a1 s + a0 over
/// s in [0, s_f], with the orientation at s = 0 carried alongside.
struct CubicCurvatureSegment {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double s_f = kMinSegmentLength;
  double theta_0 = 0.0;

  double kappa_at(double s) const { return ((a3 * s + a2) * s + a1) * s + a0; }
  double alpha_at(double s) const { return (3.0 * a3 * s + 2.0 * a2) * s + a1; }
  /// Analytic antiderivative of the curvature polynomial.
  double theta_at(double s) const {
    return theta_0 + s * (a0 + s * (a1 / 2.0 + s * (a2 / 3.0 + s * (a3 / 4.0))));
  }
};

struct PathSample {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double kappa = 0.0;
  double alpha = 0.0;
};

/// Arc-length-ordered state samples; s runs from 0 to total_length with
/// spacing no larger than the configured step.
struct SampledPath {
  std::vector<PathSample> samples;
  double total_length = 0.0;

  bool empty() const { return samples.empty(); }
  const PathSample& front() const { return samples.front(); }
  const PathSample& back() const { return samples.back(); }

  /// Writes `s,x,y,theta,kappa,alpha` rows in SI units and radians.
  void write_csv(std::ostream& out) const;
  void write_csv_file(const std::string& path) const;
};

/// Path traversed in the opposite sense: sample order reversed, s re-indexed
/// from the far end, sharpness negated. Poses and curvatures are states and
/// stay as they are.
SampledPath reverse_path(const SampledPath& path);

/// Rigidly transforms every sample (rotation about the origin, then
/// translation). Curvature and sharpness series are untouched.
SampledPath transform_path(const SampledPath& path, double rotation, const Vec2& translation);

/// Solves the 4x4 linear system pinning kappa and alpha at both ends of a
/// cubic curvature segment of length s_f. Throws on s_f <= 0.
CubicCurvatureSegment solve_cubic_coefficients(double kappa_i, double alpha_i,
                                               double kappa_f, double alpha_f, double s_f);

struct ProfileValue {
  double kappa = 0.0;
  double alpha = 0.0;
  double theta = 0.0;
};

/// Evaluates curvature, sharpness and the analytic orientation at s.
/// Throws if s lies outside [0, s_f].
ProfileValue eval_profile(const CubicCurvatureSegment& seg, double s);

/// Steering-angle profile of a segment followed at the limits' fixed speed.
/// phi comes from the curvature via the wheelbase, phi_dot analytically,
/// phi_ddot by numerical differentiation over the sample grid.
struct SteeringProfile {
  std::vector<double> s;
  std::vector<double> phi;
  std::vector<double> phi_dot;
  std::vector<double> phi_ddot;
  double phi_dot_peak = 0.0;
  double phi_ddot_peak = 0.0;
};

SteeringProfile steering_kinematics(const CubicCurvatureSegment& seg, const VehicleLimits& limits,
                                    int n_samples = 401);

/// Builds the zero-end-sharpness cubic from kappa_i to kappa_f and lengthens
/// it until the steering rate and acceleration peaks respect the limits
/// (within 0.1%): the length scales by the peak/limit ratio for the rate, by
/// its square root for the acceleration, whichever is greater, and the solve
/// repeats. Pass s_f_initial <= 0 to start from the rate-implied guess.
/// Throws std::runtime_error if the iteration fails to converge.
CubicCurvatureSegment enforce_steering_limits(double kappa_i, double kappa_f,
                                              const VehicleLimits& limits,
                                              double s_f_initial = 0.0);

/// Integrates a segment from q_start: orientations are analytic, positions
/// advance with a fixed-step midpoint rule (step is an upper bound on the
/// sample spacing; the final sample lands exactly on s_f). q_start.kappa must
/// match the segment's initial curvature.
SampledPath integrate_segment(const CubicCurvatureSegment& seg, const Configuration& q_start,
                              double step);

}  // namespace scpath
