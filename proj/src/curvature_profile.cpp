#include "scpath/curvature_profile.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace scpath {

namespace {

constexpr double kScaleTolerance = 1e-3;  // allowed peak overshoot after scaling
constexpr int kMaxScaleIterations = 64;

void fnv_mix(std::uint64_t& h, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    h ^= (bits >> (8 * i)) & 0xffu;
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

void VehicleLimits::validate() const {
  const bool finite = std::isfinite(wheelbase_L) && std::isfinite(phi_max) &&
                      std::isfinite(phi_dot_max) && std::isfinite(phi_ddot_max) &&
                      std::isfinite(speed_v);
  if (!finite || wheelbase_L <= 0.0 || phi_max <= 0.0 || phi_max >= kPi / 2.0 ||
      phi_dot_max <= 0.0 || phi_ddot_max <= 0.0 || speed_v <= 0.0) {
    throw std::invalid_argument("VehicleLimits: all limits must be positive and phi_max < pi/2");
  }
}

std::uint64_t VehicleLimits::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv_mix(h, wheelbase_L);
  fnv_mix(h, phi_max);
  fnv_mix(h, phi_dot_max);
  fnv_mix(h, phi_ddot_max);
  fnv_mix(h, speed_v);
  return h;
}

void SampledPath::write_csv(std::ostream& out) const {
  out << "s,x,y,theta,kappa,alpha\n";
  char line[256];
  for (const PathSample& p : samples) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", p.s, p.x, p.y,
                  p.theta, p.kappa, p.alpha);
    out << line;
  }
}

void SampledPath::write_csv_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_csv(out);
}

SampledPath reverse_path(const SampledPath& path) {
  SampledPath out;
  out.total_length = path.total_length;
  out.samples.reserve(path.samples.size());
  for (auto it = path.samples.rbegin(); it != path.samples.rend(); ++it) {
    PathSample p = *it;
    p.s = path.total_length - p.s;
    p.alpha = -p.alpha;
    out.samples.push_back(p);
  }
  return out;
}

SampledPath transform_path(const SampledPath& path, double rotation, const Vec2& translation) {
  SampledPath out;
  out.total_length = path.total_length;
  out.samples.reserve(path.samples.size());
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  for (PathSample p : path.samples) {
    const double x = c * p.x - s * p.y + translation.x;
    const double y = s * p.x + c * p.y + translation.y;
    p.x = x;
    p.y = y;
    p.theta = normalize_angle(p.theta + rotation);
    out.samples.push_back(p);
  }
  return out;
}

CubicCurvatureSegment solve_cubic_coefficients(double kappa_i, double alpha_i, double kappa_f,
                                               double alpha_f, double s_f) {
  if (!(s_f > 0.0) || !std::isfinite(s_f)) {
    throw std::invalid_argument("solve_cubic_coefficients: s_f must be positive");
  }
  // Boundary conditions as a 4x4 system in (a0, a1, a2, a3).
  double m[4][5] = {
      {1.0, 0.0, 0.0, 0.0, kappa_i},
      {0.0, 1.0, 0.0, 0.0, alpha_i},
      {1.0, s_f, s_f * s_f, s_f * s_f * s_f, kappa_f},
      {0.0, 1.0, 2.0 * s_f, 3.0 * s_f * s_f, alpha_f},
  };
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row) {
      if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
    }
    if (std::fabs(m[pivot][col]) < 1e-300) {
      throw std::runtime_error("solve_cubic_coefficients: singular system");
    }
    if (pivot != col) std::swap_ranges(m[col], m[col] + 5, m[pivot]);
    for (int row = col + 1; row < 4; ++row) {
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
    }
  }
  double a[4];
  for (int row = 3; row >= 0; --row) {
    double acc = m[row][4];
    for (int k = row + 1; k < 4; ++k) acc -= m[row][k] * a[k];
    a[row] = acc / m[row][row];
  }
  return CubicCurvatureSegment{a[0], a[1], a[2], a[3], s_f, 0.0};
}

ProfileValue eval_profile(const CubicCurvatureSegment& seg, double s) {
  if (s < -1e-12 || s > seg.s_f + 1e-12) {
    throw std::invalid_argument("eval_profile: s outside [0, s_f]");
  }
  s = std::clamp(s, 0.0, seg.s_f);
  return ProfileValue{seg.kappa_at(s), seg.alpha_at(s), seg.theta_at(s)};
}

SteeringProfile steering_kinematics(const CubicCurvatureSegment& seg, const VehicleLimits& limits,
                                    int n_samples) {
  if (n_samples < 3) throw std::invalid_argument("steering_kinematics: need at least 3 samples");
  const double L = limits.wheelbase_L;
  const double v = limits.speed_v;
  const int n = n_samples;
  const double h = seg.s_f / static_cast<double>(n - 1);

  SteeringProfile prof;
  prof.s.resize(n);
  prof.phi.resize(n);
  prof.phi_dot.resize(n);
  prof.phi_ddot.resize(n);

  for (int i = 0; i < n; ++i) {
    const double s = (i == n - 1) ? seg.s_f : h * static_cast<double>(i);
    const double kappa = seg.kappa_at(s);
    const double alpha = seg.alpha_at(s);
    const double kl = kappa * L;
    prof.s[i] = s;
    prof.phi[i] = std::atan(kl);
    prof.phi_dot[i] = v * L * alpha / (1.0 + kl * kl);
  }
  // phi_ddot = v * d(phi_dot)/ds, central differences inside, one-sided ends.
  for (int i = 0; i < n; ++i) {
    double dds;
    if (i == 0) {
      dds = (prof.phi_dot[1] - prof.phi_dot[0]) / h;
    } else if (i == n - 1) {
      dds = (prof.phi_dot[n - 1] - prof.phi_dot[n - 2]) / h;
    } else {
      dds = (prof.phi_dot[i + 1] - prof.phi_dot[i - 1]) / (2.0 * h);
    }
    prof.phi_ddot[i] = v * dds;
  }
  for (int i = 0; i < n; ++i) {
    prof.phi_dot_peak = std::max(prof.phi_dot_peak, std::fabs(prof.phi_dot[i]));
    prof.phi_ddot_peak = std::max(prof.phi_ddot_peak, std::fabs(prof.phi_ddot[i]));
  }
  return prof;
}

CubicCurvatureSegment enforce_steering_limits(double kappa_i, double kappa_f,
                                              const VehicleLimits& limits, double s_f_initial) {
  limits.validate();
  const double kappa_max = limits.kappa_max();
  if (std::fabs(kappa_i) > kappa_max * (1.0 + 1e-9) ||
      std::fabs(kappa_f) > kappa_max * (1.0 + 1e-9)) {
    throw std::invalid_argument("enforce_steering_limits: boundary curvature above kappa_max");
  }

  double s_f = s_f_initial;
  if (!(s_f > 0.0)) {
    // Rate-implied sharpness in the small-angle regime gives a near-feasible
    // starting length.
    const double alpha_cap = limits.phi_dot_max / (limits.speed_v * limits.wheelbase_L);
    s_f = std::max(std::fabs(kappa_f - kappa_i) / alpha_cap, kMinSegmentLength);
  }

  for (int iter = 0; iter < kMaxScaleIterations; ++iter) {
    const CubicCurvatureSegment seg = solve_cubic_coefficients(kappa_i, 0.0, kappa_f, 0.0, s_f);
    const SteeringProfile prof = steering_kinematics(seg, limits);
    const bool rate_ok = prof.phi_dot_peak <= limits.phi_dot_max * (1.0 + kScaleTolerance);
    const bool accel_ok = prof.phi_ddot_peak <= limits.phi_ddot_max * (1.0 + kScaleTolerance);
    if (rate_ok && accel_ok) return seg;

    const double rate_factor = prof.phi_dot_peak / limits.phi_dot_max;
    const double accel_factor = std::sqrt(prof.phi_ddot_peak / limits.phi_ddot_max);
    const double factor = std::max(rate_factor, accel_factor);
    if (!std::isfinite(factor) || factor <= 1.0) {
      throw std::runtime_error("enforce_steering_limits: scaling stalled");
    }
    s_f *= factor;
  }
  throw std::runtime_error("enforce_steering_limits: did not converge");
}

SampledPath integrate_segment(const CubicCurvatureSegment& seg, const Configuration& q_start,
                              double step) {
  if (!(step > 0.0)) throw std::invalid_argument("integrate_segment: step must be positive");
  if (std::fabs(q_start.kappa - seg.kappa_at(0.0)) > 1e-9) {
    throw std::invalid_argument("integrate_segment: q_start.kappa does not match segment");
  }

  const int n = std::max(1, static_cast<int>(std::ceil(seg.s_f / step)));
  const double h = seg.s_f / static_cast<double>(n);
  const double theta_offset = q_start.theta - seg.theta_0;

  SampledPath path;
  path.total_length = seg.s_f;
  path.samples.reserve(static_cast<std::size_t>(n) + 1);

  double x = q_start.x;
  double y = q_start.y;
  path.samples.push_back(
      PathSample{0.0, x, y, q_start.theta, seg.kappa_at(0.0), seg.alpha_at(0.0)});
  for (int i = 0; i < n; ++i) {
    const double s0 = h * static_cast<double>(i);
    const double s1 = (i == n - 1) ? seg.s_f : s0 + h;
    const double theta_mid = theta_offset + seg.theta_at(0.5 * (s0 + s1));
    x += (s1 - s0) * std::cos(theta_mid);
    y += (s1 - s0) * std::sin(theta_mid);
    path.samples.push_back(PathSample{s1, x, y, normalize_angle(theta_offset + seg.theta_at(s1)),
                                      seg.kappa_at(s1), seg.alpha_at(s1)});
  }
  return path;
}

}  // namespace scpath
