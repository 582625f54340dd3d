#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scpath/curvature_profile.hpp"

namespace scpath {

/// A cubic transition in its canonical frame: built from (0, 0, 0, kappa_from)
/// with zero boundary sharpness, steering limits enforced, and integrated
/// once. Real turns are produced by rigidly transforming it.
struct CanonicalSegment {
  CubicCurvatureSegment segment;  ///< theta_0 == 0
  Configuration end;              ///< integrated endpoint
  std::shared_ptr<const SampledPath> polyline;
  double step = kDefaultStep;
};

/// Builds one canonical transition fresh (limit enforcement + integration).
CanonicalSegment build_canonical_segment(const VehicleLimits& limits, double kappa_from,
                                         double kappa_to, double step = kDefaultStep);

/// Immutable table of canonical transitions over an equispaced odd-sized
/// curvature set spanning [-kappa_max, kappa_max]. Every (from, to) pair over
/// the set is present; lookups are constant time after an exact snap onto the
/// set. Safe to share across threads once built.
class SegmentCache {
 public:
  static SegmentCache build(const VehicleLimits& limits, int n_curvatures,
                            double step = kDefaultStep);

  /// nullptr when either curvature is not a set member (within 1e-12); the
  /// caller falls back to fresh construction.
  const CanonicalSegment* lookup(double kappa_from, double kappa_to) const;

  const std::vector<double>& curvature_set() const { return curvatures_; }
  std::uint64_t limits_fingerprint() const { return fingerprint_; }
  double step() const { return step_; }
  double build_seconds() const { return build_seconds_; }

  /// Versioned binary serialization; round-trips bit-exactly.
  void save(const std::string& path) const;
  static std::optional<SegmentCache> load(const std::string& path, const VehicleLimits& limits);

 private:
  SegmentCache() = default;
  int index_of(double kappa) const;  // -1 when not in the set

  std::vector<double> curvatures_;
  std::vector<CanonicalSegment> entries_;  // row-major (from, to)
  std::uint64_t fingerprint_ = 0;
  double step_ = kDefaultStep;
  double build_seconds_ = 0.0;
};

inline SegmentCache build_cache(const VehicleLimits& limits, int n_curvatures,
                                double step = kDefaultStep) {
  return SegmentCache::build(limits, n_curvatures, step);
}

inline const CanonicalSegment* lookup_segment(const SegmentCache& cache, double kappa_from,
                                              double kappa_to) {
  return cache.lookup(kappa_from, kappa_to);
}

}  // namespace scpath
