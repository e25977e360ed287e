#pragma once

#include <cstdint>
#include <vector>

namespace friezes {

/// A bi-infinite integer sequence presented as
///   ..., left_period, left_period | core | right_period, right_period, ...
/// The last element of `left_period` sits at index core_start - 1 and the
/// first element of `right_period` at index core_end().  Both periods must be
/// nonempty; no constraint is placed on the values.
struct EventuallyPeriodic {
  std::vector<std::int64_t> left_period;
  std::vector<std::int64_t> core;
  std::vector<std::int64_t> right_period;
  std::int64_t core_start = 0;

  std::int64_t core_end() const { return core_start + static_cast<std::int64_t>(core.size()); }

  /// Total indexing; defined for every integer.
  std::int64_t at(std::int64_t i) const;

  /// Values at lo..hi inclusive (empty when hi < lo).
  std::vector<std::int64_t> window(std::int64_t lo, std::int64_t hi) const;

  /// Reduces both periods to their minimal length and absorbs core elements
  /// that merely continue a tail.  Leaves the pointwise sequence unchanged.
  void normalize();

  bool operator==(const EventuallyPeriodic&) const = default;
};

/// Smallest p dividing v.size() such that v is p-periodic (cyclically).
std::size_t minimal_period(const std::vector<std::int64_t>& v);

}  // namespace friezes
