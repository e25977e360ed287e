#include "friezes/sequence.hpp"

#include <algorithm>

#include "friezes/errors.hpp"

namespace friezes {

std::int64_t EventuallyPeriodic::at(std::int64_t i) const {
  if (i >= core_start && i < core_end()) return core[static_cast<std::size_t>(i - core_start)];
  if (i < core_start) {
    const auto len = static_cast<std::int64_t>(left_period.size());
    const std::int64_t d = (core_start - 1 - i) % len;
    return left_period[static_cast<std::size_t>(len - 1 - d)];
  }
  const auto len = static_cast<std::int64_t>(right_period.size());
  return right_period[static_cast<std::size_t>((i - core_end()) % len)];
}

std::vector<std::int64_t> EventuallyPeriodic::window(std::int64_t lo, std::int64_t hi) const {
  std::vector<std::int64_t> out;
  if (hi < lo) return out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t i = lo; i <= hi; ++i) out.push_back(at(i));
  return out;
}

std::size_t minimal_period(const std::vector<std::int64_t>& v) {
  const std::size_t n = v.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t k = p; k < n && ok; ++k) ok = v[k] == v[k - p];
    if (ok) return p;
  }
  return n;
}

void EventuallyPeriodic::normalize() {
  if (left_period.empty() || right_period.empty()) {
    throw PreconditionError("eventually periodic sequence needs nonempty periods");
  }
  left_period.resize(minimal_period(left_period));
  right_period.resize(minimal_period(right_period));

  std::size_t front = 0;
  while (front < core.size() && core[front] == left_period.front()) {
    std::rotate(left_period.begin(), left_period.begin() + 1, left_period.end());
    ++front;
  }
  core.erase(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(front));
  core_start += static_cast<std::int64_t>(front);

  while (!core.empty() && core.back() == right_period.back()) {
    std::rotate(right_period.rbegin(), right_period.rbegin() + 1, right_period.rend());
    core.pop_back();
  }
}

}  // namespace friezes
