#include "friezes/strip.hpp"

#include <algorithm>
#include <limits>

#include "friezes/errors.hpp"

namespace friezes {

Arc::Arc(MarkedPoint x, MarkedPoint y) : a(std::min(x, y)), b(std::max(x, y)) {}

ArcKind Arc::kind() const {
  if (a.boundary != b.boundary) return ArcKind::Bridging;
  return a.boundary == Boundary::Lower ? ArcKind::Peripheral : ArcKind::UpperPeripheral;
}

std::string to_string(const Arc& arc) {
  auto point = [](MarkedPoint p) {
    return "(" + std::to_string(p.index) + (p.boundary == Boundary::Lower ? ",0)" : ",1)");
  };
  if (arc.kind() == ArcKind::Bridging) return point(arc.b) + "-" + point(arc.a);
  return point(arc.a) + "-" + point(arc.b);
}

bool cross(const Arc& x, const Arc& y) {
  auto interleave = [](std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l) {
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
  };
  const ArcKind kx = x.kind();
  const ArcKind ky = y.kind();
  if (kx == ky) {
    if (kx == ArcKind::Bridging) {
      // a = lower endpoint, b = upper endpoint
      const std::int64_t du = x.b.index - y.b.index;
      const std::int64_t dp = x.a.index - y.a.index;
      return (du < 0 && dp > 0) || (du > 0 && dp < 0);
    }
    return interleave(x.a.index, x.b.index, y.a.index, y.b.index);
  }
  if (kx == ArcKind::Bridging || ky == ArcKind::Bridging) {
    const Arc& bridge = kx == ArcKind::Bridging ? x : y;
    const Arc& side = kx == ArcKind::Bridging ? y : x;
    const std::int64_t foot =
        side.kind() == ArcKind::Peripheral ? bridge.a.index : bridge.b.index;
    return side.a.index < foot && foot < side.b.index;
  }
  return false;  // arcs on opposite boundaries
}

bool M2Class::contains(std::int64_t u) const {
  switch (kind) {
    case Kind::Empty:
      return false;
    case Kind::Finite:
      return u >= 1 && u <= size;
    case Kind::NatRight:
      return u >= 0;
    case Kind::NatLeft:
      return u <= 0;
    case Kind::BiInfinite:
      return true;
  }
  return false;
}

std::string to_string(const M2Class& m2) {
  switch (m2.kind) {
    case M2Class::Kind::Empty:
      return "Empty";
    case M2Class::Kind::Finite:
      return "Finite(" + std::to_string(m2.size) + ")";
    case M2Class::Kind::NatRight:
      return "NatRight";
    case M2Class::Kind::NatLeft:
      return "NatLeft";
    case M2Class::Kind::BiInfinite:
      return "BiInfinite";
  }
  return {};
}

M2Class parse_m2_class(const std::string& text) {
  if (text == "Empty") return M2Class::empty();
  if (text == "NatRight") return M2Class::nat_right();
  if (text == "NatLeft") return M2Class::nat_left();
  if (text == "BiInfinite") return M2Class::bi_infinite();
  const std::string prefix = "Finite(";
  if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 &&
      text.back() == ')') {
    const std::string digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (!digits.empty() && digits.size() < 18 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const std::int64_t n = std::stoll(digits);
      if (n >= 1) return M2Class::finite(n);
    }
  }
  throw PreconditionError("unknown M2 class '" + text + "'");
}

StripTriangulation::StripTriangulation(std::int64_t lo, std::int64_t hi, std::int64_t margin,
                                       M2Class m2, std::vector<Arc> arcs)
    : lo_(lo), hi_(hi), margin_(margin), m2_(m2), arcs_(std::move(arcs)) {
  if (hi_ < lo_) throw PreconditionError("empty window");
  if (margin_ < 0) throw PreconditionError("negative margin");
  if (m2_.kind == M2Class::Kind::Finite && m2_.size < 1) {
    throw InvalidTriangulation("Finite(N) needs N >= 1");
  }
  for (Arc& arc : arcs_) {
    arc = Arc(arc.a, arc.b);
    switch (arc.kind()) {
      case ArcKind::UpperPeripheral:
        throw InvalidTriangulation("arc " + to_string(arc) + " joins two upper points");
      case ArcKind::Peripheral:
        if (arc.b.index - arc.a.index < 2) {
          throw InvalidTriangulation("arc " + to_string(arc) + " is contractible or degenerate");
        }
        if (!in_region(arc.a.index) && !in_region(arc.b.index)) {
          throw InvalidTriangulation("arc " + to_string(arc) + " has no endpoint in the region");
        }
        break;
      case ArcKind::Bridging:
        if (!in_region(arc.a.index)) {
          throw InvalidTriangulation("arc " + to_string(arc) + " has no endpoint in the region");
        }
        if (!m2_.contains(arc.b.index)) {
          throw InvalidTriangulation("arc " + to_string(arc) + " ends outside M2 = " +
                                     to_string(m2_));
        }
        break;
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end()) {
    throw InvalidTriangulation("duplicate arc " + to_string(*dup));
  }
  for (std::size_t x = 0; x < arcs_.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs_.size(); ++y) {
      if (cross(arcs_[x], arcs_[y])) {
        throw InvalidTriangulation("arcs " + to_string(arcs_[x]) + " and " +
                                   to_string(arcs_[y]) + " cross");
      }
    }
  }
}

void StripTriangulation::check_region(std::int64_t i) const {
  if (!in_region(i)) {
    throw Truncated("lower point " + std::to_string(i) + " lies outside the materialized region [" +
                    std::to_string(region_lo()) + "," + std::to_string(region_hi()) + "]");
  }
}

std::int64_t StripTriangulation::degree(std::int64_t i) const {
  check_region(i);
  const MarkedPoint p = lower(i);
  return std::count_if(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.incident(p); });
}

std::vector<Arc> StripTriangulation::star(std::int64_t i) const {
  check_region(i);
  const MarkedPoint p = lower(i);
  std::vector<Arc> out;
  std::copy_if(arcs_.begin(), arcs_.end(), std::back_inserter(out),
               [&](const Arc& a) { return a.incident(p); });
  return out;
}

bool StripTriangulation::contains(const Arc& arc) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc(arc.a, arc.b));
}

QuiddityFragment quiddity_of(const StripTriangulation& t) {
  QuiddityFragment out;
  out.start = t.lo();
  for (std::int64_t i = t.lo(); i <= t.hi(); ++i) out.values.push_back(1 + t.degree(i));
  return out;
}

StripTriangulation dehn_twist(const StripTriangulation& t, std::int64_t n) {
  if (t.m2_class().kind != M2Class::Kind::BiInfinite) {
    throw PreconditionError("Dehn twists are defined for M2 = Z only");
  }
  std::vector<Arc> arcs = t.arcs();
  for (Arc& arc : arcs) {
    if (arc.kind() == ArcKind::Bridging) arc.b.index = checked_add(arc.b.index, n);
  }
  return {t.lo(), t.hi(), t.margin(), t.m2_class(), std::move(arcs)};
}

std::optional<std::int64_t> dehn_equivalent(const StripTriangulation& t1,
                                            const StripTriangulation& t2) {
  if (t1.m2_class().kind != M2Class::Kind::BiInfinite ||
      t2.m2_class().kind != M2Class::Kind::BiInfinite) {
    throw PreconditionError("Dehn equivalence compares triangulations with M2 = Z");
  }
  const std::int64_t rlo = std::max(t1.region_lo(), t2.region_lo());
  const std::int64_t rhi = std::min(t1.region_hi(), t2.region_hi());
  if (rhi < rlo) return std::nullopt;

  auto restrict = [rlo, rhi](const StripTriangulation& t, ArcKind kind) {
    std::vector<Arc> out;
    for (const Arc& arc : t.arcs()) {
      if (arc.kind() != kind) continue;
      const bool inside = (arc.a.index >= rlo && arc.a.index <= rhi) ||
                          (kind == ArcKind::Peripheral && arc.b.index >= rlo && arc.b.index <= rhi);
      if (inside) out.push_back(arc);
    }
    return out;
  };
  if (restrict(t1, ArcKind::Peripheral) != restrict(t2, ArcKind::Peripheral)) return std::nullopt;
  const std::vector<Arc> b1 = restrict(t1, ArcKind::Bridging);
  const std::vector<Arc> b2 = restrict(t2, ArcKind::Bridging);
  if (b1.size() != b2.size()) return std::nullopt;
  if (b1.empty()) return 0;
  // Sorted by lower point and then upper point, so the shift is read off the first arcs.
  const std::int64_t n = b2.front().b.index - b1.front().b.index;
  for (std::size_t k = 0; k < b1.size(); ++k) {
    if (b1[k].a != b2[k].a || b1[k].b.index + n != b2[k].b.index) return std::nullopt;
  }
  return n;
}

namespace {

struct UpperSpan {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  bool empty() const { return hi < lo; }
};

UpperSpan stored_upper_span(const StripTriangulation& t) {
  UpperSpan s;
  for (const Arc& arc : t.arcs()) {
    if (arc.kind() != ArcKind::Bridging) continue;
    s.lo = std::min(s.lo, arc.b.index);
    s.hi = std::max(s.hi, arc.b.index);
  }
  return s;
}

}  // namespace

std::vector<MarkedPoint> special_upper_points(const StripTriangulation& t) {
  UpperSpan span;
  if (t.m2_class().kind == M2Class::Kind::Finite) {
    span = {1, t.m2_class().size};
  } else {
    span = stored_upper_span(t);
  }
  std::vector<MarkedPoint> out;
  if (span.empty()) return out;
  std::vector<bool> used(static_cast<std::size_t>(span.hi - span.lo + 1), false);
  for (const Arc& arc : t.arcs()) {
    if (arc.kind() == ArcKind::Bridging && arc.b.index >= span.lo && arc.b.index <= span.hi) {
      used[static_cast<std::size_t>(arc.b.index - span.lo)] = true;
    }
  }
  for (std::int64_t u = span.lo; u <= span.hi; ++u) {
    if (!used[static_cast<std::size_t>(u - span.lo)] && t.m2_class().contains(u)) {
      out.push_back(upper(u));
    }
  }
  return out;
}

bool has_peripheral_over(const StripTriangulation& t, std::int64_t m, std::int64_t n) {
  return std::any_of(t.arcs().begin(), t.arcs().end(), [&](const Arc& arc) {
    return arc.kind() == ArcKind::Peripheral && arc.a.index <= m && arc.b.index >= n;
  });
}

bool has_bridging_pair_around(const StripTriangulation& t, std::int64_t m, std::int64_t n) {
  // Largest upper endpoint among arcs landing at or left of m, smallest among
  // those landing at or right of n.
  std::optional<std::int64_t> left;
  std::optional<std::int64_t> right;
  for (const Arc& arc : t.arcs()) {
    if (arc.kind() != ArcKind::Bridging) continue;
    if (arc.a.index <= m) left = std::max(left.value_or(arc.b.index), arc.b.index);
    if (arc.a.index >= n) right = std::min(right.value_or(arc.b.index), arc.b.index);
  }
  return left && right && *left <= *right;
}

bool is_admissible_window(const StripTriangulation& t) {
  if (t.lo() == t.hi()) return true;
  return has_peripheral_over(t, t.lo(), t.hi()) || has_bridging_pair_around(t, t.lo(), t.hi());
}

std::optional<Arc> find_addable_arc(const StripTriangulation& t) {
  auto compatible = [&t](const Arc& candidate) {
    if (t.contains(candidate)) return false;
    return std::none_of(t.arcs().begin(), t.arcs().end(),
                        [&](const Arc& arc) { return cross(arc, candidate); });
  };
  for (std::int64_t x = t.region_lo(); x <= t.region_hi(); ++x) {
    for (std::int64_t y = x + 2; y <= t.region_hi(); ++y) {
      const Arc candidate = Arc::peripheral(x, y);
      if (compatible(candidate)) return candidate;
    }
  }
  const UpperSpan span = stored_upper_span(t);
  if (span.empty()) return std::nullopt;
  for (std::int64_t p = t.region_lo(); p <= t.region_hi(); ++p) {
    for (std::int64_t u = span.lo; u <= span.hi; ++u) {
      if (!t.m2_class().contains(u)) continue;
      const Arc candidate = Arc::bridging(u, p);
      if (compatible(candidate)) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace friezes
