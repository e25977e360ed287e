#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "friezes/frieze.hpp"

namespace friezes {

enum class Boundary { Lower, Upper };

/// (index, 0) on the lower boundary or (index, 1) on the upper boundary.
struct MarkedPoint {
  Boundary boundary = Boundary::Lower;
  std::int64_t index = 0;

  auto operator<=>(const MarkedPoint&) const = default;
};

inline MarkedPoint lower(std::int64_t i) { return {Boundary::Lower, i}; }
inline MarkedPoint upper(std::int64_t u) { return {Boundary::Upper, u}; }

enum class ArcKind { Peripheral, Bridging, UpperPeripheral };

/// Arc between two marked points, stored with a <= b.  A bridging arc
/// therefore has its lower endpoint in `a` and its upper endpoint in `b`.
struct Arc {
  MarkedPoint a;
  MarkedPoint b;

  Arc() = default;
  Arc(MarkedPoint x, MarkedPoint y);

  static Arc peripheral(std::int64_t i, std::int64_t j) { return {lower(i), lower(j)}; }
  static Arc bridging(std::int64_t u, std::int64_t p) { return {upper(u), lower(p)}; }

  ArcKind kind() const;
  bool incident(MarkedPoint p) const { return a == p || b == p; }

  auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& arc);

/// Crossing test for arcs in the strip; arcs sharing an endpoint never cross.
bool cross(const Arc& x, const Arc& y);

/// The set M2 of upper marked points, up to the labelling conventions of the
/// synthesis: {1..N}, {0,1,2,...}, {...,-1,0}, all of Z, or none.
struct M2Class {
  enum class Kind { Empty, Finite, NatRight, NatLeft, BiInfinite };

  Kind kind = Kind::Empty;
  std::int64_t size = 0;  // N for Finite, unused otherwise

  static M2Class empty() { return {Kind::Empty, 0}; }
  static M2Class finite(std::int64_t n) { return {Kind::Finite, n}; }
  static M2Class nat_right() { return {Kind::NatRight, 0}; }
  static M2Class nat_left() { return {Kind::NatLeft, 0}; }
  static M2Class bi_infinite() { return {Kind::BiInfinite, 0}; }

  bool contains(std::int64_t u) const;

  bool operator==(const M2Class&) const = default;
};

/// "Empty", "Finite(N)", "NatRight", "NatLeft" or "BiInfinite".
std::string to_string(const M2Class& m2);

/// Inverse of to_string; throws PreconditionError on anything else.
M2Class parse_m2_class(const std::string& text);

/// Finite materialization of a strip triangulation.  All arcs with a lower
/// endpoint in the region [lo - margin, hi + margin] are stored, and only those.
/// Local questions about lower points outside the region are answered with
/// Truncated rather than guessed.
class StripTriangulation {
 public:
  /// Throws InvalidTriangulation for upper-boundary peripheral arcs,
  /// contractible arcs, arcs without a lower endpoint in the region, upper
  /// endpoints outside M2, duplicates or crossing pairs; PreconditionError for
  /// hi < lo or a negative margin.
  StripTriangulation(std::int64_t lo, std::int64_t hi, std::int64_t margin, M2Class m2,
                     std::vector<Arc> arcs);

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  std::int64_t margin() const { return margin_; }
  std::int64_t region_lo() const { return lo_ - margin_; }
  std::int64_t region_hi() const { return hi_ + margin_; }
  bool in_region(std::int64_t i) const { return i >= region_lo() && i <= region_hi(); }

  const M2Class& m2_class() const { return m2_; }

  /// Sorted lexicographically on endpoints.
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Number of arcs at (i,0); Truncated outside the region.
  std::int64_t degree(std::int64_t i) const;

  /// Arcs at (i,0); Truncated outside the region.
  std::vector<Arc> star(std::int64_t i) const;

  bool contains(const Arc& arc) const;

  bool operator==(const StripTriangulation&) const = default;

 private:
  void check_region(std::int64_t i) const;

  std::int64_t lo_;
  std::int64_t hi_;
  std::int64_t margin_;
  M2Class m2_;
  std::vector<Arc> arcs_;
};

/// The map Phi on the window: a_i = 1 + degree(i) for lo <= i <= hi.
QuiddityFragment quiddity_of(const StripTriangulation& t);

/// Shifts every bridging upper endpoint by n.  PreconditionError unless M2 = Z.
StripTriangulation dehn_twist(const StripTriangulation& t, std::int64_t n);

/// n with t2 = D^n(t1) on the common region, if any.  PreconditionError
/// unless both are BiInfinite.
std::optional<std::int64_t> dehn_equivalent(const StripTriangulation& t1,
                                            const StripTriangulation& t2);

/// Upper points of M2 meeting no arc.  For infinite M2 only the points between
/// the extreme stored upper endpoints are inspected.
std::vector<MarkedPoint> special_upper_points(const StripTriangulation& t);

/// Some stored peripheral arc (x,0)-(y,0) with x <= m and y >= n.
bool has_peripheral_over(const StripTriangulation& t, std::int64_t m, std::int64_t n);

/// Stored bridging arcs (u,1)-(p,0), (v,1)-(q,0) with p <= m, n <= q, u <= v.
bool has_bridging_pair_around(const StripTriangulation& t, std::int64_t m, std::int64_t n);

/// The passing-over criterion for every pair lo <= m < n <= hi.  The
/// criterion for (lo, hi) implies it for all inner pairs, so only that pair
/// is tested (a one-point window is trivially admissible).
bool is_admissible_window(const StripTriangulation& t);

/// An arc compatible with every stored arc that could be added without
/// leaving the region, if one exists.  Bridging candidates are restricted to
/// upper points between the extreme stored upper endpoints, where no
/// unstored arc can interfere.
std::optional<Arc> find_addable_arc(const StripTriangulation& t);

}  // namespace friezes
