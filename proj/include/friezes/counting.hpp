#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "friezes/bigint.hpp"
#include "friezes/polygon.hpp"
#include "friezes/strip.hpp"

namespace friezes {

/// A finite triangulated polygon cut out of a strip triangulation, either by
/// one peripheral arc or by two bridging arcs.  Lower points first..last map
/// to polygon vertices 1..(last - first + 1); upper points follow from right
/// to left.
struct PolygonCut {
  PolygonTriangulation polygon;
  std::int64_t first = 0;
  std::int64_t last = 0;
  std::vector<Arc> cut;  ///< the peripheral arc, or the left and right bridging arcs

  int vertex_of(std::int64_t i) const;
};

/// Polygon bounded by the peripheral arc (x,0)-(y,0).
PolygonCut cut_along(const StripTriangulation& t, const Arc& peripheral);

/// Polygon bounded by bridging arcs (u,1)-(p,0) and (v,1)-(q,0), p < q, u <= v.
PolygonCut cut_along(const StripTriangulation& t, const Arc& left, const Arc& right);

/// The preferred cut containing the stars of i..j: the shortest peripheral arc
/// over i-1 and j+1 inside the region, otherwise the nearest bridging pair.
/// Throws Truncated when the region holds neither.
PolygonCut cut_polygon(const StripTriangulation& t, std::int64_t i, std::int64_t j);

/// Every peripheral cut inside the region plus bridging cuts built from the
/// two nearest bridging feet on each side.
std::vector<PolygonCut> candidate_cuts(const StripTriangulation& t, std::int64_t i, std::int64_t j);

/// CC count from (i,0) to (j,0), i <= j, on the given or preferred cut.
BigInt cc_entry(const StripTriangulation& t, std::int64_t i, std::int64_t j);
BigInt cc_entry(const PolygonCut& cut, std::int64_t i, std::int64_t j);

/// BCI count along the lower walk i, i+1, ..., j.
BigInt bci_entry(const StripTriangulation& t, std::int64_t i, std::int64_t j);
BigInt bci_entry(const PolygonCut& cut, std::int64_t i, std::int64_t j);

}  // namespace friezes
