#pragma once

#include <cstdint>
#include <string>

#include "friezes/frieze.hpp"
#include "friezes/polygon.hpp"
#include "friezes/strip.hpp"

namespace friezes {

/// Inclusive index range; empty when hi < lo.
struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  std::int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
};

/// Parses "a..b" (either bound may be negative).  Throws PreconditionError.
IndexRange parse_range(const std::string& text);

/// Grid of t(i,j), row i and column j, labelled "(i)" and "(j)".  Cells are
/// right-aligned to the widest entry or label in the window and separated by
/// one space.  The header row is always present.
std::string render_frieze(const FriezeView& t, IndexRange rows, IndexRange cols);

/// Same layout for a frieze pattern; positions outside the band print "-".
std::string render_pattern(const FriezePattern& f, IndexRange rows, IndexRange cols);

struct SvgSpec {
  double scale = 60.0;  ///< strip height, polygon radius
};

/// Lower boundary at y = 0 and upper boundary at y = 1 (in units of scale),
/// peripheral arcs as half-ellipses inside the strip, bridging arcs straight.
std::string render_strip_svg(const StripTriangulation& t, const SvgSpec& spec = {});

std::string render_polygon_svg(const PolygonTriangulation& p, const SvgSpec& spec = {});

}  // namespace friezes
