#include "friezes/counting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "friezes/errors.hpp"

namespace friezes {

int PolygonCut::vertex_of(std::int64_t i) const {
  if (i < first || i > last) {
    throw PreconditionError("lower point " + std::to_string(i) + " is not on the cut polygon");
  }
  return static_cast<int>(i - first + 1);
}

namespace {

void require_region(const StripTriangulation& t, std::int64_t x, std::int64_t y) {
  if (!t.in_region(x) || !t.in_region(y)) {
    throw Truncated("cut [" + std::to_string(x) + "," + std::to_string(y) +
                    "] leaves the materialized region");
  }
}

PolygonTriangulation build(int n, std::vector<Chord> chords) {
  try {
    return {n, std::move(chords)};
  } catch (const InvalidTriangulation& e) {
    throw InvalidTriangulation(std::string("cut polygon is not triangulated: ") + e.what());
  }
}

}  // namespace

PolygonCut cut_along(const StripTriangulation& t, const Arc& peripheral) {
  if (peripheral.kind() != ArcKind::Peripheral || !t.contains(peripheral)) {
    throw PreconditionError("cut arc " + to_string(peripheral) + " is not a stored peripheral arc");
  }
  const std::int64_t x = peripheral.a.index;
  const std::int64_t y = peripheral.b.index;
  require_region(t, x, y);
  std::vector<Chord> chords;
  for (const Arc& arc : t.arcs()) {
    if (arc == peripheral || arc.kind() != ArcKind::Peripheral) continue;
    if (arc.a.index >= x && arc.b.index <= y) {
      chords.push_back({static_cast<int>(arc.a.index - x + 1), static_cast<int>(arc.b.index - x + 1)});
    }
  }
  return {build(static_cast<int>(y - x + 1), std::move(chords)), x, y, {peripheral}};
}

PolygonCut cut_along(const StripTriangulation& t, const Arc& left, const Arc& right) {
  if (left.kind() != ArcKind::Bridging || right.kind() != ArcKind::Bridging || !t.contains(left) ||
      !t.contains(right)) {
    throw PreconditionError("bridging cut needs two stored bridging arcs");
  }
  const std::int64_t p = left.a.index;
  const std::int64_t q = right.a.index;
  const std::int64_t u = left.b.index;
  const std::int64_t v = right.b.index;
  if (p >= q || u > v) throw PreconditionError("bridging cut needs p < q and u <= v");
  require_region(t, p, q);

  const std::int64_t lowers = q - p + 1;
  auto lower_vertex = [&](std::int64_t i) { return static_cast<int>(i - p + 1); };
  auto upper_vertex = [&](std::int64_t w) { return static_cast<int>(lowers + (v - w) + 1); };
  std::vector<Chord> chords;
  for (const Arc& arc : t.arcs()) {
    if (arc == left || arc == right) continue;
    if (arc.kind() == ArcKind::Peripheral) {
      if (arc.a.index >= p && arc.b.index <= q) {
        chords.push_back({lower_vertex(arc.a.index), lower_vertex(arc.b.index)});
      }
    } else if (arc.a.index >= p && arc.a.index <= q && arc.b.index >= u && arc.b.index <= v) {
      chords.push_back({lower_vertex(arc.a.index), upper_vertex(arc.b.index)});
    }
  }
  const auto n = static_cast<int>(lowers + (v - u) + 1);
  return {build(n, std::move(chords)), p, q, {left, right}};
}

namespace {

std::optional<Arc> shortest_peripheral(const StripTriangulation& t, std::int64_t i, std::int64_t j) {
  std::optional<Arc> best;
  for (const Arc& arc : t.arcs()) {
    if (arc.kind() != ArcKind::Peripheral) continue;
    if (arc.a.index > i - 1 || arc.b.index < j + 1) continue;
    if (!t.in_region(arc.a.index) || !t.in_region(arc.b.index)) continue;
    if (!best || arc.b.index - arc.a.index < best->b.index - best->a.index) best = arc;
  }
  return best;
}

// Upper endpoints of bridging arcs at each lower point.
std::map<std::int64_t, std::vector<std::int64_t>> bridging_feet(const StripTriangulation& t) {
  std::map<std::int64_t, std::vector<std::int64_t>> feet;
  for (const Arc& arc : t.arcs()) {
    if (arc.kind() == ArcKind::Bridging) feet[arc.a.index].push_back(arc.b.index);
  }
  return feet;
}

}  // namespace

PolygonCut cut_polygon(const StripTriangulation& t, std::int64_t i, std::int64_t j) {
  if (j < i) throw PreconditionError("cut_polygon needs i <= j");
  if (auto arc = shortest_peripheral(t, i, j)) return cut_along(t, *arc);

  const auto feet = bridging_feet(t);
  auto left = feet.upper_bound(i - 1);
  auto right = feet.lower_bound(j + 1);
  if (left != feet.begin() && right != feet.end()) {
    --left;
    const std::int64_t u = *std::max_element(left->second.begin(), left->second.end());
    const std::int64_t v = *std::min_element(right->second.begin(), right->second.end());
    return cut_along(t, Arc::bridging(u, left->first), Arc::bridging(v, right->first));
  }
  throw Truncated("no cut around [" + std::to_string(i) + "," + std::to_string(j) +
                  "] inside the materialized region");
}

std::vector<PolygonCut> candidate_cuts(const StripTriangulation& t, std::int64_t i, std::int64_t j) {
  if (j < i) throw PreconditionError("candidate_cuts needs i <= j");
  std::vector<PolygonCut> out;
  for (const Arc& arc : t.arcs()) {
    if (arc.kind() == ArcKind::Peripheral && arc.a.index <= i - 1 && arc.b.index >= j + 1 &&
        t.in_region(arc.a.index) && t.in_region(arc.b.index)) {
      out.push_back(cut_along(t, arc));
    }
  }
  const auto feet = bridging_feet(t);
  std::vector<std::int64_t> lefts;
  std::vector<std::int64_t> rights;
  for (auto it = feet.upper_bound(i - 1); it != feet.begin() && lefts.size() < 2;) {
    --it;
    lefts.push_back(it->first);
  }
  for (auto it = feet.lower_bound(j + 1); it != feet.end() && rights.size() < 2; ++it) {
    rights.push_back(it->first);
  }
  for (std::int64_t p : lefts) {
    for (std::int64_t q : rights) {
      for (std::int64_t u : feet.at(p)) {
        for (std::int64_t v : feet.at(q)) {
          if (u <= v) out.push_back(cut_along(t, Arc::bridging(u, p), Arc::bridging(v, q)));
        }
      }
    }
  }
  return out;
}

BigInt cc_entry(const PolygonCut& cut, std::int64_t i, std::int64_t j) {
  if (j < i) throw PreconditionError("cc_entry needs i <= j");
  return cc_labels(cut.polygon, cut.vertex_of(i))[static_cast<std::size_t>(cut.vertex_of(j))];
}

BigInt bci_entry(const PolygonCut& cut, std::int64_t i, std::int64_t j) {
  if (j < i) throw PreconditionError("bci_entry needs i <= j");
  std::vector<int> walk(static_cast<std::size_t>(j - i + 1));
  std::iota(walk.begin(), walk.end(), cut.vertex_of(i));
  cut.vertex_of(j);
  return bci_count(cut.polygon, walk);
}

BigInt cc_entry(const StripTriangulation& t, std::int64_t i, std::int64_t j) {
  return cc_entry(cut_polygon(t, i, j), i, j);
}

BigInt bci_entry(const StripTriangulation& t, std::int64_t i, std::int64_t j) {
  return bci_entry(cut_polygon(t, i, j), i, j);
}

}  // namespace friezes
