#include "friezes/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "friezes/errors.hpp"

namespace friezes {

namespace {

std::string chord_str(Chord c) {
  return "{" + std::to_string(c.u) + "," + std::to_string(c.v) + "}";
}

bool polygon_side(int n, int u, int v) {
  const int d = std::abs(u - v);
  return d == 1 || d == n - 1;
}

}  // namespace

bool chords_cross(Chord a, Chord b) {
  return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

PolygonTriangulation::PolygonTriangulation(int n, std::vector<Chord> chords)
    : n_(n), chords_(std::move(chords)) {
  if (n_ < 3) throw InvalidTriangulation("polygon needs at least 3 vertices");
  for (Chord& c : chords_) {
    if (c.u > c.v) std::swap(c.u, c.v);
    if (c.u < 1 || c.v > n_) throw InvalidTriangulation("chord " + chord_str(c) + " out of range");
    if (c.u == c.v || polygon_side(n_, c.u, c.v)) {
      throw InvalidTriangulation("chord " + chord_str(c) + " joins equal or adjacent vertices");
    }
  }
  std::sort(chords_.begin(), chords_.end());
  if (std::adjacent_find(chords_.begin(), chords_.end()) != chords_.end()) {
    throw InvalidTriangulation("duplicate chord");
  }
  if (static_cast<int>(chords_.size()) != n_ - 3) {
    throw InvalidTriangulation("a triangulated " + std::to_string(n_) + "-gon has " +
                               std::to_string(n_ - 3) + " chords, got " +
                               std::to_string(chords_.size()));
  }
  for (std::size_t x = 0; x < chords_.size(); ++x) {
    for (std::size_t y = x + 1; y < chords_.size(); ++y) {
      if (chords_cross(chords_[x], chords_[y])) {
        throw InvalidTriangulation("chords " + chord_str(chords_[x]) + " and " +
                                   chord_str(chords_[y]) + " cross");
      }
    }
  }
}

PolygonTriangulation PolygonTriangulation::fan(int n, int apex) {
  std::vector<Chord> chords;
  for (int k = 1; k <= n; ++k) {
    if (k != apex && !polygon_side(n, apex, k)) chords.push_back({apex, k});
  }
  return {n, std::move(chords)};
}

bool PolygonTriangulation::connected(int u, int v) const {
  if (u == v) return false;
  if (polygon_side(n_, u, v)) return true;
  return std::binary_search(chords_.begin(), chords_.end(), Chord{std::min(u, v), std::max(u, v)});
}

std::vector<Triangle> faces(const PolygonTriangulation& p) {
  std::vector<Triangle> out;
  std::vector<std::vector<int>> pending;
  std::vector<int> all(static_cast<std::size_t>(p.size()));
  std::iota(all.begin(), all.end(), 1);
  pending.push_back(std::move(all));

  while (!pending.empty()) {
    std::vector<int> cycle = std::move(pending.back());
    pending.pop_back();
    const std::size_t m = cycle.size();
    if (m == 3) {
      Triangle t{cycle[0], cycle[1], cycle[2]};
      std::sort(t.begin(), t.end());
      out.push_back(t);
      continue;
    }
    // Split along any chord joining non-consecutive vertices of this cycle.
    bool split = false;
    for (std::size_t x = 0; x < m && !split; ++x) {
      for (std::size_t y = x + 2; y < m && !split; ++y) {
        if (x == 0 && y == m - 1) continue;
        if (!p.connected(cycle[x], cycle[y])) continue;
        std::vector<int> first(cycle.begin() + static_cast<std::ptrdiff_t>(x),
                               cycle.begin() + static_cast<std::ptrdiff_t>(y) + 1);
        std::vector<int> second(cycle.begin() + static_cast<std::ptrdiff_t>(y), cycle.end());
        second.insert(second.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(x) + 1);
        pending.push_back(std::move(first));
        pending.push_back(std::move(second));
        split = true;
      }
    }
    if (!split) throw InvalidTriangulation("polygon region without a splitting chord");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> triangle_counts(const PolygonTriangulation& p) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p.size()) + 1, 0);
  for (const Triangle& t : faces(p)) {
    for (int v : t) ++counts[static_cast<std::size_t>(v)];
  }
  return counts;
}

std::vector<BigInt> cc_labels(const PolygonTriangulation& p, int source) {
  const int n = p.size();
  if (source < 1 || source > n) throw PreconditionError("source vertex out of range");
  std::vector<std::optional<BigInt>> label(static_cast<std::size_t>(n) + 1);
  label[static_cast<std::size_t>(source)] = BigInt(0);
  for (int v = 1; v <= n; ++v) {
    if (p.connected(source, v)) label[static_cast<std::size_t>(v)] = BigInt(1);
  }

  const std::vector<Triangle> tris = faces(p);
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Triangle& t : tris) {
      int unknown = -1;
      int known = 0;
      for (int v : t) {
        if (label[static_cast<std::size_t>(v)]) {
          ++known;
        } else {
          unknown = v;
        }
      }
      if (known != 2) continue;
      BigInt sum = 0;
      for (int v : t) {
        if (v != unknown) sum += *label[static_cast<std::size_t>(v)];
      }
      label[static_cast<std::size_t>(unknown)] = std::move(sum);
      progress = true;
    }
  }

  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) {
    if (!label[static_cast<std::size_t>(v)]) {
      throw Error("CC labelling stalled at vertex " + std::to_string(v));
    }
    out[static_cast<std::size_t>(v)] = *label[static_cast<std::size_t>(v)];
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> boundary_walks(int n, int a, int b) {
  auto step = [n](int v, int dir) { return (v - 1 + dir + n) % n + 1; };
  std::vector<int> up{a};
  std::vector<int> down{a};
  while (up.back() != b) up.push_back(step(up.back(), +1));
  while (down.back() != b) down.push_back(step(down.back(), -1));
  return {up, down};
}

BigInt bci_count(const PolygonTriangulation& p, const std::vector<int>& walk) {
  const int n = p.size();
  if (walk.empty()) throw PreconditionError("empty walk");
  for (int v : walk) {
    if (v < 1 || v > n) throw PreconditionError("walk vertex out of range");
  }
  if (walk.size() == 1) return 0;
  const int dir = (walk[1] - walk[0] + n) % n == 1 ? +1 : -1;
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
    if ((walk[k + 1] - walk[k] + dir * 0 + n) % n != (dir == 1 ? 1 : n - 1)) {
      throw PreconditionError("walk does not follow consecutive boundary vertices");
    }
  }
  if (static_cast<int>(walk.size()) > n) throw PreconditionError("walk repeats a vertex");
  if (walk.size() == 2) return 1;

  const std::vector<Triangle> tris = faces(p);
  const std::size_t r = walk.size() - 2;
  std::vector<std::vector<int>> options(r);
  for (std::size_t k = 0; k < r; ++k) {
    const int v = walk[k + 1];
    for (std::size_t f = 0; f < tris.size(); ++f) {
      const Triangle& t = tris[f];
      if (std::find(t.begin(), t.end(), v) != t.end()) options[k].push_back(static_cast<int>(f));
    }
  }
  // relevant[k] = faces that can still be chosen at positions k..r-1.
  std::vector<std::set<int>> relevant(r + 1);
  for (std::size_t k = r; k-- > 0;) {
    relevant[k] = relevant[k + 1];
    relevant[k].insert(options[k].begin(), options[k].end());
  }

  // Backtracking over distinct faces, memoized on the used faces that still matter.
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;
  auto count = [&](auto&& self, std::size_t k, const std::vector<int>& used) -> BigInt {
    if (k == r) return 1;
    auto key = std::pair{k, used};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (int f : options[k]) {
      if (std::binary_search(used.begin(), used.end(), f)) continue;
      std::vector<int> next;
      for (int u : used) {
        if (relevant[k + 1].count(u)) next.push_back(u);
      }
      if (relevant[k + 1].count(f)) next.insert(std::upper_bound(next.begin(), next.end(), f), f);
      total += self(self, k + 1, next);
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return count(count, 0, {});
}

FriezePattern::FriezePattern(int n, std::vector<std::vector<BigInt>> fundamental)
    : n_(n), fundamental_(std::move(fundamental)) {
  if (n_ < 3) throw InvalidTriangulation("frieze pattern rank must be at least 3");
  if (static_cast<int>(fundamental_.size()) != n_ - 1) {
    throw InvalidTriangulation("fundamental region needs n-1 rows");
  }
  for (int a = 1; a < n_; ++a) {
    if (static_cast<int>(fundamental_[static_cast<std::size_t>(a - 1)].size()) != n_ - a) {
      throw InvalidTriangulation("fundamental row " + std::to_string(a) + " needs " +
                                 std::to_string(n_ - a) + " entries");
    }
    for (const BigInt& v : fundamental_[static_cast<std::size_t>(a - 1)]) {
      if (v < 1) throw InvalidTriangulation("frieze pattern entries must be positive");
    }
  }
  for (std::int64_t i = 1; i <= n_; ++i) {
    if (at(i, i + 1) != 1 || at(i, i + n_ - 1) != 1) {
      throw InvalidTriangulation("border of the frieze pattern must be ones");
    }
    for (std::int64_t j = i + 1; j < i + n_ - 1; ++j) {
      if (!in_band(i + 1, j)) continue;
      if (at(i, j) * at(i + 1, j + 1) - at(i, j + 1) * at(i + 1, j) != 1) {
        throw InvalidTriangulation("unimodular rule fails at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
      }
    }
  }
}

const BigInt& FriezePattern::fundamental_at(int a, int b) const {
  return fundamental_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - a - 1)];
}

const BigInt& FriezePattern::at(std::int64_t i, std::int64_t j) const {
  if (!in_band(i, j)) {
    throw PreconditionError("(" + std::to_string(i) + "," + std::to_string(j) +
                            ") is outside the band of the frieze pattern");
  }
  auto reduce = [this](std::int64_t r) { return static_cast<int>(((r - 1) % n_ + n_) % n_ + 1); };
  const int ri = reduce(i);
  const int rj = reduce(j);
  return fundamental_at(std::min(ri, rj), std::max(ri, rj));
}

FriezePattern frieze_pattern(const PolygonTriangulation& p) {
  const int n = p.size();
  std::vector<std::vector<BigInt>> fundamental;
  for (int a = 1; a < n; ++a) {
    const std::vector<BigInt> labels = cc_labels(p, a);
    fundamental.emplace_back(labels.begin() + a + 1, labels.end());
  }
  return {n, std::move(fundamental)};
}

PolygonTriangulation polygon_from_quiddity(const std::vector<std::int64_t>& quiddity) {
  const auto n = static_cast<std::int64_t>(quiddity.size());
  if (n < 3) throw NotRealizable("a polygon needs at least 3 vertices");
  std::int64_t sum = 0;
  for (std::int64_t v : quiddity) {
    if (v < 1) throw NotRealizable("triangle counts must be at least 1");
    sum = checked_add(sum, v);
  }
  if (sum != 3 * n - 6) {
    throw NotRealizable("triangle counts sum to " + std::to_string(sum) + ", expected " +
                        std::to_string(3 * n - 6));
  }

  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 1);
  std::vector<std::int64_t> count(quiddity.begin(), quiddity.end());
  count.insert(count.begin(), 0);  // 1-based
  std::vector<Chord> chords;

  while (cycle.size() > 3) {
    const std::size_t m = cycle.size();
    std::size_t ear = m;
    for (std::size_t k = 0; k < m; ++k) {
      if (count[static_cast<std::size_t>(cycle[k])] == 1) {
        ear = k;
        break;
      }
    }
    if (ear == m) throw NotRealizable("no vertex with a single triangle left to cut");
    const int prev = cycle[(ear + m - 1) % m];
    const int next = cycle[(ear + 1) % m];
    chords.push_back({std::min(prev, next), std::max(prev, next)});
    for (int v : {prev, next}) {
      if (--count[static_cast<std::size_t>(v)] < 1) {
        throw NotRealizable("vertex " + std::to_string(v) + " runs out of triangles");
      }
    }
    cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(ear));
  }
  for (int v : cycle) {
    if (count[static_cast<std::size_t>(v)] != 1) {
      throw NotRealizable("final triangle has a vertex with leftover count");
    }
  }
  try {
    return {static_cast<int>(n), std::move(chords)};
  } catch (const InvalidTriangulation& e) {
    throw NotRealizable(std::string("ear removal produced no triangulation: ") + e.what());
  }
}

namespace {

void enumerate(const std::vector<int>& cycle, std::vector<std::vector<Chord>>& out) {
  const std::size_t m = cycle.size();
  if (m < 3) {
    out.push_back({});
    return;
  }
  // Base side (cycle[0], cycle[m-1]) lies in exactly one face; pick its apex.
  for (std::size_t k = 1; k + 1 < m; ++k) {
    std::vector<std::vector<Chord>> left;
    std::vector<std::vector<Chord>> right;
    enumerate({cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(k) + 1}, left);
    enumerate({cycle.begin() + static_cast<std::ptrdiff_t>(k), cycle.end()}, right);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<Chord> chords = l;
        chords.insert(chords.end(), r.begin(), r.end());
        if (k > 1) chords.push_back({cycle[0], cycle[k]});
        if (k + 2 < m) chords.push_back({cycle[k], cycle[m - 1]});
        out.push_back(std::move(chords));
      }
    }
  }
}

void random_split(const std::vector<int>& cycle, std::mt19937_64& rng, std::vector<Chord>& out) {
  const std::size_t m = cycle.size();
  if (m < 4) return;
  std::uniform_int_distribution<std::size_t> pick(1, m - 2);
  const std::size_t k = pick(rng);
  if (k > 1) out.push_back({cycle[0], cycle[k]});
  if (k + 2 < m) out.push_back({cycle[k], cycle[m - 1]});
  random_split({cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(k) + 1}, rng, out);
  random_split({cycle.begin() + static_cast<std::ptrdiff_t>(k), cycle.end()}, rng, out);
}

}  // namespace

std::vector<PolygonTriangulation> all_triangulations(int n) {
  if (n < 3) throw PreconditionError("polygon needs at least 3 vertices");
  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 1);
  std::vector<std::vector<Chord>> chord_sets;
  enumerate(cycle, chord_sets);
  std::vector<PolygonTriangulation> out;
  out.reserve(chord_sets.size());
  for (auto& c : chord_sets) out.emplace_back(n, std::move(c));
  return out;
}

PolygonTriangulation random_triangulation(int n, std::mt19937_64& rng) {
  if (n < 3) throw PreconditionError("polygon needs at least 3 vertices");
  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 1);
  std::vector<Chord> chords;
  random_split(cycle, rng, chords);
  return {n, std::move(chords)};
}

}  // namespace friezes
