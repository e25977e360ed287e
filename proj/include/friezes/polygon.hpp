#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "friezes/bigint.hpp"

namespace friezes {

/// Chord {u, v} of a polygon with vertices 1..n, stored with u < v.
struct Chord {
  int u = 0;
  int v = 0;

  auto operator<=>(const Chord&) const = default;
};

/// Vertex triple of a face, sorted ascending.
using Triangle = std::array<int, 3>;

/// Triangulated convex n-gon with vertices labelled 1..n cyclically.
class PolygonTriangulation {
 public:
  /// Validates n >= 3, chord endpoints in range and non-adjacent, no
  /// duplicates, exactly n - 3 chords and no crossing pair.  Throws
  /// InvalidTriangulation otherwise.
  PolygonTriangulation(int n, std::vector<Chord> chords);

  /// The triangle.
  static PolygonTriangulation triangle() { return {3, {}}; }

  /// Fan of chords {apex, k} for every k not adjacent to apex.
  static PolygonTriangulation fan(int n, int apex = 1);

  int size() const { return n_; }
  const std::vector<Chord>& chords() const { return chords_; }

  /// True for polygon sides and chords.
  bool connected(int u, int v) const;

  bool operator==(const PolygonTriangulation&) const = default;

 private:
  int n_;
  std::vector<Chord> chords_;  // sorted
};

/// Crossing test for two chords of the same convex polygon.
bool chords_cross(Chord a, Chord b);

/// The n - 2 faces, found by recursive splitting along chords; sorted.
std::vector<Triangle> faces(const PolygonTriangulation& p);

/// counts[v] = number of faces at vertex v (index 0 unused).
std::vector<std::int64_t> triangle_counts(const PolygonTriangulation& p);

/// CC labels from `source`: labels[source] = 0, neighbours get 1, and each
/// triangle with two labelled vertices labels its third by their sum.
/// Index 0 of the result is unused.
std::vector<BigInt> cc_labels(const PolygonTriangulation& p, int source);

/// Number of ordered tuples of pairwise distinct faces, the k-th incident to
/// walk[k] for the interior walk vertices.  A single-vertex walk gives 0 and a
/// two-vertex walk gives 1.  Throws PreconditionError unless consecutive walk
/// vertices are consecutive on the boundary (in one direction).
BigInt bci_count(const PolygonTriangulation& p, const std::vector<int>& walk);

/// The two boundary walks from a to b (clockwise by increasing label first).
std::pair<std::vector<int>, std::vector<int>> boundary_walks(int n, int a, int b);

/// Frieze pattern of rank n: values on the band 0 < j - i < n, stored as the
/// fundamental region f(A, B), 1 <= A < B <= n, and extended by glide reflection.
class FriezePattern {
 public:
  /// fundamental[A-1] holds f(A, A+1), ..., f(A, n) for A = 1..n-1.
  /// Throws InvalidTriangulation if the border-ones, positivity or unimodular
  /// conditions fail.
  FriezePattern(int n, std::vector<std::vector<BigInt>> fundamental);

  int rank() const { return n_; }

  bool in_band(std::int64_t i, std::int64_t j) const { return j - i > 0 && j - i < n_; }

  /// f(i, j) for (i, j) in the band; PreconditionError elsewhere.
  const BigInt& at(std::int64_t i, std::int64_t j) const;

  const std::vector<std::vector<BigInt>>& fundamental() const { return fundamental_; }

  bool operator==(const FriezePattern&) const = default;

 private:
  const BigInt& fundamental_at(int a, int b) const;

  int n_;
  std::vector<std::vector<BigInt>> fundamental_;
};

FriezePattern frieze_pattern(const PolygonTriangulation& p);

/// Inverts triangle_counts() by repeatedly cutting the ear with the smallest
/// label among vertices of count 1.  Throws NotRealizable when the counts
/// cannot come from a triangulation.
PolygonTriangulation polygon_from_quiddity(const std::vector<std::int64_t>& quiddity);

/// Every triangulation of the n-gon (Catalan(n-2) of them), in a fixed order.
std::vector<PolygonTriangulation> all_triangulations(int n);

/// A random triangulation obtained by recursive random apex choice.
PolygonTriangulation random_triangulation(int n, std::mt19937_64& rng);

}  // namespace friezes
