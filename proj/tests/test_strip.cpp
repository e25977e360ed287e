#include <gtest/gtest.h>

#include <random>

#include "friezes/errors.hpp"
#include "friezes/strip.hpp"

using namespace friezes;

namespace {

// Zigzag triangulation of the strip with M2 = Z: (k,0) joins (k,1) and (k+1,1).
// Every lower point meets three triangles.
StripTriangulation zigzag(std::int64_t lo, std::int64_t hi, std::int64_t margin) {
  std::vector<Arc> arcs;
  for (std::int64_t k = lo - margin; k <= hi + margin; ++k) {
    arcs.push_back(Arc::bridging(k, k));
    arcs.push_back(Arc::bridging(k + 1, k));
  }
  return {lo, hi, margin, M2Class::bi_infinite(), arcs};
}

// Crossing by interleaving on a circle: lower points in increasing order,
// then upper points in decreasing order.
std::int64_t circle_pos(const MarkedPoint& p) {
  return p.boundary == Boundary::Lower ? p.index : 1000 - p.index;
}

bool cross_oracle(const Arc& x, const Arc& y) {
  std::int64_t a = circle_pos(x.a), b = circle_pos(x.b), c = circle_pos(y.a), d = circle_pos(y.b);
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  return (a < c && c < b) != (a < d && d < b);
}

}  // namespace

TEST(Strip, ArcNormalisation) {
  const Arc p = Arc::peripheral(5, 2);
  EXPECT_EQ(p.a, lower(2));
  EXPECT_EQ(p.b, lower(5));
  EXPECT_EQ(p.kind(), ArcKind::Peripheral);
  const Arc b(lower(3), upper(-1));
  EXPECT_EQ(b, Arc::bridging(-1, 3));
  EXPECT_EQ(b.a, lower(3));
  EXPECT_EQ(b.kind(), ArcKind::Bridging);
  EXPECT_EQ(Arc(upper(1), upper(4)).kind(), ArcKind::UpperPeripheral);
  EXPECT_TRUE(b.incident(upper(-1)));
  EXPECT_FALSE(b.incident(lower(-1)));
}

TEST(Strip, CrossMatchesCircleOracle) {
  std::vector<Arc> arcs;
  for (std::int64_t i = -3; i <= 3; ++i) {
    for (std::int64_t j = i + 2; j <= 3; ++j) arcs.push_back(Arc::peripheral(i, j));
    for (std::int64_t u = -3; u <= 3; ++u) arcs.push_back(Arc::bridging(u, i));
  }
  for (const Arc& x : arcs) {
    for (const Arc& y : arcs) {
      ASSERT_EQ(cross(x, y), cross_oracle(x, y)) << to_string(x) << " " << to_string(y);
      ASSERT_EQ(cross(x, y), cross(y, x));
    }
  }
}

TEST(Strip, M2Classes) {
  EXPECT_TRUE(M2Class::finite(3).contains(3));
  EXPECT_FALSE(M2Class::finite(3).contains(0));
  EXPECT_TRUE(M2Class::nat_right().contains(0));
  EXPECT_FALSE(M2Class::nat_right().contains(-1));
  EXPECT_TRUE(M2Class::nat_left().contains(0));
  EXPECT_FALSE(M2Class::nat_left().contains(1));
  EXPECT_FALSE(M2Class::empty().contains(0));
  for (const auto& m : {M2Class::empty(), M2Class::finite(7), M2Class::nat_left(),
                        M2Class::nat_right(), M2Class::bi_infinite()}) {
    EXPECT_EQ(parse_m2_class(to_string(m)), m);
  }
  EXPECT_EQ(to_string(M2Class::finite(2)), "Finite(2)");
  EXPECT_THROW(parse_m2_class("Finite(x)"), PreconditionError);
  EXPECT_THROW(parse_m2_class("Z"), PreconditionError);
}

TEST(Strip, ConstructorChecks) {
  const auto m2 = M2Class::finite(2);
  EXPECT_THROW(StripTriangulation(0, 2, 1, m2, {Arc(upper(1), upper(2))}), InvalidTriangulation);
  EXPECT_THROW(StripTriangulation(0, 2, 1, m2, {Arc::peripheral(0, 1)}), InvalidTriangulation);
  EXPECT_THROW(StripTriangulation(0, 2, 1, m2, {Arc::peripheral(5, 9)}), InvalidTriangulation);
  EXPECT_THROW(StripTriangulation(0, 2, 1, m2, {Arc::bridging(3, 0)}), InvalidTriangulation);
  EXPECT_THROW(StripTriangulation(0, 2, 1, m2, {Arc::bridging(1, 0), Arc::bridging(1, 0)}),
               InvalidTriangulation);
  EXPECT_THROW(StripTriangulation(0, 2, 1, m2, {Arc::bridging(1, 2), Arc::bridging(2, 0)}),
               InvalidTriangulation);
  EXPECT_THROW(StripTriangulation(0, 2, 1, m2, {Arc::peripheral(0, 2), Arc::bridging(1, 1)}),
               InvalidTriangulation);
  EXPECT_THROW(StripTriangulation(2, 0, 1, m2, {}), PreconditionError);
  EXPECT_THROW(StripTriangulation(0, 2, -1, m2, {}), PreconditionError);
  // An arc reaching out of the region is fine when one end lies inside.
  EXPECT_NO_THROW(StripTriangulation(0, 2, 1, m2, {Arc::peripheral(-5, 3)}));
}

TEST(Strip, DegreesAndTruncation) {
  const auto t = zigzag(-3, 3, 2);
  EXPECT_EQ(t.region_lo(), -5);
  EXPECT_EQ(t.region_hi(), 5);
  for (std::int64_t i = -5; i <= 5; ++i) EXPECT_EQ(t.degree(i), 2);
  EXPECT_THROW(t.degree(6), Truncated);
  EXPECT_THROW(t.star(-6), Truncated);
  EXPECT_EQ(t.star(0), (std::vector<Arc>{Arc::bridging(0, 0), Arc::bridging(1, 0)}));
  const auto a = quiddity_of(t);
  EXPECT_EQ(a.start, -3);
  EXPECT_EQ(a.values, std::vector<std::int64_t>(7, 3));
  EXPECT_TRUE(t.contains(Arc::bridging(4, 3)));
  EXPECT_FALSE(t.contains(Arc::bridging(4, 2)));
}

TEST(Strip, DehnTwist) {
  const auto t = zigzag(-3, 3, 2);
  for (std::int64_t n = -3; n <= 3; ++n) {
    const auto d = dehn_twist(t, n);
    EXPECT_EQ(quiddity_of(d).values, quiddity_of(t).values);
    EXPECT_EQ(dehn_equivalent(t, d), n);
    EXPECT_EQ(dehn_twist(d, -n), t);
  }
  const StripTriangulation fin(0, 1, 0, M2Class::finite(1), {Arc::bridging(1, 0), Arc::bridging(1, 1)});
  EXPECT_THROW(dehn_twist(fin, 1), PreconditionError);
  EXPECT_THROW(dehn_equivalent(fin, t), PreconditionError);

  std::vector<Arc> other = t.arcs();
  other.pop_back();
  const StripTriangulation broken(-3, 3, 2, M2Class::bi_infinite(), other);
  EXPECT_FALSE(dehn_equivalent(t, broken));
}

TEST(Strip, SpecialPointsAndMaximality) {
  const auto t = zigzag(-3, 3, 2);
  EXPECT_TRUE(special_upper_points(t).empty());
  EXPECT_TRUE(is_admissible_window(t));
  EXPECT_TRUE(has_bridging_pair_around(t, -3, 3));
  EXPECT_FALSE(has_peripheral_over(t, -3, 3));
  EXPECT_FALSE(find_addable_arc(t));

  std::vector<Arc> fewer;
  for (const Arc& arc : t.arcs()) {
    if (arc != Arc::bridging(1, 0)) fewer.push_back(arc);
  }
  const StripTriangulation gap(-3, 3, 2, M2Class::bi_infinite(), fewer);
  const auto add = find_addable_arc(gap);
  ASSERT_TRUE(add);
  for (const Arc& arc : fewer) EXPECT_FALSE(cross(arc, *add));

  // Upper points 1..3 with only 1 and 3 in use leave 2 special.
  const StripTriangulation fin(0, 0, 0, M2Class::finite(3), {Arc::bridging(1, 0), Arc::bridging(3, 0)});
  EXPECT_EQ(special_upper_points(fin), std::vector<MarkedPoint>{upper(2)});
}

TEST(Strip, PeripheralCover) {
  const StripTriangulation t(0, 4, 2, M2Class::empty(),
                             {Arc::peripheral(-1, 5), Arc::peripheral(-1, 1), Arc::peripheral(1, 5)});
  EXPECT_TRUE(has_peripheral_over(t, 0, 4));
  EXPECT_TRUE(has_peripheral_over(t, -1, 5));
  EXPECT_FALSE(has_peripheral_over(t, -2, 4));
  EXPECT_TRUE(is_admissible_window(t));
}
