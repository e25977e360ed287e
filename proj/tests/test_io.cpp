#include <gtest/gtest.h>

#include <functional>

#include "corpus.hpp"
#include "friezes/errors.hpp"
#include "friezes/io.hpp"
#include "friezes/synthesis.hpp"
#include "run.hpp"

using namespace friezes;

namespace {

std::string schema_path(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(Io, QuiddityRoundTrip) {
  for (const auto& q : corpus::bijection(20)) EXPECT_EQ(parse_quiddity(to_json(q)), q);
  const auto q = parse_quiddity(read_json_file(cli::data("worked.quiddity.json")));
  EXPECT_EQ(q, corpus::worked());
  EXPECT_EQ(dump(to_json(q)), cli::slurp(cli::data("worked.quiddity.json")));
}

TEST(Io, PolygonRoundTrip) {
  for (const auto& p : all_triangulations(7)) EXPECT_EQ(parse_polygon(to_json(p)), p);
  const auto p = parse_polygon(read_json_file(cli::data("heptagon.polygon.json")));
  EXPECT_EQ(p, polygon_from_quiddity({1, 2, 3, 1, 3, 1, 4}));
}

TEST(Io, PatternRoundTripWithLargeEntries) {
  const auto f = frieze_pattern(PolygonTriangulation::fan(6));
  EXPECT_EQ(parse_frieze_pattern(to_json(f)), f);
  const BigInt huge = BigInt(1) << 80;
  EXPECT_TRUE(to_json(huge).is_string());
  EXPECT_EQ(to_json(huge).get<std::string>(), huge.str());
  EXPECT_TRUE(to_json(BigInt(42)).is_number_integer());
}

TEST(Io, StripRoundTrip) {
  for (const auto& q : {corpus::worked(), corpus::enough_ones(), corpus::bump(),
                        QuiddityDescriptor::constant(3)}) {
    const auto t = *psi(q, -4, 4).triangulation;
    EXPECT_EQ(parse_strip(parse_json(dump(to_json(t)))), t);
  }
}

TEST(Io, SchemaErrorsCarryPaths) {
  EXPECT_EQ(schema_path([] { parse_quiddity(read_json_file(cli::data("bad_zero.quiddity.json"))); }),
            "/core/1");
  EXPECT_EQ(schema_path([] { parse_strip(read_json_file(cli::data("bad_missing_key.strip.json"))); }),
            "/m2_class");
  EXPECT_EQ(schema_path([] { parse_polygon(read_json_file(cli::data("bad_adjacent_chord.polygon.json"))); }),
            "/chords");
  EXPECT_EQ(schema_path([] { parse_json(cli::slurp(cli::data("malformed.json"))); }), "");
  EXPECT_EQ(schema_path([] {
              parse_quiddity(parse_json(R"({"left_period":[2],"core":[],"right_period":[2],"core_start":0,"x":1})"));
            }),
            "/x");
  EXPECT_EQ(schema_path([] {
              parse_quiddity(parse_json(R"({"left_period":[2],"core":["a"],"right_period":[2],"core_start":0})"));
            }),
            "/core/0");
  EXPECT_EQ(schema_path([] { parse_arc(parse_json(R"({"a":["X",1],"b":["L",3]})"), "/arcs/2"); }),
            "/arcs/2/a/0");
  EXPECT_THROW(read_json_file(cli::data("does_not_exist.json")), Error);
}
