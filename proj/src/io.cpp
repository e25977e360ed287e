#include "friezes/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "friezes/errors.hpp"

namespace friezes {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

void expect_object(const Json& j, const std::string& path, const std::set<std::string>& required,
                   const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& key : required) {
    if (!j.contains(key)) throw SchemaError(child(path, key), "missing key");
  }
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key)) {
      throw SchemaError(child(path, key), "unknown key");
    }
  }
}

std::int64_t get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw SchemaError(path, "integer out of range");
  }
  return j.get<std::int64_t>();
}

int get_small_int(const Json& j, const std::string& path) {
  const std::int64_t v = get_int(j, path);
  if (v < -1'000'000'000 || v > 1'000'000'000) throw SchemaError(path, "integer out of range");
  return static_cast<int>(v);
}

const Json& get_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::vector<std::int64_t> get_quiddity_list(const Json& j, const std::string& path, bool nonempty) {
  get_array(j, path);
  if (nonempty && j.empty()) throw SchemaError(path, "expected a nonempty array");
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::int64_t v = get_int(j[k], child(path, k));
    if (v < 1) throw SchemaError(child(path, k), "quiddity values must be at least 1");
    out.push_back(v);
  }
  return out;
}

BigInt get_bigint(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) {
      return BigInt(s);
    }
  }
  throw SchemaError(path, "expected an integer or a decimal string");
}

template <typename F>
auto wrap_invariants(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json to_json(const QuiddityDescriptor& q) {
  return Json{{"left_period", q.left_period()},
              {"core", q.core()},
              {"right_period", q.right_period()},
              {"core_start", q.core_start()}};
}

QuiddityDescriptor parse_quiddity(const Json& j) {
  expect_object(j, "", {"left_period", "core", "right_period", "core_start"});
  auto left = get_quiddity_list(j["left_period"], "/left_period", true);
  auto core = get_quiddity_list(j["core"], "/core", false);
  auto right = get_quiddity_list(j["right_period"], "/right_period", true);
  const std::int64_t start = get_int(j["core_start"], "/core_start");
  return wrap_invariants("", [&] {
    return QuiddityDescriptor(std::move(left), std::move(core), std::move(right), start);
  });
}

Json to_json(const PolygonTriangulation& p) {
  Json chords = Json::array();
  for (const Chord& c : p.chords()) chords.push_back({c.u, c.v});
  return Json{{"n", p.size()}, {"chords", chords}};
}

PolygonTriangulation parse_polygon(const Json& j) {
  expect_object(j, "", {"n", "chords"});
  const int n = get_small_int(j["n"], "/n");
  const Json& list = get_array(j["chords"], "/chords");
  std::vector<Chord> chords;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string path = child("/chords", k);
    if (!list[k].is_array() || list[k].size() != 2) throw SchemaError(path, "expected [u, v]");
    chords.push_back({get_small_int(list[k][0], child(path, 0)),
                      get_small_int(list[k][1], child(path, 1))});
  }
  return wrap_invariants("/chords", [&] { return PolygonTriangulation(n, std::move(chords)); });
}

Json to_json(const FriezePattern& f) {
  Json rows = Json::array();
  for (const auto& row : f.fundamental()) {
    Json r = Json::array();
    for (const BigInt& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  return Json{{"n", f.rank()}, {"fundamental", rows}};
}

FriezePattern parse_frieze_pattern(const Json& j) {
  expect_object(j, "", {"n", "fundamental"});
  const int n = get_small_int(j["n"], "/n");
  const Json& rows = get_array(j["fundamental"], "/fundamental");
  std::vector<std::vector<BigInt>> fundamental;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const std::string path = child("/fundamental", a);
    const Json& row = get_array(rows[a], path);
    std::vector<BigInt> values;
    for (std::size_t k = 0; k < row.size(); ++k) values.push_back(get_bigint(row[k], child(path, k)));
    fundamental.push_back(std::move(values));
  }
  return wrap_invariants("/fundamental", [&] { return FriezePattern(n, std::move(fundamental)); });
}

Json to_json(const Arc& arc) {
  auto point = [](MarkedPoint p) {
    return Json::array({p.boundary == Boundary::Lower ? "L" : "U", p.index});
  };
  return Json{{"a", point(arc.a)}, {"b", point(arc.b)}};
}

Arc parse_arc(const Json& j, const std::string& path) {
  expect_object(j, path, {"a", "b"});
  auto point = [](const Json& p, const std::string& at) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string()) {
      throw SchemaError(at, "expected [\"L\"|\"U\", index]");
    }
    const auto& side = p[0].get_ref<const std::string&>();
    if (side != "L" && side != "U") throw SchemaError(child(at, 0), "boundary must be \"L\" or \"U\"");
    return MarkedPoint{side == "L" ? Boundary::Lower : Boundary::Upper, get_int(p[1], child(at, 1))};
  };
  return {point(j["a"], child(path, "a")), point(j["b"], child(path, "b"))};
}

Json to_json(const StripTriangulation& t) {
  Json arcs = Json::array();
  for (const Arc& arc : t.arcs()) arcs.push_back(to_json(arc));
  return Json{{"window", {t.lo(), t.hi()}},
              {"margin", t.margin()},
              {"m2_class", to_string(t.m2_class())},
              {"arcs", arcs}};
}

StripTriangulation parse_strip(const Json& j) {
  expect_object(j, "", {"window", "margin", "m2_class", "arcs"});
  const Json& window = j["window"];
  if (!window.is_array() || window.size() != 2) throw SchemaError("/window", "expected [lo, hi]");
  const std::int64_t lo = get_int(window[0], "/window/0");
  const std::int64_t hi = get_int(window[1], "/window/1");
  if (hi < lo) throw SchemaError("/window", "hi must not be below lo");
  const std::int64_t margin = get_int(j["margin"], "/margin");
  if (margin < 0) throw SchemaError("/margin", "margin must be nonnegative");
  if (!j["m2_class"].is_string()) throw SchemaError("/m2_class", "expected a string");
  const M2Class m2 = wrap_invariants("/m2_class", [&] {
    return parse_m2_class(j["m2_class"].get<std::string>());
  });
  const Json& list = get_array(j["arcs"], "/arcs");
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < list.size(); ++k) arcs.push_back(parse_arc(list[k], child("/arcs", k)));
  return wrap_invariants("/arcs", [&] {
    return StripTriangulation(lo, hi, margin, m2, std::move(arcs));
  });
}

}  // namespace friezes
