// friezectl: command-line front end for the friezes library.
//
// Exit codes: 0 ok, 1 validation failure, 2 inconclusive (pass cap or
// margin), 3 I/O, schema or usage error.  Failures print a JSON object
// {"error": ..., "message": ...} on stderr.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "friezes/counting.hpp"
#include "friezes/errors.hpp"
#include "friezes/frieze.hpp"
#include "friezes/io.hpp"
#include "friezes/polygon.hpp"
#include "friezes/render.hpp"
#include "friezes/strip.hpp"
#include "friezes/synthesis.hpp"

namespace {

using namespace friezes;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInconclusive = 2;
constexpr int kIoError = 3;

void print(const Json& j) { std::cout << dump(j); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

Json witness_json(const FriezeWitness& w) {
  return Json{{"i", w.i}, {"j", w.j}, {"value", to_json(w.value)}};
}

Json report_json(const ValidationReport& r) {
  Json j{{"status", r.valid() ? "ValidToDepth" : "Invalid"}, {"depth", r.depth}};
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

Json outcome_json(const SynthesisOutcome& o) {
  Json trace = Json::array();
  for (const PassRecord& p : o.trace) {
    Json arcs = Json::array();
    for (const Arc& a : p.arcs) arcs.push_back(to_json(a));
    trace.push_back({{"k", p.k},
                     {"ones", p.ones},
                     {"ones_unbounded", p.ones_unbounded},
                     {"double_decrement", p.double_decrement},
                     {"arcs", arcs}});
  }
  Json j{{"step_a", to_string(o.step_a)},
         {"passes", o.passes},
         {"m2_class", to_string(o.m2)},
         {"b1_terminates", o.b1_terminates},
         {"b2_terminates", o.b2_terminates},
         {"margin_certified", o.margin_certified},
         {"trace", trace}};
  j["n"] = o.n ? Json(*o.n) : Json(nullptr);
  j["anchor"] = o.anchor ? Json(*o.anchor) : Json(nullptr);
  j["margin"] = o.triangulation ? Json(o.triangulation->margin()) : Json(nullptr);
  return j;
}

struct SynthesisFlags {
  std::string window = "-8..8";
  int cap = kDefaultPassCap;
  std::optional<std::int64_t> margin;
  std::optional<std::int64_t> anchor;
  int depth = kDefaultValidationDepth;

  PsiOptions options() const {
    PsiOptions o;
    o.cap = cap;
    o.margin = margin;
    o.anchor = anchor;
    o.validate_depth = depth;
    return o;
  }
};

void add_synthesis_flags(CLI::App* cmd, SynthesisFlags& f) {
  cmd->add_option("--window", f.window, "lower window lo..hi")->capture_default_str();
  cmd->add_option("--cap", f.cap, "Step A pass cap")
      ->envname("FRIEZE_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--margin", f.margin, "fixed margin (default: doubling search)")
      ->envname("FRIEZE_MARGIN")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--anchor", f.anchor, "Step B anchor i0");
  cmd->add_option("--depth", f.depth, "validation depth")
      ->envname("FRIEZE_DEPTH")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
}

int cmd_roundtrip(const std::string& file, const SynthesisFlags& flags, int max_gap) {
  const QuiddityDescriptor q = parse_quiddity(read_json_file(file));
  const IndexRange w = parse_range(flags.window);
  if (w.size() == 0) throw PreconditionError("empty window");
  Json steps = Json::array();
  auto finish = [&](bool pass, int code) {
    print(Json{{"pass", pass}, {"steps", steps}});
    return code;
  };

  const ValidationReport report = validate(q, flags.depth);
  steps.push_back({{"step", "validate"}, {"ok", report.valid()}, {"report", report_json(report)}});
  if (!report.valid()) return finish(false, kFailed);

  PsiOptions options = flags.options();
  options.validate_depth = 0;
  const SynthesisOutcome o = psi(q, w.lo, w.hi, options);
  const bool conclusive = o.triangulation && o.margin_certified;
  steps.push_back({{"step", "psi"}, {"ok", conclusive}, {"outcome", outcome_json(o)}});
  if (!conclusive) return finish(false, kInconclusive);
  const StripTriangulation& t = *o.triangulation;

  const QuiddityFragment phi = quiddity_of(t);
  bool same = true;
  for (std::int64_t i = w.lo; i <= w.hi; ++i) same = same && phi.at(i) == q.at(i);
  steps.push_back({{"step", "phi"}, {"ok", same}, {"quiddity", phi.values}});

  const bool admissible = is_admissible_window(t);
  const bool no_special = special_upper_points(t).empty();
  const bool maximal = !find_addable_arc(t).has_value();
  steps.push_back({{"step", "structure"},
                   {"ok", admissible && no_special && maximal},
                   {"admissible", admissible},
                   {"no_special_upper_points", no_special},
                   {"maximal", maximal}});

  const FriezeView view(q);
  Json mismatches = Json::array();
  std::int64_t checked = 0;
  for (std::int64_t i = w.lo; i <= w.hi; ++i) {
    for (std::int64_t j = i; j <= w.hi && j - i <= max_gap; ++j) {
      const PolygonCut cut = cut_polygon(t, i, j);
      const BigInt e = view.entry(i, j);
      const BigInt cc = cc_entry(cut, i, j);
      const BigInt bci = bci_entry(cut, i, j);
      ++checked;
      if (cc != e || bci != e) {
        mismatches.push_back({{"i", i}, {"j", j}, {"t", to_json(e)}, {"cc", to_json(cc)},
                              {"bci", to_json(bci)}});
      }
    }
  }
  steps.push_back({{"step", "counting"},
                   {"ok", mismatches.empty()},
                   {"pairs_checked", checked},
                   {"mismatches", mismatches}});

  const bool pass = same && admissible && no_special && maximal && mismatches.empty();
  return finish(pass, pass ? kOk : kFailed);
}

int error_exit(const char* kind, const std::string& message, int code,
               const std::string* path = nullptr) {
  Json j{{"error", kind}, {"message", message}};
  if (path) j["path"] = *path;
  std::cerr << j.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinite friezes, strip triangulations and Conway-Coxeter counting.\n"
               "Settings come from flags, then FRIEZE_DEPTH / FRIEZE_CAP / FRIEZE_MARGIN,\n"
               "then built-in defaults."};
  app.require_subcommand(1);
  std::function<int()> run;

  // quiddity
  auto* quiddity = app.add_subcommand("quiddity", "quiddity descriptors");
  quiddity->require_subcommand(1);
  std::string q_file;
  int q_depth = kDefaultValidationDepth;
  auto* q_validate = quiddity->add_subcommand("validate", "check positivity up to a band width");
  q_validate->add_option("file", q_file, "quiddity JSON")->required();
  q_validate->add_option("--depth", q_depth, "band width")
      ->envname("FRIEZE_DEPTH")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  q_validate->callback([&] {
    run = [&] {
      const ValidationReport r = validate(parse_quiddity(read_json_file(q_file)), q_depth);
      print(report_json(r));
      return r.valid() ? kOk : kFailed;
    };
  });

  // frieze
  auto* frieze = app.add_subcommand("frieze", "infinite frieze entries");
  frieze->require_subcommand(1);
  std::string f_file;
  std::string f_rows = "-5..5";
  std::string f_cols = "-5..5";
  auto* f_print = frieze->add_subcommand("print", "print t(i,j) as a grid");
  f_print->add_option("file", f_file, "quiddity JSON")->required();
  f_print->add_option("--rows", f_rows, "row range a..b")->capture_default_str();
  f_print->add_option("--cols", f_cols, "column range c..d")->capture_default_str();
  f_print->callback([&] {
    run = [&] {
      const FriezeView t(parse_quiddity(read_json_file(f_file)));
      std::cout << render_frieze(t, parse_range(f_rows), parse_range(f_cols));
      return kOk;
    };
  });

  // polygon
  auto* polygon = app.add_subcommand("polygon", "triangulated polygons");
  polygon->require_subcommand(1);
  std::string p_file;
  std::optional<std::string> p_rows;
  std::optional<std::string> p_cols;
  int p_from = 1;
  std::string p_walk;
  std::string p_quiddity;
  std::string p_svg;
  double p_scale = 60.0;

  auto* p_frieze = polygon->add_subcommand("frieze", "frieze pattern of the triangulation");
  p_frieze->add_option("file", p_file, "polygon JSON")->required();
  p_frieze->add_option("--rows", p_rows, "print a grid over rows a..b instead of JSON");
  p_frieze->add_option("--cols", p_cols, "grid columns c..d");
  p_frieze->callback([&] {
    run = [&] {
      const FriezePattern f = frieze_pattern(parse_polygon(read_json_file(p_file)));
      if (!p_rows && !p_cols) {
        print(to_json(f));
      } else {
        const std::string def = "0.." + std::to_string(f.rank() + 1);
        std::cout << render_pattern(f, parse_range(p_rows.value_or(def)),
                                    parse_range(p_cols.value_or(def)));
      }
      return kOk;
    };
  });
  auto* p_cc = polygon->add_subcommand("cc", "CC labels from a vertex");
  p_cc->add_option("file", p_file, "polygon JSON")->required();
  p_cc->add_option("--from", p_from, "source vertex")->required();
  p_cc->callback([&] {
    run = [&] {
      const std::vector<BigInt> labels = cc_labels(parse_polygon(read_json_file(p_file)), p_from);
      Json out = Json::array();
      for (std::size_t v = 1; v < labels.size(); ++v) out.push_back(to_json(labels[v]));
      print(Json{{"from", p_from}, {"labels", out}});
      return kOk;
    };
  });
  auto* p_bci = polygon->add_subcommand("bci", "BCI count along a boundary walk");
  p_bci->add_option("file", p_file, "polygon JSON")->required();
  p_bci->add_option("--walk", p_walk, "comma-separated boundary walk")->required();
  p_bci->callback([&] {
    run = [&] {
      const std::vector<int> walk = parse_int_list(p_walk);
      const BigInt n = bci_count(parse_polygon(read_json_file(p_file)), walk);
      print(Json{{"walk", walk}, {"count", to_json(n)}});
      return kOk;
    };
  });
  auto* p_from_q = polygon->add_subcommand("from-quiddity", "triangulation with given triangle counts");
  p_from_q->add_option("--quiddity", p_quiddity, "comma-separated counts")->required();
  p_from_q->callback([&] {
    run = [&] {
      std::vector<std::int64_t> counts;
      for (int v : parse_int_list(p_quiddity)) counts.push_back(v);
      print(to_json(polygon_from_quiddity(counts)));
      return kOk;
    };
  });
  auto* p_render = polygon->add_subcommand("render", "SVG drawing");
  p_render->add_option("file", p_file, "polygon JSON")->required();
  p_render->add_option("--svg", p_svg, "output SVG")->required();
  p_render->add_option("--scale", p_scale, "radius")->check(CLI::PositiveNumber);
  p_render->callback([&] {
    run = [&] {
      write_text_file(p_svg, render_polygon_svg(parse_polygon(read_json_file(p_file)), {p_scale}));
      return kOk;
    };
  });

  // strip
  auto* strip = app.add_subcommand("strip", "strip triangulations");
  strip->require_subcommand(1);
  std::string s_file;
  std::int64_t s_n = 1;
  std::string s_svg;
  double s_scale = 60.0;
  auto* s_phi = strip->add_subcommand("phi", "triangle counts on the window");
  s_phi->add_option("file", s_file, "strip JSON")->required();
  s_phi->callback([&] {
    run = [&] {
      const QuiddityFragment f = quiddity_of(parse_strip(read_json_file(s_file)));
      print(Json{{"start", f.start}, {"quiddity", f.values}});
      return kOk;
    };
  });
  auto* s_dehn = strip->add_subcommand("dehn", "apply the n-th power of the Dehn twist");
  s_dehn->add_option("file", s_file, "strip JSON")->required();
  s_dehn->add_option("--n", s_n, "power")->capture_default_str();
  s_dehn->callback([&] {
    run = [&] {
      print(to_json(dehn_twist(parse_strip(read_json_file(s_file)), s_n)));
      return kOk;
    };
  });
  auto* s_check = strip->add_subcommand("check", "admissibility, special points, maximality");
  s_check->add_option("file", s_file, "strip JSON")->required();
  s_check->callback([&] {
    run = [&] {
      const StripTriangulation t = parse_strip(read_json_file(s_file));
      const bool admissible = is_admissible_window(t);
      Json special = Json::array();
      for (const MarkedPoint& p : special_upper_points(t)) special.push_back(p.index);
      const std::optional<Arc> addable = find_addable_arc(t);
      const bool ok = admissible && special.empty() && !addable;
      print(Json{{"ok", ok},
                 {"admissible", admissible},
                 {"special_upper_points", special},
                 {"addable_arc", addable ? to_json(*addable) : Json(nullptr)}});
      return ok ? kOk : kFailed;
    };
  });
  auto* s_render = strip->add_subcommand("render", "SVG drawing");
  s_render->add_option("file", s_file, "strip JSON")->required();
  s_render->add_option("--svg", s_svg, "output SVG")->required();
  s_render->add_option("--scale", s_scale, "strip height")->check(CLI::PositiveNumber);
  s_render->callback([&] {
    run = [&] {
      write_text_file(s_svg, render_strip_svg(parse_strip(read_json_file(s_file)), {s_scale}));
      return kOk;
    };
  });

  // synthesize
  auto* synth = app.add_subcommand("synthesize", "build the strip triangulation of a quiddity");
  std::string y_file;
  std::string y_out;
  std::string y_svg;
  SynthesisFlags y_flags;
  synth->add_option("file", y_file, "quiddity JSON")->required();
  add_synthesis_flags(synth, y_flags);
  synth->add_option("-o,--output", y_out, "write the triangulation JSON here");
  synth->add_option("--svg", y_svg, "also write an SVG drawing");
  synth->callback([&] {
    run = [&] {
      const QuiddityDescriptor q = parse_quiddity(read_json_file(y_file));
      const IndexRange w = parse_range(y_flags.window);
      if (w.size() == 0) throw PreconditionError("empty window");
      const SynthesisOutcome o = psi(q, w.lo, w.hi, y_flags.options());
      Json summary = outcome_json(o);
      if (o.triangulation) {
        if (!y_out.empty()) {
          write_text_file(y_out, dump(to_json(*o.triangulation)));
        } else {
          summary["triangulation"] = to_json(*o.triangulation);
        }
        if (!y_svg.empty()) write_text_file(y_svg, render_strip_svg(*o.triangulation));
      }
      print(summary);
      return o.triangulation && o.margin_certified ? kOk : kInconclusive;
    };
  });

  // count
  auto* count = app.add_subcommand("count", "CC and BCI counts on a strip triangulation");
  count->require_subcommand(1);
  std::string c_file;
  std::int64_t c_i = 0;
  std::int64_t c_j = 0;
  for (const char* method : {"cc", "bci"}) {
    auto* sub = count->add_subcommand(method, std::string(method) + " count from (i,0) to (j,0)");
    sub->add_option("file", c_file, "strip JSON")->required();
    sub->add_option("--i", c_i, "left lower point")->required();
    sub->add_option("--j", c_j, "right lower point")->required();
    const std::string name = method;
    sub->callback([&, name] {
      run = [&, name] {
        const StripTriangulation t = parse_strip(read_json_file(c_file));
        const BigInt v = name == "cc" ? cc_entry(t, c_i, c_j) : bci_entry(t, c_i, c_j);
        print(Json{{"method", name}, {"i", c_i}, {"j", c_j}, {"value", to_json(v)}});
        return kOk;
      };
    });
  }

  // roundtrip
  auto* roundtrip = app.add_subcommand("roundtrip", "validate, synthesize, recount and compare");
  std::string r_file;
  SynthesisFlags r_flags;
  int r_gap = 8;
  roundtrip->add_option("file", r_file, "quiddity JSON")->required();
  add_synthesis_flags(roundtrip, r_flags);
  roundtrip->add_option("--max-gap", r_gap, "largest j - i compared")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  roundtrip->callback([&] { run = [&] { return cmd_roundtrip(r_file, r_flags, r_gap); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_exit("UsageError", e.what(), kIoError);
  }

  try {
    return run();
  } catch (const SchemaError& e) {
    return error_exit("SchemaError", e.what(), kIoError, &e.path());
  } catch (const InvalidQuiddity& e) {
    return error_exit("InvalidQuiddity", e.what(), kFailed);
  } catch (const InvalidTriangulation& e) {
    return error_exit("InvalidTriangulation", e.what(), kFailed);
  } catch (const NotRealizable& e) {
    return error_exit("NotRealizable", e.what(), kFailed);
  } catch (const InexactDivision& e) {
    return error_exit("InexactDivision", e.what(), kFailed);
  } catch (const Truncated& e) {
    return error_exit("Truncated", e.what(), kInconclusive);
  } catch (const PreconditionError& e) {
    return error_exit("PreconditionError", e.what(), kIoError);
  } catch (const std::exception& e) {
    return error_exit("Error", e.what(), kIoError);
  }
}
