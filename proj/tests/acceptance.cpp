// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "friezes/counting.hpp"
#include "friezes/errors.hpp"
#include "friezes/frieze.hpp"
#include "friezes/io.hpp"
#include "friezes/polygon.hpp"
#include "friezes/synthesis.hpp"
#include "oracles.hpp"
#include "run.hpp"

using namespace friezes;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// 1. Golden grids through the CLI.
void golden_grids() {
  for (const std::string name : {"constant2", "bump", "enough_ones"}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = cli::run("frieze print " + cli::data(name + ".quiddity.json") +
                            " --rows=-5..5 --cols=-5..5");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(r.code == 0, name + ": exit " + str(r.code));
    require(r.out == cli::slurp(cli::golden(name + ".frieze.txt")), name + ": grid differs");
    require(secs < 1.0, name + ": took " + str(secs) + " s");
  }
}

// 2. Heptagon frieze pattern through the CLI.
void heptagon() {
  const std::string poly = (cli::scratch_dir() / "heptagon.polygon.json").string();
  auto r = cli::run("polygon from-quiddity --quiddity 1,2,3,1,3,1,4");
  require(r.code == 0, "from-quiddity exit " + str(r.code));
  write_text_file(poly, r.out);
  r = cli::run("polygon frieze " + poly);
  require(r.code == 0, "polygon frieze exit " + str(r.code));
  const FriezePattern f = parse_frieze_pattern(parse_json(r.out));
  struct Row {
    std::int64_t row, first;
    std::vector<int> values;
  };
  const std::vector<Row> printed{
      {-1, 0, {1, 4, 3, 2, 3, 1}}, {0, 1, {1, 1, 1, 2, 1, 1}}, {1, 2, {1, 2, 5, 3, 4, 1}},
      {2, 3, {1, 3, 2, 3, 1, 1}},  {3, 4, {1, 1, 2, 1, 2, 1}}, {4, 5, {1, 3, 2, 5, 3}},
      {5, 6, {1, 1, 3, 2}},        {6, 7, {1, 4, 3}},          {7, 8, {1, 1}},
      {8, 9, {1}}};
  for (const auto& row : printed) {
    for (std::size_t k = 0; k < row.values.size(); ++k) {
      const std::int64_t col = row.first + static_cast<std::int64_t>(k);
      require(f.at(row.row, col) == row.values[k], "f(" + str(row.row) + "," + str(col) + ")");
    }
  }
  const auto p = parse_polygon(read_json_file(poly));
  const auto cc1 = cc_labels(p, 1);
  const auto cc2 = cc_labels(p, 2);
  const std::vector<int> row1{1, 2, 5, 3, 4, 1}, row2{1, 3, 2, 3, 1};
  for (int x = 2; x <= 7; ++x) require(cc1[static_cast<std::size_t>(x)] == row1[static_cast<std::size_t>(x - 2)], "CC(1," + str(x) + ")");
  for (int x = 3; x <= 7; ++x) require(cc2[static_cast<std::size_t>(x)] == row2[static_cast<std::size_t>(x - 3)], "CC(2," + str(x) + ")");
  for (int x = 2; x <= 7; ++x) require(f.at(x, 8) == cc1[static_cast<std::size_t>(x)], "glide at x=" + str(x));
}

void cc_bci_on(const PolygonTriangulation& p) {
  for (int a = 1; a <= p.size(); ++a) {
    const auto labels = cc_labels(p, a);
    for (int b = 1; b <= p.size(); ++b) {
      const auto [up, down] = boundary_walks(p.size(), a, b);
      const BigInt& cc = labels[static_cast<std::size_t>(b)];
      require(cc == bci_count(p, up) && cc == bci_count(p, down),
              "n=" + str(p.size()) + " " + str(a) + "->" + str(b));
    }
  }
}

// 3. CC = BCI exhaustively and on random larger polygons.
void cc_equals_bci() {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& p : all_triangulations(n)) cc_bci_on(p);
  }
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> size(9, 12);
  for (int k = 0; k < 200; ++k) cc_bci_on(random_triangulation(size(rng), rng));
}

// 4. Synthesis trace on the worked example.
void algorithm_trace() {
  const auto q = corpus::worked();
  auto s = initial_state(q, -24, 24);
  s = step_a_pass(s);
  require(s.trace.back().arcs == std::vector<Arc>{Arc::peripheral(-2, 0)}, "first arc");
  require(s.residual.window(-5, 2) == std::vector<std::int64_t>{3, 3, 4, 1, 0, 5, 2, 2}, "a^(1)");
  s = step_a_pass(s);
  require(s.trace.back().arcs == std::vector<Arc>{Arc::peripheral(-3, 0)}, "second arc");
  require(s.residual.window(-5, 2) == std::vector<std::int64_t>{3, 3, 3, 0, 0, 4, 2, 2}, "a^(2)");
  require(!has_ones(s.residual), "Z_2 not empty");

  const auto out = psi(q, -8, 8);
  require(out.step_a == StepAVerdict::Terminated && out.passes == 2, "Step A verdict");
  require(out.trace.size() == 2 && out.trace[0].arcs == std::vector<Arc>{Arc::peripheral(-2, 0)} &&
              out.trace[1].arcs == std::vector<Arc>{Arc::peripheral(-3, 0)},
          "psi trace arcs");
  require(out.m2 == M2Class::nat_left(), "M2 is " + to_string(out.m2));
  require(out.triangulation && out.margin_certified, "no certified triangulation");
  const auto a = quiddity_of(*out.triangulation);
  for (std::int64_t i = -8; i <= 8; ++i) require(a.at(i) == q.at(i), "Phi at " + str(i));
}

// 5. Bijection properties on the random corpus.
void bijection_properties() {
  const auto items = corpus::bijection();
  require(items.size() >= 50, "corpus too small");
  for (std::size_t n = 0; n < items.size(); ++n) {
    const auto& q = items[n];
    const std::string tag = "item " + str(n);
    const auto out = psi(q, -8, 8);
    require(out.triangulation && out.margin_certified, tag + ": no certified triangulation");
    const auto& t = *out.triangulation;
    const auto a = quiddity_of(t);
    for (std::int64_t i = -8; i <= 8; ++i) require(a.at(i) == q.at(i), tag + ": Phi at " + str(i));
    require(is_admissible_window(t), tag + ": not admissible");
    require(special_upper_points(t).empty(), tag + ": special upper point");
    require(!find_addable_arc(t), tag + ": not maximal");
    const FriezeView f(q);
    for (std::int64_t i = -8; i <= 8; ++i) {
      for (std::int64_t j = i; j <= 8; ++j) {
        const BigInt e = f.entry(i, j);
        if (j >= i + 2) {
          require((e == 1) == t.contains(Arc::peripheral(i, j)),
                  tag + ": entry 1 vs peripheral at " + str(i) + "," + str(j));
        }
        if (j - i > 8) continue;
        const auto cut = cut_polygon(t, i, j);
        require(cc_entry(cut, i, j) == e && bci_entry(cut, i, j) == e,
                tag + ": counting at " + str(i) + "," + str(j));
      }
    }
  }
}

// 6. Dehn invariance and anchor change.
void dehn() {
  int twisted = 0, anchored = 0;
  for (const auto& q : corpus::bijection()) {
    PsiOptions opts;
    opts.margin = 34;
    const auto base = psi(q, -8, 8, opts);
    if (base.m2.kind != M2Class::Kind::BiInfinite) continue;
    const auto& t = *base.triangulation;
    for (std::int64_t n = -3; n <= 3; ++n) {
      const auto d = dehn_twist(t, n);
      require(quiddity_of(d).values == quiddity_of(t).values, "Phi changed under D^" + str(n));
      require(dehn_equivalent(t, d) == n, "twist not detected");
    }
    ++twisted;
    const auto residual = run_step_a(q, -42, 42).state.residual;
    const std::int64_t i0 = *base.anchor;
    std::int64_t i1 = i0 + 1;
    while (residual.at(i1) <= 2) ++i1;
    std::int64_t shift = 0;
    for (std::int64_t w = i0; w < i1; ++w) shift -= std::max<std::int64_t>(residual.at(w) - 2, 0);
    opts.anchor = i1;
    const auto moved = psi(q, -8, 8, opts);
    require(dehn_equivalent(t, *moved.triangulation) == shift, "anchor shift mismatch");
    ++anchored;
  }
  require(twisted > 0 && anchored > 0, "no BiInfinite items in the corpus");
}

// 7. Frieze identities on |indices| <= 20.
void identities() {
  auto items = corpus::bijection(6, 3);
  for (const auto& q : {corpus::constant2(), corpus::bump(), corpus::worked(),
                        corpus::enough_ones()}) {
    items.push_back(q);
  }
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> idx(-20, 20);
  for (const auto& q : items) {
    const FriezeView t(q);
    for (std::int64_t i = -20; i < 20; ++i) {
      for (std::int64_t j = -20; j < 20; ++j) {
        require(t.entry(i, j) * t.entry(i + 1, j + 1) - t.entry(i, j + 1) * t.entry(i + 1, j) == 1,
                "unimodular at " + str(i) + "," + str(j));
      }
    }
    for (int k = 0; k < 1000; ++k) {
      const std::int64_t i = idx(rng), j = idx(rng), p = idx(rng), r = idx(rng);
      require(ptolemy_holds(t, i, j, p, r), "Ptolemy");
      require(entry_from_fg(t.f(p), t.f(r), t.g(p), t.g(r)) == t.entry(p, r), "f/g position");
      if (i != j) require(reconstruct_entry(t, i, j, p, r) == t.entry(p, r), "reconstruction");
    }
    for (std::int64_t p = -20; p <= 18; ++p) {
      for (std::int64_t r = p + 2; r <= 20; ++r) {
        require(continuant(t, p, r) == t.entry(p, r), "continuant");
        require(oracle::entry_by_determinant(q, p, r) == t.entry(p, r), "determinant oracle");
      }
    }
    for (std::int64_t i = -5; i <= 5; ++i) {
      for (std::int64_t j = -5; j <= 5; ++j) {
        const BigInt c = c_coeff(t, i, j, -20), d = d_coeff(t, i, j, -20);
        for (std::int64_t k = -19; k <= 19; ++k) {
          require(c_coeff(t, i, j, k) == c && d_coeff(t, i, j, k) == d, "c/d depend on k");
        }
      }
    }
  }
  const FriezeView bump(corpus::bump());
  require(reconstruct_entry(bump, -1, 0, -4, 2) == 15, "bump reconstruction");
}

// 8. Enough ones and the infinity-gon class.
void enough_ones() {
  const auto eo = corpus::enough_ones();
  const auto out = psi(eo, -8, 8);
  require(out.m2 == M2Class::empty(), "enough-ones M2 is " + to_string(out.m2));
  require(has_enough_ones(FriezeView(eo), -8, 8, 32, bridging_certificate(out)).verdict ==
              EnoughOnes::Yes,
          "enough-ones verdict");
  const auto two = psi(corpus::constant2(), -8, 8);
  require(two.m2 == M2Class::finite(1), "constant-2 M2 is " + to_string(two.m2));
  require(has_enough_ones(FriezeView(corpus::constant2()), -8, 8, 16, bridging_certificate(two))
                  .verdict == EnoughOnes::No,
          "constant-2 verdict");
  for (const auto& q : corpus::empty_class()) {
    const auto r = psi(q, -8, 8);
    require(r.m2 == M2Class::empty(), "corpus item not Empty");
    bool one = false;
    for (std::int64_t i = -8; i <= 8; ++i) one = one || q.at(i) == 1;
    require(one, "Empty-class item without a_i = 1");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria{
      {"golden grids", 3.0, golden_grids},
      {"heptagon frieze pattern", 1.0, heptagon},
      {"CC = BCI on polygons", 60.0, cc_equals_bci},
      {"synthesis trace", 1.0, algorithm_trace},
      {"bijection properties", 300.0, bijection_properties},
      {"Dehn invariance and equivalence", 30.0, dehn},
      {"frieze identities", 60.0, identities},
      {"enough ones", 30.0, enough_ones},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && secs > c.budget) error = "over budget";
    std::cout << (error.empty() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << c.name
              << " (" << std::fixed << std::setprecision(2) << secs << " s)";
    if (!error.empty()) std::cout << " - " << error;
    std::cout << "\n";
    failed += error.empty() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
