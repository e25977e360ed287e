#include "friezes/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <regex>
#include <sstream>

#include "friezes/errors.hpp"

namespace friezes {

IndexRange parse_range(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?\d{1,15})\s*\.\.\s*(-?\d{1,15})\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw PreconditionError("expected a range lo..hi, got '" + text + "'");
  }
  return {std::stoll(m[1].str()), std::stoll(m[2].str())};
}

namespace {

std::string label(std::int64_t i) { return "(" + std::to_string(i) + ")"; }

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string grid(IndexRange rows, IndexRange cols,
                 const std::function<std::string(std::int64_t, std::int64_t)>& cell) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 0;
  std::size_t row_width = 0;
  for (std::int64_t j = cols.lo; j <= cols.hi; ++j) width = std::max(width, label(j).size());
  for (std::int64_t i = rows.lo; i <= rows.hi; ++i) {
    row_width = std::max(row_width, label(i).size());
    std::vector<std::string> row;
    for (std::int64_t j = cols.lo; j <= cols.hi; ++j) {
      row.push_back(cell(i, j));
      width = std::max(width, row.back().size());
    }
    cells.push_back(std::move(row));
  }

  std::ostringstream out;
  out << std::string(row_width, ' ');
  for (std::int64_t j = cols.lo; j <= cols.hi; ++j) out << ' ' << pad_left(label(j), width);
  out << '\n';
  for (std::int64_t i = rows.lo; i <= rows.hi; ++i) {
    out << pad_left(label(i), row_width);
    for (const std::string& c : cells[static_cast<std::size_t>(i - rows.lo)]) {
      out << ' ' << pad_left(c, width);
    }
    out << '\n';
  }
  return out.str();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_frieze(const FriezeView& t, IndexRange rows, IndexRange cols) {
  return grid(rows, cols, [&t](std::int64_t i, std::int64_t j) { return to_string(t.entry(i, j)); });
}

std::string render_pattern(const FriezePattern& f, IndexRange rows, IndexRange cols) {
  return grid(rows, cols, [&f](std::int64_t i, std::int64_t j) {
    return f.in_band(i, j) ? to_string(f.at(i, j)) : std::string("-");
  });
}

std::string render_strip_svg(const StripTriangulation& t, const SvgSpec& spec) {
  const double h = spec.scale;
  const double step = h / 2;
  const double pad = h / 2;
  const std::int64_t first = t.region_lo();
  const std::int64_t last = t.region_hi();
  auto x_of = [&](double i) { return pad + (i - static_cast<double>(first)) * step; };
  const double y_lower = pad + h;
  const double y_upper = pad;
  const double width = 2 * pad + static_cast<double>(last - first) * step;

  // Upper points sit above the middle of their bridging feet, which keeps
  // them ordered because bridging arcs do not cross.
  std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> feet;
  for (const Arc& arc : t.arcs()) {
    if (arc.kind() != ArcKind::Bridging) continue;
    auto [it, fresh] = feet.try_emplace(arc.b.index, arc.a.index, arc.a.index);
    if (!fresh) {
      it->second.first = std::min(it->second.first, arc.a.index);
      it->second.second = std::max(it->second.second, arc.a.index);
    }
  }
  std::map<std::int64_t, double> upper_x;
  for (const auto& [u, range] : feet) {
    upper_x[u] = x_of(static_cast<double>(range.first + range.second) / 2);
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(2 * pad + h) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(2 * pad + h)
      << "\">\n";
  out << "  <line x1=\"0.00\" y1=\"" << num(y_lower) << "\" x2=\"" << num(width) << "\" y2=\""
      << num(y_lower) << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"0.00\" y1=\"" << num(y_upper) << "\" x2=\"" << num(width) << "\" y2=\""
      << num(y_upper) << "\" stroke=\"black\"/>\n";
  for (const Arc& arc : t.arcs()) {
    if (arc.kind() == ArcKind::Peripheral) {
      const double x1 = x_of(static_cast<double>(arc.a.index));
      const double x2 = x_of(static_cast<double>(arc.b.index));
      const double rx = (x2 - x1) / 2;
      const double ry = std::min(rx, 0.85 * h);
      out << "  <path d=\"M " << num(x1) << ' ' << num(y_lower) << " A " << num(rx) << ' '
          << num(ry) << " 0 0 1 " << num(x2) << ' ' << num(y_lower)
          << "\" fill=\"none\" stroke=\"steelblue\"/>\n";
    } else {
      out << "  <line x1=\"" << num(upper_x.at(arc.b.index)) << "\" y1=\"" << num(y_upper)
          << "\" x2=\"" << num(x_of(static_cast<double>(arc.a.index))) << "\" y2=\""
          << num(y_lower) << "\" stroke=\"darkred\"/>\n";
    }
  }
  for (std::int64_t i = first; i <= last; ++i) {
    const double x = x_of(static_cast<double>(i));
    out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y_lower) << "\" r=\"2.00\"/>\n";
    out << "  <text x=\"" << num(x) << "\" y=\"" << num(y_lower + pad / 2)
        << "\" font-size=\"8\" text-anchor=\"middle\">" << i << "</text>\n";
  }
  for (const auto& [u, x] : upper_x) {
    out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y_upper) << "\" r=\"2.00\"/>\n";
    out << "  <text x=\"" << num(x) << "\" y=\"" << num(y_upper - pad / 4)
        << "\" font-size=\"8\" text-anchor=\"middle\">" << u << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_polygon_svg(const PolygonTriangulation& p, const SvgSpec& spec) {
  const double r = spec.scale;
  const double pad = r / 3;
  const double c = pad + r;
  const int n = p.size();
  auto at = [&](int v) {
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * (v - 1) / n;
    return std::pair{c + r * std::cos(angle), c + r * std::sin(angle)};
  };
  auto line = [&](int u, int v, const char* colour) {
    const auto [x1, y1] = at(u);
    const auto [x2, y2] = at(v);
    return "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
           num(y2) + "\" stroke=\"" + colour + "\"/>\n";
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(2 * c) << "\" height=\""
      << num(2 * c) << "\" viewBox=\"0 0 " << num(2 * c) << ' ' << num(2 * c) << "\">\n";
  for (int v = 1; v <= n; ++v) out << line(v, v % n + 1, "black");
  for (const Chord& ch : p.chords()) out << line(ch.u, ch.v, "steelblue");
  for (int v = 1; v <= n; ++v) {
    const auto [x, y] = at(v);
    const double lx = c + (x - c) * (r + pad / 2) / r;
    const double ly = c + (y - c) * (r + pad / 2) / r;
    out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"2.00\"/>\n";
    out << "  <text x=\"" << num(lx) << "\" y=\"" << num(ly)
        << "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << v
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace friezes
