#include "coword/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "coword/error.hpp"
#include "coword/text.hpp"

namespace coword {

using text::fixed;
using text::xml_escape;

void RenderStyle::validate() const {
  if (width < 200 || height < 200) throw InvalidArgument("canvas must be at least 200x200");
  if (!(min_radius > 0.0 && min_radius < max_radius)) {
    throw InvalidArgument("sphere radii must satisfy 0 < min_radius < max_radius");
  }
  if (margin < 0 || 2 * margin >= std::min(width, height)) throw InvalidArgument("margin leaves no plot area");
  if (min_stroke < 0.0 || min_stroke > max_stroke) throw InvalidArgument("stroke widths out of order");
}

double sphere_radius(std::size_t documents, std::size_t max_documents, const RenderStyle& style) {
  if (max_documents == 0) return style.min_radius;
  const double r = style.max_radius *
                   std::sqrt(static_cast<double>(documents) / static_cast<double>(max_documents));
  return std::clamp(r, style.min_radius, style.max_radius);
}

double link_stroke(double inclusion, const RenderStyle& style) {
  return style.min_stroke + (style.max_stroke - style.min_stroke) * inclusion;
}

namespace {

std::string px(double v) { return fixed(v, 2); }

void svg_open(std::ostringstream& out, const RenderStyle& style, const std::string& title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width
      << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height
      << "\" font-family=\"" << xml_escape(style.font_family) << "\" font-size=\"12\">\n"
      << "<title>" << xml_escape(title) << "</title>\n"
      << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\""
      << style.height << "\" fill=\"#ffffff\"/>\n";
}

/// Min-max scaling of one axis into [lo, hi]; a flat axis maps to the middle.
struct AxisScale {
  double min = 0.0;
  double max = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double operator()(double v) const {
    if (max <= min) return (lo + hi) / 2.0;
    return lo + (v - min) / (max - min) * (hi - lo);
  }
};

}  // namespace

std::string render_strategic_svg(const StrategicDiagram& diagram, const RenderStyle& style) {
  style.validate();
  if (diagram.themes.empty()) throw EmptyDiagram("diagram " + diagram.period_label + " has no themes");

  const double left = style.margin;
  const double right = style.width - style.margin;
  const double top = style.margin;
  const double bottom = style.height - style.margin;

  AxisScale xs{diagram.median_centrality, diagram.median_centrality, left, right};
  AxisScale ys{diagram.median_density, diagram.median_density, bottom, top};
  std::size_t max_docs = 0;
  for (const auto& t : diagram.themes) {
    xs.min = std::min(xs.min, t.centrality);
    xs.max = std::max(xs.max, t.centrality);
    ys.min = std::min(ys.min, t.density);
    ys.max = std::max(ys.max, t.density);
    max_docs = std::max(max_docs, t.documents.size());
  }
  const double axis_x = xs(diagram.median_centrality);
  const double axis_y = ys(diagram.median_density);

  std::ostringstream out;
  svg_open(out, style, "Strategic diagram " + diagram.period_label);
  out << "<rect class=\"plot\" x=\"" << px(left) << "\" y=\"" << px(top) << "\" width=\"" << px(right - left)
      << "\" height=\"" << px(bottom - top) << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  out << "<line class=\"axis centrality-median\" x1=\"" << px(axis_x) << "\" y1=\"" << px(top) << "\" x2=\""
      << px(axis_x) << "\" y2=\"" << px(bottom) << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
  out << "<line class=\"axis density-median\" x1=\"" << px(left) << "\" y1=\"" << px(axis_y) << "\" x2=\""
      << px(right) << "\" y2=\"" << px(axis_y) << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";

  struct Caption {
    const char* text;
    double x;
    double y;
    const char* anchor;
  };
  const Caption captions[] = {
      {"Q1 Motor themes", right - 6, top + 16, "end"},
      {"Q2 Basic and transversal themes", right - 6, bottom - 8, "end"},
      {"Q3 Specialized and peripheral themes", left + 6, top + 16, "start"},
      {"Q4 Emerging or declining themes", left + 6, bottom - 8, "start"},
  };
  for (const auto& c : captions) {
    out << "<text class=\"quadrant-caption\" x=\"" << px(c.x) << "\" y=\"" << px(c.y) << "\" text-anchor=\""
        << c.anchor << "\" fill=\"#666666\">" << c.text << "</text>\n";
  }
  out << "<text class=\"axis-label\" x=\"" << px((left + right) / 2) << "\" y=\"" << px(bottom + 40)
      << "\" text-anchor=\"middle\">Centrality (median " << fixed(diagram.median_centrality, 2) << ")</text>\n";
  out << "<text class=\"axis-label\" x=\"" << px(left - 40) << "\" y=\"" << px((top + bottom) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << px(left - 40) << ' ' << px((top + bottom) / 2)
      << ")\">Density (median " << fixed(diagram.median_density, 2) << ")</text>\n";
  out << "<text class=\"title\" x=\"" << px((left + right) / 2) << "\" y=\"" << px(top - 24)
      << "\" text-anchor=\"middle\" font-size=\"16\">" << xml_escape(diagram.period_label);
  if (diagram.category) out << " (" << to_string(*diagram.category) << ')';
  out << "</text>\n";

  for (const auto& t : diagram.themes) {
    const double cx = xs(t.centrality);
    const double cy = ys(t.density);
    const double r = sphere_radius(t.documents.size(), max_docs, style);
    const auto& color = style.quadrant_colors[static_cast<std::size_t>(t.quadrant)];
    out << "<g class=\"theme\" data-quadrant=\"" << to_string(t.quadrant) << "\">"
        << "<circle cx=\"" << px(cx) << "\" cy=\"" << px(cy) << "\" r=\"" << px(r) << "\" fill=\""
        << xml_escape(color) << "\" fill-opacity=\"0.55\" stroke=\"" << xml_escape(color) << "\"/>"
        << "<text x=\"" << px(cx) << "\" y=\"" << px(cy + r + 14) << "\" text-anchor=\"middle\">"
        << xml_escape(t.label) << " (" << t.documents.size() << ")</text></g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_evolution_svg(const EvolutionMap& map, const RenderStyle& style) {
  style.validate();
  if (map.columns.size() < 2) throw TooFewPeriods("an evolution map needs at least two periods");

  std::size_t max_docs = 0;
  for (const auto& col : map.columns) {
    for (const auto& t : col.themes) max_docs = std::max(max_docs, t.documents);
  }

  const double left = style.margin;
  const double right = style.width - style.margin;
  const double top = style.margin + 20;
  const double bottom = style.height - style.margin;
  const double ncols = static_cast<double>(map.columns.size());

  struct Placed {
    double x;
    double y;
    double r;
  };
  std::vector<std::map<std::string, Placed>> placed(map.columns.size());
  std::vector<std::vector<const ThemeRef*>> order(map.columns.size());
  for (std::size_t c = 0; c < map.columns.size(); ++c) {
    for (const auto& t : map.columns[c].themes) order[c].push_back(&t);
    std::sort(order[c].begin(), order[c].end(), [](const ThemeRef* a, const ThemeRef* b) {
      return a->documents != b->documents ? a->documents > b->documents : a->label < b->label;
    });
    const double x = left + (right - left) * (static_cast<double>(c) + 0.5) / ncols;
    const double n = static_cast<double>(order[c].size());
    for (std::size_t i = 0; i < order[c].size(); ++i) {
      const double y = top + (bottom - top) * (static_cast<double>(i) + 0.5) / n;
      placed[c][order[c][i]->label] = {x, y, sphere_radius(order[c][i]->documents, max_docs, style)};
    }
  }

  std::ostringstream out;
  svg_open(out, style, "Thematic evolution map");
  out << "<g class=\"links\" fill=\"none\" stroke=\"#555555\" stroke-opacity=\"0.7\">\n";
  for (const auto& link : map.links) {
    const auto& a = placed.at(link.column).at(link.from);
    const auto& b = placed.at(link.column + 1).at(link.to);
    const double x1 = a.x + a.r;
    const double x2 = b.x - b.r;
    const double mid = (x1 + x2) / 2.0;
    out << "<path class=\"link " << (link.solid ? "solid" : "dashed") << "\" d=\"M " << px(x1) << ' ' << px(a.y)
        << " C " << px(mid) << ' ' << px(a.y) << ' ' << px(mid) << ' ' << px(b.y) << ' ' << px(x2) << ' '
        << px(b.y) << "\" stroke-width=\"" << px(link_stroke(link.inclusion.value(), style)) << '"';
    if (!link.solid) out << " stroke-dasharray=\"" << xml_escape(style.dash_pattern) << '"';
    out << "><title>" << xml_escape(link.from) << " -> " << xml_escape(link.to) << " ("
        << link.inclusion.to_fixed(2) << ")</title></path>\n";
  }
  out << "</g>\n";

  for (std::size_t c = 0; c < map.columns.size(); ++c) {
    const double x = left + (right - left) * (static_cast<double>(c) + 0.5) / ncols;
    out << "<g class=\"column\" data-period=\"" << xml_escape(map.columns[c].period_label) << "\">\n"
        << "<text class=\"period\" x=\"" << px(x) << "\" y=\"" << px(style.margin) << "\" text-anchor=\"middle\""
        << " font-size=\"14\">" << xml_escape(map.columns[c].period_label) << "</text>\n";
    for (const ThemeRef* t : order[c]) {
      const auto& p = placed[c].at(t->label);
      out << "<circle cx=\"" << px(p.x) << "\" cy=\"" << px(p.y) << "\" r=\"" << px(p.r)
          << "\" fill=\"#9ecae1\" stroke=\"#3182bd\"/>"
          << "<text x=\"" << px(p.x) << "\" y=\"" << px(p.y + p.r + 12) << "\" text-anchor=\"middle\">"
          << xml_escape(t->label) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_overlap_svg(std::span<const PeriodVocabulary> periods, std::span<const OverlapStats> stats,
                               const RenderStyle& style) {
  style.validate();
  if (periods.empty()) throw EmptyChain("overlap chain has no periods");
  if (stats.size() + 1 != periods.size()) {
    throw InvalidArgument("overlap chain needs one statistics entry per adjacent period pair");
  }

  const double left = style.margin;
  const double right = style.width - style.margin;
  const double cy = style.height * 0.6;
  const double r = std::min(style.max_radius * 1.25, (right - left) / (2.5 * static_cast<double>(periods.size())));
  const auto center_x = [&](std::size_t i) {
    return left + (right - left) * (static_cast<double>(i) + 0.5) / static_cast<double>(periods.size());
  };
  const auto arrow = [&](std::ostringstream& out, const char* cls, double x1, double y1, double x2, double y2) {
    out << "<line class=\"" << cls << "\" x1=\"" << px(x1) << "\" y1=\"" << px(y1) << "\" x2=\"" << px(x2)
        << "\" y2=\"" << px(y2) << "\" stroke=\"#333333\" stroke-width=\"1.5\" marker-end=\"url(#arrowhead)\"/>\n";
  };
  const auto label = [&](std::ostringstream& out, const char* cls, double x, double y, const std::string& s) {
    out << "<text class=\"" << cls << "\" x=\"" << px(x) << "\" y=\"" << px(y) << "\" text-anchor=\"middle\">"
        << xml_escape(s) << "</text>\n";
  };

  std::ostringstream out;
  svg_open(out, style, "Keyword evolution between periods");
  out << "<defs><marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
         "orient=\"auto\"><polygon points=\"0 0, 8 4, 0 8\" fill=\"#333333\"/></marker></defs>\n";

  for (std::size_t i = 0; i < periods.size(); ++i) {
    const double x = center_x(i);
    out << "<g class=\"period\" data-period=\"" << xml_escape(periods[i].label) << "\">"
        << "<circle cx=\"" << px(x) << "\" cy=\"" << px(cy) << "\" r=\"" << px(r)
        << "\" fill=\"#deebf7\" stroke=\"#3182bd\" stroke-width=\"2\"/>"
        << "<text x=\"" << px(x) << "\" y=\"" << px(cy + 5) << "\" text-anchor=\"middle\" font-size=\"16\">"
        << periods[i].size << "</text>"
        << "<text x=\"" << px(x) << "\" y=\"" << px(cy + r + 22) << "\" text-anchor=\"middle\">"
        << xml_escape(periods[i].label) << "</text></g>\n";
  }
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const auto& s = stats[i];
    const double x1 = center_x(i) + r;
    const double x2 = center_x(i + 1) - r;
    arrow(out, "shared-arrow", x1, cy, x2, cy);
    label(out, "shared-label", (x1 + x2) / 2, cy - 8,
          std::to_string(s.shared) + " (" + s.stability.to_fixed(2) + ")");

    const double ox = center_x(i) + r * 0.5;
    arrow(out, "dropped-arrow", ox, cy - r * 0.87, ox, cy - r * 0.87 - 60);
    label(out, "dropped-label", ox, cy - r * 0.87 - 66, std::to_string(s.dropped));

    const double ix = center_x(i + 1) - r * 0.5;
    arrow(out, "introduced-arrow", ix, cy - r * 0.87 - 60, ix, cy - r * 0.87);
    label(out, "introduced-label", ix, cy - r * 0.87 - 66, std::to_string(s.introduced));
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

double pen_width(double equivalence) { return 1.0 + 4.0 * equivalence; }

void dot_edge(std::ostringstream& out, const std::string& a, const std::string& b, std::uint32_t cooccurrence,
              const Rational& e) {
  out << "  " << dot_id(a) << " -- " << dot_id(b) << " [weight=" << text::shortest(e.value())
      << ", cooccurrence=" << cooccurrence << ", equivalence=\"" << e.num() << '/' << e.den()
      << "\", penwidth=" << fixed(pen_width(e.value()), 3) << "];\n";
}

}  // namespace

std::string render_network_dot(const CoWordNetwork& network) {
  if (network.keywords.empty()) throw EmptyGraph("network has no nodes");
  std::ostringstream out;
  out << "graph " << dot_id(network.period_label.empty() ? "network" : network.period_label) << " {\n";
  for (std::size_t i = 0; i < network.keywords.size(); ++i) {
    out << "  " << dot_id(network.keywords[i]) << " [count=" << network.counts[i] << "];\n";
  }
  for (const auto& e : network.edges) {
    dot_edge(out, network.keywords[e.u], network.keywords[e.v], e.cooccurrence, e.equivalence);
  }
  out << "}\n";
  return out.str();
}

std::string render_network_dot(const Theme& theme, const CoWordNetwork& network) {
  if (theme.members.empty()) throw EmptyGraph("theme has no members");
  std::ostringstream out;
  out << "graph " << dot_id(theme.label) << " {\n";
  for (const auto& m : theme.members) {
    out << "  " << dot_id(m);
    if (auto id = network.find(m)) out << " [count=" << network.counts[*id] << ']';
    out << ";\n";
  }
  for (const auto& e : theme.internal_edges) dot_edge(out, e.a, e.b, e.cooccurrence, e.equivalence);
  out << "}\n";
  return out.str();
}

}  // namespace coword
