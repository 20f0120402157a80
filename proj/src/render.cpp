#include "tlloops/render.hpp"

#include <algorithm>
#include <sstream>

namespace tlloops {

namespace {

char label_for(std::size_t i) {
  static const std::string alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  return i < alphabet.size() ? alphabet[i] : '?';
}

void add_factor(Picture& p, const TLDiagram& d, int gap) {
  for (const auto& [u, v] : d.pairs()) {
    auto anchor = [&](const Endpoint& e) {
      return Anchor{e.side == Endpoint::Side::left ? gap : gap + 1, e.index - 1};
    };
    p.arcs.push_back({gap, anchor(u), anchor(v), label_for(p.arcs.size())});
  }
}

std::string anchor_name(const Picture& p, const Anchor& a) {
  return p.columns[a.column].name + std::to_string(a.node + 1);
}

constexpr int kGap = 90;
constexpr int kRow = 36;
constexpr int kMargin = 30;
constexpr int kTitle = 24;

int xpos(int column) { return kMargin + kGap * column; }
int ypos(const Picture& p, const Anchor& a) { return kMargin + kTitle + kRow * p.row(a); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

int svg_width(const Picture& p) { return 2 * kMargin + kGap * static_cast<int>(p.columns.size() - 1); }
int svg_height(const Picture& p) { return 2 * kMargin + kTitle + kRow * std::max(0, p.rows - 1); }

void svg_body(std::ostringstream& o, const Picture& p, int dy) {
  o << "<g transform=\"translate(0," << dy << ")\">\n";
  o << "<text x=\"" << kMargin << "\" y=\"" << kMargin << "\" font-family=\"monospace\" font-size=\"12\">"
    << escape(p.title) << "</text>\n";
  const int top = kMargin + kTitle - kRow / 2;
  const int bottom = kMargin + kTitle + kRow * std::max(0, p.rows - 1) + kRow / 2;
  for (std::size_t c = 0; c < p.columns.size(); ++c)
    if (p.columns[c].bar)
      o << "<line x1=\"" << xpos(static_cast<int>(c)) << "\" y1=\"" << top << "\" x2=\"" << xpos(static_cast<int>(c))
        << "\" y2=\"" << bottom << "\" stroke=\"gray\" stroke-width=\"2\"/>\n";
  for (const auto& arc : p.arcs) {
    int x1 = xpos(arc.a.column), y1 = ypos(p, arc.a);
    int x2 = xpos(arc.b.column), y2 = ypos(p, arc.b);
    o << "<path data-arc=\"" << arc.label << "\" data-ends=\"" << anchor_name(p, arc.a) << " "
      << anchor_name(p, arc.b) << "\" d=\"M " << x1 << " " << y1 << " C ";
    if (arc.a.column != arc.b.column) {
      int xm = (x1 + x2) / 2;
      o << xm << " " << y1 << ", " << xm << " " << y2 << ", ";
    } else {
      int dir = arc.a.column == arc.gap ? 1 : -1;
      int span = std::abs(p.row(arc.a) - p.row(arc.b));
      int bulge = std::min(kGap * 45 / 100, kGap / 5 + span * kGap / 8);
      o << x1 + dir * bulge << " " << y1 << ", " << x2 + dir * bulge << " " << y2 << ", ";
    }
    o << x2 << " " << y2 << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t c = 0; c < p.columns.size(); ++c)
    for (int k = 0; k < p.columns[c].nodes; ++k) {
      Anchor a{static_cast<int>(c), k};
      o << "<circle cx=\"" << xpos(a.column) << "\" cy=\"" << ypos(p, a) << "\" r=\"4\" "
        << (p.columns[c].bar ? "fill=\"black\"" : "fill=\"white\" stroke=\"black\"") << "/>\n";
    }
  o << "</g>\n";
}

}  // namespace

int Picture::row(const Anchor& x) const {
  const int k = columns[x.column].nodes;
  if (k == rows) return x.node;
  if (k <= 1) return (rows - 1) / 2;
  return x.node * (rows - 1) / (k - 1);
}

Picture picture(const TLDiagram& d) {
  Picture p;
  p.title = d.encode();
  p.rows = std::max(d.n(), d.m());
  p.columns = {{"L", d.n(), false}, {"R", d.m(), false}};
  add_factor(p, d, 0);
  return p;
}

Picture picture(const Graffito& g) {
  Picture p;
  p.title = g.encode();
  p.rows = g.two_n();
  if (g.degree() == 0) {
    p.columns = {{"L", 0, false}, {"R", 0, false}};
    return p;
  }
  p.columns.push_back({"sl", g.ends().left_stubs(), false});
  for (int b = 1; b <= g.degree(); ++b) p.columns.push_back({"b" + std::to_string(b) + ".", g.two_n(), true});
  p.columns.push_back({"sr", g.ends().right_stubs(), false});
  for (int i = 0; i <= g.degree(); ++i) add_factor(p, g.factor(i), i);
  return p;
}

std::string render_ascii(const Picture& p) {
  std::ostringstream o;
  o << p.title << "\n";
  const std::size_t ncol = p.columns.size();
  // labels[c][row]: arc touching column c at that row from the left / right gap
  std::vector<std::vector<char>> from_left(ncol, std::vector<char>(p.rows, ' '));
  std::vector<std::vector<char>> from_right = from_left;
  for (const auto& arc : p.arcs)
    for (const Anchor& a : {arc.a, arc.b}) {
      if (a.column == arc.gap) from_right[a.column][p.row(a)] = arc.label;
      else from_left[a.column][p.row(a)] = arc.label;
    }
  for (int r = 0; r < p.rows; ++r) {
    std::string line;
    for (std::size_t c = 0; c < ncol; ++c) {
      bool node = false;
      for (int k = 0; k < p.columns[c].nodes; ++k)
        if (p.row({static_cast<int>(c), k}) == r) node = true;
      line += node ? (p.columns[c].bar ? 'o' : '*') : (p.columns[c].bar ? '|' : ' ');
      if (c + 1 < ncol) {
        char l = from_right[c][r], rr = from_left[c + 1][r];
        line += l == ' ' ? "  " : std::string("-") + l;
        line += "   ";
        line += rr == ' ' ? "  " : std::string(1, rr) + "-";
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    o << line << "\n";
  }
  for (const auto& arc : p.arcs)
    o << arc.label << ": " << anchor_name(p, arc.a) << " - " << anchor_name(p, arc.b) << "\n";
  return o.str();
}

std::string render_svg(const Picture& p) {
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << svg_width(p) << "\" height=\""
    << svg_height(p) << "\">\n";
  svg_body(o, p, 0);
  o << "</svg>\n";
  return o.str();
}

std::string render_ascii(const Chain& c) {
  if (c.is_zero()) return "0\n";
  std::ostringstream o;
  bool first = true;
  for (const auto& [g, v] : c.terms()) {
    o << (first ? "" : "\n") << "coefficient " << v.str() << "\n" << render_ascii(picture(g));
    first = false;
  }
  return o.str();
}

std::string render_svg(const Chain& c) {
  std::vector<Picture> pics;
  for (const auto& [g, v] : c.terms()) {
    pics.push_back(picture(g));
    pics.back().title = v.str() + " * " + pics.back().title;
  }
  int width = 2 * kMargin, height = 0;
  for (const auto& p : pics) {
    width = std::max(width, svg_width(p));
    height += svg_height(p);
  }
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
    << std::max(height, 2 * kMargin) << "\">\n";
  int dy = 0;
  for (const auto& p : pics) {
    svg_body(o, p, dy);
    dy += svg_height(p);
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace tlloops
