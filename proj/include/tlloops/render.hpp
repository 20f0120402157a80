// ASCII and SVG pictures of diagrams, graffiti and chains. Both renderers read
// the same Picture, so they agree on which endpoints each arc joins.
#pragma once

#include <string>
#include <vector>

#include "tlloops/diagram.hpp"
#include "tlloops/graffito.hpp"

namespace tlloops {

struct Column {
  std::string name;  // anchor prefix, e.g. "b2." for the second bar
  int nodes;
  bool bar;  // false for the boundary columns of a diagram or the stubs of an open end
};

struct Anchor {
  int column;
  int node;  // 0-based, top to bottom
  friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct Arc {
  int gap;  // between column gap and gap + 1
  Anchor a;
  Anchor b;
  char label;
};

struct Picture {
  std::string title;
  int rows = 0;
  std::vector<Column> columns;
  std::vector<Arc> arcs;
  /// Row of a node within the drawing.
  int row(const Anchor& x) const;
};

Picture picture(const TLDiagram& d);
Picture picture(const Graffito& g);

std::string render_ascii(const Picture& p);
std::string render_svg(const Picture& p);
std::string render_ascii(const Chain& c);
std::string render_svg(const Chain& c);

}  // namespace tlloops
