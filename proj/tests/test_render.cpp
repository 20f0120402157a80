#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <regex>
#include <set>

#include "tlloops/freedga.hpp"
#include "tlloops/render.hpp"

using namespace tlloops;

namespace {

const char* kX = "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,0){L1-L4,L2-L3}]";
const char* kThreeBar =
    "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2} | TL(4,4){L1-L2,L3-R1,L4-R2,R3-R4} | "
    "TL(4,0){L1-L4,L2-L3}]";

using Incidence = std::set<std::pair<char, std::string>>;

Incidence from_ascii(const std::string& s) {
  Incidence out;
  std::regex re(R"((^|\n)([a-zA-Z]): (\S+) - (\S+))");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it)
    out.insert({(*it)[2].str()[0], (*it)[3].str() + " " + (*it)[4].str()});
  return out;
}

Incidence from_svg(const std::string& s) {
  Incidence out;
  std::regex re(R"re(data-arc="(.)" data-ends="([^"]+)")re");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it)
    out.insert({(*it)[1].str()[0], (*it)[2].str()});
  return out;
}

int bars(const Picture& p) {
  return static_cast<int>(std::count_if(p.columns.begin(), p.columns.end(), [](const Column& c) { return c.bar; }));
}

}  // namespace

TEST_CASE("single-bar loop") {
  Picture p = picture(Graffito::parse(kX));
  REQUIRE(bars(p) == 1);
  auto bar = std::find_if(p.columns.begin(), p.columns.end(), [](const Column& c) { return c.bar; });
  CHECK(bar->nodes == 4);
  int gap = static_cast<int>(bar - p.columns.begin());
  CHECK(p.arcs.size() == 4);
  CHECK(std::count_if(p.arcs.begin(), p.arcs.end(), [&](const Arc& a) { return a.gap == gap - 1; }) == 2);
  CHECK(std::count_if(p.arcs.begin(), p.arcs.end(), [&](const Arc& a) { return a.gap == gap; }) == 2);
}

TEST_CASE("a three-bar graffito draws three bars") {
  Picture p = picture(Graffito::parse(kThreeBar));
  CHECK(bars(p) == 3);
  CHECK(p.arcs.size() == 12);
  for (const Arc& a : p.arcs) {
    CHECK(p.columns[static_cast<std::size_t>(a.a.column)].nodes > a.a.node);
    CHECK(p.columns[static_cast<std::size_t>(a.b.column)].nodes > a.b.node);
  }
}

TEST_CASE("ascii and svg agree on incidence") {
  for (const char* text : {kX, kThreeBar, "G(oo)[TL(2,4){L1-R1,L2-R4,R2-R3} | TL(4,2){L1-R1,L2-R2,L3-L4}]"}) {
    Picture p = picture(Graffito::parse(text));
    Incidence a = from_ascii(render_ascii(p)), s = from_svg(render_svg(p));
    CHECK(a.size() == p.arcs.size());
    CHECK(a == s);
  }
  Picture d = picture(TLDiagram::parse("TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2}"));
  CHECK(d.columns.size() == 2);
  CHECK(from_ascii(render_ascii(d)) == from_svg(render_svg(d)));
  CHECK(from_ascii(render_ascii(d)).size() == 4);
}

TEST_CASE("output is deterministic and well formed") {
  Picture p = picture(Graffito::parse(kThreeBar));
  CHECK(render_ascii(p) == render_ascii(picture(Graffito::parse(kThreeBar))));
  std::string svg = render_svg(p);
  CHECK(svg == render_svg(picture(Graffito::parse(kThreeBar))));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);

  Chain y = phi(PointedRing::universal()).image(3);
  std::string text = render_ascii(y);
  CHECK(text == render_ascii(phi(PointedRing::universal()).image(3)));
  CHECK(std::count(text.begin(), text.end(), 'G') >= 4);
  CHECK(render_svg(y).find("</svg>") != std::string::npos);
}
