// Command-line front end: enum, homology, verify, export.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tlloops/complex.hpp"
#include "tlloops/errors.hpp"
#include "tlloops/freedga.hpp"
#include "tlloops/homology.hpp"
#include "tlloops/render.hpp"
#include "tlloops/verify.hpp"

using namespace tlloops;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

/// Usage errors found after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 0;
};

struct EnumArgs {
  std::string what;
  int n = 4, m = 4;
  int kl = 2, kr = 2;
  int two_n = 4;
  std::string ends = "cc";
  int degree = 1;
  std::optional<int> weight, dividers;
  bool count = false;
};

struct HomologyArgs {
  std::string complex = "reduced-loops";
  std::optional<int> w, j;
  std::string ends = "oo";
  std::string ring = "z";
  long a = 0;
  int max_degree = 5;
  int two_n = 4;
  std::string model = "minimal";
  int alphabet = 4;
  bool quiet = false;
};

struct VerifyArgs {
  std::string suite;
  int max_degree = 5;
  std::vector<std::string> rings;
  int samples = 200;
};

struct ExportArgs {
  std::string diagram, graffito, chain;
  std::string format = "ascii";
  std::string ring = "za";
  std::string output;
};

int run_enum(const EnumArgs& a, const Globals& g) {
  std::vector<std::string> items;
  std::size_t count = 0;
  if (a.what == "diagrams") {
    if (a.n < 0 || a.m < 0 || (a.n + a.m) % 2 != 0) throw UsageError("n + m must be even and nonnegative");
    for (const auto& d : enumerate_diagrams(a.n, a.m)) items.push_back(d.encode());
    count = items.size();
  } else if (a.what == "letters") {
    if ((a.kl != 0 && a.kl != 2) || (a.kr != 0 && a.kr != 2)) throw UsageError("--kl and --kr must be 0 or 2");
    for (const auto& l : enumerate_letters(a.kl, a.kr)) items.push_back(l.encode());
    count = items.size();
  } else {
    ComplexSpec s;
    s.two_n = a.two_n;
    s.ends = EndSpec::from_code(a.ends);
    s.max_degree = a.degree;
    if (a.weight || a.dividers) s.ring = PointedRing::with_a(Domain::integers(), 0);
    s.weight = a.weight;
    s.dividers = a.dividers;
    s.subquotient = a.dividers.has_value();
    s.validate();
    if (a.degree < s.min_degree()) throw UsageError("degree out of range");
    if (a.count) {
      count = count_graffiti(s, a.degree);
    } else {
      for (const auto& x : enumerate_graffiti(s, a.degree)) items.push_back(x.encode());
      count = items.size();
    }
  }
  if (g.json) {
    json out{{"schema_version", kSchemaVersion}, {"kind", a.what}, {"count", count}};
    if (!a.count) out["items"] = items;
    std::cout << out.dump(2) << "\n";
  } else if (a.count) {
    std::cout << count << "\n";
  } else {
    for (const auto& s : items) std::cout << s << "\n";
  }
  return 0;
}

std::vector<HomologyGroup> sum_groups(const std::vector<std::vector<HomologyGroup>>& parts) {
  std::vector<HomologyGroup> out = parts.front();
  for (auto& h : out) h.torsion.clear(), h.rank = 0, h.basis_size = 0;
  for (const auto& part : parts)
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].rank += part[i].rank;
      out[i].basis_size += part[i].basis_size;
      out[i].torsion.insert(out[i].torsion.end(), part[i].torsion.begin(), part[i].torsion.end());
    }
  for (auto& h : out) h.torsion = normalize_invariants(h.torsion);
  return out;
}

int run_homology(const HomologyArgs& a, const Globals& g) {
  PointedRing ring = parse_ring(a.ring, a.a);
  if (ring.domain().kind() == Domain::Kind::int_poly_a)
    throw UsageError("homology needs Z, Q or F_p; specialize a with --a");
  if (a.max_degree < 2) throw UsageError("--max-degree must be at least 2");

  ChainComplexData c;
  std::string label = a.complex;
  if (a.complex == "model") {
    FreeDGA m = a.model == "four" ? four_model(ring) : minimal_model(a.two_n, ring);
    c = truncated_complex(m, a.max_degree, true);
    label += ":" + m.signature().name;
  } else if (a.complex == "words") {
    if (a.alphabet < 1) throw UsageError("--alphabet must be positive");
    c = build_word_complex(a.alphabet, a.max_degree, ring);
  } else {
    ComplexSpec s;
    s.two_n = a.two_n;
    s.ring = ring;
    s.max_degree = a.max_degree;
    if (a.complex == "reduced-loops") {
    } else if (a.complex == "augmented-loops") {
      s.ends.augmented = true;
    } else if (a.complex == "subquotient" || a.complex == "open") {
      if (!a.w || !a.j) throw UsageError("--w and --j are required for " + a.complex);
      s.weight = a.w;
      s.dividers = a.j;
      s.subquotient = true;
      if (a.complex == "open") {
        s.ends = EndSpec::from_code(a.ends);
        if (s.ends.closed()) throw UsageError("--ends must open at least one side");
      }
      label += "[" + std::to_string(*a.w) + "," + std::to_string(*a.j) + "]";
    } else {
      throw UsageError("unknown complex '" + a.complex + "'");
    }
    s.validate();
    c = build_complex(s, g.threads);
  }

  int lo = std::max(c.min_degree, 1), hi = a.max_degree - 1;
  HomologyOptions opts{false, g.threads};
  std::vector<HomologyGroup> h;
  if (c.labeled() && ring.a_is_zero()) {
    std::vector<std::vector<HomologyGroup>> parts;
    for (const WeightBlock& b : weight_decompose(c)) {
      parts.push_back(homology(b.complex, lo, hi, opts));
      if (!a.quiet) {
        std::cerr << "weight " << b.weight << ":";
        for (const auto& x : parts.back()) std::cerr << " " << x.str(ring.domain());
        std::cerr << std::endl;
      }
    }
    h = sum_groups(parts);
  } else {
    h = homology(c, lo, hi, opts);
  }

  if (g.json) {
    json groups = json::array();
    for (const auto& x : h) groups.push_back(x.to_json());
    std::cout << json{{"schema_version", kSchemaVersion}, {"complex", label}, {"ring", ring.name()}, {"groups", groups}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << label << " over " << ring.name() << "\n";
    for (const auto& x : h)
      std::cout << "H_" << x.degree << " = " << x.str(ring.domain()) << "  (basis " << x.basis_size << ")\n";
  }
  return 0;
}

int run_verify(const VerifyArgs& a, const Globals& g) {
  VerifyOptions o;
  o.max_degree = a.max_degree;
  o.rings = a.rings;
  o.samples = a.samples;
  o.seed = g.seed;
  o.threads = g.threads;
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = suite_names();
  } else {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), a.suite) == all.end()) throw UsageError("unknown suite '" + a.suite + "'");
    names.push_back(a.suite);
  }
  for (const auto& r : a.rings) parse_ring(r);
  bool ok = true;
  json reports = json::array();
  for (const auto& n : names) {
    SuiteReport r = run_suite(n, o);
    ok = ok && r.passed();
    if (g.json)
      reports.push_back(r.to_json());
    else
      std::cout << r.str() << std::flush;
  }
  if (g.json) std::cout << json{{"schema_version", kSchemaVersion}, {"passed", ok}, {"suites", reports}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

int run_export(const ExportArgs& a) {
  int given = !a.diagram.empty() + !a.graffito.empty() + !a.chain.empty();
  if (given != 1) throw UsageError("give exactly one of --diagram, --graffito, --chain");
  bool svg = a.format == "svg";
  std::string out;
  if (!a.diagram.empty()) {
    Picture p = picture(TLDiagram::parse(a.diagram));
    out = svg ? render_svg(p) : render_ascii(p);
  } else if (!a.graffito.empty()) {
    Picture p = picture(Graffito::parse(a.graffito));
    out = svg ? render_svg(p) : render_ascii(p);
  } else {
    Chain c = Chain::parse(a.chain, parse_ring(a.ring));
    out = svg ? render_svg(c) : render_ascii(c);
  }
  if (a.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + a.output);
    f << out;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb diagrams, complexes of planar loops and their dga models"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--threads", g.threads, "OpenMP threads (0 = default)");

  EnumArgs ea;
  auto* en = app.add_subcommand("enum", "list diagrams, letters or graffiti");
  en->add_option("what", ea.what)->required()->check(CLI::IsMember({"diagrams", "letters", "graffiti"}));
  en->add_option("--n", ea.n, "left points");
  en->add_option("--m", ea.m, "right points");
  en->add_option("--kl", ea.kl, "left stubs of a letter (0 or 2)");
  en->add_option("--kr", ea.kr, "right stubs of a letter (0 or 2)");
  en->add_option("--two-n", ea.two_n, "points per bar");
  en->add_option("--ends", ea.ends, "cc, oc, co or oo");
  en->add_option("--degree", ea.degree, "graffito degree");
  en->add_option("--weight", ea.weight, "number of loops");
  en->add_option("--dividers", ea.dividers, "number of dividers");
  en->add_flag("--count", ea.count, "print only the count");

  HomologyArgs ha;
  auto* ho = app.add_subcommand("homology", "homology table of a complex");
  ho->add_option("--complex", ha.complex)
      ->check(CLI::IsMember({"reduced-loops", "augmented-loops", "subquotient", "open", "model", "words"}));
  ho->add_option("--w", ha.w, "loops (subquotient, open)");
  ho->add_option("--j", ha.j, "dividers (subquotient, open)");
  ho->add_option("--ends", ha.ends, "oc, co or oo (open)");
  ho->add_option("--ring", ha.ring, "z, q, f<p>");
  ho->add_option("--a", ha.a, "value of a");
  ho->add_option("--max-degree", ha.max_degree, "build through this degree; report one below");
  ho->add_option("--two-n", ha.two_n, "points per bar, or model index");
  ho->add_option("--model", ha.model)->check(CLI::IsMember({"minimal", "four"}));
  ho->add_option("--alphabet", ha.alphabet, "letters of the word complex");
  ho->add_flag("--quiet", ha.quiet, "no per-weight progress on stderr");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "run a verification suite (or all)");
  ve->add_option("suite", va.suite)->required();
  ve->add_option("--max-degree", va.max_degree);
  ve->add_option("--rings", va.rings)->delimiter(',');
  ve->add_option("--samples", va.samples);

  ExportArgs xa;
  auto* ex = app.add_subcommand("export", "draw a diagram, graffito or chain");
  ex->add_option("--diagram", xa.diagram);
  ex->add_option("--graffito", xa.graffito);
  ex->add_option("--chain", xa.chain);
  ex->add_option("--ring", xa.ring, "coefficient ring of a chain");
  ex->add_option("--format", xa.format)->check(CLI::IsMember({"ascii", "svg"}));
  ex->add_option("-o,--output", xa.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*en) return run_enum(ea, g);
    if (*ho) return run_homology(ha, g);
    if (*ve) return run_verify(va, g);
    if (*ex) return run_export(xa);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
