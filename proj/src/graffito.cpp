#include "tlloops/graffito.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "tlloops/errors.hpp"

namespace tlloops {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string shape(const TLDiagram& d) { return "TL(" + std::to_string(d.n()) + "," + std::to_string(d.m()) + ")"; }

TLDiagram closed_left(const TLDiagram& f0, bool open) {
  return open ? close_up(LinkState(f0, CellSide::right_cell)).diagram : f0;
}

TLDiagram closed_right(const TLDiagram& fp, bool open) {
  return open ? close_up(LinkState(fp, CellSide::left_cell)).diagram : fp;
}

}  // namespace

std::string EndSpec::code() const { return std::string(left_open ? "o" : "c") + (right_open ? "o" : "c"); }

EndSpec EndSpec::from_code(std::string_view code) {
  code = trim(code);
  auto flag = [&](char c) {
    if (c == 'o') return true;
    if (c == 'c') return false;
    throw ParseError("bad end code '" + std::string(code) + "'");
  };
  if (code.size() != 2) throw ParseError("bad end code '" + std::string(code) + "'");
  EndSpec e;
  e.left_open = flag(code[0]);
  e.right_open = flag(code[1]);
  return e;
}

Graffito::Graffito(int two_n, EndSpec ends, std::vector<TLDiagram> factors)
    : two_n_(two_n), ends_(ends), factors_(std::move(factors)) {
  ends_.augmented = false;
  if (two_n < 0 || two_n % 2 != 0) throw GraffitoError("2n must be even and nonnegative");
  if (factors_.empty()) throw GraffitoError("a graffito needs at least one factor");
  if (!ends_.closed() && two_n != 4) throw GraffitoError("open ends are only defined for 2n = 4");
  const int p = degree();
  if (p == 0) {
    if (!ends_.closed() || !(factors_[0] == TLDiagram()))
      throw GraffitoError("degree 0 holds only the empty graffito");
  } else {
    const TLDiagram& first = factors_.front();
    const TLDiagram& last = factors_.back();
    if (first.n() != ends_.left_stubs() || first.m() != two_n)
      throw GraffitoError("shape mismatch: left end " + shape(first));
    if (first.has_left_left()) throw GraffitoError("left end is not a cell link state: " + first.encode());
    if (last.n() != two_n || last.m() != ends_.right_stubs())
      throw GraffitoError("shape mismatch: right end " + shape(last));
    if (last.has_right_right()) throw GraffitoError("right end is not a cell link state: " + last.encode());
    for (int i = 1; i < p; ++i) {
      const TLDiagram& f = factors_[i];
      if (f.n() != two_n || f.m() != two_n) throw GraffitoError("shape mismatch: internal factor " + shape(f));
      if (f.is_identity()) throw GraffitoError("internal factor " + std::to_string(i) + " is the identity");
      if (f.through_count() == 0) ++dividers_;
    }
    Composite acc{closed_left(first, ends_.left_open), 0};
    for (int i = 1; i < p; ++i) {
      Composite c = compose(acc.diagram, factors_[i]);
      acc = {c.diagram, acc.loops + c.loops};
    }
    loops_ = acc.loops + compose(acc.diagram, closed_right(last, ends_.right_open)).loops;
  }
  text_ = "G(" + ends_.code() + ")[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) text_ += " | ";
    text_ += factors_[i].encode();
  }
  text_ += "]";
}

Graffito Graffito::empty(int two_n) { return Graffito(two_n, EndSpec{}, {TLDiagram()}); }

Graffito Graffito::parse(std::string_view text, int two_n_for_empty) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.substr(0, 2) != "G(") throw ParseError("graffito must start with 'G(': " + std::string(text));
  auto close = s.find(')');
  if (close == std::string_view::npos) throw ParseError("unterminated end code in " + std::string(text));
  EndSpec ends = EndSpec::from_code(s.substr(2, close - 2));
  std::string_view rest = trim(s.substr(close + 1));
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw ParseError("graffito factors must be enclosed in [ ]: " + std::string(text));
  rest = rest.substr(1, rest.size() - 2);
  std::vector<TLDiagram> factors;
  while (true) {
    auto bar = rest.find('|');
    factors.push_back(TLDiagram::parse(trim(rest.substr(0, bar))));
    if (bar == std::string_view::npos) break;
    rest = rest.substr(bar + 1);
  }
  int two_n = factors.size() == 1 ? two_n_for_empty : factors.front().m();
  return Graffito(two_n, ends, std::move(factors));
}

// ---------------------------------------------------------------------------

Chain::Chain(PointedRing ring, EndSpec ends, int two_n, int degree)
    : ring_(std::move(ring)), ends_(ends), two_n_(two_n), degree_(degree) {}

Chain Chain::of(const Graffito& g, const PointedRing& ring, bool augmented) {
  EndSpec e = g.ends();
  e.augmented = augmented;
  Chain c(ring, e, g.two_n(), g.degree());
  c.add(g, ring.from_int(1));
  return c;
}

Scalar Chain::coefficient(const Graffito& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar::zero(ring_.domain()) : it->second;
}

void Chain::add(const Graffito& g, const Scalar& c) {
  if (g.degree() != degree_) throw GraffitoError("chain is homogeneous of degree " + std::to_string(degree_));
  if (g.ends().left_open != ends_.left_open || g.ends().right_open != ends_.right_open)
    throw GraffitoError("chain end type mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Chain::check_compatible(const Chain& other) const {
  if (!(ring_ == other.ring_)) throw DomainMismatch("chains over different rings");
  if (degree_ != other.degree_) throw GraffitoError("chains of different degrees");
}

Chain& Chain::operator+=(const Chain& other) {
  check_compatible(other);
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  check_compatible(other);
  for (const auto& [g, c] : other.terms_) add(g, -c);
  return *this;
}

Chain Chain::scaled(const Scalar& c) const {
  Chain out(ring_, ends_, two_n_, degree_);
  for (const auto& [g, v] : terms_) out.add(g, v * c);
  return out;
}

std::string Chain::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string s = c.str();
    bool composite = s.find_first_of("+ ") != std::string::npos || s.find('-', 1) != std::string::npos;
    out += (composite ? "(" + s + ")" : s) + "*" + g.encode();
  }
  return out;
}

Chain Chain::parse(std::string_view text, const PointedRing& ring, bool augmented) {
  struct Part {
    bool negate;
    std::string coeff;
    std::string graffito;
  };
  std::vector<Part> parts;
  std::string_view s = trim(text);
  std::size_t start = 0;
  bool negate = false;
  int depth = 0;
  auto flush = [&](std::size_t end) {
    std::string_view term = trim(s.substr(start, end - start));
    if (term.empty()) throw ParseError("empty chain term in '" + std::string(text) + "'");
    bool neg = negate;
    if (term.front() == '-' && term.size() > 1 && term[1] == 'G') {
      neg = !neg;
      term = term.substr(1);
    }
    if (term.substr(0, 2) == "G(") {
      parts.push_back({neg, "1", std::string(term)});
      return;
    }
    auto star = term.find("*G(");
    if (star == std::string_view::npos) throw ParseError("chain term needs 'scalar*G(..)': " + std::string(term));
    std::string_view coeff = trim(term.substr(0, star));
    if (coeff.size() >= 2 && coeff.front() == '(' && coeff.back() == ')') coeff = coeff.substr(1, coeff.size() - 2);
    parts.push_back({neg, std::string(coeff), std::string(term.substr(star + 1))});
  };
  if (s == "0") throw ParseError("the zero chain has no degree; give at least one term");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth == 0 && (c == '+' || c == '-') && i > 0 && s[i - 1] == ' ' && i + 1 < s.size() && s[i + 1] == ' ') {
      flush(i);
      start = i + 1;
      negate = c == '-';
    }
  }
  flush(s.size());
  std::optional<Chain> out;
  for (const auto& part : parts) {
    Graffito g = Graffito::parse(part.graffito);
    if (!out) {
      EndSpec e = g.ends();
      e.augmented = augmented;
      out.emplace(ring, e, g.two_n(), g.degree());
    }
    Scalar c = Scalar::parse(part.coeff, ring.domain());
    out->add(g, part.negate ? -c : c);
  }
  return *out;
}

// ---------------------------------------------------------------------------

Chain face(const Graffito& x, int i, const PointedRing& ring, bool augmented) {
  const int p = x.degree();
  if (i < 0 || i >= p) throw GraffitoError("face index " + std::to_string(i) + " out of range for degree " + std::to_string(p));
  EndSpec e = x.ends();
  e.augmented = augmented;
  Chain out(ring, e, x.two_n(), p - 1);
  const auto& f = x.factors();
  if (p == 1) {
    if (!augmented || !x.ends().closed()) return out;
    out.add(Graffito::empty(x.two_n()), ring.a_power(compose(f[0], f[1]).loops));
    return out;
  }
  Composite c = compose(f[i], f[i + 1]);
  if (i == 0 && x.ends().left_open && c.diagram.has_left_left()) return out;
  if (i == p - 1 && x.ends().right_open && c.diagram.has_right_right()) return out;
  Scalar coeff = ring.a_power(c.loops);
  if (coeff.is_zero()) return out;
  std::vector<TLDiagram> merged;
  merged.reserve(f.size() - 1);
  for (int j = 0; j < i; ++j) merged.push_back(f[j]);
  merged.push_back(std::move(c.diagram));
  for (int j = i + 2; j <= p; ++j) merged.push_back(f[j]);
  out.add(Graffito(x.two_n(), x.ends(), std::move(merged)), coeff);
  return out;
}

Chain differential(const Chain& c) {
  Chain out(c.ring(), c.ends(), c.two_n(), c.degree() - 1);
  for (const auto& [g, coeff] : c.terms()) {
    for (int i = 0; i < g.degree(); ++i) {
      Chain f = face(g, i, c.ring(), c.ends().augmented);
      for (const auto& [h, v] : f.terms()) out.add(h, i % 2 == 0 ? coeff * v : -(coeff * v));
    }
  }
  return out;
}

Graffito product(const Graffito& x, const Graffito& y) {
  if (x.two_n() != y.two_n()) throw GraffitoError("product of graffiti with different 2n");
  if (x.ends().right_open || y.ends().left_open) throw GraffitoError("product needs closed facing ends");
  if (x.degree() == 0) return y;
  if (y.degree() == 0) return x;
  std::vector<TLDiagram> f(x.factors().begin(), x.factors().end() - 1);
  f.push_back(compose(x.factors().back(), y.factors().front()).diagram);
  f.insert(f.end(), y.factors().begin() + 1, y.factors().end());
  EndSpec e{x.ends().left_open, y.ends().right_open, false};
  return Graffito(x.two_n(), e, std::move(f));
}

Chain product(const Chain& x, const Chain& y) {
  if (!(x.ring() == y.ring())) throw DomainMismatch("product of chains over different rings");
  if (x.ends().right_open || y.ends().left_open) throw GraffitoError("product needs closed facing ends");
  EndSpec e{x.ends().left_open, y.ends().right_open, x.ends().augmented || y.ends().augmented};
  Chain out(x.ring(), e, x.two_n(), x.degree() + y.degree());
  for (const auto& [g, c] : x.terms())
    for (const auto& [h, v] : y.terms()) out.add(product(g, h), c * v);
  return out;
}

Graffito close_ends(const Graffito& x) {
  if (x.ends().closed()) return x;
  std::vector<TLDiagram> f = x.factors();
  f.front() = closed_left(f.front(), x.ends().left_open);
  f.back() = closed_right(f.back(), x.ends().right_open);
  return Graffito(x.two_n(), EndSpec{}, std::move(f));
}

Graffito involution_tb(const Graffito& x) {
  std::vector<TLDiagram> f;
  for (const auto& d : x.factors()) f.push_back(reflect_tb(d));
  return Graffito(x.two_n(), x.ends(), std::move(f));
}

Graffito involution_lr(const Graffito& x) {
  std::vector<TLDiagram> f;
  for (auto it = x.factors().rbegin(); it != x.factors().rend(); ++it) f.push_back(reflect_lr(*it));
  EndSpec e{x.ends().right_open, x.ends().left_open, false};
  return Graffito(x.two_n(), e, std::move(f));
}

namespace {

template <class Map>
Chain map_chain(const Chain& c, EndSpec ends, Map&& fn) {
  Chain out(c.ring(), ends, c.two_n(), c.degree());
  for (const auto& [g, v] : c.terms()) out.add(fn(g), v);
  return out;
}

}  // namespace

Chain involution_tb(const Chain& c) {
  return map_chain(c, c.ends(), [](const Graffito& g) { return involution_tb(g); });
}

Chain involution_lr(const Chain& c) {
  EndSpec e{c.ends().right_open, c.ends().left_open, c.ends().augmented};
  return map_chain(c, e, [](const Graffito& g) { return involution_lr(g); });
}

Graffito random_graffito(int two_n, EndSpec ends, int degree, std::mt19937_64& rng) {
  if (degree < 1) throw GraffitoError("random graffiti have degree >= 1");
  auto pick = [&](const std::vector<TLDiagram>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  auto keep = [](std::vector<TLDiagram> v, auto&& pred) {
    std::erase_if(v, [&](const TLDiagram& d) { return !pred(d); });
    return v;
  };
  const auto first = keep(enumerate_diagrams(ends.left_stubs(), two_n), [](const TLDiagram& d) { return !d.has_left_left(); });
  const auto last = keep(enumerate_diagrams(two_n, ends.right_stubs()), [](const TLDiagram& d) { return !d.has_right_right(); });
  const auto inner = keep(enumerate_diagrams(two_n, two_n), [](const TLDiagram& d) { return !d.is_identity(); });
  std::vector<TLDiagram> f{pick(first)};
  for (int i = 1; i < degree; ++i) f.push_back(pick(inner));
  f.push_back(pick(last));
  ends.augmented = false;
  return Graffito(two_n, ends, std::move(f));
}

std::vector<Letter> to_word(const Graffito& x) {
  if (x.two_n() != 4) throw GraffitoError("words are defined for 2n = 4");
  const int p = x.degree();
  const auto& f = x.factors();
  auto right_half = [&](int j) { return j == 0 ? LinkState(f[0], CellSide::right_cell) : slice(f[j]).second; };
  auto left_half = [&](int j) { return j == p ? LinkState(f[p], CellSide::left_cell) : slice(f[j]).first; };
  std::vector<Letter> word;
  for (int j = 1; j <= p; ++j)
    word.push_back(Letter{HalfMatching::from_entering(right_half(j - 1)), HalfMatching::from_leaving(left_half(j))});
  return word;
}

Graffito from_word(const std::vector<Letter>& word) {
  if (word.empty()) return Graffito::empty(4);
  for (const auto& l : word)
    if (l.left.nodes() != 4 || l.right.nodes() != 4) throw GraffitoError("letters must live on four-node bars");
  std::vector<TLDiagram> f;
  f.push_back(word.front().left.to_entering().diagram);
  for (std::size_t j = 1; j < word.size(); ++j) {
    if (word[j - 1].right.stubs() != word[j].left.stubs())
      throw GraffitoError("stub mismatch between letters " + std::to_string(j) + " and " + std::to_string(j + 1));
    f.push_back(unslice(word[j - 1].right.to_leaving(), word[j].left.to_entering()));
  }
  f.push_back(word.back().right.to_leaving().diagram);
  EndSpec e{word.front().left.stubs() == 2, word.back().right.stubs() == 2, false};
  return Graffito(4, e, std::move(f));
}

std::vector<Letter> pivot_sequence(const Graffito& x) {
  if (x.two_n() != 4 || !x.ends().closed() || x.divider_count() != 0 || x.degree() < 1)
    throw GraffitoError("pivot sequences need a closed 2n = 4 graffito without dividers");
  std::vector<Letter> out;
  for (auto& l : to_word(x))
    if (l.is_pivot()) out.push_back(l);
  return out;
}

}  // namespace tlloops
