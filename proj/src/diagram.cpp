#include "tlloops/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "tlloops/errors.hpp"

namespace tlloops {

namespace {

constexpr std::uint8_t kUnset = 0xff;

int flat_index(int n, int m, const Endpoint& e) {
  if (e.side == Endpoint::Side::left) {
    if (e.index < 1 || e.index > n) throw DiagramError("endpoint L" + std::to_string(e.index) + " out of range");
    return e.index - 1;
  }
  if (e.index < 1 || e.index > m) throw DiagramError("endpoint R" + std::to_string(e.index) + " out of range");
  return n + e.index - 1;
}

std::string endpoint_name(int n, int flat) {
  return flat < n ? "L" + std::to_string(flat + 1) : "R" + std::to_string(flat - n + 1);
}

// Position of a flat index in the circular order L1..Ln, Rm..R1.
int circular_position(int n, int m, int flat) { return flat < n ? flat : n + (m - 1 - (flat - n)); }

bool chords_cross(std::vector<std::pair<int, int>> chords) {
  for (auto& [a, b] : chords)
    if (a > b) std::swap(a, b);
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return true;
    }
  return false;
}

bool is_noncrossing(int n, int m, const std::vector<std::uint8_t>& partner) {
  std::vector<std::pair<int, int>> chords;
  for (int e = 0; e < n + m; ++e)
    if (e < partner[e]) chords.emplace_back(circular_position(n, m, e), circular_position(n, m, partner[e]));
  return !chords_cross(std::move(chords));
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  void expect(std::string_view word) {
    for (char c : word) expect(c);
  }
  int number() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return std::stoi(std::string(s_.substr(start, i_ - start)));
  }
  char letter() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    return s_[i_++];
  }
  bool done() {
    skip();
    return i_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

TLDiagram::TLDiagram(int n, int m, const std::vector<std::pair<Endpoint, Endpoint>>& pairs) : n_(n), m_(m) {
  if (n < 0 || m < 0 || n + m > 250) throw DiagramError("unsupported diagram size");
  if ((n + m) % 2 != 0)
    throw DiagramError("parity: TL(" + std::to_string(n) + "," + std::to_string(m) + ") has an odd number of endpoints");
  partner_.assign(n + m, kUnset);
  for (const auto& [a, b] : pairs) {
    int x = flat_index(n, m, a), y = flat_index(n, m, b);
    if (x == y || partner_[x] != kUnset || partner_[y] != kUnset)
      throw DiagramError("not a perfect matching: endpoint used twice");
    partner_[x] = static_cast<std::uint8_t>(y);
    partner_[y] = static_cast<std::uint8_t>(x);
  }
  if (std::find(partner_.begin(), partner_.end(), kUnset) != partner_.end())
    throw DiagramError("not a perfect matching: unmatched endpoint");
  if (!is_noncrossing(n, m, partner_)) throw DiagramError("planarity: pairs cross in " + encode());
}

TLDiagram TLDiagram::identity(int n) {
  std::vector<std::uint8_t> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = static_cast<std::uint8_t>(n + i);
    p[n + i] = static_cast<std::uint8_t>(i);
  }
  return from_partners(n, n, std::move(p));
}

TLDiagram TLDiagram::from_partners(int n, int m, std::vector<std::uint8_t> partner) {
  TLDiagram d;
  d.n_ = n;
  d.m_ = m;
  d.partner_ = std::move(partner);
  return d;
}

TLDiagram TLDiagram::parse(std::string_view text) {
  Cursor c(text);
  c.expect("TL(");
  int n = c.number();
  c.expect(',');
  int m = c.number();
  c.expect(')');
  c.expect('{');
  std::vector<std::pair<Endpoint, Endpoint>> pairs;
  auto endpoint = [&] {
    char side = c.letter();
    if (side != 'L' && side != 'R') c.fail("expected L or R");
    int idx = c.number();
    return side == 'L' ? Endpoint::L(idx) : Endpoint::R(idx);
  };
  if (!c.peek('}')) {
    do {
      Endpoint a = endpoint();
      c.expect('-');
      Endpoint b = endpoint();
      pairs.emplace_back(a, b);
      if (!c.peek(',')) break;
      c.expect(',');
    } while (true);
  }
  c.expect('}');
  if (!c.done()) c.fail("trailing characters");
  return TLDiagram(n, m, pairs);
}

std::vector<std::pair<Endpoint, Endpoint>> TLDiagram::pairs() const {
  std::vector<std::pair<Endpoint, Endpoint>> out;
  auto ep = [&](int f) { return f < n_ ? Endpoint::L(f + 1) : Endpoint::R(f - n_ + 1); };
  for (int e = 0; e < size(); ++e)
    if (e < partner_[e]) out.emplace_back(ep(e), ep(partner_[e]));
  return out;
}

int TLDiagram::through_count() const {
  int count = 0;
  for (int e = 0; e < n_; ++e)
    if (partner_[e] >= n_) ++count;
  return count;
}

bool TLDiagram::has_left_left() const {
  for (int e = 0; e < n_; ++e)
    if (partner_[e] < n_) return true;
  return false;
}

bool TLDiagram::has_right_right() const {
  for (int e = n_; e < size(); ++e)
    if (partner_[e] >= n_) return true;
  return false;
}

bool TLDiagram::is_identity() const {
  if (n_ != m_) return false;
  for (int i = 0; i < n_; ++i)
    if (partner_[i] != n_ + i) return false;
  return true;
}

std::string TLDiagram::encode() const {
  std::string out = "TL(" + std::to_string(n_) + "," + std::to_string(m_) + "){";
  bool first = true;
  for (int e = 0; e < size(); ++e) {
    if (e > partner_[e]) continue;
    if (!first) out += ',';
    first = false;
    out += endpoint_name(n_, e) + "-" + endpoint_name(n_, partner_[e]);
  }
  return out + "}";
}

Composite compose(const TLDiagram& d1, const TLDiagram& d2) {
  if (d1.m() != d2.n())
    throw DiagramError("shape mismatch: cannot compose TL(" + std::to_string(d1.n()) + "," + std::to_string(d1.m()) +
                       ") with TL(" + std::to_string(d2.n()) + "," + std::to_string(d2.m()) + ")");
  const int n = d1.n(), mid = d1.m(), l = d2.m();
  std::vector<std::uint8_t> out(n + l, kUnset);
  std::vector<bool> seen(mid, false);

  // Follows a strand that has just entered middle point k from d1's side
  // (from_first) or from d2's side, until it exits on an outer boundary.
  // Returns the outer flat index in the result.
  auto run = [&](int k, bool from_first) {
    while (true) {
      seen[k] = true;
      if (from_first) {
        int q = d2.partner(k);
        if (q >= mid) return n + (q - mid);
        k = q;
        from_first = false;
      } else {
        int q = d1.partner(n + k);
        if (q < n) return q;
        k = q - n;
        from_first = true;
      }
    }
  };

  for (int e = 0; e < n; ++e) {
    if (out[e] != kUnset) continue;
    int q = d1.partner(e);
    int end = q < n ? q : run(q - n, true);
    out[e] = static_cast<std::uint8_t>(end);
    out[end] = static_cast<std::uint8_t>(e);
  }
  for (int j = 0; j < l; ++j) {
    int e = n + j;
    if (out[e] != kUnset) continue;
    int q = d2.partner(mid + j);
    int end = q >= mid ? n + (q - mid) : run(q, false);
    out[e] = static_cast<std::uint8_t>(end);
    out[end] = static_cast<std::uint8_t>(e);
  }
  int loops = 0;
  for (int k = 0; k < mid; ++k) {
    if (seen[k]) continue;
    ++loops;
    // walk the closed cycle: alternate d1 and d2 arcs among middle points
    int cur = k;
    do {
      seen[cur] = true;
      int a = d1.partner(n + cur) - n;
      seen[a] = true;
      cur = d2.partner(a);
    } while (cur != k);
  }
  return {TLDiagram::from_partners(n, l, std::move(out)), loops};
}

std::vector<TLDiagram> enumerate_diagrams(int n, int m) {
  if (n < 0 || m < 0 || (n + m) % 2 != 0)
    throw DiagramError("parity: cannot enumerate TL(" + std::to_string(n) + "," + std::to_string(m) + ")");
  const int size = n + m;
  std::vector<int> flat_at(size);
  for (int f = 0; f < size; ++f) flat_at[circular_position(n, m, f)] = f;

  std::vector<TLDiagram> out;
  std::vector<std::uint8_t> partner(size, kUnset);
  // Noncrossing matchings of circular positions [lo, hi) as a recursive
  // product: lo pairs with some j, splitting the interval in two.
  std::function<void(std::vector<std::pair<int, int>>)> rec = [&](std::vector<std::pair<int, int>> intervals) {
    while (!intervals.empty() && intervals.back().first >= intervals.back().second) intervals.pop_back();
    if (intervals.empty()) {
      out.push_back(TLDiagram::from_partners(n, m, partner));
      return;
    }
    auto [lo, hi] = intervals.back();
    intervals.pop_back();
    for (int j = lo + 1; j < hi; j += 2) {
      int a = flat_at[lo], b = flat_at[j];
      partner[a] = static_cast<std::uint8_t>(b);
      partner[b] = static_cast<std::uint8_t>(a);
      auto next = intervals;
      next.emplace_back(j + 1, hi);
      next.emplace_back(lo + 1, j);
      rec(std::move(next));
    }
  };
  rec({{0, size}});
  std::vector<std::pair<std::string, TLDiagram>> keyed;
  keyed.reserve(out.size());
  for (auto& d : out) keyed.emplace_back(d.encode(), std::move(d));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  out.clear();
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

TLDiagram reflect_lr(const TLDiagram& d) {
  const int n = d.n(), m = d.m();
  // new left side = old right side
  auto to_new = [&](int f) { return f < n ? m + f : f - n; };
  std::vector<std::uint8_t> p(n + m);
  for (int f = 0; f < n + m; ++f) p[to_new(f)] = static_cast<std::uint8_t>(to_new(d.partner(f)));
  return TLDiagram::from_partners(m, n, std::move(p));
}

TLDiagram reflect_tb(const TLDiagram& d) {
  const int n = d.n(), m = d.m();
  auto to_new = [&](int f) { return f < n ? n - 1 - f : n + (m - 1 - (f - n)); };
  std::vector<std::uint8_t> p(n + m);
  for (int f = 0; f < n + m; ++f) p[to_new(f)] = static_cast<std::uint8_t>(to_new(d.partner(f)));
  return TLDiagram::from_partners(n, m, std::move(p));
}

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

LinkState::LinkState(TLDiagram d, CellSide s) : diagram(std::move(d)), side(s) {
  if (side == CellSide::left_cell && diagram.has_right_right())
    throw DiagramError("not a left cell link state: right-to-right pair in " + diagram.encode());
  if (side == CellSide::right_cell && diagram.has_left_left())
    throw DiagramError("not a right cell link state: left-to-left pair in " + diagram.encode());
}

std::pair<LinkState, LinkState> slice(const TLDiagram& d) {
  const int n = d.n(), m = d.m();
  const int k = d.through_count();
  std::vector<std::uint8_t> left(n + k), right(k + m);
  int stub = 0;
  for (int e = 0; e < n; ++e) {
    int q = d.partner(e);
    if (q < n) {
      left[e] = static_cast<std::uint8_t>(q);
    } else {
      // through strands are met in the same order from either side
      left[e] = static_cast<std::uint8_t>(n + stub);
      left[n + stub] = static_cast<std::uint8_t>(e);
      int r = q - n;
      right[stub] = static_cast<std::uint8_t>(k + r);
      right[k + r] = static_cast<std::uint8_t>(stub);
      ++stub;
    }
  }
  for (int j = 0; j < m; ++j) {
    int q = d.partner(n + j);
    if (q >= n) right[k + j] = static_cast<std::uint8_t>(k + (q - n));
  }
  return {LinkState(TLDiagram::from_partners(n, k, std::move(left)), CellSide::left_cell),
          LinkState(TLDiagram::from_partners(k, m, std::move(right)), CellSide::right_cell)};
}

TLDiagram unslice(const LinkState& left, const LinkState& right) {
  if (left.side != CellSide::left_cell || right.side != CellSide::right_cell)
    throw DiagramError("unslice expects (left cell, right cell) link states");
  if (left.stubs() != right.stubs())
    throw DiagramError("stub-count mismatch: " + std::to_string(left.stubs()) + " vs " + std::to_string(right.stubs()));
  Composite c = compose(left.diagram, right.diagram);
  if (c.loops != 0 || c.diagram.through_count() != left.stubs())
    throw DiagramError("unslice produced an unexpected diagram");
  return c.diagram;
}

std::vector<LinkState> cell_basis(int n, int k, CellSide side) {
  if (n < k || k < 0 || (n - k) % 2 != 0)
    throw DiagramError("cell module (" + std::to_string(n) + "," + std::to_string(k) + ") is empty or ill-formed");
  std::vector<LinkState> out;
  if (side == CellSide::left_cell) {
    for (auto& d : enumerate_diagrams(n, k))
      if (!d.has_right_right()) out.emplace_back(d, side);
  } else {
    for (auto& d : enumerate_diagrams(k, n))
      if (!d.has_left_left()) out.emplace_back(d, side);
  }
  return out;
}

LinkState close_up(const LinkState& s) {
  if (s.stubs() != 2) throw DiagramError("close_up needs exactly 2 stubs, got " + std::to_string(s.stubs()));
  const TLDiagram& d = s.diagram;
  if (s.side == CellSide::left_cell) {
    const int n = d.n();
    std::vector<std::uint8_t> p(n);
    for (int e = 0; e < n; ++e) p[e] = static_cast<std::uint8_t>(d.partner(e));
    int a = d.partner(n), b = d.partner(n + 1);
    p[a] = static_cast<std::uint8_t>(b);
    p[b] = static_cast<std::uint8_t>(a);
    return LinkState(TLDiagram::from_partners(n, 0, std::move(p)), s.side);
  }
  const int m = d.m();
  std::vector<std::uint8_t> p(m);
  for (int j = 0; j < m; ++j) p[j] = static_cast<std::uint8_t>(d.partner(2 + j) - 2);
  int a = d.partner(0) - 2, b = d.partner(1) - 2;
  p[a] = static_cast<std::uint8_t>(b);
  p[b] = static_cast<std::uint8_t>(a);
  return LinkState(TLDiagram::from_partners(0, m, std::move(p)), s.side);
}

// ---------------------------------------------------------------------------
// Half matchings and letters

HalfMatching HalfMatching::from_entering(const LinkState& s) {
  if (s.side != CellSide::right_cell) throw DiagramError("entering half needs a right cell link state");
  const int k = s.stubs(), n = s.nodes();
  std::vector<std::uint8_t> p(n + k);
  // diagram flat: stubs 0..k-1, nodes k..k+n-1
  auto conv = [&](int f) { return f < k ? n + f : f - k; };
  for (int f = 0; f < n + k; ++f) p[conv(f)] = static_cast<std::uint8_t>(conv(s.diagram.partner(f)));
  return HalfMatching(n, k, std::move(p));
}

HalfMatching HalfMatching::from_leaving(const LinkState& s) {
  if (s.side != CellSide::left_cell) throw DiagramError("leaving half needs a left cell link state");
  // diagram flat layout already matches: nodes first, then stubs
  return HalfMatching(s.nodes(), s.stubs(), s.diagram.partners());
}

LinkState HalfMatching::to_entering() const {
  const int k = stubs_, n = nodes_;
  auto conv = [&](int f) { return f < n ? k + f : f - n; };
  std::vector<std::uint8_t> p(n + k);
  for (int f = 0; f < n + k; ++f) p[conv(f)] = static_cast<std::uint8_t>(conv(partner_[f]));
  return LinkState(TLDiagram::from_partners(k, n, std::move(p)), CellSide::right_cell);
}

LinkState HalfMatching::to_leaving() const {
  return LinkState(TLDiagram::from_partners(nodes_, stubs_, partner_), CellSide::left_cell);
}

std::string HalfMatching::encode() const {
  auto name = [&](int f) { return f < nodes_ ? "N" + std::to_string(f + 1) : "S" + std::to_string(f - nodes_ + 1); };
  std::string out;
  for (int f = 0; f < nodes_ + stubs_; ++f) {
    if (f > partner_[f]) continue;
    if (!out.empty()) out += ',';
    out += name(f) + "-" + name(partner_[f]);
  }
  return out;
}

int Letter::loops_touched() const {
  const int n = left.nodes();
  // vertices: nodes 0..n-1, left stubs n, n+1, right stubs n+2, n+3
  std::vector<int> parent(n + 4);
  for (int i = 0; i < n + 4; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto join = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int f = 0; f < n + left.stubs(); ++f) join(f, left.partner(f));
  for (int f = 0; f < n + right.stubs(); ++f) {
    auto vertex = [&](int g) { return g < n ? g : g + 2; };
    join(vertex(f), vertex(right.partner(f)));
  }
  if (left.stubs() == 2) join(n, n + 1);
  if (right.stubs() == 2) join(n + 2, n + 3);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) roots.push_back(find(i));
  std::sort(roots.begin(), roots.end());
  return static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

std::string Letter::encode() const {
  return "LT(" + std::to_string(left.stubs()) + "," + std::to_string(right.stubs()) + "){left=" + left.encode() +
         ";right=" + right.encode() + "}";
}

Letter Letter::parse(std::string_view text) {
  Cursor c(text);
  c.expect("LT(");
  int kl = c.number();
  c.expect(',');
  int kr = c.number();
  c.expect(')');
  c.expect('{');
  auto half = [&](int k, bool entering) {
    int max_node = 0;
    std::vector<std::pair<std::pair<char, int>, std::pair<char, int>>> pairs;
    do {
      auto point = [&] {
        char t = c.letter();
        if (t != 'N' && t != 'S') c.fail("expected N or S");
        int i = c.number();
        if (t == 'N') max_node = std::max(max_node, i);
        return std::make_pair(t, i);
      };
      auto a = point();
      c.expect('-');
      auto b = point();
      pairs.emplace_back(a, b);
      if (!c.peek(',')) break;
      c.expect(',');
    } while (true);
    const int n = max_node;
    std::vector<std::pair<Endpoint, Endpoint>> eps;
    for (auto& [a, b] : pairs) {
      auto conv = [&](std::pair<char, int> p) {
        if (p.first == 'N') return entering ? Endpoint::R(p.second) : Endpoint::L(p.second);
        return entering ? Endpoint::L(p.second) : Endpoint::R(p.second);
      };
      eps.emplace_back(conv(a), conv(b));
    }
    TLDiagram d = entering ? TLDiagram(k, n, eps) : TLDiagram(n, k, eps);
    LinkState s(d, entering ? CellSide::right_cell : CellSide::left_cell);
    return entering ? HalfMatching::from_entering(s) : HalfMatching::from_leaving(s);
  };
  c.expect("left=");
  HalfMatching l = half(kl, true);
  c.expect(';');
  c.expect("right=");
  HalfMatching r = half(kr, false);
  c.expect('}');
  if (!c.done()) c.fail("trailing characters");
  return Letter{l, r};
}

std::vector<Letter> enumerate_letters(int left_stubs, int right_stubs) {
  auto ok = [](int k) { return k == 0 || k == 2; };
  if (!ok(left_stubs) || !ok(right_stubs)) throw DiagramError("letters need 0 or 2 stubs per side");
  std::vector<Letter> out;
  for (const auto& l : cell_basis(4, left_stubs, CellSide::right_cell))
    for (const auto& r : cell_basis(4, right_stubs, CellSide::left_cell))
      out.push_back(Letter{HalfMatching::from_entering(l), HalfMatching::from_leaving(r)});
  return out;
}

}  // namespace tlloops
