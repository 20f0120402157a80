// Temperley-Lieb (n,m) diagrams, link states, and the one-bar letters used
// to read graffiti as words.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tlloops {

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Boundary point of a diagram. Left points L1..Ln, right points R1..Rm,
/// both numbered top to bottom.
struct Endpoint {
  enum class Side : std::uint8_t { left, right };
  Side side;
  int index;  // 1-based
  static Endpoint L(int i) { return {Side::left, i}; }
  static Endpoint R(int j) { return {Side::right, j}; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// A noncrossing perfect matching on L1..Ln, R1..Rm. Planarity is judged in
/// the circular order L1,...,Ln,Rm,...,R1.
class TLDiagram {
 public:
  TLDiagram() = default;  // the empty (0,0) diagram
  /// Validates parity, perfectness and planarity.
  TLDiagram(int n, int m, const std::vector<std::pair<Endpoint, Endpoint>>& pairs);

  static TLDiagram identity(int n);
  /// Unchecked construction from a partner table over the flat index
  /// (L_i -> i-1, R_j -> n+j-1). Callers guarantee validity.
  static TLDiagram from_partners(int n, int m, std::vector<std::uint8_t> partner);
  static TLDiagram parse(std::string_view text);

  int n() const { return n_; }
  int m() const { return m_; }
  int size() const { return n_ + m_; }
  /// Flat-index partner table.
  const std::vector<std::uint8_t>& partners() const { return partner_; }
  int partner(int flat) const { return partner_[flat]; }
  bool is_left(int flat) const { return flat < n_; }

  std::vector<std::pair<Endpoint, Endpoint>> pairs() const;
  int through_count() const;
  bool has_left_left() const;
  bool has_right_right() const;
  bool is_identity() const;

  std::string encode() const;

  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;
  friend std::strong_ordering operator<=>(const TLDiagram& x, const TLDiagram& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    if (auto c = x.m_ <=> y.m_; c != 0) return c;
    return x.partner_ <=> y.partner_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> partner_;
};

struct Composite {
  TLDiagram diagram;
  int loops = 0;
};

/// Concatenation d1 then d2 (d1.m == d2.n); closed loops are counted, not kept.
Composite compose(const TLDiagram& d1, const TLDiagram& d2);

/// All diagrams of shape (n,m), ordered by canonical encoding.
std::vector<TLDiagram> enumerate_diagrams(int n, int m);

TLDiagram reflect_lr(const TLDiagram& d);
TLDiagram reflect_tb(const TLDiagram& d);

std::uint64_t catalan(int k);

enum class CellSide : std::uint8_t {
  left_cell,   // S(n,k): a TL(n,k) diagram with no right-to-right pair
  right_cell,  // S^v(k,n): a TL(k,n) diagram with no left-to-left pair
};

struct LinkState {
  TLDiagram diagram;
  CellSide side;

  LinkState(TLDiagram d, CellSide s);
  /// Number of stubs (k).
  int stubs() const { return side == CellSide::left_cell ? diagram.m() : diagram.n(); }
  /// Number of bar nodes (n).
  int nodes() const { return side == CellSide::left_cell ? diagram.n() : diagram.m(); }
  friend bool operator==(const LinkState&, const LinkState&) = default;
};

/// Cuts each through-strand of a TL(n,n) diagram into two stubs, numbered
/// top to bottom.
std::pair<LinkState, LinkState> slice(const TLDiagram& d);
/// Rejoins stub i of `left` to stub i of `right`.
TLDiagram unslice(const LinkState& left, const LinkState& right);

/// Basis of S(n,k) (left_cell) or S^v(k,n) (right_cell), canonical order.
std::vector<LinkState> cell_basis(int n, int k, CellSide side);

/// Joins the two stubs of a k = 2 link state.
LinkState close_up(const LinkState& s);

/// One side of a bar: a noncrossing perfect matching of the bar nodes
/// N1..Nn together with k in {0,2} stubs, planar order S1,N1,...,Nn,S2.
/// Stubs are never paired with each other.
class HalfMatching {
 public:
  HalfMatching() = default;
  int nodes() const { return nodes_; }
  int stubs() const { return stubs_; }
  /// Flat index: nodes 0..nodes-1, stubs nodes..nodes+stubs-1.
  int partner(int flat) const { return partner_[flat]; }

  /// From the right link state of the factor entering the bar.
  static HalfMatching from_entering(const LinkState& s);
  /// From the left link state of the factor leaving the bar.
  static HalfMatching from_leaving(const LinkState& s);
  LinkState to_entering() const;
  LinkState to_leaving() const;

  std::string encode() const;
  friend bool operator==(const HalfMatching&, const HalfMatching&) = default;
  friend auto operator<=>(const HalfMatching&, const HalfMatching&) = default;

 private:
  HalfMatching(int nodes, int stubs, std::vector<std::uint8_t> partner)
      : nodes_(nodes), stubs_(stubs), partner_(std::move(partner)) {}
  int nodes_ = 0;
  int stubs_ = 0;
  std::vector<std::uint8_t> partner_;
};

/// The arcs on one bar: what arrives from the left and what leaves to the
/// right.
struct Letter {
  HalfMatching left;
  HalfMatching right;

  int left_stubs() const { return left.stubs(); }
  int right_stubs() const { return right.stubs(); }
  /// Number of distinct loops the bar's nodes lie on, with the stubs on each
  /// side joined to each other (they always are, through the rest of the
  /// graffito).
  int loops_touched() const;
  bool is_pivot() const { return loops_touched() >= 2; }
  std::string encode() const;
  static Letter parse(std::string_view text);
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// All letters on a four-node bar with the given stub counts (0 or 2 each).
std::vector<Letter> enumerate_letters(int left_stubs, int right_stubs);

}  // namespace tlloops
