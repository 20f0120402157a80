#include "tlloops/complex.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tlloops {

void ComplexSpec::validate() const {
  if (two_n < 2 || two_n % 2 != 0) throw SpecError("2n must be even and at least 2");
  if (!ends.closed() && two_n != 4) throw SpecError("open ends are only defined for 2n = 4");
  if (ends.augmented && !ends.closed()) throw SpecError("the augmentation needs closed ends");
  if (max_degree < min_degree()) throw SpecError("max degree below the first degree of the complex");
  if (weight && !ring.a_is_zero()) throw SpecError("a weight filter needs a = 0");
  if (weight && *weight < 0) throw SpecError("weight must be nonnegative");
  if (dividers && !subquotient) throw SpecError("a divider filter needs subquotient semantics");
  if (subquotient && (!dividers || !ring.a_is_zero())) throw SpecError("subquotient needs a = 0 and a divider count");
  if (dividers && *dividers < 0) throw SpecError("divider count must be nonnegative");
  if (ends.augmented && (weight || subquotient)) throw SpecError("filters are not supported on the augmented complex");
}

namespace {

struct Step {
  int index;  // -1: killed by an open end
  int loops;
};

// Per-slot diagram lists and composition tables for one (2n, ends) pair.
struct FactorTable {
  int two_n;
  EndSpec ends;
  std::vector<TLDiagram> left, internal, right, caps, cups;
  std::vector<int> left_cap, right_cup;
  std::vector<char> divider;
  std::vector<std::vector<Step>> cap_int;
  std::vector<std::vector<int>> cap_cup;
  std::vector<std::vector<Step>> int_int, left_int, int_right;
  std::vector<std::vector<int>> left_right;

  FactorTable(int n2, EndSpec e) : two_n(n2), ends(e) {
    for (auto& d : enumerate_diagrams(e.left_stubs(), n2))
      if (!d.has_left_left()) left.push_back(d);
    for (auto& d : enumerate_diagrams(n2, n2))
      if (!d.is_identity()) internal.push_back(d);
    for (auto& d : enumerate_diagrams(n2, e.right_stubs()))
      if (!d.has_right_right()) right.push_back(d);
    caps = enumerate_diagrams(0, n2);
    cups = enumerate_diagrams(n2, 0);
    auto index = [](const std::vector<TLDiagram>& list, const TLDiagram& d) {
      auto it = std::lower_bound(list.begin(), list.end(), d.encode(),
                                 [](const TLDiagram& x, const std::string& key) { return x.encode() < key; });
      if (it == list.end() || !(*it == d)) return -1;
      return static_cast<int>(it - list.begin());
    };
    for (auto& d : left)
      left_cap.push_back(index(caps, e.left_open ? close_up(LinkState(d, CellSide::right_cell)).diagram : d));
    for (auto& d : right)
      right_cup.push_back(index(cups, e.right_open ? close_up(LinkState(d, CellSide::left_cell)).diagram : d));
    for (auto& d : internal) divider.push_back(d.through_count() == 0);
    for (auto& c : caps) {
      cap_int.emplace_back();
      for (auto& d : internal) {
        auto r = compose(c, d);
        cap_int.back().push_back({index(caps, r.diagram), r.loops});
      }
      cap_cup.emplace_back();
      for (auto& d : cups) cap_cup.back().push_back(compose(c, d).loops);
    }
    for (auto& x : internal) {
      int_int.emplace_back();
      for (auto& y : internal) {
        auto r = compose(x, y);
        int_int.back().push_back({index(internal, r.diagram), r.loops});
      }
      int_right.emplace_back();
      for (auto& y : right) {
        auto r = compose(x, y);
        bool killed = e.right_open && r.diagram.has_right_right();
        int_right.back().push_back({killed ? -1 : index(right, r.diagram), r.loops});
      }
    }
    for (auto& x : left) {
      left_int.emplace_back();
      for (auto& y : internal) {
        auto r = compose(x, y);
        bool killed = e.left_open && r.diagram.has_left_left();
        left_int.back().push_back({killed ? -1 : index(left, r.diagram), r.loops});
      }
      left_right.emplace_back();
      for (auto& y : right) left_right.back().push_back(compose(x, y).loops);
    }
  }

  int weight_of(const std::uint16_t* t, int p) const {
    int cap = left_cap[t[0]], loops = 0;
    for (int i = 1; i < p; ++i) {
      const Step& s = cap_int[cap][t[i]];
      cap = s.index;
      loops += s.loops;
    }
    return loops + cap_cup[cap][right_cup[t[p]]];
  }

  int dividers_of(const std::uint16_t* t, int p) const {
    int n = 0;
    for (int i = 1; i < p; ++i) n += divider[t[i]];
    return n;
  }

  std::string encode(const std::uint16_t* t, int p) const {
    std::string s = "G(" + ends.code() + ")[" + left[t[0]].encode();
    for (int i = 1; i < p; ++i) s += " | " + internal[t[i]].encode();
    return s + " | " + right[t[p]].encode() + "]";
  }
};

// Flat tuple storage for one degree: stride p + 1, lexicographic order.
struct DegreeBasis {
  int p = 0;
  std::vector<std::uint16_t> tuples;
  std::vector<int> weights;
  std::size_t size() const { return weights.size(); }
  const std::uint16_t* at(std::size_t i) const { return tuples.data() + i * (p + 1); }

  long find(const std::uint16_t* key) const {
    std::size_t lo = 0, hi = size();
    const int w = p + 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      const std::uint16_t* t = at(mid);
      int c = 0;
      for (int k = 0; k < w && c == 0; ++k) c = t[k] < key[k] ? -1 : (t[k] > key[k] ? 1 : 0);
      if (c == 0) return static_cast<long>(mid);
      if (c < 0) lo = mid + 1;
      else hi = mid;
    }
    return -1;
  }
};

DegreeBasis enumerate_tuples(const FactorTable& ft, const ComplexSpec& spec, int p) {
  DegreeBasis b;
  b.p = p;
  std::vector<std::uint16_t> cur(p + 1);
  const int wmax = spec.weight.value_or(1 << 30);
  const int jmax = spec.dividers.value_or(1 << 30);
  // depth-first over slots, carrying the closed-up prefix and its loop count
  auto rec = [&](auto&& self, int slot, int cap, int loops, int dividers) -> void {
    if (loops > wmax || dividers > jmax) return;
    if (slot == p) {
      for (std::size_t r = 0; r < ft.right.size(); ++r) {
        int w = loops + ft.cap_cup[cap][ft.right_cup[r]];
        if (spec.weight && w != *spec.weight) continue;
        if (spec.dividers && dividers != *spec.dividers) continue;
        cur[p] = static_cast<std::uint16_t>(r);
        b.tuples.insert(b.tuples.end(), cur.begin(), cur.end());
        b.weights.push_back(w);
      }
      return;
    }
    for (std::size_t k = 0; k < ft.internal.size(); ++k) {
      cur[slot] = static_cast<std::uint16_t>(k);
      const Step& s = ft.cap_int[cap][k];
      self(self, slot + 1, s.index, loops + s.loops, dividers + ft.divider[k]);
    }
  };
  for (std::size_t l = 0; l < ft.left.size(); ++l) {
    cur[0] = static_cast<std::uint16_t>(l);
    rec(rec, 1, ft.left_cap[l], 0, 0);
  }
  return b;
}

struct PowerTable {
  const PointedRing& ring;
  std::vector<Scalar> plus, minus;
  explicit PowerTable(const PointedRing& r, int max_loops) : ring(r) {
    for (int k = 0; k <= max_loops; ++k) {
      plus.push_back(r.a_power(static_cast<std::uint32_t>(k)));
      minus.push_back(-plus.back());
    }
  }
  const Scalar& get(int loops, bool negative) const { return negative ? minus.at(loops) : plus.at(loops); }
};

std::vector<Triplet> face_column(const FactorTable& ft, const ComplexSpec& spec, const DegreeBasis& src,
                                 const DegreeBasis* dst, std::size_t col, const PowerTable& pw) {
  std::vector<Triplet> out;
  const int p = src.p;
  const std::uint16_t* t = src.at(col);
  if (p == 1) {
    if (spec.ends.augmented) {
      const Scalar& c = pw.get(ft.left_right[t[0]][t[1]], false);
      if (!c.is_zero()) out.push_back({0, col, c});
    }
    return out;
  }
  std::uint16_t key[64];
  for (int i = 0; i < p; ++i) {
    Step s;
    if (i == 0) s = ft.left_int[t[0]][t[1]];
    else if (i == p - 1) s = ft.int_right[t[p - 1]][t[p]];
    else s = ft.int_int[t[i]][t[i + 1]];
    if (s.index < 0) continue;
    const Scalar& c = pw.get(s.loops, i % 2 == 1);
    if (c.is_zero()) continue;
    int w = 0;
    for (int k = 0; k <= p; ++k) {
      if (k == i) key[w++] = static_cast<std::uint16_t>(s.index);
      else if (k != i + 1) key[w++] = t[k];
    }
    long row = dst->find(key);
    if (row < 0) {
      if (spec.subquotient && ft.dividers_of(key, p - 1) > ft.dividers_of(t, p)) continue;
      throw std::logic_error("face of " + ft.encode(t, p) + " left the basis");
    }
    out.push_back({static_cast<std::size_t>(row), col, c});
  }
  return out;
}

}  // namespace

ChainComplexData build_complex(const ComplexSpec& spec, int threads) {
  spec.validate();
  if (spec.max_degree > 60) throw SpecError("max degree too large");
  FactorTable ft(spec.two_n, spec.ends);
  ChainComplexData out;
  out.ring = spec.ring;
  out.min_degree = spec.min_degree();
  out.max_degree = spec.max_degree;
  out.basis.resize(spec.max_degree + 1);
  out.weights.resize(spec.max_degree + 1);
  out.boundary.resize(spec.max_degree + 1);
  std::vector<DegreeBasis> bases(spec.max_degree + 1);
  for (int p = 1; p <= spec.max_degree; ++p) bases[p] = enumerate_tuples(ft, spec, p);
  if (spec.ends.augmented) {
    out.basis[0] = {Graffito::empty(spec.two_n).encode()};
    out.weights[0] = {0};
  }
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  for (int p = 1; p <= spec.max_degree; ++p) {
    const DegreeBasis& b = bases[p];
    out.weights[p] = b.weights;
    out.basis[p].resize(b.size());
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (long i = 0; i < static_cast<long>(b.size()); ++i) out.basis[p][i] = ft.encode(b.at(i), p);
  }
  PowerTable pw(spec.ring, spec.two_n * (spec.max_degree + 2));
  for (int p = 0; p <= spec.max_degree; ++p) {
    std::size_t rows = p == 0 ? 0 : out.dim(p - 1);
    if (p < out.min_degree) {
      out.boundary[p] = SparseMatrix(0, 0, spec.ring.domain());
      continue;
    }
    if (p == 0) {
      out.boundary[0] = SparseMatrix(0, 1, spec.ring.domain());
      continue;
    }
    const DegreeBasis& src = bases[p];
    const DegreeBasis* dst = p >= 2 ? &bases[p - 1] : nullptr;
    const long n = static_cast<long>(src.size());
    const long chunks = std::max<long>(1, std::min<long>(n, 8L * nthreads));
    std::vector<std::vector<Triplet>> parts(chunks);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (long k = 0; k < chunks; ++k) {
      long lo = n * k / chunks, hi = n * (k + 1) / chunks;
      for (long col = lo; col < hi; ++col) {
        auto f = face_column(ft, spec, src, dst, static_cast<std::size_t>(col), pw);
        for (auto& t : f) parts[k].push_back(std::move(t));
      }
    }
    std::vector<Triplet> all;
    for (auto& part : parts)
      for (auto& t : part) all.push_back(std::move(t));
    out.boundary[p] = SparseMatrix::from_triplets(rows, src.size(), spec.ring.domain(), std::move(all));
  }
  return out;
}

std::size_t count_graffiti(const ComplexSpec& spec, int degree) {
  spec.validate();
  if (degree < spec.min_degree()) return 0;
  if (degree == 0) return 1;
  FactorTable ft(spec.two_n, spec.ends);
  return enumerate_tuples(ft, spec, degree).size();
}

// ---------------------------------------------------------------------------
// Reference path

std::vector<Graffito> enumerate_graffiti(const ComplexSpec& spec, int degree) {
  spec.validate();
  std::vector<Graffito> out;
  if (degree < spec.min_degree()) return out;
  if (degree == 0) return {Graffito::empty(spec.two_n)};
  std::vector<TLDiagram> left, internal, right;
  for (auto& d : enumerate_diagrams(spec.ends.left_stubs(), spec.two_n))
    if (!d.has_left_left()) left.push_back(d);
  for (auto& d : enumerate_diagrams(spec.two_n, spec.two_n))
    if (!d.is_identity()) internal.push_back(d);
  for (auto& d : enumerate_diagrams(spec.two_n, spec.ends.right_stubs()))
    if (!d.has_right_right()) right.push_back(d);
  std::vector<TLDiagram> f(degree + 1);
  auto rec = [&](auto&& self, int slot) -> void {
    const auto& list = slot == 0 ? left : (slot == degree ? right : internal);
    for (const auto& d : list) {
      f[slot] = d;
      if (slot < degree) {
        self(self, slot + 1);
        continue;
      }
      Graffito g(spec.two_n, spec.ends, f);
      if (spec.weight && g.loop_count() != *spec.weight) continue;
      if (spec.dividers && g.divider_count() != *spec.dividers) continue;
      out.push_back(std::move(g));
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ChainComplexData build_complex_reference(const ComplexSpec& spec) {
  spec.validate();
  ChainComplexData out;
  out.ring = spec.ring;
  out.min_degree = spec.min_degree();
  out.max_degree = spec.max_degree;
  out.basis.resize(spec.max_degree + 1);
  out.weights.resize(spec.max_degree + 1);
  out.boundary.resize(spec.max_degree + 1);
  std::vector<std::map<std::string, std::size_t>> index(spec.max_degree + 1);
  std::vector<std::vector<Graffito>> graffiti(spec.max_degree + 1);
  for (int p = 0; p <= spec.max_degree; ++p) {
    graffiti[p] = enumerate_graffiti(spec, p);
    for (const auto& g : graffiti[p]) {
      index[p][g.encode()] = out.basis[p].size();
      out.basis[p].push_back(g.encode());
      out.weights[p].push_back(g.loop_count());
    }
  }
  for (int p = 0; p <= spec.max_degree; ++p) {
    std::size_t rows = p == 0 ? 0 : out.dim(p - 1);
    std::vector<Triplet> t;
    for (std::size_t col = 0; col < graffiti[p].size(); ++col) {
      if (p == 0) continue;
      Chain dc = differential(Chain::of(graffiti[p][col], spec.ring, spec.ends.augmented));
      for (const auto& [h, c] : dc.terms()) {
        auto it = index[p - 1].find(h.encode());
        if (it == index[p - 1].end()) {
          if (spec.subquotient && h.divider_count() > graffiti[p][col].divider_count()) continue;
          throw std::logic_error("face of " + graffiti[p][col].encode() + " left the basis");
        }
        t.push_back({it->second, col, c});
      }
    }
    out.boundary[p] = SparseMatrix::from_triplets(rows, graffiti[p].size(), spec.ring.domain(), std::move(t));
  }
  return out;
}

}  // namespace tlloops
