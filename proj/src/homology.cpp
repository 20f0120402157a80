#include "tlloops/homology.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>

namespace tlloops {

std::string HomologyGroup::str(const Domain& d) const {
  std::string base = d.kind() == Domain::Kind::prime_field ? "F" + std::to_string(d.modulus())
                     : d.kind() == Domain::Kind::rationals ? "Q"
                                                            : "Z";
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back(base);
  if (rank > 1) parts.push_back(base + "^" + std::to_string(rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p;
  return out;
}

nlohmann::json HomologyGroup::to_json() const {
  nlohmann::json torsion_json = nlohmann::json::array();
  for (const auto& x : torsion) {
    if (x.fits_slong_p()) torsion_json.push_back(x.get_si());
    else torsion_json.push_back(x.get_str());
  }
  return {{"degree", degree}, {"rank", rank}, {"torsion", torsion_json}, {"basis_size", basis_size}};
}

std::string DSquaredReport::str() const {
  if (ok) return "d^2 = 0";
  return "d_" + std::to_string(degree - 1) + " d_" + std::to_string(degree) + " has entry " + value + " at (" +
         std::to_string(row) + "," + std::to_string(col) + ")";
}

DSquaredReport validate_d_squared(const ChainComplexData& c) {
  DSquaredReport r;
  for (int p = c.min_degree + 1; p <= c.max_degree; ++p) {
    const SparseMatrix& a = c.d(p - 1);
    const SparseMatrix& b = c.d(p);
    if (a.cols() != b.rows())
      throw LinalgError("shape mismatch between d_" + std::to_string(p - 1) + " and d_" + std::to_string(p));
    SparseMatrix prod = a * b;
    if (!prod.is_zero()) {
      const Triplet& t = prod.entries().front();
      r.ok = false;
      r.degree = p;
      r.row = t.row;
      r.col = t.col;
      r.value = t.value.str();
      return r;
    }
  }
  return r;
}

namespace {

void check_trusted(const ChainComplexData& c, int p) {
  if (p < c.min_degree || p >= c.max_degree)
    throw HomologyError("degree " + std::to_string(p) + " is outside the trusted range [" +
                        std::to_string(c.min_degree) + "," + std::to_string(c.max_degree - 1) + "]");
}

struct BoundaryInfo {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
};

BoundaryInfo analyze(const SparseMatrix& m) {
  BoundaryInfo info;
  switch (m.domain().kind()) {
    case Domain::Kind::integers: {
      SmithForm s = smith_normal_form(m);
      info.rank = s.rank;
      info.torsion = s.torsion();
      break;
    }
    case Domain::Kind::rationals:
    case Domain::Kind::prime_field:
      info.rank = rank_over_field(m);
      break;
    default:
      throw HomologyError("homology over Z[a] is not computed; specialize to a pointed ring first");
  }
  return info;
}

using SparseVec = std::map<std::size_t, Scalar>;

// v -= f * w
void axpy(SparseVec& v, const Scalar& f, const SparseVec& w) {
  for (const auto& [i, x] : w) {
    auto [it, inserted] = v.try_emplace(i, -(f * x));
    if (!inserted) {
      it->second -= f * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

// Column-reduction table keyed by lowest (largest) row index.
struct PivotTable {
  std::map<std::size_t, SparseVec> rows;
  // Reduces v in place; returns true if v became zero.
  bool reduce(SparseVec& v, SparseVec* comb, std::map<std::size_t, SparseVec>* combs) const {
    while (!v.empty()) {
      auto low = v.rbegin()->first;
      auto it = rows.find(low);
      if (it == rows.end()) return false;
      Scalar f = v.rbegin()->second * it->second.rbegin()->second.inverse();
      axpy(v, f, it->second);
      if (comb) axpy(*comb, f, combs->at(low));
    }
    return true;
  }
};

std::vector<SparseVec> columns(const SparseMatrix& m) {
  std::vector<SparseVec> out(m.cols());
  for (const auto& e : m.entries()) out[e.col].emplace(e.row, e.value);
  return out;
}

// Field case: kernel of d_p modulo the image of d_{p+1}.
std::vector<SparseVec> field_representatives(const SparseMatrix& dp, const SparseMatrix& dp1, const Domain& field) {
  PivotTable table;
  std::map<std::size_t, SparseVec> combs;
  std::vector<SparseVec> kernel;
  auto cols = columns(dp);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseVec v = cols[j];
    SparseVec comb{{j, Scalar::one(field)}};
    if (table.reduce(v, &comb, &combs)) {
      kernel.push_back(std::move(comb));
    } else {
      auto low = v.rbegin()->first;
      table.rows[low] = std::move(v);
      combs[low] = std::move(comb);
    }
  }
  PivotTable image;
  for (auto& v : columns(dp1))
    if (!image.reduce(v, nullptr, nullptr)) image.rows[v.rbegin()->first] = std::move(v);
  std::vector<SparseVec> reps;
  for (auto& z : kernel) {
    SparseVec v = z;
    if (!image.reduce(v, nullptr, nullptr)) {
      image.rows[v.rbegin()->first] = std::move(v);
      reps.push_back(z);
    }
  }
  return reps;
}

std::vector<std::vector<Scalar>> representatives(const ChainComplexData& c, int p) {
  const Domain& d = c.ring.domain();
  const bool integral = d.kind() == Domain::Kind::integers;
  const Domain field = integral ? Domain::rationals() : d;
  SparseMatrix dp = integral ? c.d(p).change_domain(field) : c.d(p);
  SparseMatrix dp1 = integral ? c.d(p + 1).change_domain(field) : c.d(p + 1);
  std::vector<std::vector<Scalar>> out;
  for (auto& rep : field_representatives(dp, dp1, field)) {
    std::vector<Scalar> v(c.dim(p), Scalar::zero(d));
    if (integral) {
      mpz_class den = 1, g = 0;
      for (auto& [i, x] : rep) den = lcm(den, x.as_rational().get_den());
      for (auto& [i, x] : rep) g = gcd(g, mpz_class(x.as_rational() * den));
      for (auto& [i, x] : rep) v[i] = Scalar::from_int(d, mpz_class(x.as_rational() * den) / g);
    } else {
      for (auto& [i, x] : rep) v[i] = x;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<HomologyGroup> homology(const ChainComplexData& c, int lo, int hi, const HomologyOptions& opts) {
  for (int p = lo; p <= hi; ++p) check_trusted(c, p);
  std::map<int, BoundaryInfo> info;
  auto get = [&](int p) -> const BoundaryInfo& {
    auto it = info.find(p);
    if (it == info.end()) it = info.emplace(p, analyze(c.d(p))).first;
    return it->second;
  };
  std::vector<HomologyGroup> out;
  for (int p = lo; p <= hi; ++p) {
    HomologyGroup h;
    h.degree = p;
    h.basis_size = c.dim(p);
    const auto& in = get(p);
    const auto& next = get(p + 1);
    h.rank = h.basis_size - in.rank - next.rank;
    h.torsion = next.torsion;
    if (opts.representatives) h.representatives = representatives(c, p);
    out.push_back(std::move(h));
  }
  return out;
}

bool is_cycle(const ChainComplexData& c, const std::vector<Scalar>& v, int p) {
  if (p < c.min_degree || p > c.max_degree) throw HomologyError("degree out of range");
  if (v.size() != c.dim(p)) throw LinalgError("dimension mismatch: vector of length " + std::to_string(v.size()));
  for (const auto& x : c.d(p).apply(v))
    if (!x.is_zero()) return false;
  return true;
}

bool is_boundary(const ChainComplexData& c, const std::vector<Scalar>& v, int p) {
  check_trusted(c, p);
  if (v.size() != c.dim(p)) throw LinalgError("dimension mismatch: vector of length " + std::to_string(v.size()));
  return solvable(c.d(p + 1), {v}).front();
}

std::vector<WeightBlock> weight_decompose(const ChainComplexData& c) {
  if (!c.ring.a_is_zero()) throw HomologyError("weight decomposition needs a = 0");
  if (!c.labeled()) throw HomologyError("weight decomposition needs weight labels");
  std::set<int> all;
  for (int p = c.min_degree; p <= c.max_degree; ++p) all.insert(c.weights[p].begin(), c.weights[p].end());
  for (int p = c.min_degree + 1; p <= c.max_degree; ++p)
    for (const auto& e : c.d(p).entries())
      if (c.weights[p - 1][e.row] != c.weights[p][e.col])
        throw HomologyError("boundary is not block diagonal across weights in degree " + std::to_string(p));
  std::vector<WeightBlock> out;
  for (int w : all) {
    WeightBlock b{w, ChainComplexData{}, {}};
    b.complex.ring = c.ring;
    b.complex.min_degree = c.min_degree;
    b.complex.max_degree = c.max_degree;
    b.complex.basis.resize(c.max_degree + 1);
    b.complex.weights.resize(c.max_degree + 1);
    b.complex.boundary.resize(c.max_degree + 1);
    b.origin.resize(c.max_degree + 1);
    for (int p = c.min_degree; p <= c.max_degree; ++p)
      for (std::size_t i = 0; i < c.dim(p); ++i)
        if (c.weights[p][i] == w) {
          b.origin[p].push_back(i);
          b.complex.basis[p].push_back(c.basis[p][i]);
          b.complex.weights[p].push_back(w);
        }
    for (int p = 0; p <= c.max_degree; ++p) {
      if (p < c.min_degree) {
        b.complex.boundary[p] = c.d(p);
        continue;
      }
      std::vector<std::size_t> rows = p > c.min_degree ? b.origin[p - 1] : std::vector<std::size_t>{};
      if (p == c.min_degree) {
        b.complex.boundary[p] = SparseMatrix(0, b.origin[p].size(), c.ring.domain());
        continue;
      }
      b.complex.boundary[p] = c.d(p).submatrix(rows, b.origin[p]);
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<HomologyGroup> homology_by_weight(const ChainComplexData& c, int lo, int hi, const HomologyOptions& opts) {
  for (int p = lo; p <= hi; ++p) check_trusted(c, p);
  auto blocks = weight_decompose(c);
  std::vector<std::vector<HomologyGroup>> parts(blocks.size());
  const int nthreads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (long b = 0; b < static_cast<long>(blocks.size()); ++b) {
    try {
      parts[b] = homology(blocks[b].complex, lo, hi, opts);
    } catch (...) {
#pragma omp critical
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<HomologyGroup> out;
  for (int p = lo; p <= hi; ++p) {
    HomologyGroup h;
    h.degree = p;
    h.basis_size = c.dim(p);
    std::vector<mpz_class> torsion;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const HomologyGroup& g = parts[b][p - lo];
      h.rank += g.rank;
      torsion.insert(torsion.end(), g.torsion.begin(), g.torsion.end());
      for (const auto& rep : g.representatives) {
        std::vector<Scalar> v(c.dim(p), Scalar::zero(c.ring.domain()));
        for (std::size_t i = 0; i < rep.size(); ++i) v[blocks[b].origin[p][i]] = rep[i];
        h.representatives.push_back(std::move(v));
      }
    }
    h.torsion = normalize_invariants(std::move(torsion));
    out.push_back(std::move(h));
  }
  return out;
}

ChainComplexData build_word_complex(int alphabet, int max_degree, const PointedRing& ring) {
  if (alphabet < 1) throw HomologyError("alphabet must have at least one letter");
  if (max_degree < 1) throw HomologyError("max degree must be at least 1");
  ChainComplexData c;
  c.ring = ring;
  c.min_degree = 1;
  c.max_degree = max_degree;
  c.basis.resize(max_degree + 1);
  c.weights.resize(max_degree + 1);
  c.boundary.resize(max_degree + 1);
  c.boundary[0] = SparseMatrix(0, 0, ring.domain());
  std::vector<std::size_t> size(max_degree + 1, 1);
  for (int p = 1; p <= max_degree; ++p) size[p] = size[p - 1] * static_cast<std::size_t>(alphabet);
  for (int p = 1; p <= max_degree; ++p) {
    for (std::size_t w = 0; w < size[p]; ++w) {
      std::string s;
      std::size_t x = w;
      std::vector<int> digits(p);
      for (int i = p - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(x % alphabet);
        x /= alphabet;
      }
      for (int i = 0; i < p; ++i) s += (i ? "." : "") + std::to_string(digits[i] + 1);
      c.basis[p].push_back(s);
    }
    std::vector<Triplet> t;
    if (p > 1) {
      for (std::size_t w = 0; w < size[p]; ++w) {
        for (int i = 0; i < p; ++i) {
          // delete digit i (0-based from the left); sign (-1)^{(i+1)+1}
          std::size_t high = w / size[p - i], low = w % size[p - i - 1];
          std::size_t row = high * size[p - i - 1] + low;
          t.push_back({row, w, ring.from_int(i % 2 == 0 ? 1 : -1)});
        }
      }
    }
    c.boundary[p] = SparseMatrix::from_triplets(size[p - 1] * (p > 1 ? 1 : 0), size[p], ring.domain(), std::move(t));
  }
  return c;
}

}  // namespace tlloops
