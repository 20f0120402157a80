#include "tlloops/linalg.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace tlloops {

namespace {

int cmpabs(const mpz_class& x, const mpz_class& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Domain domain)
    : rows_(rows), cols_(cols), domain_(domain) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, Domain domain, std::vector<Triplet> entries) {
  SparseMatrix m(rows, cols, domain);
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) throw LinalgError("matrix entry index out of range");
    if (!(t.value.domain() == domain)) throw DomainMismatch("matrix entry outside " + domain.name());
  }
  std::sort(entries.begin(), entries.end(),
            [](const Triplet& x, const Triplet& y) { return x.row != y.row ? x.row < y.row : x.col < y.col; });
  for (auto& t : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == t.row && m.entries_.back().col == t.col) {
      m.entries_.back().value += t.value;
      if (m.entries_.back().value.is_zero()) m.entries_.pop_back();
    } else if (!t.value.is_zero()) {
      m.entries_.push_back(std::move(t));
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long>>& rows, Domain domain) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw LinalgError("ragged dense matrix");
    for (std::size_t j = 0; j < ncols; ++j)
      if (rows[i][j] != 0) t.push_back({i, j, Scalar::from_int(domain, rows[i][j])});
  }
  return from_triplets(rows.size(), ncols, domain, std::move(t));
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(r, c), [](const Triplet& t, const auto& key) {
    return t.row != key.first ? t.row < key.first : t.col < key.second;
  });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return Scalar::zero(domain_);
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_triplets(cols_, rows_, domain_, std::move(t));
}

std::vector<Scalar> SparseMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw LinalgError("dimension mismatch: vector of length " + std::to_string(v.size()));
  std::vector<Scalar> out(rows_, Scalar::zero(domain_));
  for (const auto& e : entries_)
    if (!v[e.col].is_zero()) out[e.row] += e.value * v[e.col];
  return out;
}

SparseMatrix SparseMatrix::specialize(const PointedRing& target) const {
  if (domain_.kind() != Domain::Kind::int_poly_a) throw DomainMismatch("specialize expects a Z[a] matrix");
  return map(target.domain(), [&](const Scalar& s) { return tlloops::specialize(s, target); });
}

SparseMatrix SparseMatrix::change_domain(const Domain& target) const {
  if (domain_ == target) return *this;
  if (domain_.kind() != Domain::Kind::integers) throw DomainMismatch("only integer matrices change domain");
  return map(target, [&](const Scalar& s) { return embed_integer(s.as_integer(), target); });
}

SparseMatrix SparseMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<long> row_pos(rows_, -1), col_pos(cols_, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) row_pos.at(rows[i]) = static_cast<long>(i);
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos.at(cols[j]) = static_cast<long>(j);
  std::vector<Triplet> t;
  for (const auto& e : entries_)
    if (row_pos[e.row] >= 0 && col_pos[e.col] >= 0)
      t.push_back({static_cast<std::size_t>(row_pos[e.row]), static_cast<std::size_t>(col_pos[e.col]), e.value});
  return from_triplets(rows.size(), cols.size(), domain_, std::move(t));
}

nlohmann::json SparseMatrix::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : entries_) entries.push_back({e.row, e.col, e.value.str()});
  return {{"rows", rows_}, {"cols", cols_}, {"domain", domain_.name()}, {"entries", entries}};
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw LinalgError("shape mismatch in matrix product");
  if (!(a.domain_ == b.domain_)) throw DomainMismatch("matrix product over different domains");
  std::vector<std::vector<const Triplet*>> a_cols(a.cols_);
  for (const auto& e : a.entries_) a_cols[e.col].push_back(&e);
  std::vector<Triplet> out;
  for (const auto& e : b.entries_)
    for (const Triplet* t : a_cols[e.row]) out.push_back({t->row, e.col, t->value * e.value});
  return SparseMatrix::from_triplets(a.rows_, b.cols_, a.domain_, std::move(out));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.domain_ == b.domain_) || a.nnz() != b.nnz()) return false;
  for (std::size_t i = 0; i < a.nnz(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || !(x.value == y.value)) return false;
  }
  return true;
}

std::vector<mpz_class> SmithForm::torsion() const {
  std::vector<mpz_class> out;
  for (const auto& d : invariants)
    if (d > 1) out.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------
// Sparse elimination engine

namespace {

struct IntegerOps {
  using T = mpz_class;
  static T from(const Scalar& s) { return s.as_integer(); }
  bool is_zero(const T& x) const { return sgn(x) == 0; }
  bool acceptable(const T& x) const { return x == 1 || x == -1; }
  // multiplier f with x - f * pivot = 0, for a unit pivot
  T factor(const T& x, const T& pivot) const { return x * pivot; }
  void sub_mul(T& y, const T& f, const T& x) const { y -= f * x; }
  std::size_t cost(const T& x) const { return mpz_sizeinbase(x.get_mpz_t(), 2); }
};

struct RationalOps {
  using T = mpq_class;
  static T from(const Scalar& s) { return s.as_rational(); }
  bool is_zero(const T& x) const { return sgn(x) == 0; }
  bool acceptable(const T& x) const { return sgn(x) != 0; }
  T factor(const T& x, const T& pivot) const { return x / pivot; }
  void sub_mul(T& y, const T& f, const T& x) const { y -= f * x; }
  std::size_t cost(const T& x) const {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
  }
};

struct ResidueOps {
  using T = std::uint32_t;
  std::uint32_t p;
  static T from(const Scalar& s) { return s.as_residue(); }
  bool is_zero(T x) const { return x == 0; }
  bool acceptable(T x) const { return x != 0; }
  T inv(T x) const {
    std::uint64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<T>(r);
  }
  T factor(T x, T pivot) const { return static_cast<T>(static_cast<std::uint64_t>(x) * inv(pivot) % p); }
  void sub_mul(T& y, T f, T x) const {
    std::uint64_t prod = static_cast<std::uint64_t>(f) * x % p;
    y = static_cast<T>((y + p - prod) % p);
  }
  std::size_t cost(T) const { return 1; }
};

template <class Ops>
class Eliminator {
 public:
  using T = typename Ops::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  Eliminator(Ops ops, const SparseMatrix& a, const std::vector<std::vector<Scalar>>& rhs)
      : ops_(ops), rows_(a.rows()), col_rows_(a.cols()), row_dead_(a.rows(), 0), col_dead_(a.cols(), 0) {
    for (const auto& e : a.entries()) {
      rows_[e.row].emplace_back(static_cast<std::uint32_t>(e.col), Ops::from(e.value));
      col_rows_[e.col].push_back(static_cast<std::uint32_t>(e.row));
    }
    nrhs_ = rhs.size();
    riders_.assign(a.rows(), std::vector<T>(nrhs_));
    for (std::size_t k = 0; k < nrhs_; ++k) {
      if (rhs[k].size() != a.rows()) throw LinalgError("dimension mismatch: right-hand side length");
      for (std::size_t i = 0; i < a.rows(); ++i) riders_[i][k] = Ops::from(rhs[k][i]);
    }
    rider_ok_.assign(nrhs_, true);
  }

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<T>& pivots() const { return pivots_; }

  /// Eliminates every acceptable pivot, cheapest first.
  void unit_phase() {
    using Item = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::uint32_t c = 0; c < col_rows_.size(); ++c)
        if (!col_dead_[c] && compact(c) > 0 && has_acceptable(c)) queue.emplace(col_rows_[c].size(), c);
      while (!queue.empty()) {
        auto [count, c] = queue.top();
        queue.pop();
        if (col_dead_[c]) continue;
        std::size_t now = compact(c);
        if (now == 0) continue;
        if (now != count) {
          queue.emplace(now, c);
          continue;
        }
        long best = -1;
        std::size_t best_cost = 0;
        for (std::uint32_t r : col_rows_[c]) {
          const T& v = value(r, c);
          if (!ops_.acceptable(v)) continue;
          std::size_t cost = rows_[r].size() * 64 + ops_.cost(v);
          if (best < 0 || cost < best_cost) {
            best = r;
            best_cost = cost;
          }
        }
        if (best < 0) continue;
        eliminate(static_cast<std::uint32_t>(best), c);
        progress = true;
        for (std::uint32_t touched : touched_cols_)
          if (!col_dead_[touched]) queue.emplace(compact(touched), touched);
        touched_cols_.clear();
      }
    }
  }

  /// Integer-only: reduces what is left by repeated division with remainder.
  void gcd_phase() {
    while (true) {
      std::uint32_t r = 0, c = 0;
      bool found = false;
      for (std::uint32_t i = 0; i < rows_.size(); ++i) {
        if (row_dead_[i]) continue;
        for (const auto& [j, v] : rows_[i])
          if (!found || cmpabs(v, value(r, c)) < 0) {
            r = i;
            c = j;
            found = true;
          }
      }
      if (!found) return;
      while (true) {
        // clear column c below/above the pivot
        compact(c);
        bool moved = false;
        std::vector<std::uint32_t> others;
        for (std::uint32_t i : col_rows_[c])
          if (i != r) others.push_back(i);
        for (std::uint32_t i : others) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), value(i, c).get_mpz_t(), value(r, c).get_mpz_t());
          sub_row(i, q, r);
        }
        touched_cols_.clear();
        compact(c);
        for (std::uint32_t i : col_rows_[c])
          if (i != r && cmpabs(value(i, c), value(r, c)) < 0) {
            r = i;
            moved = true;
          }
        if (moved || col_rows_[c].size() > 1) continue;
        // column c holds only the pivot: clear row r with column operations
        const mpz_class piv = value(r, c);
        Row kept;
        long next = -1;
        for (auto& [j, v] : rows_[r]) {
          if (j != c) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), v.get_mpz_t(), piv.get_mpz_t());
            v -= q * piv;
            if (sgn(v) == 0) continue;
            if (next < 0 || cmpabs(v, value_in(kept, static_cast<std::uint32_t>(next))) < 0) next = j;
          }
          kept.emplace_back(j, v);
        }
        rows_[r] = std::move(kept);
        if (next >= 0) {
          c = static_cast<std::uint32_t>(next);
          continue;
        }
        mpz_class d = abs(piv);
        for (std::size_t k = 0; k < nrhs_; ++k)
          if (!mpz_divisible_p(riders_[r][k].get_mpz_t(), d.get_mpz_t())) rider_ok_[k] = false;
        pivots_.push_back(d);
        kill(r, c);
        break;
      }
    }
  }

  /// After elimination: right-hand sides consistent on the rows left over.
  std::vector<bool> rider_results() const {
    std::vector<bool> ok = rider_ok_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (row_dead_[i]) continue;
      for (std::size_t k = 0; k < nrhs_; ++k)
        if (!ops_.is_zero(riders_[i][k])) ok[k] = false;
    }
    return ok;
  }

  bool exhausted() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!row_dead_[i] && !rows_[i].empty()) return false;
    return true;
  }

 private:
  static const T& value_in(const Row& row, std::uint32_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t k) { return e.first < k; });
    return it->second;
  }

  const T* find(std::uint32_t r, std::uint32_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t k) { return e.first < k; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  }

  const T& value(std::uint32_t r, std::uint32_t c) const { return *find(r, c); }

  // Drops stale row references from a column list; returns the live count.
  std::size_t compact(std::uint32_t c) {
    auto& list = col_rows_[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove_if(list.begin(), list.end(), [&](std::uint32_t r) { return row_dead_[r] || !find(r, c); }),
               list.end());
    return list.size();
  }

  bool has_acceptable(std::uint32_t c) const {
    for (std::uint32_t r : col_rows_[c])
      if (!row_dead_[r]) {
        const T* v = find(r, c);
        if (v && ops_.acceptable(*v)) return true;
      }
    return false;
  }

  // row_i -= f * row_r, riders included
  void sub_row(std::uint32_t i, const T& f, std::uint32_t r) {
    if (ops_.is_zero(f)) return;
    const Row& b = rows_[r];
    Row& a = rows_[i];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
        out.push_back(std::move(a[x++]));
      } else if (x == a.size() || b[y].first < a[x].first) {
        T v{};
        ops_.sub_mul(v, f, b[y].second);
        col_rows_[b[y].first].push_back(i);
        touched_cols_.push_back(b[y].first);
        out.emplace_back(b[y].first, std::move(v));
        ++y;
      } else {
        T v = std::move(a[x].second);
        ops_.sub_mul(v, f, b[y].second);
        touched_cols_.push_back(b[y].first);
        if (!ops_.is_zero(v)) out.emplace_back(a[x].first, std::move(v));
        ++x;
        ++y;
      }
    }
    a = std::move(out);
    for (std::size_t k = 0; k < nrhs_; ++k) ops_.sub_mul(riders_[i][k], f, riders_[r][k]);
  }

  void eliminate(std::uint32_t r, std::uint32_t c) {
    const T pivot = value(r, c);
    std::vector<std::uint32_t> others;
    for (std::uint32_t i : col_rows_[c])
      if (i != r) others.push_back(i);
    for (std::uint32_t i : others) sub_row(i, ops_.factor(value(i, c), pivot), r);
    pivots_.push_back(pivot);
    kill(r, c);
  }

  void kill(std::uint32_t r, std::uint32_t c) {
    for (const auto& e : rows_[r]) touched_cols_.push_back(e.first);
    row_dead_[r] = 1;
    col_dead_[c] = 1;
    col_rows_[c].clear();
    Row().swap(rows_[r]);
  }

  Ops ops_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<char> row_dead_;
  std::vector<char> col_dead_;
  std::vector<std::uint32_t> touched_cols_;
  std::vector<T> pivots_;
  std::size_t nrhs_ = 0;
  std::vector<std::vector<T>> riders_;
  std::vector<bool> rider_ok_;
};

void require_integers(const SparseMatrix& a) {
  if (a.domain().kind() != Domain::Kind::integers)
    throw DomainMismatch("Smith normal form needs an integer matrix, got " + a.domain().name());
}

void require_field(const SparseMatrix& a) {
  if (!a.domain().is_field()) throw DomainMismatch("rank over a field needs Q or F_p, got " + a.domain().name());
}

}  // namespace

std::vector<mpz_class> normalize_invariants(std::vector<mpz_class> d) {
  std::erase_if(d, [](const mpz_class& x) { return x == 0; });
  for (auto& x : d) x = abs(x);
  std::sort(d.begin(), d.end());
  std::size_t first = 0;
  while (first < d.size() && d[first] == 1) ++first;
  for (std::size_t i = first; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

SmithForm smith_normal_form(const SparseMatrix& a) {
  require_integers(a);
  Eliminator<IntegerOps> e(IntegerOps{}, a, {});
  e.unit_phase();
  e.gcd_phase();
  SmithForm s;
  s.invariants = normalize_invariants(e.pivots());
  s.rank = s.invariants.size();
  return s;
}

std::size_t rank_over_field(const SparseMatrix& a) {
  require_field(a);
  if (a.domain().kind() == Domain::Kind::rationals) {
    Eliminator<RationalOps> e(RationalOps{}, a, {});
    e.unit_phase();
    return e.rank();
  }
  Eliminator<ResidueOps> e(ResidueOps{a.domain().modulus()}, a, {});
  e.unit_phase();
  return e.rank();
}

std::vector<bool> solvable(const SparseMatrix& a, const std::vector<std::vector<Scalar>>& rhs) {
  for (const auto& b : rhs)
    for (const auto& s : b)
      if (!(s.domain() == a.domain())) throw DomainMismatch("right-hand side outside the matrix domain");
  switch (a.domain().kind()) {
    case Domain::Kind::integers: {
      Eliminator<IntegerOps> e(IntegerOps{}, a, rhs);
      e.unit_phase();
      e.gcd_phase();
      return e.rider_results();
    }
    case Domain::Kind::rationals: {
      Eliminator<RationalOps> e(RationalOps{}, a, rhs);
      e.unit_phase();
      return e.rider_results();
    }
    case Domain::Kind::prime_field: {
      Eliminator<ResidueOps> e(ResidueOps{a.domain().modulus()}, a, rhs);
      e.unit_phase();
      return e.rider_results();
    }
    default:
      throw DomainMismatch("cannot solve linear systems over " + a.domain().name());
  }
}

std::size_t rank_mod(const SparseMatrix& integer_matrix, std::uint32_t p) {
  require_integers(integer_matrix);
  return rank_over_field(integer_matrix.change_domain(p == 0 ? Domain::rationals() : Domain::prime_field(p)));
}

// ---------------------------------------------------------------------------
// Dense references

namespace {

DenseIntMatrix identity_matrix(std::size_t n) {
  DenseIntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithForm smith_normal_form_dense(const SparseMatrix& a, bool with_transforms) {
  require_integers(a);
  const std::size_t m = a.rows(), n = a.cols();
  DenseIntMatrix S(m, std::vector<mpz_class>(n, 0));
  for (const auto& e : a.entries()) S[e.row][e.col] = e.value.as_integer();
  DenseIntMatrix U = with_transforms ? identity_matrix(m) : DenseIntMatrix{};
  DenseIntMatrix V = with_transforms ? identity_matrix(n) : DenseIntMatrix{};

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(S[i], S[j]);
    if (with_transforms) std::swap(U[i], U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : S) std::swap(row[i], row[j]);
    if (with_transforms)
      for (auto& row : V) std::swap(row[i], row[j]);
  };
  // row_i += f * row_j
  auto add_row = [&](std::size_t i, const mpz_class& f, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) S[i][k] += f * S[j][k];
    if (with_transforms)
      for (std::size_t k = 0; k < m; ++k) U[i][k] += f * U[j][k];
  };
  auto add_col = [&](std::size_t i, const mpz_class& f, std::size_t j) {
    for (std::size_t k = 0; k < m; ++k) S[k][i] += f * S[k][j];
    if (with_transforms)
      for (std::size_t k = 0; k < n; ++k) V[k][i] += f * V[k][j];
  };

  SmithForm out;
  const std::size_t limit = std::min(m, n);
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(S[i][j]) != 0 && (pi == m || cmpabs(S[i][j], S[pi][pj]) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (sgn(S[i][t]) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), S[i][t].get_mpz_t(), S[t][t].get_mpz_t());
          add_row(i, -q, t);
          if (sgn(S[i][t]) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (sgn(S[t][j]) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), S[t][j].get_mpz_t(), S[t][t].get_mpz_t());
          add_col(j, -q, t);
          if (sgn(S[t][j]) != 0) clean = false;
        }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(S[i][t]) != 0 && cmpabs(S[i][t], S[bi][bj]) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(S[t][j]) != 0 && cmpabs(S[t][j], S[bi][bj]) < 0) bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(S[i][j].get_mpz_t(), S[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(t, 1, bad);
    }
    if (sgn(S[t][t]) < 0) {
      for (std::size_t k = 0; k < n; ++k) S[t][k] = -S[t][k];
      if (with_transforms)
        for (std::size_t k = 0; k < m; ++k) U[t][k] = -U[t][k];
    }
    out.invariants.push_back(S[t][t]);
  }
  out.rank = out.invariants.size();
  if (with_transforms) {
    out.U = std::move(U);
    out.V = std::move(V);
    out.S = std::move(S);
  }
  return out;
}

std::size_t rank_over_field_dense(const SparseMatrix& a) {
  require_field(a);
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Scalar>> M(m, std::vector<Scalar>(n, Scalar::zero(a.domain())));
  for (const auto& e : a.entries()) M[e.row][e.col] = e.value;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t p = rank;
    while (p < m && M[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(M[p], M[rank]);
    Scalar inv = M[rank][c].inverse();
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (M[i][c].is_zero()) continue;
      Scalar f = M[i][c] * inv;
      for (std::size_t k = c; k < n; ++k) M[i][k] -= f * M[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace tlloops
