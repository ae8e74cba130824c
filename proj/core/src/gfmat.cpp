#include "rigx/gfmat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace rigx {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotComputingM: return "NotComputingM";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::InternalVerificationFailed: return "InternalVerificationFailed";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

bool is_supported_prime(unsigned p) noexcept {
  switch (p) {
    case 2: case 3: case 5: case 7: case 11: case 13: return true;
    default: return false;
  }
}

Field::Field(unsigned prime) : p(prime) {
  require(is_supported_prime(prime), ErrorKind::InvalidArgument,
          "unsupported modulus p=" + std::to_string(prime) + " (primes 2..13 only)");
}

Elem Field::inv(Elem a) const {
  require(a % p != 0, ErrorKind::InvalidArgument, "inverse of zero");
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return static_cast<Elem>(x);
  fail(ErrorKind::InvalidArgument, "no inverse");
}

// ---------------------------------------------------------------- FieldMatrix

FieldMatrix::FieldMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require(is_supported_prime(p), ErrorKind::InvalidArgument,
          "unsupported modulus p=" + std::to_string(p));
}

FieldMatrix FieldMatrix::from_rows(unsigned p, const std::vector<std::vector<long>>& rows,
                                   std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  FieldMatrix m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

FieldMatrix FieldMatrix::identity(unsigned p, std::size_t n) {
  FieldMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FieldMatrix FieldMatrix::from_columns(unsigned p, std::size_t rows, const std::vector<Vec>& cols) {
  FieldMatrix m(p, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

void FieldMatrix::set(std::size_t i, std::size_t j, long value) {
  long r = value % static_cast<long>(p_);
  if (r < 0) r += p_;
  data_[i * cols_ + j] = static_cast<Elem>(r);
}

Vec FieldMatrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = at(i, j);
  return t;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> idx) const {
  FieldMatrix out(p_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out.data_[i * idx.size() + k] = at(i, idx[k]);
  return out;
}

FieldMatrix FieldMatrix::select_rows(std::span<const std::size_t> idx) const {
  FieldMatrix out(p_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(idx[k] * cols_), cols_,
                out.data_.begin() + static_cast<std::ptrdiff_t>(k * cols_));
  return out;
}

FieldMatrix FieldMatrix::hstack(const FieldMatrix& right) const {
  require(p_ == right.p_ && rows_ == right.rows_, ErrorKind::DimensionMismatch,
          "hstack: row count or field mismatch");
  FieldMatrix out(p_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto dst = out.row_mut(i);
    std::copy(row(i).begin(), row(i).end(), dst.begin());
    std::copy(right.row(i).begin(), right.row(i).end(), dst.begin() + static_cast<std::ptrdiff_t>(cols_));
  }
  return out;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& below) const {
  require(p_ == below.p_ && cols_ == below.cols_, ErrorKind::DimensionMismatch,
          "vstack: column count or field mismatch");
  FieldMatrix out(p_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

std::size_t FieldMatrix::row_sparsity() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows_; ++i) best = std::max(best, hamming_weight(row(i)));
  return best;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

std::strong_ordering operator<=>(const FieldMatrix& a, const FieldMatrix& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                                b.data_.end());
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  require(a.p() == b.p() && a.cols() == b.rows(), ErrorKind::DimensionMismatch,
          "matrix product shape mismatch");
  const unsigned p = a.p();
  FieldMatrix c(p, a.rows(), b.cols());
  std::vector<unsigned> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const unsigned aik = a.at(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, j, acc[j] % p);
  }
  return c;
}

namespace {

FieldMatrix combine(const FieldMatrix& a, const FieldMatrix& b, bool subtract) {
  require(a.p() == b.p() && a.rows() == b.rows() && a.cols() == b.cols(),
          ErrorKind::DimensionMismatch, "elementwise shape mismatch");
  Field f(a.p());
  FieldMatrix c(a.p(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.set(i, j, subtract ? f.sub(a.at(i, j), b.at(i, j)) : f.add(a.at(i, j), b.at(i, j)));
  return c;
}

}  // namespace

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) { return combine(a, b, false); }
FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) { return combine(a, b, true); }

Vec mat_vec(const FieldMatrix& a, std::span<const Elem> x) {
  require(x.size() == a.cols(), ErrorKind::DimensionMismatch, "mat_vec shape mismatch");
  Vec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    unsigned acc = 0;
    auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) acc += unsigned(r[j]) * x[j];
    y[i] = static_cast<Elem>(acc % a.p());
  }
  return y;
}

std::size_t hamming_weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

// ----------------------------------------------------------------- elimination

namespace {

// In-place reduced row echelon form; pivots are searched only in columns
// [0, pivot_limit).
std::vector<std::size_t> rref_in_place(FieldMatrix& m, std::size_t pivot_limit) {
  const Field f(m.p());
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < pivot_limit && lead_row < m.rows(); ++c) {
    std::size_t sel = lead_row;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead_row) {
      auto a = m.row_mut(sel);
      auto b = m.row_mut(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto lead = m.row_mut(lead_row);
    const Elem inv = f.inv(lead[c]);
    for (auto& e : lead) e = f.mul(e, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row) continue;
      auto row = m.row_mut(r);
      const Elem factor = row[c];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) row[j] = f.sub(row[j], f.mul(factor, lead[j]));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const FieldMatrix& m) {
  RrefResult out{m, 0, {}};
  out.pivots = rref_in_place(out.reduced, m.cols());
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const FieldMatrix& m) {
  // Eliminate on the thinner orientation.
  if (m.cols() > m.rows()) {
    FieldMatrix t = m.transpose();
    return rref_in_place(t, t.cols()).size();
  }
  FieldMatrix c = m;
  return rref_in_place(c, c.cols()).size();
}

std::optional<FieldMatrix> solve_right(const FieldMatrix& a, const FieldMatrix& y) {
  require(a.p() == y.p() && a.rows() == y.rows(), ErrorKind::DimensionMismatch,
          "solve_right: A and Y must have the same row count and field");
  const std::size_t n = a.cols();
  // Columns of A are reversed so that every pivot variable depends only on free
  // variables of smaller index; zero free variables then give the
  // lexicographically least solution of each column system.
  std::vector<std::size_t> rev(n);
  std::iota(rev.begin(), rev.end(), 0);
  std::reverse(rev.begin(), rev.end());
  FieldMatrix aug = a.select_columns(rev).hstack(y);
  const auto pivots = rref_in_place(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    for (std::size_t j = n; j < aug.cols(); ++j)
      if (aug.at(r, j) != 0) return std::nullopt;
  FieldMatrix x(a.p(), n, y.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t var = rev[pivots[r]];
    for (std::size_t j = 0; j < y.cols(); ++j) x.set(var, j, aug.at(r, n + j));
  }
  return x;
}

// ---------------------------------------------------------------- EchelonBasis

void EchelonBasis::reduce(Vec& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Elem factor = v[pivots_[k]];
    if (factor == 0) continue;
    const Vec& r = rows_[k];
    for (std::size_t j = 0; j < length_; ++j)
      if (r[j] != 0) v[j] = field_.sub(v[j], field_.mul(factor, r[j]));
  }
}

bool EchelonBasis::insert(Vec v) {
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
  if (it == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - v.begin());
  const Elem inv = field_.inv(*it);
  for (auto& e : v) e = field_.mul(e, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(Vec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

std::vector<std::size_t> extend_to_basis(const FieldMatrix& partial, const FieldMatrix& target) {
  require(partial.p() == target.p() && partial.rows() == target.rows(),
          ErrorKind::DimensionMismatch, "extend_to_basis: row count or field mismatch");
  EchelonBasis basis(target.p(), target.rows());
  for (std::size_t j = 0; j < partial.cols(); ++j) basis.insert(partial.column(j));
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < target.cols(); ++j)
    if (basis.insert(target.column(j))) chosen.push_back(j);
  return chosen;
}

// --------------------------------------------------------------- SubspaceBasis

SubspaceBasis::SubspaceBasis(unsigned p, std::size_t ambient) : basis_(p, 0, ambient) {}

SubspaceBasis SubspaceBasis::row_span(const FieldMatrix& generators) {
  auto r = rref(generators);
  std::vector<std::size_t> keep(r.rank);
  std::iota(keep.begin(), keep.end(), 0);
  SubspaceBasis s;
  s.basis_ = r.reduced.select_rows(keep);
  return s;
}

SubspaceBasis SubspaceBasis::column_span(const FieldMatrix& generators) {
  return row_span(generators.transpose());
}

SubspaceBasis SubspaceBasis::from_canonical(FieldMatrix basis) {
  SubspaceBasis s;
  s.basis_ = std::move(basis);
  return s;
}

bool SubspaceBasis::contains(std::span<const Elem> v) const {
  require(v.size() == ambient(), ErrorKind::DimensionMismatch, "vector length mismatch");
  // The basis is in RREF: subtract pivot multiples and test for zero.
  const Field f(p());
  Vec w(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    auto row = basis_.row(r);
    const auto pivot = static_cast<std::size_t>(
        std::find_if(row.begin(), row.end(), [](Elem e) { return e != 0; }) - row.begin());
    const Elem factor = w[pivot];
    if (factor == 0) continue;
    for (std::size_t j = pivot; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(factor, row[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
  return row_span(basis_.vstack(other.basis_));
}

std::size_t SubspaceBasis::intersection_dim(const SubspaceBasis& other) const {
  return dim() + other.dim() - rank(basis_.vstack(other.basis_));
}

SubspaceBasis SubspaceBasis::intersection(const SubspaceBasis& other) const {
  // Zassenhaus: rref of [[A A]; [B 0]]; rows whose left half vanishes carry
  // a basis of A ∩ B in their right half.
  const std::size_t n = ambient();
  FieldMatrix z(p(), dim() + other.dim(), 2 * n);
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      z.set(r, j, basis_.at(r, j));
      z.set(r, n + j, basis_.at(r, j));
    }
  for (std::size_t r = 0; r < other.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) z.set(dim() + r, j, other.basis_.at(r, j));
  auto red = rref(z);
  FieldMatrix gens(p(), 0, n);
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] < n) continue;
    FieldMatrix row(p(), 1, n);
    for (std::size_t j = 0; j < n; ++j) row.set(0, j, red.reduced.at(r, n + j));
    gens = gens.vstack(row);
  }
  return row_span(gens);
}

// ----------------------------------------------------------------- enumeration

std::uint64_t gaussian_binomial(std::size_t ambient, std::size_t dim, unsigned p) {
  if (dim > ambient) return 0;
  // Sum over pivot sets of p^(free entries); avoids big-number division.
  std::uint64_t total = 0;
  std::vector<std::size_t> piv(dim);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    std::uint64_t free = 0;
    for (std::size_t r = 0; r < dim; ++r) free += (ambient - 1 - piv[r]) - (dim - 1 - r);
    total = detail::sat_add(total, detail::sat_pow(p, free));
    // next combination
    std::size_t i = dim;
    while (i > 0 && piv[i - 1] == ambient - dim + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < dim; ++j) piv[j] = piv[j - 1] + 1;
  }
  return total;
}

std::uint64_t enumerate_subspaces(std::size_t ambient, std::size_t dim, unsigned p,
                                  const SubspaceVisitor& visit, const SearchConfig& cfg) {
  require(dim <= ambient, ErrorKind::InvalidArgument, "enumerate_subspaces: dim > ambient");
  check_budget("enumerate_subspaces", gaussian_binomial(ambient, dim, p), cfg);
  std::uint64_t visited = 0;
  std::vector<std::size_t> piv(dim);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    std::vector<bool> is_pivot(ambient, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = piv[r] + 1; c < ambient; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(r, c);
    FieldMatrix b(p, dim, ambient);
    for (std::size_t r = 0; r < dim; ++r) b.set(r, piv[r], 1);
    std::vector<Elem> counter(free_pos.size(), 0);
    while (true) {
      ++visited;
      if (!visit(SubspaceBasis::from_canonical(b))) return visited;
      // Increment with the first free position most significant.
      bool wrapped = true;
      for (std::size_t k = free_pos.size(); k-- > 0;) {
        const bool carry = ++counter[k] == p;
        if (carry) counter[k] = 0;
        b.set(free_pos[k].first, free_pos[k].second, counter[k]);
        if (!carry) {
          wrapped = false;
          break;
        }
      }
      if (wrapped) break;
    }
    std::size_t i = dim;
    while (i > 0 && piv[i - 1] == ambient - dim + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < dim; ++j) piv[j] = piv[j - 1] + 1;
  }
  return visited;
}

std::vector<Vec> subspace_members(const SubspaceBasis& l, const SearchConfig& cfg) {
  check_budget("subspace_members", detail::sat_pow(l.p(), l.dim()), cfg);
  const Field f(l.p());
  const std::size_t d = l.dim();
  std::vector<Vec> out;
  std::vector<Elem> coeff(d, 0);
  while (true) {
    Vec v(l.ambient(), 0);
    for (std::size_t r = 0; r < d; ++r) {
      if (coeff[r] == 0) continue;
      auto row = l.basis().row(r);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(coeff[r], row[j]));
    }
    out.push_back(std::move(v));
    std::size_t k = d;
    while (k > 0 && ++coeff[k - 1] == l.p()) coeff[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::size_t distance_to_subspace(std::span<const Elem> v, const SubspaceBasis& l,
                                 const SearchConfig& cfg) {
  return hamming_distance(v, nearest_in_subspace(v, l, cfg));
}

Vec nearest_in_subspace(std::span<const Elem> v, const SubspaceBasis& l, const SearchConfig& cfg) {
  require(v.size() == l.ambient(), ErrorKind::DimensionMismatch,
          "distance_to_subspace: length mismatch");
  const auto members = subspace_members(l, cfg);
  std::size_t best = v.size() + 1;
  const Vec* arg = nullptr;
  for (const auto& u : members) {
    const auto d = hamming_distance(v, u);
    if (d < best) {
      best = d;
      arg = &u;
      if (d == 0) break;
    }
  }
  return *arg;
}

std::uint64_t general_linear_order(std::size_t n, unsigned p) {
  std::uint64_t order = 1;
  const std::uint64_t pn = detail::sat_pow(p, n);
  for (std::size_t i = 0; i < n; ++i) order = detail::sat_mul(order, pn - detail::sat_pow(p, i));
  return order;
}

std::uint64_t enumerate_invertible(std::size_t n, unsigned p,
                                   const std::function<bool(const FieldMatrix&)>& visit,
                                   const SearchConfig& cfg) {
  check_budget("enumerate_invertible", general_linear_order(n, p), cfg);
  const std::uint64_t row_count = detail::sat_pow(p, n);
  std::vector<Vec> all_rows;
  for (std::uint64_t code = 0; code < row_count; ++code) {
    Vec r(n);
    std::uint64_t c = code;
    for (std::size_t j = n; j-- > 0;) {
      r[j] = static_cast<Elem>(c % p);
      c /= p;
    }
    all_rows.push_back(std::move(r));
  }
  FieldMatrix t(p, n, n);
  std::uint64_t visited = 0;
  bool stop = false;
  std::function<void(std::size_t, const EchelonBasis&)> dfs = [&](std::size_t depth,
                                                                  const EchelonBasis& basis) {
    if (stop) return;
    if (depth == n) {
      ++visited;
      if (!visit(t)) stop = true;
      return;
    }
    for (const auto& r : all_rows) {
      EchelonBasis next = basis;
      if (!next.insert(r)) continue;
      for (std::size_t j = 0; j < n; ++j) t.set(depth, j, r[j]);
      dfs(depth + 1, next);
      if (stop) return;
    }
  };
  dfs(0, EchelonBasis(p, n));
  return visited;
}

}  // namespace rigx
