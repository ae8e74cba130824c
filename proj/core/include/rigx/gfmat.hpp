#pragma once

// Dense matrices, vectors and subspaces over small prime fields GF(p).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigx/search.hpp"

namespace rigx {

using Elem = std::uint8_t;
using Vec = std::vector<Elem>;

inline constexpr unsigned kMaxPrime = 13;

bool is_supported_prime(unsigned p) noexcept;

/// Arithmetic helpers for GF(p). All inputs must already be reduced mod p.
struct Field {
  unsigned p;

  explicit Field(unsigned prime);

  Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + b) % p); }
  Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + p - b) % p); }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((a * b) % p); }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>((p - a) % p); }
  Elem inv(Elem a) const;
};

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(unsigned p, std::size_t rows, std::size_t cols);

  /// Builds from integer rows, reducing each entry mod p (negatives allowed).
  /// `cols` is needed only when `rows` is empty.
  static FieldMatrix from_rows(unsigned p, const std::vector<std::vector<long>>& rows,
                               std::size_t cols = 0);
  static FieldMatrix identity(unsigned p, std::size_t n);
  static FieldMatrix from_columns(unsigned p, std::size_t rows, const std::vector<Vec>& cols);

  unsigned p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, long value);

  std::span<const Elem> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Elem> row_mut(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vec column(std::size_t j) const;
  const Vec& data() const noexcept { return data_; }

  FieldMatrix transpose() const;
  FieldMatrix select_columns(std::span<const std::size_t> idx) const;
  FieldMatrix select_rows(std::span<const std::size_t> idx) const;
  FieldMatrix hstack(const FieldMatrix& right) const;
  FieldMatrix vstack(const FieldMatrix& below) const;

  /// Maximum number of nonzero entries in any row (0 for an empty matrix).
  std::size_t row_sparsity() const;
  bool is_zero() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
  /// Lexicographic on (p, rows, cols, row-major entries).
  friend std::strong_ordering operator<=>(const FieldMatrix& a, const FieldMatrix& b);

 private:
  unsigned p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
Vec mat_vec(const FieldMatrix& a, std::span<const Elem> x);

std::size_t hamming_weight(std::span<const Elem> v);
std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b);

struct RrefResult {
  FieldMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);

/// Lexicographically least X with A·X = Y, or nullopt when some column of Y
/// lies outside the column space of A.
std::optional<FieldMatrix> solve_right(const FieldMatrix& a, const FieldMatrix& y);

/// Greedy left-to-right choice of target columns that, added to the columns of
/// `partial`, span the column space of [partial | target].
std::vector<std::size_t> extend_to_basis(const FieldMatrix& partial, const FieldMatrix& target);

/// Incrementally maintained echelon basis of row vectors.
class EchelonBasis {
 public:
  EchelonBasis(unsigned p, std::size_t length) : field_(p), length_(length) {}

  /// Reduces v against the basis in place; v becomes zero iff it was in the span.
  void reduce(Vec& v) const;
  /// Adds v when independent; returns whether the dimension grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t dim() const noexcept { return rows_.size(); }

 private:
  Field field_;
  std::size_t length_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of a subspace of GF(p)^ambient: rows in reduced row echelon
/// form, so two values compare equal iff the subspaces are equal.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  /// Zero subspace.
  SubspaceBasis(unsigned p, std::size_t ambient);

  /// Span of the rows of `generators`.
  static SubspaceBasis row_span(const FieldMatrix& generators);
  /// Span of the columns of `generators`.
  static SubspaceBasis column_span(const FieldMatrix& generators);
  /// Wraps a matrix that is already in RREF with no zero rows.
  static SubspaceBasis from_canonical(FieldMatrix basis);

  unsigned p() const noexcept { return basis_.p(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const FieldMatrix& basis() const noexcept { return basis_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const SubspaceBasis& other) const;
  SubspaceBasis sum(const SubspaceBasis& other) const;
  std::size_t intersection_dim(const SubspaceBasis& other) const;
  SubspaceBasis intersection(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  FieldMatrix basis_;
};

/// Gaussian binomial [ambient choose dim]_p, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t ambient, std::size_t dim, unsigned p);

using SubspaceVisitor = std::function<bool(const SubspaceBasis&)>;

/// Visits every dim-dimensional subspace of GF(p)^ambient exactly once:
/// pivot sets in lexicographic order, then free entries as a base-p counter
/// read row-major. The visitor returns false to stop early. Returns the number
/// of subspaces visited.
std::uint64_t enumerate_subspaces(std::size_t ambient, std::size_t dim, unsigned p,
                                  const SubspaceVisitor& visit, const SearchConfig& cfg = {});

/// Every member of the span of L (p^dim vectors), base-p counter order over
/// the coefficients of L's basis rows.
std::vector<Vec> subspace_members(const SubspaceBasis& l, const SearchConfig& cfg = {});

/// min over u in L of Hamming distance(v, u), by exhaustive scan.
std::size_t distance_to_subspace(std::span<const Elem> v, const SubspaceBasis& l,
                                 const SearchConfig& cfg = {});

/// Nearest member of L to v (first in member order among ties).
Vec nearest_in_subspace(std::span<const Elem> v, const SubspaceBasis& l,
                        const SearchConfig& cfg = {});

/// Visits every invertible n×n matrix over GF(p) in row-major lexicographic
/// order. Returns the number visited.
std::uint64_t enumerate_invertible(std::size_t n, unsigned p,
                                   const std::function<bool(const FieldMatrix&)>& visit,
                                   const SearchConfig& cfg = {});
std::uint64_t general_linear_order(std::size_t n, unsigned p);

}  // namespace rigx
