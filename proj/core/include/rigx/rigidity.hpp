#pragma once

// Exact rigidity thresholds over GF(p).
//
// A matrix B with rank(B) < r has all rows inside some subspace L of dim
// r−1 (any smaller subspace sits inside one of that dimension, which can only
// lower distances). So
//   row threshold    τ = min_L max_i dist(row_i, L)
//   global threshold G = min_L Σ_i   dist(row_i, L)
// over dim-min(r−1, n) subspaces L of GF(p)^n, and M is (r,t)-rigid iff t < τ
// (respectively t < G).

#include <cstdint>
#include <optional>

#include "rigx/dims.hpp"
#include "rigx/gfmat.hpp"

namespace rigx {

enum class RigidityKind { Row, Global, Strong };

const char* to_string(RigidityKind kind) noexcept;

struct RigidityCertificate {
  RigidityKind kind = RigidityKind::Row;
  std::size_t r = 0;
  std::size_t threshold = 0;
  /// The first minimizer in enumeration order; always present for r ≥ 1.
  SubspaceBasis refuting_l;
  std::uint64_t scanned = 0;

  bool rigid_at(std::size_t t) const { return t < threshold; }
};

RigidityCertificate row_rigidity_threshold(const FieldMatrix& m, std::size_t r,
                                           const SearchConfig& cfg = {});
RigidityCertificate global_rigidity_threshold(const FieldMatrix& m, std::size_t r,
                                              const SearchConfig& cfg = {});

/// Replaces every row of M by its nearest member of L. rank(result) ≤ dim L.
FieldMatrix nearest_low_rank(const FieldMatrix& m, const SubspaceBasis& l,
                             const SearchConfig& cfg = {});

enum class StrongMethod { InnerDim, GlEnum, SumCover };

const char* to_string(StrongMethod method) noexcept;

struct StrongRigidityResult {
  bool rigid = false;
  StrongMethod method = StrongMethod::InnerDim;
  /// InnerDim: the inner-dimension certificate.
  std::optional<DimWitness> inner;
  /// GlEnum: the first T (lexicographic) for which M·T is not (r,t)-row
  /// rigid, with the row-threshold certificate of M·T.
  std::optional<FieldMatrix> breaking_t;
  std::optional<RigidityCertificate> breaking_cert;
  /// SumCover: a t-row-sparse generator A and a subspace B (dim < r) with
  /// colspace(M) ⊆ colspace(A) + B.
  std::optional<FieldMatrix> cover_a;
  std::optional<SubspaceBasis> cover_b;
  std::uint64_t scanned = 0;
};

/// Decides (r,t)-strong row rigidity. InnerDim requires rank(M) = n and
/// throws RankDeficient otherwise; the other two methods are exhaustive.
StrongRigidityResult strong_row_rigidity(const FieldMatrix& m, std::size_t r, std::size_t t,
                                         StrongMethod method, const SearchConfig& cfg = {});

/// Given M = A + B with A t-row-sparse, rank(B) ≤ r and rank(M) = n, reports
/// whether inner_dimension(M, t) ≥ n − 2r. A false result falsifies the bound.
/// Throws PreconditionViolated when the inputs are not such a decomposition.
bool check_decomposition_bound(const FieldMatrix& m, const FieldMatrix& a, const FieldMatrix& b,
                               std::size_t r, std::size_t t, const SearchConfig& cfg = {});

}  // namespace rigx
