#pragma once

// Exhaustive oracles for t-sparse subspaces and the inner / outer dimension
// of a matrix's column space.
//
// A subspace of GF(p)^m is t-sparse when it is the column space of a matrix
// with at most t nonzeros per row. Candidate generators carry exactly as many
// columns as the dimension being tested: dropping columns from a t-row-sparse
// matrix keeps it t-row-sparse, so every t-sparse subspace of dimension u is
// generated by u of its own generator's columns, and padding with zero columns
// raises the count without changing the space. Hence
//   inner: scanning m×rank(M) generators reaches every U with dim(U) ≤ rank(M);
//   outer: the least column count s of a covering generator equals the least
//          dimension of a covering t-sparse subspace.

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "rigx/gfmat.hpp"

namespace rigx {

struct SparseGenerator {
  FieldMatrix g;
  std::size_t t = 0;

  bool valid() const { return g.row_sparsity() <= t; }
};

struct DimWitness {
  std::size_t value = 0;
  SparseGenerator witness;
  /// Inner: colspace(witness) ∩ V. Outer: colspace(witness).
  SubspaceBasis intersection_or_cover;
  /// Size of the candidate space the answer ranges over.
  std::uint64_t candidates = 0;
  /// Candidates eliminated: scanned, pruned by an infeasible prefix, or
  /// dominated by a bound. Equals `candidates` for a finished search.
  std::uint64_t exhausted = 0;
};

struct AboveMax {
  std::size_t s_max = 0;
  std::uint64_t exhausted = 0;
};

using OuterResult = std::variant<DimWitness, AboveMax>;

/// Rows of GF(p)^k with at most t nonzeros, in lexicographic order.
std::vector<Vec> sparse_row_choices(std::size_t k, std::size_t t, unsigned p);

/// (Σ_{i ≤ min(t,k)} C(k,i)(p−1)^i)^m, saturating.
std::uint64_t sparse_generator_count(std::size_t m, std::size_t k, std::size_t t, unsigned p);

/// Visits every m×k matrix with ≤ t nonzeros per row in row-major
/// lexicographic order. Returns the number visited.
std::uint64_t enumerate_sparse_generators(std::size_t m, std::size_t k, std::size_t t, unsigned p,
                                          const std::function<bool(const FieldMatrix&)>& visit,
                                          const SearchConfig& cfg = {});

DimWitness inner_dimension(const FieldMatrix& m, std::size_t t, const SearchConfig& cfg = {});

OuterResult outer_dimension(const FieldMatrix& m, std::size_t t, std::size_t s_max,
                            const SearchConfig& cfg = {});

/// Recomputes the claims of a witness from scratch with rref.
bool verify_inner_witness(const FieldMatrix& m, const DimWitness& w);
bool verify_outer_witness(const FieldMatrix& m, const DimWitness& w);

}  // namespace rigx
