#pragma once

// Rigid-submatrix extraction. Each round either finds that the current
// matrix M_i has small inner dimension (so it is strongly row rigid) or
// splits it as M_i = A_i·B_i + M_{i+1}·C_i with A_i t-row-sparse and M_{i+1}
// a few verbatim columns of M_i. If every round splits, the pieces telescope
// into a sparse factorization of M:
//   A = [A_0 | A_1 | … | A_{k−1} | M_k]
//   B = [B_0 ; B_1·C_0 ; B_2·C_1·C_0 ; … ; C_{k−1}⋯C_0]

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "rigx/dims.hpp"
#include "rigx/dscore.hpp"
#include "rigx/rational.hpp"
#include "rigx/rigidity.hpp"

namespace rigx {

struct Decomposition {
  FieldMatrix a;       // m×n_i, t-row-sparse
  FieldMatrix b;       // n_i×n_i
  FieldMatrix mprime;  // m×c, verbatim columns of the input
  std::vector<std::size_t> mprime_cols;
  FieldMatrix c;  // c×n_i
  DimWitness inner;
};

struct InnerTooSmall {
  DimWitness inner;
  std::size_t rank = 0;
  std::size_t k = 0;
};

using AuxResult = std::variant<Decomposition, InnerTooSmall>;

/// Splits M when d_M(t) ≥ rank(M) − k; otherwise reports the certificate.
/// The identity A·B + M′·C = M is re-checked before returning.
AuxResult aux_decompose(const FieldMatrix& m, std::size_t t, std::size_t k,
                        const SearchConfig& cfg = {});

struct RigidSubmatrix {
  FieldMatrix mi;
  std::size_t iteration = 0;
  /// Nominal width for this round and the threshold it was tested against.
  std::size_t n_i = 0;
  std::size_t threshold = 0;
  std::size_t t = 0;
  std::vector<std::size_t> source_columns;
  DimWitness inner_cert;
  /// Strong rigidity at r = threshold + 1 checked by an exhaustive method
  /// other than inner dimension, when that fits the budget and M_i has full
  /// column rank. Otherwise only the inner witness is re-verified.
  std::optional<StrongRigidityResult> certification;
};

struct Cover {
  SparseGenerator a;
  FieldMatrix b;
  /// Max nonzeros in a row of A.
  std::size_t total_sparsity = 0;
  /// Σ t_i + width(M_k): the bound total_sparsity is checked against.
  std::size_t sparsity_bound = 0;
  /// Columns of A.
  std::size_t total_space = 0;
  /// Σ nominal widths n_0..n_k: the bound total_space is checked against.
  std::size_t space_bound = 0;
  std::vector<Decomposition> per_iteration;
};

using ExtractOutcome = std::variant<RigidSubmatrix, Cover>;

/// Rounds i = 0..k_iters−1 with n_0 = n, n_{i+1} = ⌈ε·n_i⌉; round i stops with
/// RigidSubmatrix when d_{M_i}(t) < rank(M_i) − n_{i+1}.
ExtractOutcome find_rigid_submatrix(const FieldMatrix& m, const Rational& eps,
                                    std::size_t k_iters, std::size_t t,
                                    const SearchConfig& cfg = {});

/// Round i tests d_{M_i}(t_i) < rank(M_i) − r_i and splits with k = r_i.
/// r_seq must be strictly decreasing and as long as t_seq.
ExtractOutcome succinct_schedule_run(const FieldMatrix& m, const std::vector<std::size_t>& r_seq,
                                     const std::vector<std::size_t>& t_seq,
                                     const SearchConfig& cfg = {});

struct DsLowerOutcome {
  ExtractOutcome outcome;
  std::size_t k_iters = 0;
  /// RigidSubmatrix branch: n_i ≥ t.
  bool width_at_least_t = false;
  /// Cover branch: the implied (total_space, total_sparsity) linear DS.
  std::optional<LinearDS> ds;
};

/// find_rigid_submatrix with k = ⌈log(n/t)/log(1/ε)⌉.
DsLowerOutcome ds_lower_to_rigid(const FieldMatrix& m, const Rational& eps, std::size_t t,
                                 const SearchConfig& cfg = {});

std::size_t ds_lower_iterations(std::size_t n, const Rational& eps, std::size_t t);

}  // namespace rigx
