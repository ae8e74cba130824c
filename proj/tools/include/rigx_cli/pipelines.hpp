#pragma once

#include <optional>

#include "rigx_cli/report.hpp"

namespace rigx::cli {

struct PipelineResult {
  Json report;
  /// 0 when an outcome was produced, 2 when the hypothesis fails.
  int exit_code = 0;
};

/// Extraction → Hadamard encoding → side-by-side stacking. `ldc_k` defaults
/// to the row count of the extracted submatrix, `r` to the rank parameter the
/// extraction certified (its threshold + 1).
PipelineResult pipeline_ds_to_square_rigid(const FieldMatrix& m, const Rational& eps,
                                           std::size_t t, std::optional<std::size_t> ldc_k,
                                           std::optional<std::size_t> r,
                                           const SearchConfig& cfg);

/// Strong row rigidity at (r,t) ⟹ no (n + r − 1, t) linear data structure.
PipelineResult pipeline_rigid_to_ds_lb(const FieldMatrix& m, std::size_t r, std::size_t t,
                                       const SearchConfig& cfg);

}  // namespace rigx::cli
