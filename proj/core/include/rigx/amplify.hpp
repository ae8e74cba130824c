#pragma once

// Row-to-global rigidity amplification through linear locally decodable
// codes. An m'×m generator E has the (q, δ) span property when, after
// deleting any ⌊δ·m'⌋ rows, every standard basis vector e_i is still spanned
// by at most q of the remaining rows.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigx/gfmat.hpp"
#include "rigx/rational.hpp"

namespace rigx {

struct LinearLDC {
  FieldMatrix e;
  std::size_t q = 0;
  Rational delta;
  /// False for generators built in declared mode (span property not checked).
  bool verified = false;
};

/// Rows are all of GF(2)^k in lexicographic order; q = 2, δ = 1/4.
LinearLDC hadamard_ldc(std::size_t k);

struct SpanCounterexample {
  std::vector<std::size_t> kept_rows;  // R
  std::size_t coordinate = 0;          // i
};

struct SpanCheck {
  bool holds = false;
  /// "packing": for each i, more than ⌊δm'⌋ disjoint ≤q-row sets span e_i,
  /// so no deletion can hit them all. "exhaustive": every deletion was tried.
  std::string method;
  std::optional<SpanCounterexample> counterexample;
  std::uint64_t scanned = 0;
};

/// Deletion sets are scanned in lexicographic order, then i ascending; the
/// reported counterexample is the first failure in that order.
SpanCheck ldc_span_check(const FieldMatrix& e, std::size_t q, const Rational& delta,
                         const SearchConfig& cfg = {}, bool force_exhaustive = false);

/// Builds a LinearLDC, checking the span property unless `declared` is set.
/// Throws PreconditionViolated when the check finds a counterexample.
LinearLDC make_ldc(FieldMatrix e, std::size_t q, const Rational& delta, bool declared,
                   const SearchConfig& cfg = {});

/// E·M (each column of M encoded). DimensionMismatch unless E.cols = M.rows.
FieldMatrix apply_ldc(const LinearLDC& ldc, const FieldMatrix& m);

/// `copies` copies of M side by side.
FieldMatrix stack_square(const FieldMatrix& m, std::size_t copies);

/// ⌊δ·(τ−1)·m'/q⌋; the global threshold of E·M must exceed this value.
std::int64_t amplified_global_bound(const Rational& delta, std::size_t row_threshold,
                                    std::size_t m_prime, std::size_t q);

}  // namespace rigx
