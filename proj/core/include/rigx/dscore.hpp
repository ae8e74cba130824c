#pragma once

// Linear (s,t) data structures: M = Q·P with Q an m×s matrix having at most t
// nonzeros per row (t probes) and P an s×n preprocessing map.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rigx/dims.hpp"
#include "rigx/gfmat.hpp"
#include "rigx/rational.hpp"

namespace rigx {

struct LinearDS {
  FieldMatrix p;  // s×n
  FieldMatrix q;  // m×s
  std::size_t s = 0;
  std::size_t t = 0;
};

struct DsViolation {
  enum class Kind { Shape, Sparsity, Entry } kind;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string detail;
};

const char* to_string(DsViolation::Kind kind) noexcept;

/// Empty iff M = Q·P exactly and every row of Q has at most t nonzeros.
std::vector<DsViolation> verify_ds(const FieldMatrix& m, const LinearDS& ds);

/// Arbitrary preprocessing GF(p)^n → GF(p)^s.
using Preprocessor = std::function<Vec(std::span<const Elem>)>;

/// Checks Q·pre(x) = M·x on all p^n inputs (NotComputingM otherwise) and
/// returns the DS whose P has columns pre(e_i) − pre(0).
LinearDS linearize(const Preprocessor& pre, const FieldMatrix& q, const FieldMatrix& m,
                   std::size_t t, const SearchConfig& cfg = {});

/// P = solve_right(G, M); NotACover when colspace(M) ⊄ colspace(G).
LinearDS ds_from_cover(const FieldMatrix& m, const SparseGenerator& cover);
SparseGenerator cover_from_ds(const LinearDS& ds);

struct Evasive {
  std::uint64_t scanned = 0;
};

struct SumsetWitness {
  std::vector<Vec> s;
  /// Per target row: (index into s, coefficient) pairs, at most t of them.
  std::vector<std::vector<std::pair<std::size_t, Elem>>> covered;
  std::uint64_t scanned = 0;
};

using SumsetResult = std::variant<Evasive, SumsetWitness>;

/// Scans every size-s subset S of GF(p)^n (lexicographic on member codes)
/// for one whose t-sums contain every row of `rows`. When s ≥ p^n the only
/// candidate is all of GF(p)^n.
SumsetResult sumset_evasive_bruteforce(const FieldMatrix& rows, std::size_t s, std::size_t t,
                                       const SearchConfig& cfg = {});

struct CountingUpper {
  LinearDS ds;
  /// True when the preconditions failed and the (n, n) table was returned.
  bool fallback = false;
  /// ⌈n/(log s/(μ log q) − 1)⌉ with μ = 1 + 1/ε, logs base 2.
  std::size_t t_formula = 0;
  std::size_t part_width = 0;
};

/// Partitions the n inputs into t contiguous parts and stores, per part,
/// every linear combination of the part's inputs; each query reads one cell
/// per part.
CountingUpper counting_upper_ds(const FieldMatrix& m, std::size_t s, const Rational& eps);

struct CountingLower {
  std::size_t t_min_worst = 0;
  FieldMatrix hardest;
  std::uint64_t matrices = 0;
};

/// Over every M ∈ GF(p)^{m×n}, the least t admitting an (s,t) linear DS,
/// maximized; `hardest` is the first maximizer in row-major lex order.
/// Requires s ≥ min(m, n) so that every M has some (s,t) DS.
CountingLower counting_lower_search(unsigned p, std::size_t n, std::size_t m, std::size_t s,
                                    const SearchConfig& cfg = {});

}  // namespace rigx
