#pragma once

// Small linear codes used as sources of strongly rigid matrices. The
// generator G is n_code × k_code with the code basis in its columns.

#include <cstdint>
#include <string>
#include <vector>

#include "rigx/gfmat.hpp"

namespace rigx {

enum class CodeKind { RepetitionBlock, Hamming74, ExtendedHamming84, UserGenerator };

const char* to_string(CodeKind kind) noexcept;
CodeKind code_kind_from_string(const std::string& name);

struct CodeSpec {
  CodeKind kind = CodeKind::UserGenerator;
  unsigned p = 2;
  std::size_t n_code = 0;
  std::size_t k_code = 0;
  FieldMatrix g;
  /// Always computed by scanning every nonzero codeword.
  std::size_t min_distance = 0;
};

/// repetition_block uses 2 blocks of length 4; the Hamming codes are binary
/// only (UnsupportedKind otherwise). UserGenerator needs build_user_code.
CodeSpec build_code(CodeKind kind, unsigned p, const SearchConfig& cfg = {});
CodeSpec build_repetition_block(unsigned p, std::size_t blocks, std::size_t block_len,
                                const SearchConfig& cfg = {});
/// RankDeficient when G lacks full column rank.
CodeSpec build_user_code(const FieldMatrix& g, const SearchConfig& cfg = {});

/// min weight of G·x over nonzero x ∈ GF(p)^k.
std::size_t min_distance(const FieldMatrix& g, const SearchConfig& cfg = {});

/// M = G, the code basis as columns.
FieldMatrix friedman_matrix(const CodeSpec& code);

struct CatalogEntry {
  std::string name;
  std::string description;
};
std::vector<CatalogEntry> code_catalog();

}  // namespace rigx
