#include "rigx/codes.hpp"

#include <algorithm>

namespace rigx {

const char* to_string(CodeKind kind) noexcept {
  switch (kind) {
    case CodeKind::RepetitionBlock: return "repetition_block";
    case CodeKind::Hamming74: return "hamming74";
    case CodeKind::ExtendedHamming84: return "extended_hamming84";
    case CodeKind::UserGenerator: return "user_generator";
  }
  return "?";
}

CodeKind code_kind_from_string(const std::string& name) {
  for (auto k : {CodeKind::RepetitionBlock, CodeKind::Hamming74, CodeKind::ExtendedHamming84,
                 CodeKind::UserGenerator})
    if (name == to_string(k)) return k;
  fail(ErrorKind::UnsupportedKind, "unknown code kind '" + name + "'");
}

std::size_t min_distance(const FieldMatrix& g, const SearchConfig& cfg) {
  const unsigned p = g.p();
  const std::size_t k = g.cols();
  const std::uint64_t words = detail::sat_pow(p, k);
  check_budget("min_distance", words, cfg);
  std::size_t best = g.rows() + 1;
  Vec x(k, 0);
  for (std::uint64_t c = 1; c < words; ++c) {
    std::size_t j = k;
    while (j > 0 && ++x[j - 1] == p) x[--j] = 0;
    best = std::min(best, hamming_weight(mat_vec(g, x)));
  }
  return words <= 1 ? 0 : best;
}

namespace {

CodeSpec finish(CodeKind kind, FieldMatrix g, const SearchConfig& cfg) {
  require(rank(g) == g.cols(), ErrorKind::RankDeficient,
          "code generator must have full column rank");
  CodeSpec c;
  c.kind = kind;
  c.p = g.p();
  c.n_code = g.rows();
  c.k_code = g.cols();
  c.min_distance = min_distance(g, cfg);
  c.g = std::move(g);
  return c;
}

}  // namespace

CodeSpec build_repetition_block(unsigned p, std::size_t blocks, std::size_t block_len,
                                const SearchConfig& cfg) {
  require(blocks >= 1 && block_len >= 1, ErrorKind::InvalidArgument,
          "repetition_block: blocks and block length must be positive");
  FieldMatrix g(p, blocks * block_len, blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < block_len; ++i) g.set(b * block_len + i, b, 1);
  return finish(CodeKind::RepetitionBlock, std::move(g), cfg);
}

CodeSpec build_user_code(const FieldMatrix& g, const SearchConfig& cfg) {
  return finish(CodeKind::UserGenerator, g, cfg);
}

CodeSpec build_code(CodeKind kind, unsigned p, const SearchConfig& cfg) {
  // Systematic Hamming [7,4]: data bits, then parities d1+d2+d4, d1+d3+d4, d2+d3+d4.
  static const std::vector<std::vector<long>> hamming = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
      {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}};
  switch (kind) {
    case CodeKind::RepetitionBlock:
      return build_repetition_block(p, 2, 4, cfg);
    case CodeKind::Hamming74:
    case CodeKind::ExtendedHamming84: {
      require(p == 2, ErrorKind::UnsupportedKind,
              std::string(to_string(kind)) + " is defined over GF(2) only");
      auto rows = hamming;
      if (kind == CodeKind::ExtendedHamming84) rows.push_back({1, 1, 1, 0});  // overall parity
      return finish(kind, FieldMatrix::from_rows(2, rows), cfg);
    }
    case CodeKind::UserGenerator:
      break;
  }
  fail(ErrorKind::UnsupportedKind, "user_generator codes need an explicit generator matrix");
}

FieldMatrix friedman_matrix(const CodeSpec& code) { return code.g; }

std::vector<CatalogEntry> code_catalog() {
  return {
      {"repetition_block", "2 blocks of length 4, any p: [8,2,4]"},
      {"hamming74", "binary Hamming code [7,4,3]"},
      {"extended_hamming84", "binary extended Hamming code [8,4,4]"},
      {"user_generator", "any full-column-rank generator read from --generator"},
  };
}

}  // namespace rigx
