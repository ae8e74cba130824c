#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rigx/amplify.hpp"
#include "rigx/codes.hpp"
#include "rigx/matrix_io.hpp"
#include "rigx/rigidity.hpp"

using namespace rigx;

namespace {

FieldMatrix m2(std::vector<std::vector<long>> rows) { return FieldMatrix::from_rows(2, rows); }

// Every deletion of ⌊δm⌋ rows leaves, for each i, some ≤ q surviving rows whose
// GF(2) sum is e_i. Bitmask brute force, no linear algebra.
bool span_property(const FieldMatrix& e, std::size_t q, const Rational& delta) {
  const std::size_t m = e.rows(), k = e.cols();
  const std::size_t del = std::size_t(delta.floor_times(std::int64_t(m)));
  std::vector<std::uint32_t> row(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < k; ++j) row[r] |= std::uint32_t(e.at(r, j)) << j;
  for (std::uint64_t gone = 0; gone < (1ull << m); ++gone) {
    if (std::size_t(__builtin_popcountll(gone)) != del) continue;
    for (std::size_t i = 0; i < k; ++i) {
      bool ok = false;
      for (std::uint64_t pick = 1; pick < (1ull << m) && !ok; ++pick) {
        if ((pick & gone) || std::size_t(__builtin_popcountll(pick)) > q) continue;
        std::uint32_t acc = 0;
        for (std::size_t r = 0; r < m; ++r)
          if (pick >> r & 1) acc ^= row[r];
        ok = acc == (1u << i);
      }
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Hadamard code rows") {
  const auto h = hadamard_ldc(3);
  CHECK(h.e.rows() == 8);
  CHECK(h.e.cols() == 3);
  CHECK(h.q == 2);
  CHECK(h.delta == Rational(1, 4));
  CHECK(h.verified);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t j = 0; j < 3; ++j) CHECK(h.e.at(a, j) == ((a >> (2 - j)) & 1));
  CHECK_THROWS_AS(hadamard_ldc(0), Error);
  CHECK_THROWS_AS(hadamard_ldc(13), Error);
}

TEST_CASE("span check matches the brute-force property") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto h = hadamard_ldc(k);
    const auto packed = ldc_span_check(h.e, 2, h.delta);
    const auto full = ldc_span_check(h.e, 2, h.delta, {}, true);
    CHECK(packed.holds);
    CHECK(full.holds);
    CHECK(full.method == "exhaustive");
    CHECK(span_property(h.e, 2, h.delta));
  }
  // identity: one deletion kills a coordinate
  const auto id = FieldMatrix::identity(2, 3);
  const auto res = ldc_span_check(id, 1, Rational(1, 3));
  CHECK_FALSE(res.holds);
  REQUIRE(res.counterexample);
  CHECK(res.counterexample->kept_rows == std::vector<std::size_t>{1, 2});
  CHECK(res.counterexample->coordinate == 0);
  CHECK(ldc_span_check(id, 1, Rational(0, 1)).holds);

  std::mt19937_64 rng(fixtures::kSeed + 40);
  for (int i = 0; i < 40; ++i) {
    const auto e = oracle::random_matrix(rng, 2, 4 + rng() % 5, 2 + rng() % 2);
    const std::size_t q = 1 + rng() % 3;
    const Rational delta(std::int64_t(rng() % 3), 8);
    CHECK(ldc_span_check(e, q, delta, {}, true).holds == span_property(e, q, delta));
    CHECK(ldc_span_check(e, q, delta).holds == span_property(e, q, delta));
  }
}

TEST_CASE("make_ldc") {
  const auto id = FieldMatrix::identity(2, 3);
  CHECK_THROWS_AS(make_ldc(id, 1, Rational(1, 3), false), Error);
  const auto declared = make_ldc(id, 1, Rational(1, 3), true);
  CHECK_FALSE(declared.verified);
  CHECK(make_ldc(hadamard_ldc(2).e, 2, Rational(1, 4), false).verified);
}

TEST_CASE("encoding, stacking and the bound helper") {
  const auto h = hadamard_ldc(2);
  const auto m = m2({{1, 0}, {0, 1}});
  const auto em = apply_ldc(h, m);
  CHECK(em == h.e);
  CHECK_THROWS_AS(apply_ldc(h, FieldMatrix::identity(2, 3)), Error);

  std::mt19937_64 rng(fixtures::kSeed + 41);
  for (int i = 0; i < 30; ++i) {
    const auto x = oracle::random_matrix(rng, 2, 3, 2);
    const auto t = oracle::random_matrix(rng, 2, 2, 2);
    const auto h3 = hadamard_ldc(3);
    CHECK(apply_ldc(h3, x) == oracle::multiply(h3.e, x));
    CHECK(apply_ldc(h3, x) * t == apply_ldc(h3, x * t));
  }

  const auto s = stack_square(m, 3);
  CHECK(s == m2({{1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}}));
  CHECK(stack_square(m, 1) == m);
  CHECK_THROWS_AS(stack_square(m, 0), Error);

  CHECK(amplified_global_bound(Rational(1, 4), 3, 16, 2) == 4);
  CHECK(amplified_global_bound(Rational(1, 4), 1, 16, 2) == 0);
  CHECK(amplified_global_bound(Rational(1, 4), 0, 16, 2) == -2);
  CHECK(amplified_global_bound(Rational(1, 4), 2, 7, 2) == 0);
}

TEST_CASE("stacked global threshold is additive on the block") {
  const auto block = parse_matrix(fixtures::kStackBlock);
  const auto base = global_rigidity_threshold(block, 2).threshold;
  CHECK(base == 2);
  for (std::size_t c = 1; c <= 3; ++c) {
    const auto sq = stack_square(block, c);
    CHECK(rank(sq) == rank(block));
    CHECK(global_rigidity_threshold(sq, 2).threshold == c * base);
  }
}

TEST_CASE("built-in codes") {
  const auto h = build_code(CodeKind::Hamming74, 2);
  CHECK(h.n_code == 7);
  CHECK(h.k_code == 4);
  CHECK(h.min_distance == 3);
  CHECK(oracle::min_distance(h.g) == 3);
  const auto e = build_code(CodeKind::ExtendedHamming84, 2);
  CHECK(e.n_code == 8);
  CHECK(e.min_distance == 4);
  CHECK(oracle::min_distance(e.g) == 4);
  const auto r = build_code(CodeKind::RepetitionBlock, 2);
  CHECK(r.n_code == 8);
  CHECK(r.k_code == 2);
  CHECK(r.min_distance == 4);
  const auto r3 = build_code(CodeKind::RepetitionBlock, 3);
  CHECK(r3.min_distance == 4);
  CHECK_THROWS_AS(build_code(CodeKind::Hamming74, 3), Error);
  CHECK_THROWS_AS(build_code(CodeKind::UserGenerator, 2), Error);
  for (const auto& c : {h, e, r}) {
    CHECK(rank(c.g) == c.k_code);
    CHECK(friedman_matrix(c) == c.g);
  }
}

TEST_CASE("repetition block is not rigid") {
  // Each column lives on its own block of four rows, so every row has weight 1
  // and dropping one column costs one change per row of that block.
  const auto g = friedman_matrix(build_code(CodeKind::RepetitionBlock, 2));
  CHECK(row_rigidity_threshold(g, 2).threshold == 1);
  CHECK_FALSE(strong_row_rigidity(g, 2, 1, StrongMethod::GlEnum).rigid);
  CHECK_FALSE(strong_row_rigidity(g, 2, 1, StrongMethod::InnerDim).rigid);
}

TEST_CASE("user codes and the catalog") {
  const auto g = m2({{1, 0}, {0, 1}, {1, 1}});
  const auto c = build_user_code(g);
  CHECK(c.min_distance == 2);
  CHECK(c.kind == CodeKind::UserGenerator);
  CHECK_THROWS_AS(build_user_code(m2({{1, 1}, {1, 1}})), Error);
  CHECK(min_distance(g) == oracle::min_distance(g));
  std::mt19937_64 rng(fixtures::kSeed + 42);
  for (int i = 0; i < 30; ++i) {
    const auto x = oracle::random_matrix(rng, 3, 5, 2);
    if (rank(x) == 2) CHECK(min_distance(x) == oracle::min_distance(x));
  }
  CHECK(code_catalog().size() >= 3);
  for (auto kind : {CodeKind::RepetitionBlock, CodeKind::Hamming74, CodeKind::ExtendedHamming84})
    CHECK(code_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS_AS(code_kind_from_string("golay"), Error);
}
