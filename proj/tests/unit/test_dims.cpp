#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rigx/dims.hpp"
#include "rigx/matrix_io.hpp"

using namespace rigx;

namespace {
FieldMatrix m2(std::vector<std::vector<long>> rows) { return FieldMatrix::from_rows(2, rows); }
}  // namespace

TEST_CASE("sparse row choices and generator counts") {
  const auto rows = sparse_row_choices(3, 1, 2);
  CHECK(rows == std::vector<Vec>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(sparse_row_choices(2, 2, 3).size() == 9);
  CHECK(sparse_generator_count(3, 2, 1, 2) == 27);
  CHECK(sparse_generator_count(2, 3, 2, 3) == 19 * 19);
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t t = 0; t <= 3; ++t) {
      std::uint64_t n = 0;
      std::optional<FieldMatrix> prev;
      enumerate_sparse_generators(2, k, t, 2, [&](const FieldMatrix& g) {
        CHECK(g.row_sparsity() <= t);
        if (prev) CHECK(*prev < g);
        prev = g;
        ++n;
        return true;
      });
      std::uint64_t brute = 0;
      oracle::all_matrices(2, 2, k, [&](const FieldMatrix& g) { brute += g.row_sparsity() <= t; });
      CHECK(n == brute);
      CHECK(sparse_generator_count(2, k, t, 2) == brute);
    }
}

TEST_CASE("inner and outer dimension on the 3x2 example") {
  const auto m = m2({{1, 0}, {0, 1}, {1, 1}});
  const auto d = inner_dimension(m, 1);
  CHECK(d.value == 1);
  CHECK(d.exhausted == d.candidates);
  CHECK(verify_inner_witness(m, d));
  const auto out = outer_dimension(m, 1, 3);
  const auto* w = std::get_if<DimWitness>(&out);
  REQUIRE(w);
  CHECK(w->value == 3);
  CHECK(verify_outer_witness(m, *w));
  CHECK(std::holds_alternative<AboveMax>(outer_dimension(m, 1, 2)));
  CHECK(inner_dimension(m, 2).value == 2);
}

TEST_CASE("identity and zero matrices") {
  const auto i4 = FieldMatrix::identity(2, 4);
  CHECK(inner_dimension(i4, 1).value == 4);
  CHECK(std::get<DimWitness>(outer_dimension(i4, 1, 4)).value == 4);
  const FieldMatrix z(3, 3, 2);
  CHECK(inner_dimension(z, 1).value == 0);
  CHECK(std::get<DimWitness>(outer_dimension(z, 1, 3)).value == 0);
}

TEST_CASE("inner and outer dimension agree with brute force") {
  for (std::size_t t : {1u, 2u})
    oracle::all_matrices(2, 3, 2, [&](const FieldMatrix& m) {
      const auto d = inner_dimension(m, t);
      CHECK(d.value == oracle::inner_dimension(m, t));
      CHECK(verify_inner_witness(m, d));
      const auto out = outer_dimension(m, t, 3);
      CHECK(std::get<DimWitness>(out).value == oracle::outer_dimension(m, t, 3));
    });
  std::mt19937_64 rng(fixtures::kSeed + 10);
  for (int i = 0; i < 20; ++i) {
    const auto m = oracle::random_matrix(rng, 3, 3, 2);
    CHECK(inner_dimension(m, 1).value == oracle::inner_dimension(m, 1));
    CHECK(std::get<DimWitness>(outer_dimension(m, 1, 3)).value == oracle::outer_dimension(m, 1, 3));
  }
}

TEST_CASE("monotone in t and bounded by rank") {
  std::mt19937_64 rng(fixtures::kSeed + 11);
  for (int i = 0; i < 40; ++i) {
    const auto m = oracle::random_matrix(rng, 2, 4, 3);
    std::size_t prev_inner = 0, prev_outer = SIZE_MAX;
    for (std::size_t t = 0; t <= 3; ++t) {
      const auto d = inner_dimension(m, t).value;
      const auto out = outer_dimension(m, t, 4);
      // no cover within 4 columns: D is unbounded here
      const std::size_t big = std::get_if<DimWitness>(&out) ? std::get<DimWitness>(out).value : SIZE_MAX;
      CHECK(d >= prev_inner);
      CHECK(big <= prev_outer);
      CHECK(d <= rank(m));
      CHECK(big >= rank(m));
      if (big != SIZE_MAX) CHECK(d + big >= 2 * rank(m));
      prev_inner = d;
      prev_outer = big;
    }
    CHECK(inner_dimension(m, 3).value == rank(m));
  }
}

TEST_CASE("thread count does not change witnesses") {
  const auto fx = parse_matrix(fixtures::kExtractFixture);
  SearchConfig eight;
  eight.threads = 8;
  const auto a = inner_dimension(fx, 1);
  const auto b = inner_dimension(fx, 1, eight);
  CHECK(a.value == fixtures::kExtractFixtureInner);
  CHECK(a.value == b.value);
  CHECK(a.witness.g == b.witness.g);
  CHECK(a.intersection_or_cover == b.intersection_or_cover);
}

TEST_CASE("budget is enforced") {
  SearchConfig tiny;
  tiny.budget = 5;
  CHECK_THROWS_AS(inner_dimension(FieldMatrix::identity(2, 4), 1, tiny), BudgetExceeded);
  try {
    outer_dimension(FieldMatrix::identity(2, 4), 1, 4, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 5);
    CHECK(e.required() > 5);
  }
}

TEST_CASE("tampered witnesses are rejected") {
  const auto m = m2({{1, 0}, {0, 1}, {1, 1}});
  auto d = inner_dimension(m, 1);
  d.value += 1;
  CHECK_FALSE(verify_inner_witness(m, d));
  auto w = std::get<DimWitness>(outer_dimension(m, 1, 3));
  w.witness.t = 0;
  CHECK_FALSE(verify_outer_witness(m, w));
}
