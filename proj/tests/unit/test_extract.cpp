#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rigx/dscore.hpp"
#include "rigx/extract.hpp"
#include "rigx/matrix_io.hpp"

using namespace rigx;

namespace {

void check_decomposition(const FieldMatrix& m, const Decomposition& d, std::size_t t) {
  CHECK(d.a.row_sparsity() <= t);
  CHECK(d.a * d.b + d.mprime * d.c == m);
  for (std::size_t j = 0; j < d.mprime_cols.size(); ++j) CHECK(d.mprime.column(j) == m.column(d.mprime_cols[j]));
}

}  // namespace

TEST_CASE("aux_decompose splits when the inner dimension is large") {
  const auto i4 = FieldMatrix::identity(2, 4);
  const auto res = aux_decompose(i4, 1, 2);
  REQUIRE(std::holds_alternative<Decomposition>(res));
  const auto& d = std::get<Decomposition>(res);
  check_decomposition(i4, d, 1);
  CHECK(d.inner.value == 4);
  CHECK(d.mprime.cols() <= 2);

  const auto fx = parse_matrix(fixtures::kExtractFixture);
  const auto small = aux_decompose(fx, 1, 1);
  REQUIRE(std::holds_alternative<InnerTooSmall>(small));
  CHECK(std::get<InnerTooSmall>(small).inner.value == fixtures::kExtractFixtureInner);
  CHECK(std::get<InnerTooSmall>(small).rank == 4);
  CHECK(std::holds_alternative<Decomposition>(aux_decompose(fx, 1, 2)));
}

TEST_CASE("aux_decompose identity holds on random inputs") {
  std::mt19937_64 rng(fixtures::kSeed + 50);
  for (int i = 0; i < 60; ++i) {
    const unsigned p = i % 4 == 0 ? 3 : 2;
    const auto m = p == 3 ? oracle::random_matrix(rng, 3, 3, 2)
                          : oracle::random_matrix(rng, 2, 3 + rng() % 3, 2 + rng() % 2);
    const std::size_t t = 1 + rng() % 2;
    const std::size_t k = rng() % 3;
    const auto res = aux_decompose(m, t, k);
    const auto d = oracle::inner_dimension(m, t);
    if (const auto* dec = std::get_if<Decomposition>(&res)) {
      check_decomposition(m, *dec, t);
      CHECK(d + k >= rank(m));
      CHECK(dec->mprime.cols() <= k);
    } else {
      CHECK(d + k < rank(m));
      CHECK(std::get<InnerTooSmall>(res).inner.value == d);
    }
  }
}

TEST_CASE("identity extraction gives a cover") {
  const auto i4 = FieldMatrix::identity(2, 4);
  const auto out = find_rigid_submatrix(i4, Rational(1, 2), 1, 1);
  REQUIRE(std::holds_alternative<Cover>(out));
  const auto& cv = std::get<Cover>(out);
  CHECK(cv.a.g * cv.b == i4);
  CHECK(cv.total_sparsity == 1);
  CHECK(cv.sparsity_bound == 1 + cv.per_iteration.at(0).mprime.cols());
  CHECK(cv.total_space == 4);
  CHECK(cv.space_bound == 6);
  CHECK(cv.per_iteration.size() == 1);

  const auto sched = succinct_schedule_run(i4, {2, 1}, {1, 1});
  REQUIRE(std::holds_alternative<Cover>(sched));
  CHECK(std::get<Cover>(sched).total_sparsity == 1);
  CHECK(std::get<Cover>(sched).space_bound == 7);
}

TEST_CASE("zero rounds return M itself as the cover") {
  const auto fx = parse_matrix(fixtures::kExtractFixture);
  const auto out = find_rigid_submatrix(fx, Rational(1, 4), 0, 1);
  REQUIRE(std::holds_alternative<Cover>(out));
  const auto& cv = std::get<Cover>(out);
  CHECK(cv.a.g == fx);
  CHECK(cv.b == FieldMatrix::identity(2, 4));
  CHECK(cv.total_space == 4);
}

TEST_CASE("frozen fixture yields a certified rigid submatrix") {
  const auto fx = parse_matrix(fixtures::kExtractFixture);
  const auto out = find_rigid_submatrix(fx, Rational(1, 4), 1, 1);
  REQUIRE(std::holds_alternative<RigidSubmatrix>(out));
  const auto& rs = std::get<RigidSubmatrix>(out);
  CHECK(rs.iteration == 0);
  CHECK(rs.mi == fx);
  CHECK(rs.threshold == 1);
  CHECK(rs.n_i == 4);
  CHECK(rs.inner_cert.value == 2);
  REQUIRE(rs.certification);
  CHECK(rs.certification->rigid);
  CHECK(rs.certification->scanned == 20160);

  const auto lower = ds_lower_to_rigid(fx, Rational(1, 4), 1);
  CHECK(lower.k_iters == 1);
  CHECK(std::holds_alternative<RigidSubmatrix>(lower.outcome));
  CHECK(lower.width_at_least_t);
  CHECK_FALSE(lower.ds);
}

TEST_CASE("a geometric schedule equals the eps-driven run") {
  std::mt19937_64 rng(fixtures::kSeed + 51);
  std::vector<FieldMatrix> inputs{parse_matrix(fixtures::kExtractFixture), FieldMatrix::identity(2, 4)};
  for (int i = 0; i < 20; ++i) inputs.push_back(oracle::random_matrix(rng, 2, 5, 4));
  for (const auto& m : inputs) {
    // eps = 1/2 from n = 4: widths 2, 1
    const auto a = find_rigid_submatrix(m, Rational(1, 2), 2, 1);
    const auto b = succinct_schedule_run(m, {2, 1}, {1, 1});
    REQUIRE(a.index() == b.index());
    if (const auto* ca = std::get_if<Cover>(&a)) {
      const auto& cb = std::get<Cover>(b);
      CHECK(ca->a.g == cb.a.g);
      CHECK(ca->b == cb.b);
    } else {
      CHECK(std::get<RigidSubmatrix>(a).mi == std::get<RigidSubmatrix>(b).mi);
    }
  }
}

TEST_CASE("extraction outcomes always verify") {
  std::mt19937_64 rng(fixtures::kSeed + 52);
  for (int i = 0; i < 60; ++i) {
    const auto m = oracle::random_matrix(rng, 2, 4, 3);
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto out = find_rigid_submatrix(m, Rational(1, 2), k, 1);
      if (const auto* cv = std::get_if<Cover>(&out)) {
        CHECK(cv->a.g * cv->b == m);
        CHECK(cv->total_sparsity <= cv->sparsity_bound);
        CHECK(cv->total_space <= cv->space_bound);
        const LinearDS ds{cv->b, cv->a.g, cv->total_space, cv->total_sparsity};
        CHECK(verify_ds(m, ds).empty());
      } else {
        const auto& rs = std::get<RigidSubmatrix>(out);
        CHECK(oracle::inner_dimension(rs.mi, 1) + rs.threshold < rank(rs.mi));
      }
    }
  }
}

TEST_CASE("parameter validation") {
  const auto i4 = FieldMatrix::identity(2, 4);
  CHECK_THROWS_AS(find_rigid_submatrix(i4, Rational(1, 1), 1, 1), Error);
  CHECK_THROWS_AS(succinct_schedule_run(i4, {1, 2}, {1, 1}), Error);
  CHECK_THROWS_AS(succinct_schedule_run(i4, {2}, {1, 1}), Error);
  CHECK(ds_lower_iterations(4, Rational(1, 4), 4) == 0);
  CHECK(ds_lower_iterations(8, Rational(1, 2), 1) == 3);
  CHECK(ds_lower_iterations(9, Rational(1, 3), 1) == 2);
  CHECK_THROWS_AS(ds_lower_iterations(4, Rational(1, 2), 5), Error);
  const auto full = ds_lower_to_rigid(i4, Rational(1, 2), 4);
  CHECK(full.k_iters == 0);
  REQUIRE(full.ds);
  CHECK(verify_ds(i4, *full.ds).empty());
}
