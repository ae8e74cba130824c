#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rigx/dscore.hpp"
#include "rigx/gfmat.hpp"
#include "rigx/matrix_io.hpp"

using namespace rigx;

namespace {

FieldMatrix m2(std::vector<std::vector<long>> rows) { return FieldMatrix::from_rows(2, rows); }

std::uint64_t gaussian_product(std::size_t n, std::size_t k, unsigned q) {
  // ∏_{i<k} (q^{n−i} − 1) / (q^{i+1} − 1), evaluated exactly in 128 bits.
  unsigned __int128 num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    unsigned __int128 a = 1, b = 1;
    for (std::size_t j = 0; j < n - i; ++j) a *= q;
    for (std::size_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return std::uint64_t(num / den);
}

}  // namespace

TEST_CASE("field arithmetic and inverses") {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    Field f(p);
    for (unsigned a = 1; a < p; ++a) CHECK(f.mul(Elem(a), f.inv(Elem(a))) == 1);
  }
  CHECK_THROWS_AS(Field(4), Error);
  CHECK_THROWS_AS(Field(17), Error);
  CHECK_FALSE(is_supported_prime(1));
  CHECK(is_supported_prime(13));
}

TEST_CASE("rref examples") {
  const auto r = rref(m2({{1, 1}, {1, 1}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == m2({{1, 1}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  const auto g3 = rref(FieldMatrix::from_rows(3, {{2, 1}, {1, 2}}));
  CHECK(g3.rank == 1);
  CHECK(g3.reduced == FieldMatrix::from_rows(3, {{1, 2}, {0, 0}}));

  CHECK(rank(FieldMatrix::identity(5, 4)) == 4);
  CHECK(rank(FieldMatrix(2, 3, 3)) == 0);
  CHECK(rank(FieldMatrix(2, 0, 3)) == 0);
}

TEST_CASE("rank agrees with span closure and rref is idempotent") {
  std::mt19937_64 rng(fixtures::kSeed);
  for (int i = 0; i < 300; ++i) {
    const unsigned p = (i % 3 == 0) ? 3 : 2;
    const auto a = oracle::random_matrix(rng, p, 1 + rng() % 4, 1 + rng() % 4);
    CHECK(rank(a) == oracle::span_rank(a));
    const auto r = rref(a);
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(rank(a.transpose()) == rank(a));
    const auto b = oracle::random_matrix(rng, p, a.rows(), a.cols());
    CHECK(rank(a + b) <= rank(a) + rank(b));
    const auto c = oracle::random_matrix(rng, p, a.cols(), 1 + rng() % 3);
    CHECK(a * c == oracle::multiply(a, c));
    CHECK(rank(a * c) <= std::min(rank(a), rank(c)));
  }
}

TEST_CASE("solve_right returns the lexicographically least solution") {
  const auto a = m2({{1, 1, 0}, {0, 0, 1}});
  const auto y = m2({{1}, {1}});
  const auto x = solve_right(a, y);
  REQUIRE(x);
  CHECK(*x == m2({{0}, {1}, {1}}));
  CHECK_FALSE(solve_right(m2({{1, 0}, {1, 0}}), m2({{1}, {0}})));

  std::mt19937_64 rng(fixtures::kSeed + 1);
  for (int i = 0; i < 100; ++i) {
    const auto aa = oracle::random_matrix(rng, 2, 3, 3);
    const auto yy = oracle::random_matrix(rng, 2, 3, 1);
    std::optional<FieldMatrix> least;
    oracle::all_matrices(2, 3, 1, [&](const FieldMatrix& cand) {
      if (!least && aa * cand == yy) least = cand;
    });
    const auto got = solve_right(aa, yy);
    CHECK(bool(got) == bool(least));
    if (got && least) CHECK(*got == *least);
  }
}

TEST_CASE("extend_to_basis") {
  const auto partial = m2({{1}, {0}, {0}});
  const auto target = m2({{1, 0, 1}, {0, 0, 1}, {0, 1, 0}});
  CHECK(extend_to_basis(partial, target) == std::vector<std::size_t>{1, 2});
  CHECK(extend_to_basis(FieldMatrix::identity(2, 3), target).empty());
}

TEST_CASE("echelon basis") {
  EchelonBasis b(3, 3);
  CHECK(b.insert({1, 2, 0}));
  CHECK_FALSE(b.insert({2, 1, 0}));
  CHECK(b.contains({2, 1, 0}));
  CHECK_FALSE(b.contains({0, 0, 1}));
  CHECK(b.insert({0, 0, 2}));
  CHECK(b.dim() == 2);
}

TEST_CASE("subspace canonical form, sum and intersection") {
  const auto a = SubspaceBasis::row_span(m2({{1, 1, 0}, {0, 1, 1}}));
  const auto a2 = SubspaceBasis::row_span(m2({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
  CHECK(a == a2);
  const auto b = SubspaceBasis::row_span(m2({{1, 0, 0}}));
  CHECK(a.sum(b).dim() == 3);
  CHECK(a.intersection_dim(b) == 0);
  const auto c = SubspaceBasis::column_span(m2({{1}, {1}, {0}}));
  CHECK(a.contains(c));
  CHECK(a.intersection(c) == c);

  std::mt19937_64 rng(fixtures::kSeed + 2);
  for (int i = 0; i < 100; ++i) {
    const unsigned p = i % 2 ? 3 : 2;
    const auto x = oracle::random_matrix(rng, p, 1 + rng() % 3, 4);
    const auto y = oracle::random_matrix(rng, p, 1 + rng() % 3, 4);
    const auto sx = SubspaceBasis::row_span(x), sy = SubspaceBasis::row_span(y);
    const auto cx = oracle::span_codes(oracle::rows_of(x), 4, p);
    const auto cy = oracle::span_codes(oracle::rows_of(y), 4, p);
    std::size_t common = 0;
    for (auto c0 : cx) common += cy.count(c0);
    CHECK(sx.intersection_dim(sy) == oracle::log_p(common, p));
    CHECK(sx.intersection(sy).dim() == sx.intersection_dim(sy));
    CHECK(sx.sum(sy).dim() + sx.intersection_dim(sy) == sx.dim() + sy.dim());
  }
}

TEST_CASE("gaussian binomials match the product formula and span-set counts") {
  for (unsigned p : {2u, 3u, 5u})
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k, p) == gaussian_product(n, k, p));
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(gaussian_binomial(n, k, 2) == oracle::count_subspaces(n, k, 2));
  CHECK(gaussian_binomial(3, 2, 3) == oracle::count_subspaces(3, 2, 3));
}

TEST_CASE("subspace enumeration visits each subspace once, in canonical form") {
  for (unsigned p : {2u, 3u})
    for (std::size_t n = 1; n <= (p == 2 ? 5u : 4u); ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        std::vector<SubspaceBasis> seen;
        const auto visited = enumerate_subspaces(n, k, p, [&](const SubspaceBasis& s) {
          CHECK(s.dim() == k);
          CHECK(SubspaceBasis::row_span(s.basis()) == s);
          seen.push_back(s);
          return true;
        });
        CHECK(visited == gaussian_binomial(n, k, p));
        for (std::size_t i = 1; i < seen.size(); ++i) CHECK_FALSE(seen[i] == seen[0]);
        std::sort(seen.begin(), seen.end(),
                  [](const SubspaceBasis& a, const SubspaceBasis& b) { return a.basis() < b.basis(); });
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      }
  std::size_t calls = 0;
  enumerate_subspaces(4, 2, 2, [&](const SubspaceBasis&) { return ++calls < 3; });
  CHECK(calls == 3);
  SearchConfig tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(enumerate_subspaces(4, 2, 2, [](const SubspaceBasis&) { return true; }, tiny),
                  BudgetExceeded);
}

TEST_CASE("distance to a subspace") {
  const auto l = SubspaceBasis::row_span(m2({{1, 1, 1, 1}}));
  const Vec v{1, 1, 1, 0};
  CHECK(distance_to_subspace(v, l) == 1);
  CHECK(nearest_in_subspace(v, l) == Vec{1, 1, 1, 1});
  CHECK(distance_to_subspace(Vec{0, 0, 0, 0}, l) == 0);
  CHECK(distance_to_subspace(Vec{1, 0, 1, 0}, SubspaceBasis(2, 4)) == 2);

  std::mt19937_64 rng(fixtures::kSeed + 3);
  for (int i = 0; i < 50; ++i) {
    const auto g = oracle::random_matrix(rng, 3, 2, 4);
    const auto target = oracle::random_matrix(rng, 3, 1, 4);
    const Vec t(target.row(0).begin(), target.row(0).end());
    std::size_t best = 99;
    for (auto c : oracle::span_codes(oracle::rows_of(g), 4, 3))
      best = std::min(best, hamming_distance(t, oracle::vec_of(c, 4, 3)));
    const auto s = SubspaceBasis::row_span(g);
    CHECK(distance_to_subspace(t, s) == best);
    CHECK(s.contains(nearest_in_subspace(t, s)));
    CHECK((distance_to_subspace(t, s) == 0) == s.contains(t));
  }
  CHECK(subspace_members(l).size() == 2);
}

TEST_CASE("invertible matrices") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::uint64_t full = 0;
    oracle::all_matrices(2, n, n, [&](const FieldMatrix& x) { full += oracle::span_rank(x) == n; });
    std::optional<FieldMatrix> prev;
    const auto visited = enumerate_invertible(n, 2, [&](const FieldMatrix& t) {
      CHECK(rank(t) == n);
      if (prev) CHECK(*prev < t);
      prev = t;
      return true;
    });
    CHECK(visited == full);
    CHECK(general_linear_order(n, 2) == full);
  }
  CHECK(general_linear_order(2, 3) == 48);
}

TEST_CASE("matrix text format round-trips") {
  std::mt19937_64 rng(fixtures::kSeed + 4);
  for (unsigned p : {2u, 3u, 13u}) {
    const auto m = oracle::random_matrix(rng, p, 3, 5);
    CHECK(parse_matrix(format_matrix(m)) == m);
  }
  const auto fx = parse_matrix(fixtures::kExtractFixture);
  CHECK(format_matrix(fx) == fixtures::kExtractFixture);
  CHECK(parse_matrix("gfmat 1 p=2 m=0 n=3\n").rows() == 0);
  CHECK(digest_hex("abc") == digest_hex("abc"));
  CHECK(digest_hex("abc") != digest_hex("abd"));
}

TEST_CASE("malformed matrix text is rejected") {
  auto bad = [](std::string_view s) {
    try {
      parse_matrix(s);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Format;
    }
    return false;
  };
  CHECK(bad(""));
  CHECK(bad("gfmat 2 p=2 m=1 n=1\n1\n"));
  CHECK(bad("gfmat 1 p=4 m=1 n=1\n1\n"));
  CHECK(bad("gfmat 1 p=2 m=1 n=2\n1\n"));
  CHECK(bad("gfmat 1 p=2 m=1 n=1\n2\n"));
  CHECK(bad("gfmat 1 p=2 m=2 n=1\n1\n"));
  CHECK(bad("gfmat 1 p=2 m=1 n=1\nx\n"));
}

TEST_CASE("ds text format round-trips") {
  LinearDS ds{m2({{1, 0, 1}, {0, 1, 1}}), m2({{1, 0}, {0, 1}, {1, 1}}), 2, 2};
  const auto back = parse_ds(format_ds(ds));
  CHECK(back.p == ds.p);
  CHECK(back.q == ds.q);
  CHECK(back.s == 2);
  CHECK(back.t == 2);
  CHECK_THROWS_AS(parse_ds("gfds 1 p=2\n"), Error);
}
