#include "rigx/amplify.hpp"

#include <algorithm>

namespace rigx {

LinearLDC hadamard_ldc(std::size_t k) {
  require(k >= 1 && k <= 12, ErrorKind::InvalidArgument, "hadamard_ldc: need 1 <= k <= 12");
  const std::size_t rows = std::size_t{1} << k;
  FieldMatrix e(2, rows, k);
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t j = 0; j < k; ++j) e.set(a, j, static_cast<long>((a >> (k - 1 - j)) & 1u));
  return {std::move(e), 2, Rational(1, 4), true};
}

namespace {

// Row subsets of size ≤ q whose span contains e_i, in (size, lex) order.
std::vector<std::vector<std::size_t>> spanning_sets(const FieldMatrix& e, std::size_t q,
                                                    std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t m = e.rows();
  Vec unit(e.cols(), 0);
  unit[i] = 1;
  for (std::size_t w = 1; w <= std::min(q, m); ++w) {
    std::vector<std::size_t> pick(w);
    for (std::size_t j = 0; j < w; ++j) pick[j] = j;
    while (true) {
      EchelonBasis basis(e.p(), e.cols());
      for (auto r : pick) {
        auto row = e.row(r);
        basis.insert(Vec(row.begin(), row.end()));
      }
      if (basis.contains(unit)) out.push_back(pick);
      std::size_t j = w;
      while (j > 0 && pick[j - 1] == m - w + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t l = j; l < w; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
  return out;
}

std::size_t greedy_disjoint(const std::vector<std::vector<std::size_t>>& sets, std::size_t m) {
  std::vector<bool> used(m, false);
  std::size_t count = 0;
  for (const auto& s : sets) {
    if (std::any_of(s.begin(), s.end(), [&](std::size_t r) { return used[r]; })) continue;
    for (auto r : s) used[r] = true;
    ++count;
  }
  return count;
}

}  // namespace

SpanCheck ldc_span_check(const FieldMatrix& e, std::size_t q, const Rational& delta,
                         const SearchConfig& cfg, bool force_exhaustive) {
  require(delta.num >= 0 && delta.num <= delta.den, ErrorKind::InvalidArgument,
          "ldc_span_check: delta must lie in [0,1]");
  const std::size_t m = e.rows();
  const std::size_t k = e.cols();
  const auto del = static_cast<std::size_t>(delta.floor_times(static_cast<std::int64_t>(m)));
  std::uint64_t subset_cost = 0;
  for (std::size_t w = 1; w <= std::min(q, m); ++w)
    subset_cost = detail::sat_add(subset_cost, detail::binomial(m, w));
  check_budget("ldc_span_check(subsets)", detail::sat_mul(subset_cost, k), cfg);

  std::vector<std::vector<std::vector<std::size_t>>> good(k);
  for (std::size_t i = 0; i < k; ++i) good[i] = spanning_sets(e, q, i);

  SpanCheck out;
  if (!force_exhaustive) {
    bool packed = true;
    for (std::size_t i = 0; i < k && packed; ++i) packed = greedy_disjoint(good[i], m) > del;
    if (packed) {
      out.holds = true;
      out.method = "packing";
      out.scanned = k;
      return out;
    }
  }

  out.method = "exhaustive";
  check_budget("ldc_span_check(deletions)", detail::sat_mul(detail::binomial(m, del), k), cfg);
  std::vector<std::size_t> d(del);
  for (std::size_t j = 0; j < del; ++j) d[j] = j;
  std::vector<bool> gone(m);
  while (true) {
    ++out.scanned;
    std::fill(gone.begin(), gone.end(), false);
    for (auto r : d) gone[r] = true;
    for (std::size_t i = 0; i < k; ++i) {
      const bool alive = std::any_of(good[i].begin(), good[i].end(), [&](const auto& s) {
        return std::none_of(s.begin(), s.end(), [&](std::size_t r) { return gone[r]; });
      });
      if (!alive) {
        SpanCounterexample cx;
        for (std::size_t r = 0; r < m; ++r)
          if (!gone[r]) cx.kept_rows.push_back(r);
        cx.coordinate = i;
        out.counterexample = std::move(cx);
        return out;
      }
    }
    std::size_t j = del;
    while (j > 0 && d[j - 1] == m - del + (j - 1)) --j;
    if (j == 0) break;
    ++d[j - 1];
    for (std::size_t l = j; l < del; ++l) d[l] = d[l - 1] + 1;
  }
  out.holds = true;
  return out;
}

LinearLDC make_ldc(FieldMatrix e, std::size_t q, const Rational& delta, bool declared,
                   const SearchConfig& cfg) {
  if (declared) return {std::move(e), q, delta, false};
  const auto check = ldc_span_check(e, q, delta, cfg);
  if (!check.holds)
    fail(ErrorKind::PreconditionViolated,
         "span property fails for coordinate " + std::to_string(check.counterexample->coordinate));
  return {std::move(e), q, delta, true};
}

FieldMatrix apply_ldc(const LinearLDC& ldc, const FieldMatrix& m) {
  require(ldc.e.cols() == m.rows() && ldc.e.p() == m.p(), ErrorKind::DimensionMismatch,
          "apply_ldc: E has " + std::to_string(ldc.e.cols()) + " columns, M has " +
              std::to_string(m.rows()) + " rows");
  return ldc.e * m;
}

FieldMatrix stack_square(const FieldMatrix& m, std::size_t copies) {
  require(copies >= 1, ErrorKind::InvalidArgument, "stack_square: copies must be >= 1");
  FieldMatrix out = m;
  for (std::size_t c = 1; c < copies; ++c) out = out.hstack(m);
  return out;
}

std::int64_t amplified_global_bound(const Rational& delta, std::size_t row_threshold,
                                    std::size_t m_prime, std::size_t q) {
  require(q >= 1, ErrorKind::InvalidArgument, "amplified_global_bound: q must be >= 1");
  const std::int64_t numer = delta.num * (static_cast<std::int64_t>(row_threshold) - 1) *
                             static_cast<std::int64_t>(m_prime);
  const std::int64_t denom = delta.den * static_cast<std::int64_t>(q);
  return numer >= 0 ? numer / denom : -((-numer + denom - 1) / denom);
}

}  // namespace rigx
