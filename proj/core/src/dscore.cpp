#include "rigx/dscore.hpp"

#include <algorithm>
#include <cmath>

namespace rigx {

const char* to_string(DsViolation::Kind kind) noexcept {
  switch (kind) {
    case DsViolation::Kind::Shape: return "shape";
    case DsViolation::Kind::Sparsity: return "sparsity";
    case DsViolation::Kind::Entry: return "entry";
  }
  return "?";
}

std::vector<DsViolation> verify_ds(const FieldMatrix& m, const LinearDS& ds) {
  std::vector<DsViolation> out;
  if (ds.q.rows() != m.rows() || ds.p.cols() != m.cols() || ds.q.cols() != ds.s ||
      ds.p.rows() != ds.s || ds.p.p() != m.p() || ds.q.p() != m.p()) {
    out.push_back({DsViolation::Kind::Shape, 0, 0,
                   "expected Q " + std::to_string(m.rows()) + "x" + std::to_string(ds.s) +
                       " and P " + std::to_string(ds.s) + "x" + std::to_string(m.cols())});
    return out;
  }
  for (std::size_t i = 0; i < ds.q.rows(); ++i) {
    const auto w = hamming_weight(ds.q.row(i));
    if (w > ds.t)
      out.push_back({DsViolation::Kind::Sparsity, i, 0,
                     std::to_string(w) + " probes > t=" + std::to_string(ds.t)});
  }
  const auto prod = ds.q * ds.p;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (prod.at(i, j) != m.at(i, j))
        out.push_back({DsViolation::Kind::Entry, i, j,
                       "Q*P gives " + std::to_string(prod.at(i, j)) + ", M has " +
                           std::to_string(m.at(i, j))});
  return out;
}

namespace {

// Decodes `code` as a base-p vector of length n, first coordinate most
// significant.
void decode(std::uint64_t code, unsigned p, Vec& out) {
  for (std::size_t j = out.size(); j-- > 0;) {
    out[j] = static_cast<Elem>(code % p);
    code /= p;
  }
}

std::uint64_t encode(std::span<const Elem> v, unsigned p) {
  std::uint64_t code = 0;
  for (auto e : v) code = code * p + e;
  return code;
}

}  // namespace

LinearDS linearize(const Preprocessor& pre, const FieldMatrix& q, const FieldMatrix& m,
                   std::size_t t, const SearchConfig& cfg) {
  const unsigned p = m.p();
  const std::size_t n = m.cols();
  const std::size_t s = q.cols();
  require(q.rows() == m.rows() && q.p() == p, ErrorKind::DimensionMismatch,
          "linearize: Q must have as many rows as M");
  require(q.row_sparsity() <= t, ErrorKind::PreconditionViolated, "linearize: Q is not t-row-sparse");
  const std::uint64_t inputs = detail::sat_pow(p, n);
  check_budget("linearize", inputs, cfg);

  const Field f(p);
  Vec x(n);
  for (std::uint64_t code = 0; code < inputs; ++code) {
    decode(code, p, x);
    const Vec cells = pre(x);
    require(cells.size() == s, ErrorKind::DimensionMismatch,
            "linearize: preprocessor returned " + std::to_string(cells.size()) + " cells, Q has " +
                std::to_string(s));
    Vec reduced(cells.size());
    for (std::size_t i = 0; i < s; ++i) reduced[i] = static_cast<Elem>(cells[i] % p);
    if (mat_vec(q, reduced) != mat_vec(m, x))
      fail(ErrorKind::NotComputingM, "linearize: (P, Q) differs from M at input code " +
                                         std::to_string(code));
  }

  const Vec zero(n, 0);
  const Vec base = pre(zero);
  LinearDS ds{FieldMatrix(p, s, n), q, s, t};
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    const Vec col = pre(e);
    for (std::size_t c = 0; c < s; ++c)
      ds.p.set(c, i, f.sub(static_cast<Elem>(col[c] % p), static_cast<Elem>(base[c] % p)));
  }
  if (!verify_ds(m, ds).empty())
    fail(ErrorKind::InternalVerificationFailed, "linearize: linear part does not compute M");
  return ds;
}

LinearDS ds_from_cover(const FieldMatrix& m, const SparseGenerator& cover) {
  require(cover.g.rows() == m.rows() && cover.g.p() == m.p(), ErrorKind::DimensionMismatch,
          "ds_from_cover: generator rows differ from M");
  auto x = solve_right(cover.g, m);
  if (!x) fail(ErrorKind::NotACover, "column space of M is not inside the cover");
  return {std::move(*x), cover.g, cover.g.cols(), cover.t};
}

SparseGenerator cover_from_ds(const LinearDS& ds) { return {ds.q, ds.t}; }

SumsetResult sumset_evasive_bruteforce(const FieldMatrix& rows, std::size_t s, std::size_t t,
                                       const SearchConfig& cfg) {
  const unsigned p = rows.p();
  const std::size_t n = rows.cols();
  const std::uint64_t universe = detail::sat_pow(p, n);
  require(universe <= (1u << 20), ErrorKind::InvalidArgument, "sumset: GF(p)^n too large");
  const std::size_t size = static_cast<std::size_t>(std::min<std::uint64_t>(s, universe));
  const std::uint64_t sets = detail::binomial(universe, size);
  std::uint64_t per_set = 0;
  for (std::size_t i = 0; i <= std::min(t, size); ++i)
    per_set = detail::sat_add(per_set,
                              detail::sat_mul(detail::binomial(size, i), detail::sat_pow(p - 1, i)));
  check_budget("sumset_evasive_bruteforce", detail::sat_mul(sets, per_set), cfg);

  std::vector<Vec> members(universe, Vec(n));
  for (std::uint64_t c = 0; c < universe; ++c) decode(c, p, members[c]);
  std::vector<std::uint64_t> targets(rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) targets[i] = encode(rows.row(i), p);

  const Field f(p);
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  std::uint64_t scanned = 0;

  // First sparse combination reaching each vector code, by (support size,
  // support lex, coefficients lex).
  using Combo = std::vector<std::pair<std::size_t, Elem>>;
  std::vector<Combo> how(universe);
  std::vector<bool> hit(universe);
  while (true) {
    ++scanned;
    std::fill(hit.begin(), hit.end(), false);
    hit[0] = true;
    how[0].clear();
    for (std::size_t w = 1; w <= std::min(t, size); ++w) {
      std::vector<std::size_t> sup(w);
      for (std::size_t i = 0; i < w; ++i) sup[i] = i;
      while (true) {
        std::vector<Elem> coef(w, 1);
        while (true) {
          Vec acc(n, 0);
          for (std::size_t i = 0; i < w; ++i) {
            const auto& v = members[pick[sup[i]]];
            for (std::size_t j = 0; j < n; ++j) acc[j] = f.add(acc[j], f.mul(coef[i], v[j]));
          }
          const auto code = encode(acc, p);
          if (!hit[code]) {
            hit[code] = true;
            how[code].clear();
            for (std::size_t i = 0; i < w; ++i) how[code].emplace_back(sup[i], coef[i]);
          }
          std::size_t k = w;
          while (k > 0 && ++coef[k - 1] == p) coef[--k] = 1;
          if (k == 0) break;
        }
        std::size_t i = w;
        while (i > 0 && sup[i - 1] == size - w + (i - 1)) --i;
        if (i == 0) break;
        ++sup[i - 1];
        for (std::size_t j = i; j < w; ++j) sup[j] = sup[j - 1] + 1;
      }
    }
    if (std::all_of(targets.begin(), targets.end(), [&](std::uint64_t c) { return hit[c]; })) {
      SumsetWitness w;
      for (auto idx : pick) w.s.push_back(members[idx]);
      for (auto c : targets) w.covered.push_back(how[c]);
      w.scanned = scanned;
      return w;
    }
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == universe - size + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Evasive{scanned};
}

CountingUpper counting_upper_ds(const FieldMatrix& m, std::size_t s, const Rational& eps) {
  require(eps.num > 0, ErrorKind::InvalidArgument, "counting_upper_ds: eps must be positive");
  const unsigned p = m.p();
  const std::size_t n = m.cols();
  CountingUpper out;

  auto trivial = [&] {
    out.fallback = true;
    out.ds = {FieldMatrix::identity(p, n), m, n, n};
    return out;
  };
  if (n == 0 || s == 0) return trivial();
  const double e = eps.to_double();
  const double mu = 1.0 + 1.0 / e;
  const double log_s = std::log2(double(s));
  const double log_q = std::log2(double(p));
  if (log_s < (1.0 + e) * std::log2(double(n)) || log_s <= 2.0 * mu * log_q) return trivial();

  const double denom = log_s / (mu * log_q) - 1.0;
  std::size_t t = static_cast<std::size_t>(std::ceil(double(n) / denom - 1e-12));
  t = std::clamp<std::size_t>(t, 1, n);
  const std::size_t width = (n + t - 1) / t;
  const std::uint64_t cells_per = detail::sat_pow(p, width);
  const std::uint64_t total = detail::sat_mul(t, cells_per);
  out.t_formula = t;
  out.part_width = width;
  if (total > s) return trivial();

  // Contiguous parts; the first n mod t get ⌈n/t⌉ inputs.
  std::vector<std::size_t> start(t + 1, 0);
  for (std::size_t j = 0; j < t; ++j) start[j + 1] = start[j] + n / t + (j < n % t ? 1 : 0);

  const std::size_t sp = static_cast<std::size_t>(total);
  FieldMatrix pm(p, sp, n);
  FieldMatrix qm(p, m.rows(), sp);
  Vec coef(width);
  for (std::size_t j = 0; j < t; ++j) {
    const std::size_t base = j * static_cast<std::size_t>(cells_per);
    for (std::uint64_t c = 0; c < cells_per; ++c) {
      decode(c, p, coef);
      for (std::size_t l = 0; l < start[j + 1] - start[j]; ++l)
        pm.set(base + c, start[j] + l, coef[l]);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Vec part(width, 0);
      for (std::size_t l = 0; l < start[j + 1] - start[j]; ++l) part[l] = m.at(i, start[j] + l);
      if (hamming_weight(part) == 0) continue;
      qm.set(i, base + static_cast<std::size_t>(encode(part, p)), 1);
    }
  }
  out.ds = {std::move(pm), std::move(qm), sp, t};
  if (!verify_ds(m, out.ds).empty())
    fail(ErrorKind::InternalVerificationFailed, "counting_upper_ds: table DS does not compute M");
  return out;
}

CountingLower counting_lower_search(unsigned p, std::size_t n, std::size_t m, std::size_t s,
                                    const SearchConfig& cfg) {
  require(s >= std::min(m, n), ErrorKind::PreconditionViolated,
          "counting_lower_search needs s >= min(m, n)");
  const std::uint64_t count = detail::sat_pow(p, n * m);
  check_budget("counting_lower_search", count, cfg);
  SearchConfig inner = cfg;
  inner.threads = 1;

  auto min_t = [&](std::size_t code) {
    Vec entries(n * m);
    decode(code, p, entries);
    FieldMatrix mat(p, m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) mat.set(i, j, entries[i * n + j]);
    for (std::size_t t = 0;; ++t)
      if (std::holds_alternative<DimWitness>(outer_dimension(mat, t, s, inner))) return t;
  };
  const auto ts = parallel_map(static_cast<std::size_t>(count), cfg.threads, min_t);

  CountingLower out;
  out.matrices = count;
  std::size_t arg = 0;
  for (std::size_t c = 0; c < ts.size(); ++c)
    if (ts[c] > out.t_min_worst) {
      out.t_min_worst = ts[c];
      arg = c;
    }
  Vec entries(n * m);
  decode(arg, p, entries);
  out.hardest = FieldMatrix(p, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.hardest.set(i, j, entries[i * n + j]);
  return out;
}

}  // namespace rigx
