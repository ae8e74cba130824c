#include "rigx/extract.hpp"

#include <cmath>
#include <numeric>

namespace rigx {

namespace {

[[noreturn]] void broken(const std::string& what) {
  fail(ErrorKind::InternalVerificationFailed, what);
}

FieldMatrix zero_pad_columns(const FieldMatrix& a, std::size_t cols) {
  if (a.cols() >= cols) return a;
  return a.hstack(FieldMatrix(a.p(), a.rows(), cols - a.cols()));
}

}  // namespace

AuxResult aux_decompose(const FieldMatrix& m, std::size_t t, std::size_t k, const SearchConfig& cfg) {
  auto inner = inner_dimension(m, t, cfg);
  const std::size_t rk = rank(m);
  if (inner.value + k < rk) return InnerTooSmall{std::move(inner), rk, k};

  const std::size_t n = m.cols();
  Decomposition d;
  d.a = zero_pad_columns(inner.witness.g, n);
  d.mprime_cols = extend_to_basis(d.a, m);
  if (d.mprime_cols.size() > k) broken("aux_decompose: basis extension needs more than k columns");
  d.mprime = m.select_columns(d.mprime_cols);
  auto x = solve_right(d.a.hstack(d.mprime), m);
  if (!x) broken("aux_decompose: [A | M'] does not span M");
  std::vector<std::size_t> top(n), bottom(d.mprime_cols.size());
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.begin(), bottom.end(), n);
  d.b = x->select_rows(top);
  d.c = x->select_rows(bottom);
  if (d.a * d.b + d.mprime * d.c != m) broken("aux_decompose: A*B + M'*C != M");
  if (d.a.row_sparsity() > t) broken("aux_decompose: A is not t-row-sparse");
  d.inner = std::move(inner);
  return d;
}

namespace {

struct Round {
  std::size_t t;
  std::size_t k;        // test threshold and split width
  std::size_t nominal;  // n_i
};

void certify(RigidSubmatrix& rs, const SearchConfig& cfg) {
  if (!verify_inner_witness(rs.mi, rs.inner_cert))
    broken("extract: inner-dimension witness fails re-verification");
  if (rs.inner_cert.value + rs.threshold >= rank(rs.mi))
    broken("extract: inner dimension does not meet the rigidity test");
  if (rank(rs.mi) != rs.mi.cols()) return;
  try {
    auto res = strong_row_rigidity(rs.mi, rs.threshold + 1, rs.t, StrongMethod::GlEnum, cfg);
    if (!res.rigid) broken("extract: submatrix is not strongly row rigid under GL enumeration");
    rs.certification = std::move(res);
  } catch (const BudgetExceeded&) {
    // GL(n_i) scan out of budget: the re-verified inner witness stands alone.
  }
}

ExtractOutcome run_rounds(const FieldMatrix& m, const std::vector<Round>& rounds,
                          std::size_t final_nominal, const SearchConfig& cfg) {
  FieldMatrix cur = m;
  std::vector<std::size_t> source(m.cols());
  std::iota(source.begin(), source.end(), 0);
  std::vector<Decomposition> parts;

  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const auto& rd = rounds[i];
    auto res = aux_decompose(cur, rd.t, rd.k, cfg);
    if (auto* small = std::get_if<InnerTooSmall>(&res)) {
      RigidSubmatrix rs;
      rs.mi = cur;
      rs.iteration = i;
      rs.n_i = rd.nominal;
      rs.threshold = rd.k;
      rs.t = rd.t;
      rs.source_columns = source;
      rs.inner_cert = std::move(small->inner);
      certify(rs, cfg);
      for (std::size_t j = 0; j < rs.source_columns.size(); ++j)
        if (m.column(rs.source_columns[j]) != rs.mi.column(j))
          broken("extract: submatrix column is not a column of M");
      return rs;
    }
    auto& d = std::get<Decomposition>(res);
    std::vector<std::size_t> next;
    for (auto j : d.mprime_cols) next.push_back(source[j]);
    source = std::move(next);
    cur = d.mprime;
    parts.push_back(std::move(d));
  }

  // Telescope: B rows for round i are B_i·C_{i−1}⋯C_0; the tail is C_{k−1}⋯C_0.
  const unsigned p = m.p();
  const std::size_t n = m.cols();
  FieldMatrix a(p, m.rows(), 0);
  FieldMatrix b(p, 0, n);
  FieldMatrix chain = FieldMatrix::identity(p, n);
  std::size_t bound = 0;
  std::size_t space_bound = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    a = a.hstack(parts[i].a);
    b = b.vstack(parts[i].b * chain);
    chain = parts[i].c * chain;
    bound += rounds[i].t;
    space_bound += rounds[i].nominal;
  }
  a = a.hstack(cur);
  b = b.vstack(chain);
  bound += cur.cols();
  space_bound += final_nominal;

  Cover cv;
  cv.total_sparsity = a.row_sparsity();
  cv.total_space = a.cols();
  cv.sparsity_bound = bound;
  cv.space_bound = space_bound;
  cv.a = {std::move(a), bound};
  cv.b = std::move(b);
  cv.per_iteration = std::move(parts);
  if (cv.a.g * cv.b != m) broken("extract: assembled cover A*B != M");
  if (cv.total_sparsity > cv.sparsity_bound) broken("extract: cover exceeds its sparsity bound");
  if (cv.total_space > cv.space_bound) broken("extract: cover exceeds its space bound");
  return cv;
}

}  // namespace

ExtractOutcome find_rigid_submatrix(const FieldMatrix& m, const Rational& eps, std::size_t k_iters,
                                    std::size_t t, const SearchConfig& cfg) {
  require(eps.num > 0 && eps.num < eps.den, ErrorKind::InvalidArgument,
          "find_rigid_submatrix: eps must lie in (0,1)");
  std::vector<Round> rounds;
  std::size_t width = m.cols();
  for (std::size_t i = 0; i < k_iters; ++i) {
    const auto next = static_cast<std::size_t>(eps.ceil_times(static_cast<std::int64_t>(width)));
    rounds.push_back({t, next, width});
    width = next;
  }
  return run_rounds(m, rounds, width, cfg);
}

ExtractOutcome succinct_schedule_run(const FieldMatrix& m, const std::vector<std::size_t>& r_seq,
                                     const std::vector<std::size_t>& t_seq,
                                     const SearchConfig& cfg) {
  require(r_seq.size() == t_seq.size(), ErrorKind::InvalidArgument,
          "succinct schedule: r and t sequences differ in length");
  for (std::size_t i = 1; i < r_seq.size(); ++i)
    require(r_seq[i] < r_seq[i - 1], ErrorKind::InvalidArgument,
            "succinct schedule: r sequence must be strictly decreasing");
  std::vector<Round> rounds;
  std::size_t width = m.cols();
  for (std::size_t i = 0; i < r_seq.size(); ++i) {
    rounds.push_back({t_seq[i], r_seq[i], width});
    width = r_seq[i];
  }
  return run_rounds(m, rounds, width, cfg);
}

std::size_t ds_lower_iterations(std::size_t n, const Rational& eps, std::size_t t) {
  require(t >= 1 && t <= n, ErrorKind::InvalidArgument, "ds_lower_to_rigid needs 1 <= t <= n");
  require(eps.num > 0 && eps.num < eps.den, ErrorKind::InvalidArgument, "eps must lie in (0,1)");
  if (t == n) return 0;
  const double k = std::log(double(n) / double(t)) / std::log(double(eps.den) / double(eps.num));
  return static_cast<std::size_t>(std::ceil(k - 1e-9));
}

DsLowerOutcome ds_lower_to_rigid(const FieldMatrix& m, const Rational& eps, std::size_t t,
                                 const SearchConfig& cfg) {
  const std::size_t k = ds_lower_iterations(m.cols(), eps, t);
  DsLowerOutcome out{find_rigid_submatrix(m, eps, k, t, cfg), k, false, std::nullopt};
  if (auto* rs = std::get_if<RigidSubmatrix>(&out.outcome)) {
    out.width_at_least_t = rs->n_i >= t;
  } else {
    const auto& cv = std::get<Cover>(out.outcome);
    LinearDS ds{cv.b, cv.a.g, cv.total_space, cv.total_sparsity};
    if (!verify_ds(m, ds).empty()) broken("ds_lower_to_rigid: cover does not give a valid DS");
    out.ds = std::move(ds);
  }
  return out;
}

}  // namespace rigx
