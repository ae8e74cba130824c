#include "rigx_cli/pipelines.hpp"

namespace rigx::cli {

namespace {

[[noreturn]] void broken(const std::string& what) {
  fail(ErrorKind::InternalVerificationFailed, what);
}

}  // namespace

PipelineResult pipeline_ds_to_square_rigid(const FieldMatrix& m, const Rational& eps,
                                           std::size_t t, std::optional<std::size_t> ldc_k,
                                           std::optional<std::size_t> r,
                                           const SearchConfig& cfg) {
  PipelineResult res{report_header("pipeline-square")};
  Json& rep = res.report;
  rep["params"] = {{"eps", eps.str()}, {"t", t}};

  auto stage1 = ds_lower_to_rigid(m, eps, t, cfg);
  rep["extract"] = extract_json(stage1.outcome);
  rep["extract"]["k_iters"] = stage1.k_iters;
  if (stage1.ds) {
    if (!verify_ds(m, *stage1.ds).empty()) broken("pipeline-square: cover DS fails verification");
    rep["outcome"] = "cover";
    rep["ds_upper_bound"] = ds_json(*stage1.ds);
    return res;
  }

  const auto& rs = std::get<RigidSubmatrix>(stage1.outcome);
  rep["extract"]["width_at_least_t"] = stage1.width_at_least_t;
  const std::size_t rr = r.value_or(rs.threshold + 1);
  const std::size_t k = ldc_k.value_or(rs.mi.rows());
  rep["params"]["r"] = rr;
  rep["params"]["ldc"] = "hadamard:" + std::to_string(k);

  const auto ldc = hadamard_ldc(k);
  const auto span = ldc_span_check(ldc.e, ldc.q, ldc.delta, cfg);
  if (!span.holds) broken("pipeline-square: Hadamard span property fails");
  rep["ldc"] = span_check_json(span);

  const auto row = row_rigidity_threshold(rs.mi, rr, cfg);
  const auto em = apply_ldc(ldc, rs.mi);
  const auto glob = global_rigidity_threshold(em, rr, cfg);
  const auto bound = amplified_global_bound(ldc.delta, row.threshold, em.rows(), ldc.q);
  if (static_cast<std::int64_t>(glob.threshold) <= bound)
    broken("pipeline-square: encoded matrix misses the amplified global bound");
  rep["row_certificate"] = rigidity_json(row);
  rep["encoded"] = {{"rows", em.rows()}, {"cols", em.cols()}, {"matrix", matrix_json(em)}};
  rep["encoded_global_certificate"] = rigidity_json(glob);
  rep["amplified_bound"] = bound;

  const std::size_t copies = std::max<std::size_t>(1, em.rows() / em.cols());
  const auto square = stack_square(em, copies);
  if (rank(square) != rank(em)) broken("pipeline-square: stacking changed the rank");
  Json sq;
  sq["copies"] = copies;
  sq["rows"] = square.rows();
  sq["cols"] = square.cols();
  sq["r"] = rr;
  std::size_t threshold = copies * glob.threshold;
  const std::size_t n_sq = square.cols();
  const std::size_t dim = std::min(rr - 1, n_sq);
  const auto cost = detail::sat_mul(gaussian_binomial(n_sq, dim, square.p()),
                                    detail::sat_pow(square.p(), dim));
  if (cost <= cfg.budget) {
    const auto direct = global_rigidity_threshold(square, rr, cfg);
    if (direct.threshold != threshold) broken("pipeline-square: stacked threshold is not additive");
    sq["method"] = "exhaustive";
  } else {
    sq["method"] = "additivity";
  }
  sq["global_threshold"] = threshold;
  rep["square"] = sq;
  rep["outcome"] = "square_rigid";
  return res;
}

PipelineResult pipeline_rigid_to_ds_lb(const FieldMatrix& m, std::size_t r, std::size_t t,
                                       const SearchConfig& cfg) {
  PipelineResult res{report_header("pipeline-dslb")};
  Json& rep = res.report;
  const std::size_t n = m.cols();
  rep["params"] = {{"r", r}, {"t", t}};
  if (rank(m) != n) {
    rep["outcome"] = "hypothesis_fails";
    rep["reason"] = "matrix lacks full column rank";
    res.exit_code = 2;
    return res;
  }
  const auto strong = strong_row_rigidity(m, r, t, StrongMethod::InnerDim, cfg);
  rep["strong_certificate"] = strong_json(strong);
  if (!strong.rigid) {
    rep["outcome"] = "hypothesis_fails";
    rep["reason"] = "not strongly row rigid at (r, t)";
    res.exit_code = 2;
    return res;
  }
  if (!verify_inner_witness(m, *strong.inner))
    broken("pipeline-dslb: inner-dimension witness fails re-verification");

  const std::size_t s_max = n + r - 1;
  const auto outer = outer_dimension(m, t, s_max, cfg);
  rep["outer"] = outer_json(outer);
  if (const auto* w = std::get_if<DimWitness>(&outer)) {
    // d <= n − r together with d + D >= 2n forces D >= n + r.
    (void)w;
    broken("pipeline-dslb: cover found below n + r, contradicting d + D >= 2 dim V");
  }
  rep["dimension_inequality"] = {{"inner", strong.inner->value},
                                 {"outer_lower_bound", s_max + 1},
                                 {"two_dim_v", 2 * n}};
  rep["outcome"] = "ds_lower_bound";
  rep["no_linear_ds"] = {{"s", s_max}, {"t", t}};
  return res;
}

}  // namespace rigx::cli
