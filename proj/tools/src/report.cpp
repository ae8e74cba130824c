#include "rigx_cli/report.hpp"

#include "rigx/matrix_io.hpp"

namespace rigx::cli {

const char* tool_version() { return RIGX_VERSION; }

Json report_header(const std::string& op) {
  Json j;
  j["schema"] = kSchema;
  j["tool_version"] = tool_version();
  j["op"] = op;
  return j;
}

Json matrix_json(const FieldMatrix& m) { return format_matrix(m); }

Json subspace_json(const SubspaceBasis& s) {
  Json j;
  j["dim"] = s.dim();
  j["basis"] = format_matrix(s.basis());
  return j;
}

Json inner_json(const DimWitness& w) {
  Json j;
  j["value"] = w.value;
  j["witness"] = {{"t", w.witness.t}, {"matrix", matrix_json(w.witness.g)}};
  j["intersection"] = subspace_json(w.intersection_or_cover);
  j["candidates"] = w.candidates;
  j["exhausted"] = w.exhausted;
  return j;
}

Json outer_json(const OuterResult& r) {
  Json j;
  if (const auto* w = std::get_if<DimWitness>(&r)) {
    j["result"] = "value";
    j["value"] = w->value;
    j["witness"] = {{"t", w->witness.t}, {"matrix", matrix_json(w->witness.g)}};
    j["cover"] = subspace_json(w->intersection_or_cover);
    j["exhausted"] = w->exhausted;
  } else {
    const auto& a = std::get<AboveMax>(r);
    j["result"] = "above_max";
    j["s_max"] = a.s_max;
    j["exhausted"] = a.exhausted;
  }
  return j;
}

Json rigidity_json(const RigidityCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["r"] = c.r;
  j["threshold"] = c.threshold;
  j["refuting_L"] = format_matrix(c.refuting_l.basis());
  j["scanned"] = c.scanned;
  return j;
}

Json strong_json(const StrongRigidityResult& s) {
  Json j;
  j["method"] = to_string(s.method);
  j["rigid"] = s.rigid;
  if (s.inner) j["inner"] = inner_json(*s.inner);
  if (s.breaking_t) j["breaking_T"] = matrix_json(*s.breaking_t);
  if (s.breaking_cert) j["breaking_certificate"] = rigidity_json(*s.breaking_cert);
  if (s.cover_a) j["cover_A"] = matrix_json(*s.cover_a);
  if (s.cover_b) j["cover_B"] = subspace_json(*s.cover_b);
  j["scanned"] = s.scanned;
  return j;
}

Json ds_json(const LinearDS& ds) {
  Json j;
  j["s"] = ds.s;
  j["t"] = ds.t;
  j["ds"] = format_ds(ds);
  return j;
}

Json violations_json(const std::vector<DsViolation>& v) {
  Json arr = Json::array();
  for (const auto& x : v)
    arr.push_back({{"kind", to_string(x.kind)}, {"row", x.row}, {"col", x.col}, {"detail", x.detail}});
  return arr;
}

Json sumset_json(const SumsetResult& r) {
  Json j;
  if (const auto* e = std::get_if<Evasive>(&r)) {
    j["result"] = "evasive";
    j["scanned"] = e->scanned;
    return j;
  }
  const auto& w = std::get<SumsetWitness>(r);
  j["result"] = "witness";
  Json s = Json::array();
  for (const auto& v : w.s) s.push_back(v);
  j["S"] = s;
  Json cov = Json::array();
  for (const auto& row : w.covered) {
    Json terms = Json::array();
    for (const auto& [idx, c] : row) terms.push_back({idx, c});
    cov.push_back(terms);
  }
  j["covered"] = cov;
  j["scanned"] = w.scanned;
  return j;
}

Json decomposition_json(const Decomposition& d) {
  Json j;
  j["A"] = matrix_json(d.a);
  j["B"] = matrix_json(d.b);
  j["Mprime"] = matrix_json(d.mprime);
  j["Mprime_columns"] = d.mprime_cols;
  j["C"] = matrix_json(d.c);
  j["inner_dimension"] = d.inner.value;
  return j;
}

Json extract_json(const ExtractOutcome& o) {
  Json j;
  if (const auto* rs = std::get_if<RigidSubmatrix>(&o)) {
    j["result"] = "rigid_submatrix";
    j["iteration"] = rs->iteration;
    j["n_i"] = rs->n_i;
    j["threshold"] = rs->threshold;
    j["t"] = rs->t;
    j["source_columns"] = rs->source_columns;
    j["Mi"] = matrix_json(rs->mi);
    j["inner_certificate"] = inner_json(rs->inner_cert);
    if (rs->certification)
      j["strong_certificate"] = {{"r", rs->threshold + 1}, {"result", strong_json(*rs->certification)}};
    else
      j["strong_certificate"] = nullptr;
    return j;
  }
  const auto& cv = std::get<Cover>(o);
  j["result"] = "cover";
  j["total_sparsity"] = cv.total_sparsity;
  j["sparsity_bound"] = cv.sparsity_bound;
  j["total_space"] = cv.total_space;
  j["space_bound"] = cv.space_bound;
  j["A"] = matrix_json(cv.a.g);
  j["B"] = matrix_json(cv.b);
  Json it = Json::array();
  for (const auto& d : cv.per_iteration) it.push_back(decomposition_json(d));
  j["per_iteration"] = it;
  return j;
}

Json span_check_json(const SpanCheck& c) {
  Json j;
  j["holds"] = c.holds;
  j["method"] = c.method;
  if (c.counterexample)
    j["counterexample"] = {{"kept_rows", c.counterexample->kept_rows},
                           {"coordinate", c.counterexample->coordinate}};
  j["scanned"] = c.scanned;
  return j;
}

Json code_json(const CodeSpec& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["p"] = c.p;
  j["n_code"] = c.n_code;
  j["k_code"] = c.k_code;
  j["min_distance"] = c.min_distance;
  j["generator"] = matrix_json(c.g);
  return j;
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace rigx::cli
