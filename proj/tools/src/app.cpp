#include "rigx_cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rigx/matrix_io.hpp"
#include "rigx_cli/pipelines.hpp"
#include "rigx_cli/report.hpp"

namespace rigx::cli {

namespace {

Json matrix_input(const FieldMatrix& m) {
  return {{"p", m.p()}, {"m", m.rows()}, {"n", m.cols()}, {"digest", digest_hex(format_matrix(m))}};
}

std::vector<std::pair<std::size_t, std::size_t>> parse_schedule(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::stringstream ss(text);
  std::string step;
  while (std::getline(ss, step, ';')) {
    if (step.empty()) continue;
    const auto comma = step.find(',');
    require(comma != std::string::npos, ErrorKind::InvalidArgument,
            "schedule step '" + step + "' must be r,t");
    try {
      out.emplace_back(std::stoul(step.substr(0, comma)), std::stoul(step.substr(comma + 1)));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "schedule step '" + step + "' must be r,t");
    }
  }
  return out;
}

std::size_t parse_hadamard(const std::string& spec) {
  const std::string prefix = "hadamard:";
  require(spec.rfind(prefix, 0) == 0, ErrorKind::UnsupportedKind,
          "only 'hadamard:<k>' LDCs are built in, got '" + spec + "'");
  try {
    return std::stoul(spec.substr(prefix.size()));
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, "bad LDC spec '" + spec + "'");
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return kExitBudget;
    case ErrorKind::Format: return kExitIo;
    case ErrorKind::InternalVerificationFailed: return kExitInternal;
    default: return kExitPrecondition;
  }
}

}  // namespace

CliOutput run_cli(const std::vector<std::string>& args) {
  CliOutput res;
  CLI::App app{"rigx: exact rigidity and inner/outer dimension workbench over GF(p)", "rigx"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  std::optional<std::uint64_t> budget_flag;
  unsigned threads = 1;
  bool timing = false;
  app.add_option("--budget", budget_flag, "max candidates per exhaustive scan (env RIGX_BUDGET)");
  app.add_option("--threads", threads, "worker threads; never changes results")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", timing, "add elapsed_ms to the report");

  SearchConfig cfg;
  std::string op;
  std::map<CLI::App*, std::function<Json()>> actions;

  // Options shared by many subcommands.
  std::string matrix_path, ds_path, eps_text, emit_path, schedule, ldc_spec, mode, method, kind;
  std::size_t t = 0, r = 0, s = 0, s_max = 0, k = 0, copies = 1, p = 2, n = 0, m = 0;
  std::optional<std::size_t> opt_ldc_k, opt_r, opt_k, opt_t;
  bool check = false, force_exhaustive = false, list = false;
  std::optional<std::string> generator_path;

  auto load = [&] { return read_matrix_file(matrix_path); };
  auto add = [&](const std::string& name, const std::string& desc, std::function<Json()> fn) {
    auto* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    actions[sub] = std::move(fn);
    return sub;
  };

  {
    auto* c = add("inner-dim", "inner dimension d_M(t) with a witness", [&] {
      const auto mat = load();
      auto rep = report_header("inner-dim");
      rep["input"] = matrix_input(mat);
      rep["t"] = t;
      const auto w = inner_dimension(mat, t, cfg);
      if (!verify_inner_witness(mat, w)) fail(ErrorKind::InternalVerificationFailed, "inner witness");
      rep.update(inner_json(w));
      return rep;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--t", t)->required();
  }
  {
    auto* c = add("outer-dim", "outer dimension D_M(t) up to --s-max", [&] {
      const auto mat = load();
      auto rep = report_header("outer-dim");
      rep["input"] = matrix_input(mat);
      rep["t"] = t;
      rep["s_max"] = s_max;
      const auto o = outer_dimension(mat, t, s_max, cfg);
      if (const auto* w = std::get_if<DimWitness>(&o); w && !verify_outer_witness(mat, *w))
        fail(ErrorKind::InternalVerificationFailed, "outer witness");
      rep.update(outer_json(o));
      return rep;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--t", t)->required();
    c->add_option("--s-max", s_max)->required();
  }
  {
    auto* c = add("rigidity", "row / global thresholds or strong rigidity", [&] {
      const auto mat = load();
      auto rep = report_header("rigidity");
      rep["input"] = matrix_input(mat);
      rep["r"] = r;
      rep["mode"] = mode;
      if (mode == "row") {
        rep["certificate"] = rigidity_json(row_rigidity_threshold(mat, r, cfg));
      } else if (mode == "global") {
        rep["certificate"] = rigidity_json(global_rigidity_threshold(mat, r, cfg));
      } else {
        require(opt_t.has_value(), ErrorKind::InvalidArgument, "--mode strong needs --t");
        const auto meth = method == "gl-enum"     ? StrongMethod::GlEnum
                          : method == "sum-cover" ? StrongMethod::SumCover
                                                  : StrongMethod::InnerDim;
        rep["t"] = *opt_t;
        rep["certificate"] = strong_json(strong_row_rigidity(mat, r, *opt_t, meth, cfg));
      }
      return rep;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--r", r)->required();
    c->add_option("--t", opt_t, "sparsity (strong mode)");
    c->add_option("--mode", mode)->check(CLI::IsMember({"row", "global", "strong"}))->default_val("row");
    c->add_option("--method", method)
        ->check(CLI::IsMember({"inner-dim", "gl-enum", "sum-cover"}))
        ->default_val("inner-dim");
  }
  {
    auto* c = add("sumset", "brute-force sumset evasiveness of the rows", [&] {
      const auto mat = load();
      auto rep = report_header("sumset");
      rep["input"] = matrix_input(mat);
      rep["s"] = s;
      rep["t"] = t;
      rep.update(sumset_json(sumset_evasive_bruteforce(mat, s, t, cfg)));
      return rep;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--s", s)->required();
    c->add_option("--t", t)->required();
  }
  {
    auto* c = add("verify-ds", "check M = Q·P and the probe bound", [&] {
      const auto mat = load();
      const auto ds = read_ds_file(ds_path);
      auto rep = report_header("verify-ds");
      rep["input"] = matrix_input(mat);
      rep["ds_digest"] = digest_hex(format_ds(ds));
      const auto v = verify_ds(mat, ds);
      rep["valid"] = v.empty();
      rep["violations"] = violations_json(v);
      return rep;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--ds", ds_path)->required();
  }
  {
    auto* c = add("synth-counting", "partition-table DS from the counting argument", [&] {
      const auto mat = load();
      const auto eps = Rational::parse(eps_text);
      auto rep = report_header("synth-counting");
      rep["input"] = matrix_input(mat);
      rep["s"] = s;
      rep["eps"] = eps.str();
      const auto cu = counting_upper_ds(mat, s, eps);
      rep["fallback"] = cu.fallback;
      rep["t_formula"] = cu.t_formula;
      rep["part_width"] = cu.part_width;
      rep["valid"] = verify_ds(mat, cu.ds).empty();
      rep["result"] = ds_json(cu.ds);
      if (!emit_path.empty()) write_text_file(emit_path, format_ds(cu.ds));
      return rep;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--s", s)->required();
    c->add_option("--eps", eps_text)->required();
    c->add_option("--emit-ds", emit_path);
  }
  {
    auto* c = add("counting-search", "worst-case min probes over all m×n matrices", [&] {
      auto rep = report_header("counting-search");
      rep["p"] = p;
      rep["n"] = n;
      rep["m"] = m;
      rep["s"] = s;
      const auto cl = counting_lower_search(static_cast<unsigned>(p), n, m, s, cfg);
      rep["t_min_worst"] = cl.t_min_worst;
      rep["hardest"] = matrix_json(cl.hardest);
      rep["matrices"] = cl.matrices;
      return rep;
    });
    c->add_option("--p", p)->required();
    c->add_option("--n", n)->required();
    c->add_option("--m", m)->required();
    c->add_option("--s", s)->required();
  }
  {
    auto* c = add("extract", "rigid-submatrix extraction", [&] {
      const auto mat = load();
      auto rep = report_header("extract");
      rep["input"] = matrix_input(mat);
      if (!schedule.empty()) {
        std::vector<std::size_t> rs, ts;
        for (auto [ri, ti] : parse_schedule(schedule)) {
          rs.push_back(ri);
          ts.push_back(ti);
        }
        rep["schedule"] = {{"r", rs}, {"t", ts}};
        rep["outcome"] = extract_json(succinct_schedule_run(mat, rs, ts, cfg));
      } else {
        require(!eps_text.empty() && opt_k && opt_t, ErrorKind::InvalidArgument,
                "extract needs --eps, --k and --t (or --schedule)");
        const auto eps = Rational::parse(eps_text);
        rep["eps"] = eps.str();
        rep["k"] = *opt_k;
        rep["t"] = *opt_t;
        rep["outcome"] = extract_json(find_rigid_submatrix(mat, eps, *opt_k, *opt_t, cfg));
      }
      return rep;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--eps", eps_text);
    c->add_option("--k", opt_k);
    c->add_option("--t", opt_t);
    c->add_option("--schedule", schedule, "r1,t1;r2,t2;...");
  }
  {
    auto* c = add("ldc", "Hadamard LDC generator and span-property check", [&] {
      const auto ldc = hadamard_ldc(k);
      auto rep = report_header("ldc");
      rep["kind"] = "hadamard";
      rep["k"] = k;
      rep["q"] = ldc.q;
      rep["delta"] = ldc.delta.str();
      rep["E"] = matrix_json(ldc.e);
      if (check) rep["span_check"] = span_check_json(ldc_span_check(ldc.e, ldc.q, ldc.delta, cfg, force_exhaustive));
      if (!emit_path.empty()) write_text_file(emit_path, format_matrix(ldc.e));
      return rep;
    });
    c->add_option("--k", k)->required();
    c->add_flag("--check", check);
    c->add_flag("--force-exhaustive", force_exhaustive);
    c->add_option("--emit-matrix", emit_path);
  }
  {
    auto* c = add("amplify", "row-to-global amplification through an LDC", [&] {
      const auto mat = load();
      const auto ldc = hadamard_ldc(parse_hadamard(ldc_spec));
      auto rep = report_header("amplify");
      rep["input"] = matrix_input(mat);
      rep["ldc"] = ldc_spec;
      rep["r"] = r;
      const auto span = ldc_span_check(ldc.e, ldc.q, ldc.delta, cfg);
      rep["span_check"] = span_check_json(span);
      const auto em = apply_ldc(ldc, mat);
      const auto row = row_rigidity_threshold(mat, r, cfg);
      const auto glob = global_rigidity_threshold(em, r, cfg);
      const auto bound = amplified_global_bound(ldc.delta, row.threshold, em.rows(), ldc.q);
      rep["row_certificate"] = rigidity_json(row);
      rep["encoded"] = matrix_json(em);
      rep["encoded_global_certificate"] = rigidity_json(glob);
      rep["amplified_bound"] = bound;
      rep["bound_holds"] = static_cast<std::int64_t>(glob.threshold) > bound;
      if (span.holds && static_cast<std::int64_t>(glob.threshold) <= bound)
        fail(ErrorKind::InternalVerificationFailed, "amplified global bound violated");
      return rep;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--ldc", ldc_spec)->required();
    c->add_option("--r", r)->required();
  }
  {
    auto* c = add("stack", "side-by-side copies of a matrix", [&] {
      const auto mat = load();
      const auto out = stack_square(mat, copies);
      auto rep = report_header("stack");
      rep["input"] = matrix_input(mat);
      rep["copies"] = copies;
      rep["rank_in"] = rank(mat);
      rep["rank_out"] = rank(out);
      rep["matrix"] = matrix_json(out);
      if (!emit_path.empty()) write_text_file(emit_path, format_matrix(out));
      return rep;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--copies", copies)->required();
    c->add_option("--emit-matrix", emit_path);
  }
  {
    auto* c = add("code", "built-in codes and their rigid matrices", [&] {
      auto rep = report_header("code");
      if (list) {
        Json arr = Json::array();
        for (const auto& e : code_catalog()) arr.push_back({{"name", e.name}, {"description", e.description}});
        rep["catalog"] = arr;
        return rep;
      }
      require(!kind.empty(), ErrorKind::InvalidArgument, "code needs --kind or --list");
      const auto ck = code_kind_from_string(kind);
      const auto spec = ck == CodeKind::UserGenerator
                            ? (require(generator_path.has_value(), ErrorKind::InvalidArgument,
                                       "user_generator needs --generator"),
                               build_user_code(read_matrix_file(*generator_path), cfg))
                            : build_code(ck, static_cast<unsigned>(p), cfg);
      rep["code"] = code_json(spec);
      const auto mat = friedman_matrix(spec);
      rep["matrix"] = matrix_json(mat);
      if (!emit_path.empty()) write_text_file(emit_path, format_matrix(mat));
      return rep;
    });
    c->add_option("--kind", kind);
    c->add_option("--p", p)->default_val(2);
    c->add_option("--generator", generator_path);
    c->add_option("--emit-matrix", emit_path);
    c->add_flag("--list", list);
  }
  {
    auto* c = add("pipeline-square", "extraction → LDC → square stacking", [&] {
      const auto mat = load();
      auto pr = pipeline_ds_to_square_rigid(mat, Rational::parse(eps_text), t, opt_ldc_k, opt_r, cfg);
      pr.report["input"] = matrix_input(mat);
      res.exit_code = pr.exit_code;
      return pr.report;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--eps", eps_text)->required();
    c->add_option("--t", t)->required();
    c->add_option("--ldc-k", opt_ldc_k);
    c->add_option("--r", opt_r);
  }
  {
    auto* c = add("pipeline-dslb", "strong rigidity → linear DS lower bound", [&] {
      const auto mat = load();
      auto pr = pipeline_rigid_to_ds_lb(mat, r, t, cfg);
      pr.report["input"] = matrix_input(mat);
      res.exit_code = pr.exit_code;
      return pr.report;
    });
    c->add_option("--matrix", matrix_path)->required();
    c->add_option("--r", r)->required();
    c->add_option("--t", t)->required();
  }

  std::vector<std::string> argv_store{"rigx"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? kExitOk : kExitPrecondition;
    return res;
  }

  if (budget_flag) {
    cfg.budget = *budget_flag;
  } else if (const char* env = std::getenv("RIGX_BUDGET")) {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      res.err = "rigx: ignoring malformed RIGX_BUDGET='" + std::string(env) + "'\n";
    }
  }
  cfg.threads = threads;

  CLI::App* chosen = app.get_subcommands().front();
  op = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Json rep = actions.at(chosen)();
    rep["budget"] = cfg.budget;
    if (timing)
      rep["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    res.out = render(rep);
  } catch (const BudgetExceeded& e) {
    auto rep = report_header(op);
    rep["error"] = {{"kind", to_string(e.kind())}, {"stage", e.stage()},
                    {"required", e.required()}, {"budget", e.budget()}, {"message", e.what()}};
    res.out = render(rep);
    res.err += std::string("rigx: ") + e.what() + "\n";
    res.exit_code = kExitBudget;
  } catch (const Error& e) {
    auto rep = report_header(op);
    rep["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    res.out = render(rep);
    res.err += std::string("rigx: ") + e.what() + "\n";
    res.exit_code = exit_code_for(e.kind());
  }
  return res;
}

}  // namespace rigx::cli
