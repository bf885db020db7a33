#include <fracplap/run.hpp>

#include <fracplap/constants.hpp>
#include <fracplap/discrete.hpp>
#include <fracplap/errors.hpp>
#include <fracplap/funcs.hpp>
#include <fracplap/reps.hpp>
#include <fracplap/seminorm.hpp>
#include <fracplap/spectral.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace fracplap {

namespace {

const std::vector<double> kDefaultS{0.25, 0.5, 0.75};
const std::vector<double> kDefaultP{1.5, 2.0, 3.0};
const std::vector<double> kLimitS{0.9, 0.99, 0.999};
const std::vector<double> kLimitP{2.2, 2.05, 2.01};

std::vector<double> or_default(const std::vector<double>& v,
                               const std::vector<double>& d) {
  return v.empty() ? d : v;
}

// deterministic slot-filling parallel loop over independent rows
template <typename F>
void parallel_rows(int count, F&& fn) {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::min({workers > 0 ? workers : 1, count, 8});
  if (workers <= 1) {
    for (int i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        fn(i);
    });
  for (auto& th : pool)
    th.join();
}

std::vector<Vec> parse_points(const RunConfig& cfg) {
  if (cfg.n == 1) {
    std::vector<Vec> pts;
    for (double x : cfg.points)
      pts.push_back(Vec::d1(x));
    return pts;
  }
  if (cfg.points.size() % 2 != 0)
    throw ConfigError("points: n = 2 expects coordinate pairs");
  std::vector<Vec> pts;
  for (std::size_t i = 0; i + 1 < cfg.points.size(); i += 2)
    pts.push_back(Vec::d2(cfg.points[i], cfg.points[i + 1]));
  return pts;
}

} // namespace

QuadConfig RunConfig::quad() const {
  QuadConfig q;
  q.rel_tol = tol;
  q.abs_tol = tol * 1e-4;
  q.hermite_nodes = hermite_nodes;
  q.validate();
  return q;
}

void RunConfig::validate() const {
  if (n < 1)
    throw ConfigError("RunConfig: n must be >= 1");
  if (command != "constants") {
    FracParams check(n, s, p); // throws on invalid (s, p)
    (void)check;
    if (n > 2)
      throw ConfigError("RunConfig: evaluators support n in {1,2}");
  }
  if (format != "csv" && format != "json")
    throw ConfigError("RunConfig: format must be csv or json");
  if (!(tol > 0.0))
    throw ConfigError("RunConfig: tol must be positive");
  if (mode != "s_to_1" && mode != "p_to_2")
    throw ConfigError("RunConfig: limits mode must be s_to_1 or p_to_2");
  for (double sv : s_list)
    if (!(sv > 0.0 && sv < 1.0))
      throw ConfigError("RunConfig: s values must lie in (0,1)");
  for (double pv : p_list)
    if (!(pv > 1.0))
      throw ConfigError("RunConfig: p values must exceed 1");
  for (double h : h_list)
    if (!(h > 0.0))
      throw ConfigError("RunConfig: h values must be positive");
  quad();
}

std::string RunConfig::to_json_string() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["n"] = n;
  j["s"] = s;
  j["p"] = p;
  j["function"] = function;
  j["points"] = points;
  j["tol"] = tol;
  j["hermite_nodes"] = hermite_nodes;
  j["output"] = output;
  j["format"] = format;
  j["seed"] = seed;
  j["n_list"] = n_list;
  j["s_list"] = s_list;
  j["p_list"] = p_list;
  j["h_list"] = h_list;
  j["delta_kappa"] = delta_kappa;
  j["stencil"] = stencil;
  j["mode"] = mode;
  j["L_list"] = L_list;
  j["bump_radius"] = bump_radius;
  return j.dump(2);
}

RunConfig RunConfig::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunConfig c;
  j.at("command").get_to(c.command);
  j.at("n").get_to(c.n);
  j.at("s").get_to(c.s);
  j.at("p").get_to(c.p);
  j.at("function").get_to(c.function);
  j.at("points").get_to(c.points);
  j.at("tol").get_to(c.tol);
  j.at("hermite_nodes").get_to(c.hermite_nodes);
  j.at("output").get_to(c.output);
  j.at("format").get_to(c.format);
  j.at("seed").get_to(c.seed);
  j.at("n_list").get_to(c.n_list);
  j.at("s_list").get_to(c.s_list);
  j.at("p_list").get_to(c.p_list);
  j.at("h_list").get_to(c.h_list);
  j.at("delta_kappa").get_to(c.delta_kappa);
  j.at("stencil").get_to(c.stencil);
  j.at("mode").get_to(c.mode);
  j.at("L_list").get_to(c.L_list);
  j.at("bump_radius").get_to(c.bump_radius);
  return c;
}

Table cmd_constants(const RunConfig& cfg) {
  const auto s_list = or_default(cfg.s_list, kDefaultS);
  const auto p_list = or_default(cfg.p_list, kDefaultP);
  Table t;
  t.columns = {"n",  "s",  "p",  "C1",     "C2",     "C3",
               "C4", "res_c2", "res_c3", "res_c4"};
  for (double s : s_list)
    for (double p : p_list) {
      const ConstantSet base = constant_set(FracParams(1, s, p));
      for (int n : cfg.n_list) {
        const ConstantSet c = constant_set(FracParams(n, s, p));
        t.add_row({static_cast<double>(n), s, p, c.c1, c.c2, c.c3, c.c4,
                   std::fabs(c.c2 - base.c2), std::fabs(c.c3 - base.c3),
                   std::fabs(c.c4 - base.c4)});
      }
    }
  return t;
}

Table cmd_compare(const RunConfig& cfg) {
  const TestFunction u = catalog(cfg.function, cfg.n);
  const FracParams params(cfg.n, cfg.s, cfg.p);
  const QuadConfig quad = cfg.quad();
  const std::vector<Vec> pts = parse_points(cfg);
  Table t;
  t.columns = {"function",      "x",
               "n",             "s",
               "p",             "direct",
               "direct_err",    "semigroup",
               "semigroup_err", "extension",
               "extension_err", "balakrishnan",
               "balakrishnan_err", "max_gap",
               "error_budget",  "status"};
  std::vector<std::vector<Table::Cell>> rows(pts.size());
  parallel_rows(static_cast<int>(pts.size()), [&](int i) {
    const EvalReport rep = evaluate_all(u, pts[i], params, quad);
    std::vector<Table::Cell> row;
    row.emplace_back(cfg.function);
    row.emplace_back(pts[i][0]);
    row.emplace_back(static_cast<double>(cfg.n));
    row.emplace_back(cfg.s);
    row.emplace_back(cfg.p);
    auto put = [&row](const RepValue& v) {
      if (v.ok()) {
        row.emplace_back(v.result.value);
        row.emplace_back(v.result.error);
      } else {
        row.emplace_back(std::string());
        row.emplace_back(std::string());
      }
    };
    put(rep.direct);
    put(rep.semigroup);
    put(rep.extension);
    put(rep.balakrishnan);
    if (rep.skipped.empty()) {
      row.emplace_back(rep.max_pairwise_gap());
      row.emplace_back(rep.error_sum());
      std::string status = "ok";
      for (const RepValue* v :
           {&rep.direct, &rep.semigroup, &rep.extension, &rep.balakrishnan})
        if (!v->ok())
          status = v->error;
      row.emplace_back(status);
    } else {
      row.emplace_back(std::string());
      row.emplace_back(std::string());
      row.emplace_back(rep.skipped);
    }
    rows[i] = std::move(row);
  });
  for (auto& r : rows)
    t.add_row(std::move(r));
  return t;
}

Table cmd_limits(const RunConfig& cfg) {
  const TestFunction u = catalog(cfg.function, 1);
  const QuadConfig quad = cfg.quad();
  const double x = cfg.points.empty() ? 0.5 : cfg.points.front();
  Table t;
  if (cfg.mode == "s_to_1") {
    t.columns = {"s", "value", "target", "gap"};
    const auto s_list = or_default(cfg.s_list, kLimitS);
    for (const LimitRow& row :
         limit_experiment_s_to_1(u, x, cfg.p, s_list, quad))
      t.add_row({row.s, row.value, row.target, row.gap});
    return t;
  }
  t.columns = {"p", "value", "target", "gap"};
  const auto p_list = or_default(cfg.p_list, kLimitP);
  const double target =
      eval_direct(u, Vec::d1(x), FracParams(1, cfg.s, 2.0), quad).value;
  for (double p : p_list) {
    const double v =
        eval_direct(u, Vec::d1(x), FracParams(1, cfg.s, p), quad).value;
    t.add_row({p, v, target, std::fabs(v - target)});
  }
  return t;
}

Table cmd_discrete(const RunConfig& cfg) {
  const TestFunction u = catalog(cfg.function, cfg.n);
  const FracParams params(cfg.n, cfg.s, cfg.p);
  const QuadConfig quad = cfg.quad();
  const Vec x = parse_points(cfg).at(0);
  const double continuum = eval_direct(u, x, params, quad).value;
  Table t;
  t.columns = {"h",     "delta",          "value", "continuum",
               "error", "observed_order", "tail_bound", "status"};
  double prev_err = 0.0, prev_h = 0.0;
  for (double h : cfg.h_list) {
    const double delta =
        cfg.delta_kappa < 0.0 ? 0.0 : std::pow(h, cfg.delta_kappa);
    try {
      const DiscreteWeights w =
          build_weights(params, h, delta, cfg.stencil, quad);
      const GridFunction grid(u, x, h, cfg.stencil + 1);
      const DiscreteValue dv = apply_discrete(grid, {0, 0}, w);
      const double err = std::fabs(dv.value - continuum);
      std::vector<Table::Cell> row{h,     delta, dv.value, continuum,
                                   err,   std::string(),   dv.tail_bound,
                                   std::string("ok")};
      if (prev_h > 0.0 && err > 0.0 && prev_err > 0.0)
        row[5] = std::log(prev_err / err) / std::log(prev_h / h);
      t.add_row(std::move(row));
      prev_err = err;
      prev_h = h;
    } catch (const DivergenceError& e) {
      t.add_row({h, delta, std::string(), continuum, std::string(),
                 std::string(), std::string(), std::string(e.what())});
    }
  }
  return t;
}

Table cmd_spectral(const RunConfig& cfg) {
  const FracParams params(1, cfg.s, cfg.p);
  const QuadConfig quad = cfg.quad();
  Table t;
  t.columns = {"L",           "spectral",       "spectral_err",
               "restricted",  "restricted_err", "difference",
               "whole_space"};
  for (double L : cfg.L_list) {
    if (!(cfg.bump_radius < 0.5 * L))
      throw ConfigError("cmd_spectral: bump must fit inside (0, L)");
    const Interval dom{L};
    const TestFunction u = bump_function(0.5 * L, cfg.bump_radius);
    const double x = 0.5 * L;
    const EvalResult spec = eval_spectral(u, x, params, dom, quad);
    const EvalResult restr = eval_restricted(u, x, params, dom, quad);
    const double whole = eval_direct(u, Vec::d1(x), params, quad).value;
    t.add_row({L, spec.value, spec.error, restr.value, restr.error,
               restr.value - spec.value, whole});
  }
  return t;
}

Table cmd_seminorm(const RunConfig& cfg) {
  const TestFunction u = catalog(cfg.function, 1);
  const QuadConfig quad = cfg.quad();
  const auto s_list = or_default(cfg.s_list, kDefaultS);
  const auto p_list = or_default(cfg.p_list, kDefaultP);
  Table t;
  t.columns = {"s",          "p",          "direct",        "direct_err",
               "semigroup",  "semigroup_err", "balakrishnan",
               "balakrishnan_err", "gap_ds", "gap_db",      "gap_sb"};
  struct Job {
    double s, p;
  };
  std::vector<Job> jobs;
  for (double s : s_list)
    for (double p : p_list)
      jobs.push_back({s, p});
  std::vector<std::vector<Table::Cell>> rows(jobs.size());
  parallel_rows(static_cast<int>(jobs.size()), [&](int i) {
    const FracParams params(1, jobs[i].s, jobs[i].p);
    const SeminormReport r = seminorm_all(u, params, quad);
    rows[i] = {jobs[i].s,
               jobs[i].p,
               r.direct.value,
               r.direct.error,
               r.semigroup.value,
               r.semigroup.error,
               r.balakrishnan.value,
               r.balakrishnan.error,
               std::fabs(r.direct.value - r.semigroup.value),
               std::fabs(r.direct.value - r.balakrishnan.value),
               std::fabs(r.semigroup.value - r.balakrishnan.value)};
  });
  for (auto& r : rows)
    t.add_row(std::move(r));
  return t;
}

Table cmd_weights_export(const RunConfig& cfg) {
  const FracParams params(cfg.n, cfg.s, cfg.p);
  const QuadConfig quad = cfg.quad();
  const double h = cfg.h_list.empty() ? 0.1 : cfg.h_list.front();
  const double delta =
      cfg.delta_kappa < 0.0 ? 0.0 : std::pow(h, cfg.delta_kappa);
  const DiscreteWeights w = build_weights(params, h, delta, cfg.stencil, quad);
  Table t;
  if (params.n == 1) {
    t.columns = {"beta", "weight"};
    for (int m = 1; m <= w.stencil; ++m)
      t.add_row({static_cast<double>(m), w.w1d[m - 1]});
  } else {
    t.columns = {"beta1", "beta2", "weight"};
    for (int m1 = 1; m1 <= w.stencil; ++m1)
      for (int m2 = 0; m2 <= m1; ++m2)
        t.add_row({static_cast<double>(m1), static_cast<double>(m2),
                   w.w2d[m1][m2]});
  }
  return t;
}

Table run_command(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.command == "constants")
    return cmd_constants(cfg);
  if (cfg.command == "compare")
    return cmd_compare(cfg);
  if (cfg.command == "limits")
    return cmd_limits(cfg);
  if (cfg.command == "discrete")
    return cmd_discrete(cfg);
  if (cfg.command == "spectral")
    return cmd_spectral(cfg);
  if (cfg.command == "seminorm")
    return cmd_seminorm(cfg);
  if (cfg.command == "weights-export")
    return cmd_weights_export(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

} // namespace fracplap
