#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "adiawalk/cli.hpp"
#include "adiawalk/errors.hpp"
#include "adiawalk/evolution.hpp"
#include "adiawalk/grover.hpp"
#include "adiawalk/integrators.hpp"
#include "adiawalk/parallel.hpp"
#include "adiawalk/spectral.hpp"
#include "adiawalk/toymodels.hpp"

namespace adiawalk::cli {

namespace {

double num(const ExperimentConfig& c, const char* key) { return c.parameters.at(key).get<double>(); }
std::int64_t integer(const ExperimentConfig& c, const char* key) { return c.parameters.at(key).get<std::int64_t>(); }
std::string str(const ExperimentConfig& c, const char* key) { return c.parameters.at(key).get<std::string>(); }
std::vector<double> nums(const ExperimentConfig& c, const char* key) {
  return c.parameters.at(key).get<std::vector<double>>();
}
std::vector<std::int64_t> integers(const ExperimentConfig& c, const char* key) {
  return c.parameters.at(key).get<std::vector<std::int64_t>>();
}
std::vector<std::string> strs(const ExperimentConfig& c, const char* key) {
  return c.parameters.at(key).get<std::vector<std::string>>();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::size_t positive_size(const ExperimentConfig& c, const char* key, std::int64_t min = 1) {
  const auto v = integer(c, key);
  require(v >= min, std::string("parameter '") + key + "' must be at least " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

double positive(const ExperimentConfig& c, const char* key) {
  const double v = num(c, key);
  require(v > 0.0, std::string("parameter '") + key + "' must be positive");
  return v;
}

Json json_number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Schedule named_schedule(const std::string& name, const Schedule& model_default) {
  if (name == "model") return model_default;
  if (name == "linear") return Schedule::linear();
  if (name == "glue") return Schedule::glue();
  if (name == "boundary-cancellation") return Schedule::boundary_cancellation();
  throw InputError("unknown schedule '" + name + "' (expected model, linear, glue or boundary-cancellation)");
}

GroverScheduleSpec grover_spec(const ExperimentConfig& c) {
  const auto name = str(c, "schedule");
  GroverScheduleSpec spec;
  if (name == "power") {
    spec.kind = GroverScheduleKind::Power;
    spec.p = num(c, "p");
    require(spec.p >= 1.0 && spec.p < 2.0, "parameter 'p' must lie in [1, 2)");
  } else if (name == "bc") {
    spec.kind = GroverScheduleKind::BoundaryCancellation;
  } else if (name == "linear") {
    spec.kind = GroverScheduleKind::Linear;
  } else {
    throw InputError("unknown schedule '" + name + "' (expected power, bc or linear)");
  }
  return spec;
}

std::vector<std::uint64_t> unsigned_list(const ExperimentConfig& c, const char* key, std::int64_t min) {
  std::vector<std::uint64_t> out;
  for (auto v : integers(c, key)) {
    require(v >= min, std::string("entries of '") + key + "' must be at least " + std::to_string(min));
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

// ---- gap-table

ExperimentOutput run_gap_table(const ExperimentConfig& c) {
  const auto kind = parse_toy_kind(str(c, "model"));
  require(kind != ToyKind::FourLevel, "gap-table supports toy1 and toy2");
  const auto grid = positive_size(c, "grid", 2);
  const auto rows = gap_table(kind, nums(c, "eps"), grid, positive(c, "h"));
  ExperimentOutput out;
  out.table.header = {"eps", "gap_h", "gap_w", "reference_gap_h", "reference_gap_w", "flag"};
  for (const auto& r : rows) {
    std::vector<Cell> row{r.eps, r.gap_h, r.gap_w};
    if (r.reference) {
      row.insert(row.end(), {r.reference->gap_h, r.reference->gap_w,
                             std::string(r.reference->outlier ? "reference-outlier" : "")});
    } else {
      row.insert(row.end(), {std::string(), std::string(), std::string()});
    }
    out.table.rows.push_back(std::move(row));
  }
  return out;
}

// ---- spectrum-scan

ExperimentOutput run_spectrum_scan(const ExperimentConfig& c) {
  const auto model = build_toy({parse_toy_kind(str(c, "model")), num(c, "eps")});
  const auto grid = positive_size(c, "grid", 100);
  const auto kind = IntegratorKind::parse(str(c, "integrator"));
  const auto selector = PathSelector::ground_phase();
  const auto ham = hamiltonian_track(model.h0, model.h1, model.schedule, grid, selector);
  const WalkGenerator gen(model.h0, model.h1, model.schedule, kind, positive(c, "h"), grid);
  const auto walk = track_eigenpaths(build_walk_family(gen, grid), selector);
  const std::size_t d = ham.dim;
  ExperimentOutput out;
  out.table.header.push_back("s");
  for (std::size_t p = 0; p < d; ++p) out.table.header.push_back("energy_" + std::to_string(p));
  for (std::size_t p = 0; p < d; ++p) out.table.header.push_back("walk_phase_" + std::to_string(p));
  for (std::size_t j = 0; j <= grid; ++j) {
    std::vector<Cell> row{double(j) / double(grid)};
    for (std::size_t p = 0; p < d; ++p) row.emplace_back(ham.phase(j, p));
    for (std::size_t p = 0; p < d; ++p) row.emplace_back(walk.phase(j, p));
    out.table.rows.push_back(std::move(row));
  }
  return out;
}

// ---- fidelity-sweep

ExperimentOutput run_fidelity_sweep(const ExperimentConfig& c) {
  const auto t_list = nums(c, "T");
  const auto h_list = nums(c, "h");
  for (double t : t_list) require(t > 0.0, "entries of 'T' must be positive");
  for (double h : h_list) require(h > 0.0 && h <= 1.0, "entries of 'h' must lie in (0, 1]");
  const double eps = num(c, "eps");
  require(eps >= 0.0, "parameter 'eps' must be nonnegative");
  const auto rows = fidelity_sweep(eps, t_list, h_list);
  ExperimentOutput out;
  out.table.header = {"T", "h", "Td", "leakage"};
  const std::size_t nf = rows.empty() ? 0 : rows.front().result.fidelities.size();
  for (std::size_t k = 0; k < nf; ++k) out.table.header.push_back("fidelity_" + std::to_string(k));
  for (const auto& r : rows) {
    std::vector<Cell> row{r.t, r.h, std::int64_t(r.steps), r.result.leakage};
    for (double f : r.result.fidelities) row.emplace_back(f);
    out.table.rows.push_back(std::move(row));
  }
  return out;
}

// ---- volterra

ExperimentOutput run_volterra(const ExperimentConfig& c) {
  const auto model = build_toy({parse_toy_kind(str(c, "model")), num(c, "eps")});
  std::vector<std::size_t> td;
  for (auto v : unsigned_list(c, "Td", 4)) td.push_back(v);
  require(td.size() >= 2, "parameter 'Td' needs at least two values");
  std::sort(td.begin(), td.end());
  require(std::adjacent_find(td.begin(), td.end()) == td.end(), "parameter 'Td' has duplicate values");
  VolterraModel vm{model.h0, model.h1, named_schedule(str(c, "schedule"), model.schedule),
                   IntegratorKind::parse(str(c, "integrator")), positive(c, "h"), PathSelector::ground_phase()};
  const auto rep = boundary_vs_interior_scaling(vm, td);
  ExperimentOutput out;
  out.table.header = {"Td", "interior_max", "boundary_omega1", "boundary_omega", "intertwining_residual",
                      "omega_crosscheck"};
  double worst_intertwining = 0.0, worst_crosscheck = 0.0;
  for (std::size_t i = 0; i < rep.steps.size(); ++i) {
    out.table.rows.push_back({std::int64_t(rep.steps[i]), rep.interior_max[i], rep.boundary_omega1[i],
                              rep.boundary_omega[i], rep.intertwining[i], rep.crosscheck[i]});
    worst_intertwining = std::max(worst_intertwining, rep.intertwining[i]);
    worst_crosscheck = std::max(worst_crosscheck, rep.crosscheck[i]);
  }
  out.summary = Json{
      {"slopes",
       {{"interior_max", json_number(rep.interior_slope)},
        {"boundary_omega1", json_number(rep.boundary_omega1_slope)},
        {"boundary_omega", json_number(rep.boundary_omega_slope)},
        {"boundary_omega1_lower_half", json_number(rep.boundary_omega1_slope_lower)},
        {"boundary_omega1_upper_half", json_number(rep.boundary_omega1_slope_upper)},
        {"boundary_omega_lower_half", json_number(rep.boundary_omega_slope_lower)},
        {"boundary_omega_upper_half", json_number(rep.boundary_omega_slope_upper)}}},
      {"steepening", rep.steepening()},
      {"max_intertwining_residual", worst_intertwining},
      {"max_omega_crosscheck", worst_crosscheck}};
  return out;
}

// ---- grover-scaling

ExperimentOutput grover_minimal_steps(const ExperimentConfig& c, const GroverScheduleSpec& spec,
                                      const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& ms) {
  const double target = num(c, "target_error");
  require(target > 0.0 && target < 1.0, "parameter 'target_error' must lie in (0, 1)");
  const auto rows = scaling_experiment(ms, ns, spec, target);
  ExperimentOutput out;
  out.table.header = {"N", "M", "schedule", "target_error", "T_required", "normalized_ratio", "reached"};
  std::map<std::uint64_t, std::vector<const ScalingRow*>> by_m, by_n;
  for (const auto& r : rows) {
    out.table.rows.push_back({std::int64_t(r.n), std::int64_t(r.m), r.schedule, r.target_error,
                              std::int64_t(r.t_required), r.normalized_ratio, std::int64_t(r.reached)});
    by_m[r.m].push_back(&r);
    by_n[r.n].push_back(&r);
  }
  Json per_m = Json::array();
  for (const auto& [m, group] : by_m) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    std::vector<double> x, y;
    bool reached = true;
    for (const auto* r : group) {
      reached = reached && r->reached;
      lo = std::min(lo, r->normalized_ratio);
      hi = std::max(hi, r->normalized_ratio);
      x.push_back(double(r->n));
      y.push_back(double(r->t_required));
    }
    per_m.push_back({{"M", m},
                     {"ratio_min", lo},
                     {"ratio_max", hi},
                     {"ratio_band", hi / lo},
                     {"all_reached", reached},
                     {"loglog_slope_T_vs_N", json_number(x.size() >= 2 ? loglog_slope(x, y) : NAN)}});
  }
  Json per_n = Json::array();
  for (const auto& [n, group] : by_n) {
    bool nonincreasing = true;
    for (std::size_t i = 1; i < group.size(); ++i)
      nonincreasing = nonincreasing && group[i]->t_required <= group[i - 1]->t_required;
    per_n.push_back({{"N", n}, {"T_nonincreasing_in_M", nonincreasing}});
  }
  out.summary = Json{{"mode", "minimal-steps"}, {"by_M", per_m}, {"by_N", per_n}};
  return out;
}

ExperimentOutput grover_error_curve(const ExperimentConfig& c, const GroverScheduleSpec& spec,
                                    const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& ms) {
  auto ts = unsigned_list(c, "T", 1);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  struct CellKey {
    std::uint64_t n, m, t;
  };
  std::vector<CellKey> cells;
  for (auto n : ns)
    for (auto m : ms)
      for (auto t : ts) cells.push_back({n, m, t});
  std::vector<Schedule> scheds;
  for (auto n : ns) scheds.push_back(spec.build(n));
  std::vector<GroverRun> runs(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    const auto& k = cells[i];
    const GroverInstance inst{k.n, k.m};
    inst.validate();
    const auto idx = std::size_t(std::find(ns.begin(), ns.end(), k.n) - ns.begin());
    runs[i] = run_search(inst, scheds[idx], k.t);
  });
  ExperimentOutput out;
  out.table.header = {"N", "M", "schedule", "T", "error", "below_theory_threshold"};
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::vector<double>, std::vector<double>>> curves;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& k = cells[i];
    out.table.rows.push_back({std::int64_t(k.n), std::int64_t(k.m), spec.tag(), std::int64_t(k.t), runs[i].error,
                              std::int64_t(runs[i].below_theory_threshold)});
    if (runs[i].error > 0.0) {
      curves[{k.n, k.m}].first.push_back(double(k.t));
      curves[{k.n, k.m}].second.push_back(runs[i].error);
    }
  }
  Json fits = Json::array();
  for (const auto& [key, xy] : curves)
    fits.push_back({{"N", key.first},
                    {"M", key.second},
                    {"loglog_slope_error_vs_T", json_number(xy.first.size() >= 2 ? loglog_slope(xy.first, xy.second)
                                                                                 : NAN)}});
  out.summary = Json{{"mode", "error-curve"}, {"fits", fits}};
  return out;
}

ExperimentOutput run_grover_scaling(const ExperimentConfig& c) {
  const auto spec = grover_spec(c);
  auto ns = unsigned_list(c, "N", 2);
  auto ms = unsigned_list(c, "M", 1);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (auto n : ns)
    for (auto m : ms) GroverInstance{n, m}.validate();
  const auto mode = str(c, "mode");
  if (mode == "minimal-steps") return grover_minimal_steps(c, spec, ns, ms);
  if (mode == "error-curve") return grover_error_curve(c, spec, ns, ms);
  throw InputError("unknown mode '" + mode + "' (expected minimal-steps or error-curve)");
}

// ---- qaoa-export

ExperimentOutput run_qaoa_export(const ExperimentConfig& c) {
  const GroverInstance inst{std::uint64_t(positive_size(c, "N", 2)), std::uint64_t(positive_size(c, "M", 1))};
  inst.validate();
  const auto spec = grover_spec(c);
  const auto t = std::uint64_t(positive_size(c, "T", 1));
  const auto sched = spec.build(inst.n);
  const auto angles = qaoa_angles(sched, t);
  ExperimentOutput out;
  out.table.header = {"j", "beta", "gamma"};
  for (std::uint64_t j = 0; j < t; ++j) out.table.rows.push_back({std::int64_t(j), angles.betas[j], angles.gammas[j]});
  const Vector psi = replay_qaoa(inst, angles);
  out.summary = Json{{"replay_error", std::min(1.0, std::abs(psi[1]))},
                     {"success_probability", std::norm(psi[0])},
                     {"schedule", spec.tag()}};
  return out;
}

// ---- step-size-report

struct ReportInstance {
  std::string label;
  HermitianOperator h0, h1;
  Schedule schedule;
};

HermitianOperator random_hermitian(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), i == j ? 0.0 : g(rng));
  return HermitianOperator((a + a.adjoint()) * Complex(0.5));
}

std::vector<ReportInstance> report_instances(const ExperimentConfig& c) {
  const auto source = str(c, "source");
  std::vector<ReportInstance> out;
  if (source == "grover") {
    const GroverInstance inst{std::uint64_t(positive_size(c, "N", 2)), std::uint64_t(positive_size(c, "M", 1))};
    const auto [h0, h1] = effective_hamiltonians(inst);
    out.push_back({"grover-N" + std::to_string(inst.n) + "-M" + std::to_string(inst.m), h0, h1, Schedule::linear()});
  } else if (source == "toy1" || source == "toy2" || source == "four-level") {
    const auto m = build_toy({parse_toy_kind(source), num(c, "eps")});
    out.push_back({source + "-eps" + format_number(num(c, "eps")), m.h0, m.h1, m.schedule});
  } else if (source == "random") {
    const auto count = positive_size(c, "count", 1);
    const auto dim = positive_size(c, "dim", 2);
    std::mt19937_64 rng(c.seed);
    for (std::size_t k = 0; k < count; ++k) {
      auto h0 = random_hermitian(rng, dim);
      auto h1 = random_hermitian(rng, dim);
      out.push_back({"random-" + std::to_string(k), std::move(h0), std::move(h1), Schedule::linear()});
    }
  } else {
    throw InputError("unknown source '" + source + "' (expected grover, toy1, toy2, four-level or random)");
  }
  return out;
}

std::vector<Cell> report_row(const ReportInstance& inst, const ProblemConstants& base, const IntegratorKind& kind,
                             std::size_t grid) {
  ProblemConstants pc = base;
  const int order = kind.family == IntegratorFamily::SPF ? kind.order : 1;
  if (order > 2) {
    pc.order = order;
    pc.alpha_tilde = nested_commutator_sum(inst.h0, inst.h1, std::min(order, 6));
  }
  std::string flag;
  double h;
  try {
    h = recommended_step_size(pc, kind);
  } catch (const GaplessError&) {
    flag = "gapless";
    h = 1.0 / pc.alpha;
  }
  const WalkGenerator gen(inst.h0, inst.h1, inst.schedule, kind, h, grid);
  double measured = std::numeric_limits<double>::infinity();
  double lower = measured, upper = measured;
  for (std::size_t j = 0; j <= grid; ++j) {
    const double s = double(j) / double(grid);
    const double s_eff = kind.family == IntegratorFamily::PF2 && kind.midpoint ? std::min(1.0, s + 0.5 / grid) : s;
    measured = std::min(measured, ground_walk_gap(gen.at(s)));
    GapInterval iv;
    if (kind.family == IntegratorFamily::Exp) {
      const double g = h * ground_hamiltonian_gap(interpolated_hamiltonian(inst.h0, inst.h1, inst.schedule.f(s)));
      iv = {g, g};
    } else if (order <= 2) {
      iv = gap_perturbation_bounds(inst.h0, inst.h1, inst.schedule, s_eff, h);
    } else {
      iv = gap_perturbation_bounds_order(inst.h0, inst.h1, inst.schedule, s_eff, h, order);
    }
    lower = std::min(lower, iv.lower);
    upper = std::min(upper, iv.upper);
  }
  const double slack = 1e-12 * std::max(1.0, std::abs(upper));
  const bool inside = measured >= lower - slack && measured <= upper + slack;
  return {inst.label, kind.tag(), h, pc.delta_star, lower, upper, measured, std::int64_t(inside), flag};
}

ExperimentOutput run_step_size_report(const ExperimentConfig& c) {
  std::vector<IntegratorKind> kinds;
  for (const auto& k : strs(c, "kinds")) kinds.push_back(IntegratorKind::parse(k));
  const auto grid = positive_size(c, "grid", 2);
  const auto gap_grid = positive_size(c, "gap_grid", 2);
  const auto instances = report_instances(c);
  std::vector<std::vector<Cell>> rows(instances.size() * kinds.size());
  parallel_for(instances.size(), [&](std::size_t i) {
    const auto& inst = instances[i];
    const auto base = compute_problem_constants(inst.h0, inst.h1, inst.schedule, gap_grid, 1);
    for (std::size_t k = 0; k < kinds.size(); ++k) rows[i * kinds.size() + k] = report_row(inst, base, kinds[k], grid);
  });
  ExperimentOutput out;
  out.table.header = {"instance",          "integrator",        "h_recommended", "delta_star",
                      "gap_interval_lower", "gap_interval_upper", "gap_measured",  "within_interval",
                      "flag"};
  out.table.rows = std::move(rows);
  return out;
}

std::vector<ExperimentInfo> build_registry() {
  using P = ParamType;
  const Json eps_default = table_eps_values();
  return {
      {"gap-table",
       "Minimal gaps of H(s) and of the h = 1 first-order product-formula walk for the four-level toy "
       "models, one row per epsilon, alongside reference values",
       {{"model", P::String, "toy1", "toy1 or toy2"},
        {"eps", P::NumberList, eps_default, "epsilon values"},
        {"grid", P::Integer, 10000, "number of s intervals"},
        {"h", P::Number, 1.0, "walk step size"}},
       run_gap_table},
      {"spectrum-scan",
       "Path-tracked eigenvalues of H(s) and eigenphases i log W(s) across s for a toy model",
       {{"model", P::String, "toy1", "toy1, toy2 or four-level"},
        {"eps", P::Number, 0.05, "toy-model epsilon"},
        {"grid", P::Integer, 1000, "number of s intervals (at least 100)"},
        {"h", P::Number, 1.0, "walk step size"},
        {"integrator", P::String, "pf1", "exp, pf1, pf2, pf2-simplified or spfN"}},
       run_spectrum_scan},
      {"fidelity-sweep",
       "Overlap of the evolved state with the ground and excited states of H1 for the second toy model "
       "under the first-order product formula, over a grid of total times T and step sizes h",
       {{"eps", P::Number, 0.0, "toy-model epsilon"},
        {"T", P::NumberList, Json::array({1e3, 1e4, 1e5}), "total evolution times"},
        {"h", P::NumberList, Json::array({1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125}), "step sizes"}},
       run_fidelity_sweep},
      {"volterra",
       "Interior and boundary norms of the first Volterra term and of the full series versus the number "
       "of steps, with log-log slope fits",
       {{"model", P::String, "four-level", "toy1, toy2 or four-level"},
        {"eps", P::Number, 0.0, "toy-model epsilon (ignored for four-level)"},
        {"schedule", P::String, "model", "model, linear, glue or boundary-cancellation"},
        {"Td", P::IntegerList, Json::array({100, 200, 400, 800, 1600}), "step counts"},
        {"integrator", P::String, "exp", "walk integrator"},
        {"h", P::Number, 1.0, "walk step size"}},
       run_volterra},
      {"grover-scaling",
       "Adiabatic search in the two-level effective model: minimal step count reaching a target error "
       "versus N and M, or error versus step count",
       {{"N", P::IntegerList, Json::array({256, 4096, 65536, 1048576}), "database sizes"},
        {"M", P::IntegerList, Json::array({1}), "numbers of marked items"},
        {"schedule", P::String, "power", "power, bc or linear"},
        {"p", P::Number, 1.0, "gap power of the power schedule, in [1, 2)"},
        {"target_error", P::Number, 0.1, "error threshold (minimal-steps mode)"},
        {"mode", P::String, "minimal-steps", "minimal-steps or error-curve"},
        {"T", P::IntegerList, Json::array({320, 640, 1280, 2560, 5120}), "step counts (error-curve mode)"}},
       run_grover_scaling},
      {"qaoa-export",
       "Alternating-operator angles beta_j = 1 - f(j/T), gamma_j = f(j/T) derived from a search schedule",
       {{"N", P::Integer, 1024, "database size"},
        {"M", P::Integer, 1, "number of marked items"},
        {"schedule", P::String, "power", "power, bc or linear"},
        {"p", P::Number, 1.0, "gap power of the power schedule"},
        {"T", P::Integer, 200, "number of layers"}},
       run_qaoa_export},
      {"step-size-report",
       "Recommended step sizes per integrator with the predicted walk-gap interval and the measured gap",
       {{"source", P::String, "grover", "grover, toy1, toy2, four-level or random"},
        {"N", P::Integer, 16, "database size (grover source)"},
        {"M", P::Integer, 1, "marked items (grover source)"},
        {"eps", P::Number, 0.05, "toy-model epsilon"},
        {"count", P::Integer, 100, "number of random pairs"},
        {"dim", P::Integer, 4, "dimension of random pairs"},
        {"kinds", P::StringList, Json::array({"exp", "pf1", "pf2", "spf1", "spf2", "spf4"}), "integrators"},
        {"grid", P::Integer, 200, "s intervals for the measured gap"},
        {"gap_grid", P::Integer, 2000, "s intervals for the minimal Hamiltonian gap"}},
       run_step_size_report},
  };
}

}  // namespace

const std::vector<ExperimentInfo>& experiments() {
  static const std::vector<ExperimentInfo> registry = build_registry();
  return registry;
}

const ExperimentInfo* find_experiment(const std::string& name) {
  for (const auto& e : experiments())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace adiawalk::cli
