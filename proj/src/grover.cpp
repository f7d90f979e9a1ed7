#include "adiawalk/grover.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "adiawalk/errors.hpp"
#include "adiawalk/parallel.hpp"

namespace adiawalk {

void GroverInstance::validate() const {
  if (n < 2) throw InputError("N must be at least 2");
  if (m < 1) throw InputError("M must be at least 1");
  if (n < 2 * m) throw InputError("Grover instance needs N >= 2M");
}

namespace {

struct EffectiveEntries {
  double a00, a11, a01;  // H0 = [[a00, a01], [a01, a11]], a projector
};

EffectiveEntries entries(const GroverInstance& inst) {
  const double nd = double(inst.n), md = double(inst.m);
  return {double(inst.n - inst.m) / nd, md / nd, -std::sqrt(md * double(inst.n - inst.m)) / nd};
}

// exp(-i theta) - 1 without cancellation.
Complex expm1_i(double theta) {
  const double s = std::sin(0.5 * theta);
  return {-2.0 * s * s, -std::sin(theta)};
}

// psi <- exp(-i gamma H1) exp(-i beta H0) psi, using H0^2 = H0.
void grover_step(const EffectiveEntries& e, double beta, double gamma, Complex& x0, Complex& x1) {
  const Complex c = expm1_i(beta);
  const Complex h0 = e.a00 * x0 + e.a01 * x1;
  const Complex h1 = e.a01 * x0 + e.a11 * x1;
  x0 += c * h0;
  x1 += c * h1;
  x1 *= std::polar(1.0, -gamma);
}

}  // namespace

std::pair<HermitianOperator, HermitianOperator> effective_hamiltonians(const GroverInstance& inst) {
  inst.validate();
  const auto e = entries(inst);
  const Matrix h0 = Matrix::from_rows({{e.a00, e.a01}, {e.a01, e.a11}});
  const Matrix h1 = Matrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
  return {HermitianOperator(h0), HermitianOperator(h1)};
}

GroverGaps gap_closed_forms(const GroverInstance& inst, double f) {
  inst.validate();
  if (!(f >= 0.0 && f <= 1.0)) throw InputError("f must lie in [0, 1]");
  const double r = inst.ratio();
  const double a = std::cos(0.5 - f);
  return {grover_gap(f, double(inst.n), double(inst.m)), 2.0 * std::acos(a - r * (a - std::cos(0.5)))};
}

std::pair<Complex, Complex> walk_eigenvalues_closed_form(const GroverInstance& inst, double f) {
  const double r = inst.ratio();
  const double xi = r * std::cos(0.5) + (1.0 - r) * std::cos(0.5 - f);
  const double root = std::sqrt(std::max(0.0, 1.0 - xi * xi));
  const Complex pre = std::polar(1.0, -0.5);
  return {pre * Complex(xi, root), pre * Complex(xi, -root)};
}

Vector grover_initial_state(const GroverInstance& inst) {
  inst.validate();
  const double nd = double(inst.n);
  return {std::sqrt(double(inst.m) / nd), std::sqrt(double(inst.n - inst.m) / nd)};
}

QaoaAngleSet qaoa_angles(const Schedule& sched, std::uint64_t t) {
  if (t < 1) throw InputError("T must be at least 1");
  QaoaAngleSet a;
  a.betas.resize(t);
  a.gammas.resize(t);
  for (std::uint64_t j = 0; j < t; ++j) {
    const double f = sched.f(double(j) / double(t));
    a.gammas[j] = f;
    a.betas[j] = 1.0 - f;
  }
  return a;
}

Vector replay_qaoa(const GroverInstance& inst, const QaoaAngleSet& angles) {
  if (angles.betas.size() != angles.gammas.size()) throw InputError("angle arrays differ in length");
  const auto e = entries(inst);
  Vector psi = grover_initial_state(inst);
  for (std::size_t j = 0; j < angles.betas.size(); ++j) grover_step(e, angles.betas[j], angles.gammas[j], psi[0], psi[1]);
  return psi;
}

GroverRun run_search(const GroverInstance& inst, const Schedule& sched, std::uint64_t t, bool store_trajectory) {
  if (t < 1) throw InputError("T must be at least 1");
  const auto e = entries(inst);
  Vector psi = grover_initial_state(inst);
  GroverRun run;
  if (store_trajectory) run.result.trajectory.push_back(psi);
  for (std::uint64_t j = 0; j < t; ++j) {
    const double f = sched.f(double(j) / double(t));
    grover_step(e, 1.0 - f, f, psi[0], psi[1]);
    if (store_trajectory) run.result.trajectory.push_back(psi);
  }
  // Projector distance to |e0>, read off the orthogonal amplitude.
  run.error = std::min(1.0, std::abs(psi[1]));
  run.result.leakage = run.error;
  run.result.fidelities = {std::abs(psi[0]), std::abs(psi[1])};
  run.result.final_state = std::move(psi);
  if (sched.kind() == ScheduleKind::GroverPower)
    run.below_theory_threshold = double(t) < 12.0 * sched.normalization();
  return run;
}

std::string GroverScheduleSpec::tag() const {
  switch (kind) {
    case GroverScheduleKind::Power: return p == 1.0 ? "p1" : "power" + std::to_string(p).substr(0, 4);
    case GroverScheduleKind::BoundaryCancellation: return "bc";
    case GroverScheduleKind::Linear: return "linear";
  }
  return "unknown";
}

Schedule GroverScheduleSpec::build(std::uint64_t n) const {
  switch (kind) {
    case GroverScheduleKind::Power: return build_grover_schedule(n, p);
    case GroverScheduleKind::BoundaryCancellation: return Schedule::boundary_cancellation();
    case GroverScheduleKind::Linear: return Schedule::linear();
  }
  return Schedule::linear();
}

ScalingRow minimal_steps(const GroverInstance& inst, const Schedule& sched, const GroverScheduleSpec& spec,
                         double target_error, std::uint64_t cap) {
  if (!(target_error > 0.0 && target_error < 1.0)) throw InputError("target error must lie in (0, 1)");
  inst.validate();
  ScalingRow row{inst.n, inst.m, spec.tag(), target_error, 0, 0.0, false};
  auto ok = [&](std::uint64_t t) { return run_search(inst, sched, t).error <= target_error; };
  std::uint64_t hi = 1;
  while (!ok(hi)) {
    if (hi > cap / 2) return row;
    hi *= 2;
  }
  std::uint64_t lo = hi / 2;  // fails (or zero)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid; else lo = mid;
  }
  row.t_required = hi;
  row.reached = true;
  const double nm = double(inst.n) / double(inst.m);
  const double scale = spec.kind == GroverScheduleKind::BoundaryCancellation
                           ? std::sqrt(nm) * std::pow(std::log(nm), 4)
                           : std::sqrt(nm) * std::log(double(inst.n));
  row.normalized_ratio = double(hi) / scale;
  return row;
}

namespace {

std::vector<ScalingRow> scaling_impl(const std::vector<std::uint64_t>& m_list, const std::vector<std::uint64_t>& n_list,
                                     const GroverScheduleSpec& spec, double target_error, bool parallel) {
  std::vector<std::uint64_t> ns(n_list), ms(m_list);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (auto n : ns)
    for (auto m : ms) GroverInstance{n, m}.validate();
  std::vector<Schedule> scheds(ns.size());
  std::vector<ScalingRow> rows(ns.size() * ms.size());
  auto build = [&](std::size_t i) { scheds[i] = spec.build(ns[i]); };
  auto cell = [&](std::size_t c) {
    const std::size_t i = c / ms.size();
    rows[c] = minimal_steps(GroverInstance{ns[i], ms[c % ms.size()]}, scheds[i], spec, target_error);
  };
  if (parallel) {
    parallel_for(ns.size(), build);
    parallel_for(rows.size(), cell);
  } else {
    for (std::size_t i = 0; i < ns.size(); ++i) build(i);
    for (std::size_t c = 0; c < rows.size(); ++c) cell(c);
  }
  return rows;
}

}  // namespace

std::vector<ScalingRow> scaling_experiment(const std::vector<std::uint64_t>& m_list,
                                           const std::vector<std::uint64_t>& n_list,
                                           const GroverScheduleSpec& spec, double target_error) {
  return scaling_impl(m_list, n_list, spec, target_error, true);
}

std::vector<ScalingRow> scaling_experiment_serial(const std::vector<std::uint64_t>& m_list,
                                                  const std::vector<std::uint64_t>& n_list,
                                                  const GroverScheduleSpec& spec, double target_error) {
  return scaling_impl(m_list, n_list, spec, target_error, false);
}

}  // namespace adiawalk
