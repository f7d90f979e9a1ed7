// Acceptance suite: one PASS/FAIL line per criterion, then "criteria evaluated: N".
// Exit status is 1 when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "adiawalk/evolution.hpp"
#include "adiawalk/grover.hpp"
#include "adiawalk/integrators.hpp"
#include "adiawalk/spectral.hpp"
#include "adiawalk/toymodels.hpp"
#include "support/oracles.hpp"

using namespace adiawalk;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::pair<HermitianOperator, HermitianOperator> random_pair(std::mt19937_64& g, std::size_t n) {
  return {HermitianOperator(oracle::random_hermitian(g, n)), HermitianOperator(oracle::random_hermitian(g, n))};
}

double alpha_of(const HermitianOperator& h0, const HermitianOperator& h1) {
  return operator_norm(h0.matrix()) + operator_norm(h1.matrix());
}

// Collected from every ideal adiabatic family built by the suite.
struct IntertwiningLog {
  double worst_intertwining = 0.0;
  double worst_crosscheck = 0.0;
  std::size_t families = 0;
  void add(const ScalingReport& r) {
    for (double x : r.intertwining) worst_intertwining = std::max(worst_intertwining, x);
    for (double x : r.crosscheck) worst_crosscheck = std::max(worst_crosscheck, x);
    families += r.steps.size();
  }
} g_intertwining;

// ---- gap tables

Verdict gap_table_criterion(ToyKind kind) {
  const auto t0 = std::chrono::steady_clock::now();
  const bool first = kind == ToyKind::Toy1;
  std::vector<double> eps;
  for (double e : table_eps_values())
    if (e != 1e-2) eps.push_back(e);
  const auto rows = gap_table(kind, eps, 10000, 1.0);
  const double runtime = seconds_since(t0);

  std::size_t within = 0, compared = 0;
  double worst = 1.0;
  auto check = [&](double got, double ref) {
    ++compared;
    const double ratio = got / ref;
    if (std::abs(ratio - 1.0) > std::abs(worst - 1.0)) worst = ratio;
    if (std::abs(got - ref) <= 0.25 * ref) ++within;
  };
  double zero_closed = 0.0, zero_open = 0.0;
  for (const auto& r : rows) {
    const auto& ref = *r.reference;
    if (r.eps == 0.0) {
      zero_closed = first ? r.gap_w : r.gap_h;
      zero_open = first ? r.gap_h : r.gap_w;
      check(zero_open, first ? ref.gap_h : ref.gap_w);
      continue;
    }
    check(r.gap_h, ref.gap_h);
    check(r.gap_w, ref.gap_w);
  }
  const bool closed_ok = zero_closed <= 1e-12;
  const bool window_ok = zero_open >= 1e-3 && zero_open <= 4e-3;
  const bool pass = within == compared && closed_ok && window_ok && runtime <= 120.0;
  const char* closed_name = first ? "gap_w" : "gap_h";
  const char* open_name = first ? "gap_h" : "gap_w";
  return {pass, fmt("toy model %d gap table vs reference (25%% rel): %zu/%zu values within, worst ratio %.3g; "
                    "eps=0 %s=%.2e (<=1e-12: %s), %s=%.3e (in [1e-3,4e-3]: %s); eps=1e-2 exempt; %.1fs",
                    first ? 1 : 2, within, compared, worst, closed_name, zero_closed, closed_ok ? "yes" : "no",
                    open_name, zero_open, window_ok ? "yes" : "no", runtime)};
}

// ---- fidelity ordering

Verdict fidelity_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> ts{1e3, 1e4, 1e5};
  const auto rows = fidelity_sweep(0.0, ts, {1.0, 1.0 / 32.0});
  const double runtime = seconds_since(t0);
  std::vector<double> ground_h1;
  double g_fine = 0.0, e_fine = 0.0;
  for (const auto& r : rows) {
    if (r.h == 1.0) ground_h1.push_back(r.result.fidelities[0]);
    if (r.h != 1.0 && r.t == 1e5) {
      g_fine = r.result.fidelities[0];
      e_fine = r.result.fidelities[1];
    }
  }
  const bool increasing = ground_h1[0] < ground_h1[1] && ground_h1[1] < ground_h1[2];
  const bool high = ground_h1[2] > 0.9;
  const bool reversed = e_fine > g_fine;
  return {increasing && high && reversed && runtime <= 600.0,
          fmt("toy model 2 eps=0 PF1: h=1 ground fidelity %.4f, %.4f, %.4f at T=1e3,1e4,1e5 (increasing: %s, "
              ">0.9: %s); h=1/32 T=1e5 ground %.4f vs first excited %.4f (excited larger: %s); %.1fs",
              ground_h1[0], ground_h1[1], ground_h1[2], increasing ? "yes" : "no", high ? "yes" : "no", g_fine,
              e_fine, reversed ? "yes" : "no", runtime)};
}

// ---- splitting spectra

std::vector<double> sorted_phases(const UnitaryOperator& w) {
  std::vector<double> out;
  for (Complex z : normal_eig(w).eigenvalues) out.push_back(eigenphase(z));
  std::sort(out.begin(), out.end());
  return out;
}

Verdict splitting_spectrum_criterion() {
  auto g = oracle::rng(4000);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto [h0, h1] = random_pair(g, 4);
    const double f = u(g), h = u(g) / alpha_of(h0, h1);
    const auto a = sorted_phases(WalkGenerator(h0, h1, Schedule::linear(), IntegratorKind::pf1(), h).at(f));
    const auto b = sorted_phases(WalkGenerator(h0, h1, Schedule::linear(), IntegratorKind::pf2(false), h).at(f));
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return {worst <= 1e-11,
          fmt("first- and second-order splittings share sorted eigenphases over 200 random 4x4 instances: "
              "max deviation %.2e (tol 1e-11)",
              worst)};
}

// ---- gap perturbation interval

Verdict gap_interval_criterion() {
  auto g = oracle::rng(5000);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t inside = 0, total = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 200; ++k) {
    const auto [h0, h1] = random_pair(g, 4);
    const double s = u(g), h = (0.05 + 0.95 * u(g)) / alpha_of(h0, h1);
    const auto iv = gap_perturbation_bounds(h0, h1, Schedule::linear(), s, h);
    for (const auto& kind : {IntegratorKind::pf1(), IntegratorKind::pf2(false)}) {
      const double gap = ground_walk_gap(WalkGenerator(h0, h1, Schedule::linear(), kind, h).at(s));
      const double margin = std::min(gap - iv.lower, iv.upper - gap);
      worst_margin = std::min(worst_margin, margin / std::max(iv.upper - iv.lower, 1e-300));
      ++total;
      if (gap >= iv.lower && gap <= iv.upper) ++inside;
    }
  }
  return {inside == total,
          fmt("walk angular gap inside h*gap_H -/+ (h^3/95)(2||[H1,[H1,H0]]||+||[H0,[H0,H1]]||): %zu/%zu "
              "(200 random instances x PF1, PF2; tightest relative margin %.3f)",
              inside, total, worst_margin)};
}

// ---- two-level closed forms

Verdict closed_form_criterion() {
  double worst = 0.0, worst_ratio = std::numeric_limits<double>::infinity();
  for (const GroverInstance inst : {GroverInstance{64, 1}, GroverInstance{1024, 16}}) {
    const auto [h0, h1] = effective_hamiltonians(inst);
    const WalkGenerator gen(h0, h1, Schedule::linear(), IntegratorKind::pf1(), 1.0);
    for (int k = 0; k <= 1000; ++k) {
      const double f = k / 1000.0;
      const auto closed = gap_closed_forms(inst, f);
      worst = std::max(worst, std::abs(closed.gap_w - ground_walk_gap(gen.at(f))));
      worst_ratio = std::min(worst_ratio, closed.gap_w / closed.gap_h);
    }
  }
  return {worst <= 1e-10 && worst_ratio >= 2.0 / 3.0,
          fmt("two-level search walk gap closed form vs numerical PF1 gap on 1001 points, (N,M)=(64,1),(1024,16): "
              "max error %.2e (tol 1e-10); min gap_w/gap_h %.4f (>= 2/3)",
              worst, worst_ratio)};
}

// ---- boundary vs interior scaling

Verdict volterra_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto m = build_toy({ToyKind::FourLevel, 0.0});
  const std::vector<std::size_t> td{100, 200, 400, 800, 1600};
  const VolterraModel glue{m.h0, m.h1, m.schedule, IntegratorKind::exp(), 1.0, PathSelector::ground_phase()};
  const VolterraModel lin{m.h0, m.h1, Schedule::linear(), IntegratorKind::exp(), 1.0, PathSelector::ground_phase()};
  const auto a = boundary_vs_interior_scaling(glue, td);
  const auto b = boundary_vs_interior_scaling(lin, td);
  g_intertwining.add(a);
  g_intertwining.add(b);
  const double runtime = seconds_since(t0);
  auto in_band = [](double x) { return x >= -1.3 && x <= -0.7; };
  const bool interior = in_band(a.interior_slope);
  const bool boundary = a.boundary_omega1_slope <= -3.0 && a.boundary_omega_slope <= -3.0;
  const bool steep = a.steepening();
  const bool control = in_band(b.boundary_omega1_slope) && in_band(b.boundary_omega_slope);
  return {interior && boundary && steep && control && runtime <= 300.0,
          fmt("four-level model, glue schedule, T_d=100..1600: interior slope %.3f (in [-1.3,-0.7]); boundary "
              "slopes first term %.2f, full series %.2f (<= -3); steepening %.2f -> %.2f (%s); linear control "
              "boundary slopes %.3f, %.3f (in [-1.3,-0.7]); %.1fs",
              a.interior_slope, a.boundary_omega1_slope, a.boundary_omega_slope, a.boundary_omega_slope_lower,
              a.boundary_omega_slope_upper, steep ? "yes" : "no", b.boundary_omega1_slope, b.boundary_omega_slope,
              runtime)};
}

Verdict intertwining_criterion() {
  // Additional families on random pairs alongside those of the scaling check.
  auto g = oracle::rng(8000);
  for (int k = 0; k < 4; ++k) {
    const auto [h0, h1] = random_pair(g, 3);
    const double h = 0.8 / alpha_of(h0, h1);
    const VolterraModel vm{h0, h1, k % 2 ? Schedule::glue() : Schedule::linear(),
                           k < 2 ? IntegratorKind::pf1() : IntegratorKind::pf2(), h, PathSelector::ground_phase()};
    g_intertwining.add(boundary_vs_interior_scaling(vm, {50, 100, 200, 400}));
  }
  return {g_intertwining.worst_intertwining <= 1e-8 && g_intertwining.worst_crosscheck <= 1e-8,
          fmt("ideal adiabatic families (%zu built): max ||U_A P(0) - P(n) U_A|| %.2e, max ||Omega - U_A^dag U|| "
              "%.2e (tol 1e-8)",
              g_intertwining.families, g_intertwining.worst_intertwining, g_intertwining.worst_crosscheck)};
}

// ---- search scaling

Verdict search_scaling_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  const GroverScheduleSpec spec{GroverScheduleKind::Power, 1.0};
  const auto by_n = scaling_experiment({1}, {1ull << 8, 1ull << 12, 1ull << 16, 1ull << 20}, spec, 0.1);
  const auto by_m = scaling_experiment({1, 2, 4, 8}, {1ull << 12}, spec, 0.1);
  const double runtime = seconds_since(t0);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  bool reached = true;
  std::string ratios;
  for (const auto& r : by_n) {
    const double x = double(r.t_required) / (std::sqrt(double(r.n)) * std::log(double(r.n)));
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    reached = reached && r.reached;
    ratios += fmt("%s%.3f", ratios.empty() ? "" : ",", x);
  }
  bool nonincreasing = true;
  std::string ts;
  for (std::size_t i = 0; i < by_m.size(); ++i) {
    reached = reached && by_m[i].reached;
    if (i > 0 && by_m[i].t_required > by_m[i - 1].t_required) nonincreasing = false;
    ts += fmt("%s%llu", ts.empty() ? "" : ",", (unsigned long long)by_m[i].t_required);
  }
  const double band = hi / lo;
  return {reached && band <= 3.0 && nonincreasing && runtime <= 300.0,
          fmt("search with p=1 schedule, error 0.1: T/(sqrt(N) log N) = %s for N=2^8,2^12,2^16,2^20 (band %.2fx, "
              "<= 3x); N=2^12 T = %s for M=1,2,4,8 (nonincreasing: %s); %.1fs",
              ratios.c_str(), band, ts.c_str(), nonincreasing ? "yes" : "no", runtime)};
}

Verdict boundary_cancellation_criterion() {
  const GroverInstance inst{1024, 1};
  const auto bc = Schedule::boundary_cancellation();
  const auto p1 = build_grover_schedule(1024, 1.0);
  std::vector<double> ts, e_bc, e_p1;
  for (int k = 0; k <= 9; ++k) {
    const auto t = std::uint64_t(std::llround(320.0 * std::pow(10.0, k / 9.0)));
    ts.push_back(double(t));
    e_bc.push_back(run_search(inst, bc, t).error);
    e_p1.push_back(run_search(inst, p1, t).error);
  }
  const double s_bc = loglog_slope(ts, e_bc), s_p1 = loglog_slope(ts, e_p1);
  const bool pass = s_bc <= -3.0 && s_p1 >= -1.3 && s_p1 <= -0.7;
  return {pass, fmt("N=2^10 search, T in [320,3200] (10 points): boundary-cancellation error slope %.3f (needs "
                    "<= -3), errors %.3g -> %.3g; p=1 schedule slope %.3f (in [-1.3,-0.7])",
                    s_bc, e_bc.front(), e_bc.back(), s_p1)};
}

// ---- exponential integrator one-step error

Verdict exp_step_criterion() {
  auto g = oracle::rng(11000);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t within = 0;
  double worst_ratio = 0.0;
  std::vector<double> slopes;
  for (int k = 0; k < 100; ++k) {
    const auto [h0, h1] = random_pair(g, 3);
    const double alpha = alpha_of(h0, h1);
    const double total_time = 20.0 + 80.0 * u(g);
    const double s0 = 0.1 + 0.8 * u(g);
    const auto ham = [&](double t) {
      const double f = t / total_time;
      return oracle::add(oracle::scale(h0.matrix(), 1.0 - f), oracle::scale(h1.matrix(), f));
    };
    std::vector<double> hs, errs;
    bool ok = true;
    for (double scale : {1.0, 0.5, 0.25, 0.125}) {
      const double h = scale / alpha;
      // Step j starts at physical time j h = s0 T (rounded to the step grid).
      const double td = total_time / h;
      const double j = std::floor(s0 * td);
      const WalkGenerator gen(h0, h1, Schedule::linear(), IntegratorKind::exp(), h);
      const Matrix w = gen.matrix_at(j / td);
      const Matrix exact = oracle::time_ordered(ham, j * h, (j + 1.0) * h);
      const double err = oracle::spectral_norm(oracle::add(w, exact, -1.0));
      const double bound = 10.0 * h * h * alpha / total_time;
      ok = ok && err <= bound;
      worst_ratio = std::max(worst_ratio, err / bound);
      hs.push_back(h);
      errs.push_back(err);
    }
    if (ok) ++within;
    slopes.push_back(oracle::loglog_slope(hs, errs));
  }
  const auto [mn, mx] = std::minmax_element(slopes.begin(), slopes.end());
  const bool slopes_ok = *mn >= 1.8 && *mx <= 2.2;
  return {within == 100 && slopes_ok,
          fmt("exponential integrator one-step error vs converged time-ordered oracle: %zu/100 instances within "
              "10 h^2 alpha/T (worst error/bound %.3f); h-scaling slopes in [%.3f, %.3f] (2 +/- 0.2)",
              within, worst_ratio, *mn, *mx)};
}

Verdict scope_criterion(const std::vector<bool>& covered) {
  const bool ran = covered.size() == 4;
  return {ran, fmt("asymptotic complexity statements, the absolute adiabatic-bound constant and the boundary "
                   "cancellation conjecture are not reproduced quantitatively; covered instead by checks 5, 7, 8, "
                   "10 above (results: %s, %s, %s, %s)",
                   covered[0] ? "PASS" : "FAIL", covered[1] ? "PASS" : "FAIL", covered[2] ? "PASS" : "FAIL",
                   covered[3] ? "PASS" : "FAIL")};
}

}  // namespace

int main() {
  std::vector<std::function<Verdict()>> checks{
      [] { return gap_table_criterion(ToyKind::Toy1); },
      [] { return gap_table_criterion(ToyKind::Toy2); },
      fidelity_criterion,
      splitting_spectrum_criterion,
      gap_interval_criterion,
      closed_form_criterion,
      volterra_criterion,
      intertwining_criterion,
      search_scaling_criterion,
      boundary_cancellation_criterion,
      exp_step_criterion,
  };
  std::vector<bool> results;
  int failures = 0;
  auto report = [&](std::size_t id, const Verdict& v) {
    results.push_back(v.pass);
    if (!v.pass) ++failures;
    std::printf("criterion %zu: %s - %s\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  };
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Verdict v;
    try {
      v = checks[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    report(i + 1, v);
  }
  report(12, scope_criterion({results[4], results[6], results[7], results[9]}));
  std::printf("criteria evaluated: %zu, passed: %zu, failed: %d\n", results.size(), results.size() - failures,
              failures);
  return failures == 0 ? 0 : 1;
}
