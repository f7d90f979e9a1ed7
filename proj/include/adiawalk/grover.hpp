#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adiawalk/evolution.hpp"
#include "adiawalk/linalg.hpp"
#include "adiawalk/schedules.hpp"

namespace adiawalk {

struct GroverInstance {
  std::uint64_t n = 2;
  std::uint64_t m = 1;
  void validate() const;
  double ratio() const { return double(m) / double(n); }
};

std::pair<HermitianOperator, HermitianOperator> effective_hamiltonians(const GroverInstance& inst);

struct GroverGaps {
  double gap_h = 0.0;
  double gap_w = 0.0;  // PF1 walk at h = 1
};
GroverGaps gap_closed_forms(const GroverInstance& inst, double f);
// Closed-form eigenvalues of the PF1 walk at h = 1.
std::pair<Complex, Complex> walk_eigenvalues_closed_form(const GroverInstance& inst, double f);

// |u> in the (|e0>, |e1>) basis.
Vector grover_initial_state(const GroverInstance& inst);

struct GroverRun {
  EvolutionResult result;  // leakage holds the projector-distance error
  double error = 0.0;
  bool below_theory_threshold = false;  // T < 12 d_{N,p}
};

GroverRun run_search(const GroverInstance& inst, const Schedule& sched, std::uint64_t t,
                     bool store_trajectory = false);

struct QaoaAngleSet {
  std::vector<double> betas;
  std::vector<double> gammas;
};

QaoaAngleSet qaoa_angles(const Schedule& sched, std::uint64_t t);
// Applies prod_j exp(-i gamma_j H1) exp(-i beta_j H0) to |u>.
Vector replay_qaoa(const GroverInstance& inst, const QaoaAngleSet& angles);

enum class GroverScheduleKind { Power, BoundaryCancellation, Linear };

struct GroverScheduleSpec {
  GroverScheduleKind kind = GroverScheduleKind::Power;
  double p = 1.0;
  std::string tag() const;
  Schedule build(std::uint64_t n) const;
};

struct ScalingRow {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string schedule;
  double target_error = 0.0;
  std::uint64_t t_required = 0;
  double normalized_ratio = 0.0;
  bool reached = false;
};

inline constexpr std::uint64_t kScalingCap = 100000000;

// Minimal T with error <= target, found by doubling and then bisection.
ScalingRow minimal_steps(const GroverInstance& inst, const Schedule& sched, const GroverScheduleSpec& spec,
                         double target_error, std::uint64_t cap = kScalingCap);
std::vector<ScalingRow> scaling_experiment(const std::vector<std::uint64_t>& m_list,
                                           const std::vector<std::uint64_t>& n_list,
                                           const GroverScheduleSpec& spec, double target_error);
std::vector<ScalingRow> scaling_experiment_serial(const std::vector<std::uint64_t>& m_list,
                                                  const std::vector<std::uint64_t>& n_list,
                                                  const GroverScheduleSpec& spec, double target_error);

}  // namespace adiawalk
