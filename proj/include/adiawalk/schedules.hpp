#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace adiawalk {

enum class ScheduleKind { Linear, GroverPower, Glue, BoundaryCancellation, Tabulated };

struct ScheduleSample {
  double f = 0.0;
  double df = 0.0;
  double d2f = 0.0;
};

class Schedule {
 public:
  Schedule();  // linear

  static Schedule linear();
  static Schedule glue();
  // Two glue functions joined at s = 1/2.
  static Schedule boundary_cancellation();
  static Schedule tabulated(std::vector<std::pair<double, double>> points);

  ScheduleKind kind() const;
  std::string tag() const;
  ScheduleSample eval(double s) const;
  double f(double s) const { return eval(s).f; }

  // GroverPower only.
  std::uint64_t grover_n() const;
  double grover_p() const;
  double normalization() const;
  // (s, f) knots: the user table for Tabulated, the inverse-map table for GroverPower.
  std::vector<std::pair<double, double>> tabulation() const;

  struct Impl;

 private:
  explicit Schedule(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend Schedule build_grover_schedule(std::uint64_t n, double p);
};

ScheduleSample eval_schedule(const Schedule& sched, double s);

// Integral of exp(-1/(s(1-s))) over [0, 1].
double glue_constant_ce();
// g(s), g'(s), g''(s) of the normalized glue function.
ScheduleSample glue_function(double s);

// Gap of the effective Grover Hamiltonian at interpolation value f.
double grover_gap(double f, double n, double m = 1.0);
double grover_d_constant(std::uint64_t n, double p);
Schedule build_grover_schedule(std::uint64_t n, double p);

nlohmann::json schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const nlohmann::json& j);

}  // namespace adiawalk
