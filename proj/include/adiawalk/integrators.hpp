#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adiawalk/linalg.hpp"
#include "adiawalk/schedules.hpp"

namespace adiawalk {

enum class IntegratorFamily { Exp, PF1, PF2, SPF };

struct IntegratorKind {
  IntegratorFamily family = IntegratorFamily::Exp;
  int order = 1;
  // PF2 only: evaluate the schedule at the step midpoint (false: left endpoint).
  bool midpoint = true;

  static IntegratorKind exp() { return {IntegratorFamily::Exp, 1, false}; }
  static IntegratorKind pf1() { return {IntegratorFamily::PF1, 1, false}; }
  static IntegratorKind pf2(bool midpoint = true) { return {IntegratorFamily::PF2, 2, midpoint}; }
  static IntegratorKind spf(int order);

  // "exp", "pf1", "pf2", "pf2-simplified", "spf1" ... "spf8"
  std::string tag() const;
  static IntegratorKind parse(const std::string& tag);

  friend bool operator==(const IntegratorKind&, const IntegratorKind&) = default;
};

// W = prod_k exp(-i beta_k h f H1) exp(-i alpha_k h (1-f) H0), k = 0 leftmost.
struct SplittingStage {
  double alpha = 0.0;
  double beta = 0.0;
};

struct SplittingCoefficients {
  std::vector<SplittingStage> stages;
  double alpha_sum() const;
  double beta_sum() const;
};

SplittingCoefficients suzuki_coefficients(int order);

// Builds W(s) for a fixed (H0, H1, schedule, kind, h); eigendecompositions of H0 and H1 are cached.
class WalkGenerator {
 public:
  // steps (T_d) is only needed for midpoint PF2.
  WalkGenerator(HermitianOperator h0, HermitianOperator h1, Schedule sched, IntegratorKind kind, double h,
                std::size_t steps = 0);

  UnitaryOperator at(double s) const;
  Matrix matrix_at(double s) const;
  // psi <- W(s) psi without forming W(s).
  void apply(double s, Vector& psi) const;

  std::size_t dim() const { return h0_.dim(); }
  double step_size() const { return h_; }
  const HermitianOperator& h0() const { return h0_; }
  const HermitianOperator& h1() const { return h1_; }
  const Schedule& schedule() const { return sched_; }
  const IntegratorKind& kind() const { return kind_; }

 private:
  double schedule_value(double s) const;
  Matrix factor(int op, double theta) const;  // exp(-i theta H_op)
  void apply_factor(int op, double theta, Vector& psi) const;

  HermitianOperator h0_, h1_;
  Schedule sched_;
  IntegratorKind kind_;
  double h_;
  std::size_t steps_;
  NormalEigenDecomposition eig0_, eig1_;
  SplittingCoefficients coeffs_;
};

UnitaryOperator walk_operator(const HermitianOperator& h0, const HermitianOperator& h1, const Schedule& sched,
                              const IntegratorKind& kind, double h, double s, std::size_t steps = 0);

HermitianOperator interpolated_hamiltonian(const HermitianOperator& h0, const HermitianOperator& h1, double f);

// Sum over gamma in {0,1}^{p+1} of ||[H_gp, ..., [H_g1, H_g0]]||.
double nested_commutator_sum(const HermitianOperator& h0, const HermitianOperator& h1, int p);
// 2||[H1,[H1,H0]]|| + ||[H0,[H0,H1]]||
double second_order_commutator_norm(const HermitianOperator& h0, const HermitianOperator& h1);

struct ProblemConstants {
  double alpha = 0.0;
  double alpha_tilde = 0.0;  // nested_commutator_sum at `order`
  int order = 1;
  double second_order_commutators = 0.0;
  double delta_star = 0.0;
};

// delta_star is the minimal ground gap of H(s) over grid + 1 equispaced points.
ProblemConstants compute_problem_constants(const HermitianOperator& h0, const HermitianOperator& h1,
                                           const Schedule& sched, std::size_t grid = 10000, int order = 1);

double recommended_step_size(const ProblemConstants& consts, const IntegratorKind& kind);

}  // namespace adiawalk
