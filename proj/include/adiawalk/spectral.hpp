#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "adiawalk/integrators.hpp"
#include "adiawalk/linalg.hpp"
#include "adiawalk/schedules.hpp"

namespace adiawalk {

struct WalkFamily {
  std::size_t steps = 0;  // T_d
  double h = 0.0;
  std::vector<UnitaryOperator> walks;  // s = j / T_d, j = 0..T_d
  std::string provenance;

  std::size_t dim() const { return walks.empty() ? 0 : walks.front().dim(); }
};

WalkFamily build_walk_family(const WalkGenerator& gen, std::size_t steps);
WalkFamily build_walk_family_serial(const WalkGenerator& gen, std::size_t steps);
WalkFamily make_walk_family(std::vector<UnitaryOperator> walks, double h, std::string provenance = "custom");

std::vector<NormalEigenDecomposition> decompose_family(const WalkFamily& family);
std::vector<NormalEigenDecomposition> decompose_family_serial(const WalkFamily& family);

struct PathSelector {
  bool ground = true;
  std::vector<std::size_t> indices;  // positions in the s = 0 ordering

  static PathSelector ground_phase() { return {}; }
  static PathSelector explicit_indices(std::vector<std::size_t> idx) { return {false, std::move(idx)}; }
};

struct EigenpathTrack {
  std::size_t steps = 0;
  std::size_t dim = 0;
  bool circular = true;  // eigenphases of unitaries vs eigenvalues of Hermitian operators
  std::vector<double> phases;        // (steps + 1) x dim, continuous along each path
  std::vector<Complex> eigenvalues;  // (steps + 1) x dim
  std::vector<Matrix> vectors;       // per step; column p belongs to path p
  std::vector<std::size_t> p_group;

  double phase(std::size_t j, std::size_t p) const { return phases[j * dim + p]; }
  Complex eigenvalue(std::size_t j, std::size_t p) const { return eigenvalues[j * dim + p]; }
  Vector vector(std::size_t j, std::size_t p) const { return vectors[j].column(p); }
  bool in_p(std::size_t p) const;
  double distance(std::size_t ja, std::size_t pa, std::size_t jb, std::size_t pb) const;
};

EigenpathTrack track_eigenpaths(const WalkFamily& family, const PathSelector& selector);
EigenpathTrack track_decompositions(const std::vector<NormalEigenDecomposition>& decomps,
                                    const PathSelector& selector, bool circular);

struct GapProfile {
  std::vector<double> s;
  std::vector<double> fixed;
  bool has_multistep = false;
  std::array<std::vector<double>, 3> multistep;  // Delta_0, Delta_1, Delta_2
  double min_fixed = 0.0;
  std::array<double, 3> min_multistep{};
};

// grid + 1 equispaced points.
EigenpathTrack hamiltonian_track(const HermitianOperator& h0, const HermitianOperator& h1, const Schedule& sched,
                                 std::size_t grid, const PathSelector& selector);
GapProfile hamiltonian_gap_profile(const HermitianOperator& h0, const HermitianOperator& h1, const Schedule& sched,
                                   std::size_t grid, const PathSelector& selector);
GapProfile track_gap_profile(const EigenpathTrack& track);
// Delta_k over windows j..j+k, truncated at the last step.
GapProfile walk_gap_profile(const EigenpathTrack& track);
void write_gap_profile_csv(std::ostream& os, const GapProfile& profile);

// Ground-phase gap of a single unitary / ground gap of a Hermitian operator.
double ground_walk_gap(const UnitaryOperator& w);
double ground_hamiltonian_gap(const HermitianOperator& h);

// Operator norm of the k-th forward difference at step j, k in {1, 2, 3}.
double finite_difference_norm(const WalkFamily& family, int k, std::size_t j);

struct StepCoefficients {
  std::vector<double> c1, c2;  // c_k(j) = T_d^k ||D^k W(j)||, tail filled with the last defined value
};
StepCoefficients measured_step_coefficients(const WalkFamily& family);

struct GapInterval {
  double lower = 0.0;
  double upper = 0.0;
};

// h * Delta_H(s) -/+ (h^3 / 95)(2||[H1,[H1,H0]]|| + ||[H0,[H0,H1]]||), valid for h <= 1/(||H0|| + ||H1||).
GapInterval gap_perturbation_bounds(const HermitianOperator& h0, const HermitianOperator& h1, const Schedule& sched,
                                    double s, double h);
// h * Delta_H(s) -/+ pi * c * h^{p+1} * alpha_tilde_p, with the unspecified constant c supplied by the caller.
GapInterval gap_perturbation_bounds_order(const HermitianOperator& h0, const HermitianOperator& h1,
                                          const Schedule& sched, double s, double h, int p, double c = 1.0);

struct AdiabaticBound {
  double value = 0.0;             // relative bound (constant taken as 1)
  bool precondition_met = false;  // T_d >= sup 4 c1_hat / Delta2_check
  double required_steps = 0.0;
};

AdiabaticBound discrete_adiabatic_bound(const GapProfile& gaps, const std::vector<double>& c1,
                                        const std::vector<double>& c2, std::size_t steps);

}  // namespace adiawalk
