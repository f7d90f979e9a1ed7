#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adiawalk/integrators.hpp"
#include "adiawalk/linalg.hpp"
#include "adiawalk/spectral.hpp"

namespace adiawalk {

class SpectralProjector {
 public:
  // Throws InputError unless P^2 = P and P = P^dag to tol.
  explicit SpectralProjector(Matrix p, double tol = 1e-10);
  const Matrix& matrix() const { return p_; }
  std::size_t rank() const { return rank_; }
  Matrix complement() const { return Matrix::identity(p_.dim()) - p_; }

 private:
  Matrix p_;
  std::size_t rank_ = 0;
};

SpectralProjector spectral_projector(const EigenpathTrack& track, std::size_t step);

struct EvolutionResult {
  Vector final_state;
  double leakage = 0.0;
  std::vector<double> fidelities;
  std::vector<Vector> trajectory;  // filled on request only
};

// Applies W(0), W(1/T_d), ..., W((T_d - 1)/T_d) in order.
EvolutionResult evolve(const WalkFamily& family, const Vector& initial, const EigenpathTrack& track,
                       bool store_trajectory = false);

// Streams walks from the generator; leakage is measured against `target` and fidelities against `basis` columns.
EvolutionResult evolve_streaming(const WalkGenerator& gen, std::size_t steps, const Vector& initial,
                                 const Matrix& basis, const std::vector<std::size_t>& target);

void write_evolution_csv_header(std::ostream& os, std::size_t n_fidelities);
void write_evolution_csv_row(std::ostream& os, double t, double h, std::size_t steps, const EvolutionResult& r);

struct IdealAdiabaticFamily {
  std::size_t steps = 0;
  std::vector<Matrix> projectors;  // P(j), j = 0..T_d
  std::vector<Matrix> s_minus_identity;
  std::vector<Matrix> v;
  std::vector<Matrix> v_minus_identity;  // V - I, accumulated without cancellation
  std::vector<Matrix> walk_a;            // W_A = V W
  std::vector<Matrix> u_a;               // U_A(n), n = 0..T_d
  double intertwining_residual = 0.0;
  double v_unitarity_residual = 0.0;

  Matrix big_v(std::size_t j) const { return v_minus_identity[j] + Matrix::identity(u_a.front().dim()); }
};

IdealAdiabaticFamily ideal_adiabatic_family(const EigenpathTrack& track, const WalkFamily& family);

struct VolterraDiagnostics {
  std::size_t steps = 0;
  int j_max = 0;
  std::vector<Matrix> k_operator;                 // K(n) = T_d (I - Theta(n)), n < T_d
  std::vector<std::vector<double>> off_diagonal;  // [j][n] = ||Q(0) Omega_j(n) P(0)||
  std::vector<double> omega_off_diagonal;         // ||Q(0) Omega(n) P(0)||
  Matrix omega_final;                             // Omega(T_d)
  std::vector<Matrix> omega_j_final;              // Omega_j(T_d)
  double omega_crosscheck = 0.0;                  // max_n ||Omega(n) - U_A(n)^dag U(n)||
  double omega_unitarity = 0.0;
  std::vector<double> series_residual;            // ||sum_{i<=j} Omega_i(T_d) - Omega(T_d)||, j = 0..j_max
};

VolterraDiagnostics volterra_diagnostics(const IdealAdiabaticFamily& ideal, const WalkFamily& family,
                                         int j_max = 6);

struct VolterraModel {
  HermitianOperator h0, h1;
  Schedule schedule;
  IntegratorKind kind = IntegratorKind::exp();
  double h = 1.0;
  PathSelector selector;
};

struct ScalingReport {
  std::vector<std::size_t> steps;
  std::vector<double> interior_max;     // max_n ||Q0 Omega_1(n) P0||
  std::vector<double> boundary_omega1;  // ||Q0 Omega_1(T_d) P0||
  std::vector<double> boundary_omega;   // ||Q0 Omega(T_d) P0||
  std::vector<double> intertwining;
  std::vector<double> crosscheck;
  double interior_slope = 0.0;
  double boundary_omega1_slope = 0.0;
  double boundary_omega_slope = 0.0;
  // Least-squares slopes over the lower and upper halves of the T_d list (the middle value shared when odd).
  double boundary_omega1_slope_lower = 0.0, boundary_omega1_slope_upper = 0.0;
  double boundary_omega_slope_lower = 0.0, boundary_omega_slope_upper = 0.0;
  bool steepening() const {
    return boundary_omega1_slope_upper < boundary_omega1_slope_lower &&
           boundary_omega_slope_upper < boundary_omega_slope_lower;
  }
};

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

ScalingReport boundary_vs_interior_scaling(const VolterraModel& model, const std::vector<std::size_t>& td_list);

}  // namespace adiawalk
