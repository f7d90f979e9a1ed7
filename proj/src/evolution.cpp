#include "adiawalk/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "adiawalk/errors.hpp"

namespace adiawalk {

namespace {

constexpr double kSingularFloor = 1e-8;
constexpr double kIntertwiningTol = 1e-8;

void check_state(const Vector& psi, std::size_t n) {
  if (psi.size() != n) throw InputError("state dimension mismatch");
  if (std::abs(norm(psi) - 1.0) > 1e-10) throw InputError("initial state must be normalized");
}

}  // namespace

SpectralProjector::SpectralProjector(Matrix p, double tol) : p_(std::move(p)) {
  if (max_abs_diff(p_, p_.adjoint()) > tol) throw InputError("projector is not Hermitian");
  if (max_abs_diff(p_ * p_, p_) > tol) throw InputError("projector is not idempotent");
  double tr = 0.0;
  for (std::size_t i = 0; i < p_.dim(); ++i) tr += p_(i, i).real();
  rank_ = static_cast<std::size_t>(std::lround(tr));
}

SpectralProjector spectral_projector(const EigenpathTrack& track, std::size_t step) {
  if (step > track.steps) throw InputError("step beyond the last grid point");
  Matrix p(track.dim);
  for (std::size_t q : track.p_group) {
    const Vector v = track.vector(step, q);
    p += outer(v, v);
  }
  return SpectralProjector(std::move(p));
}

EvolutionResult evolve(const WalkFamily& family, const Vector& initial, const EigenpathTrack& track,
                       bool store_trajectory) {
  const std::size_t n = family.dim();
  check_state(initial, n);
  if (track.dim != n || track.steps != family.steps) throw InputError("track does not match the family");
  EvolutionResult r;
  Vector psi = initial;
  if (store_trajectory) r.trajectory.push_back(psi);
  for (std::size_t j = 0; j < family.steps; ++j) {
    psi = family.walks[j].matrix() * psi;
    if (store_trajectory) r.trajectory.push_back(psi);
  }
  double leak2 = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    const double amp = std::abs(inner(track.vector(family.steps, p), psi));
    r.fidelities.push_back(amp);
    if (!track.in_p(p)) leak2 += amp * amp;
  }
  r.leakage = std::min(1.0, std::sqrt(leak2));
  r.final_state = std::move(psi);
  return r;
}

EvolutionResult evolve_streaming(const WalkGenerator& gen, std::size_t steps, const Vector& initial,
                                 const Matrix& basis, const std::vector<std::size_t>& target) {
  const std::size_t n = gen.dim();
  check_state(initial, n);
  if (basis.dim() != n) throw InputError("basis dimension mismatch");
  Vector psi = initial;
  for (std::size_t j = 0; j < steps; ++j) gen.apply(double(j) / double(steps), psi);
  EvolutionResult r;
  double leak2 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double amp = std::abs(inner(basis.column(k), psi));
    r.fidelities.push_back(amp);
    if (std::find(target.begin(), target.end(), k) == target.end()) leak2 += amp * amp;
  }
  r.leakage = std::min(1.0, std::sqrt(leak2));
  r.final_state = std::move(psi);
  return r;
}

void write_evolution_csv_header(std::ostream& os, std::size_t n_fidelities) {
  os << "T,h,Td,leakage";
  for (std::size_t k = 0; k < n_fidelities; ++k) os << ",fidelity_" << k;
  os << '\n';
}

void write_evolution_csv_row(std::ostream& os, double t, double h, std::size_t steps, const EvolutionResult& r) {
  os << std::setprecision(17) << t << ',' << h << ',' << steps << ',' << r.leakage;
  for (double f : r.fidelities) os << ',' << f;
  os << '\n';
}

IdealAdiabaticFamily ideal_adiabatic_family(const EigenpathTrack& track, const WalkFamily& family) {
  const std::size_t td = family.steps;
  const std::size_t n = family.dim();
  if (track.steps != td || track.dim != n) throw InputError("track does not match the family");
  const Matrix id = Matrix::identity(n);

  IdealAdiabaticFamily a;
  a.steps = td;
  a.projectors.resize(td + 1);
  for (std::size_t j = 0; j <= td; ++j) a.projectors[j] = spectral_projector(track, j).matrix();

  a.s_minus_identity.resize(td);
  a.v.resize(td);
  a.v_minus_identity.resize(td);
  a.walk_a.resize(td);
  a.u_a.resize(td + 1);
  a.u_a[0] = id;

  for (std::size_t j = 0; j < td; ++j) {
    const Matrix& p = a.projectors[j];
    // S - I = (P' - P)(2P - I), exact algebra that avoids forming S.
    const Matrix sm = (a.projectors[j + 1] - p) * (p * Complex(2.0) - id);
    const Matrix e = sm + sm.adjoint() + sm * sm.adjoint();  // S S^dag - I
    const auto d = hermitian_eig(HermitianOperator(e, 1e-10));
    const double smin = std::sqrt(std::max(0.0, 1.0 + d.eigenvalues.front().real()));
    if (smin <= kSingularFloor)
      throw GapCollapseError("S(s) is singular at step " + std::to_string(j) + " (gap collapse)", j);
    std::vector<Complex> root(n), inv_m1(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double ek = d.eigenvalues[k].real();
      root[k] = std::sqrt(1.0 + ek);
      inv_m1[k] = std::expm1(-0.5 * std::log1p(ek));
    }
    a.v[j] = NormalEigenDecomposition{root, d.eigenvectors}.reconstruct();
    const Matrix vinv_m1 = NormalEigenDecomposition{inv_m1, d.eigenvectors}.reconstruct();
    a.s_minus_identity[j] = sm;
    a.v_minus_identity[j] = vinv_m1 * sm + vinv_m1 + sm;
    const Matrix big_v = a.v_minus_identity[j] + id;
    a.v_unitarity_residual = std::max(a.v_unitarity_residual, max_abs_diff(big_v.adjoint() * big_v, id));
    a.walk_a[j] = big_v * family.walks[j].matrix();
    a.u_a[j + 1] = a.walk_a[j] * a.u_a[j];
  }
  const Matrix& p0 = a.projectors[0];
  for (std::size_t j = 0; j <= td; ++j)
    a.intertwining_residual =
        std::max(a.intertwining_residual, operator_norm(a.u_a[j] * p0 - a.projectors[j] * a.u_a[j]));
  if (a.intertwining_residual > kIntertwiningTol)
    throw NumericalError("ideal adiabatic evolution fails to intertwine the projectors");
  return a;
}

VolterraDiagnostics volterra_diagnostics(const IdealAdiabaticFamily& ideal, const WalkFamily& family, int j_max) {
  if (j_max < 1) throw InputError("jMax must be at least 1");
  const std::size_t td = ideal.steps;
  const std::size_t n = family.dim();
  if (family.steps != td) throw InputError("family does not match the ideal evolution");
  const Matrix id = Matrix::identity(n);
  const Matrix& p0 = ideal.projectors[0];
  const Matrix q0 = id - p0;
  auto offdiag = [&](const Matrix& m) { return operator_norm(q0 * m * p0); };

  VolterraDiagnostics out;
  out.steps = td;
  out.j_max = j_max;
  out.k_operator.resize(td);
  out.off_diagonal.assign(j_max + 1, std::vector<double>(td + 1, 0.0));
  out.omega_off_diagonal.assign(td + 1, 0.0);

  Matrix x(n);  // Omega(n) - I
  std::vector<Matrix> omega_j(j_max + 1, Matrix(n));
  omega_j[0] = id;
  Matrix u = id;
  auto record = [&](std::size_t step) {
    out.omega_off_diagonal[step] = offdiag(x);
    for (int j = 1; j <= j_max; ++j) out.off_diagonal[j][step] = offdiag(omega_j[j]);
    const Matrix omega = x + id;
    out.omega_crosscheck =
        std::max(out.omega_crosscheck, operator_norm(omega - ideal.u_a[step].adjoint() * u));
    out.omega_unitarity = std::max(out.omega_unitarity, max_abs_diff(omega.adjoint() * omega, id));
  };
  record(0);
  for (std::size_t k = 0; k < td; ++k) {
    const Matrix& ua = ideal.u_a[k + 1];
    const Matrix theta_m1 = ua.adjoint() * ideal.v_minus_identity[k].adjoint() * ua;
    out.k_operator[k] = theta_m1 * Complex(-double(td));
    for (int j = j_max; j >= 1; --j) omega_j[j] += theta_m1 * omega_j[j - 1];
    x += theta_m1 * (x + id);
    u = family.walks[k].matrix() * u;
    record(k + 1);
  }
  out.omega_final = x + id;
  out.omega_j_final = omega_j;
  Matrix partial(n);
  for (int j = 0; j <= j_max; ++j) {
    partial += omega_j[j];
    out.series_residual.push_back(operator_norm(partial - out.omega_final));
  }
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("slope fit needs matching arrays of length >= 2");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = double(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ScalingReport boundary_vs_interior_scaling(const VolterraModel& model, const std::vector<std::size_t>& td_list) {
  if (td_list.size() < 4) throw InputError("need at least four T_d values");
  if (!std::is_sorted(td_list.begin(), td_list.end())) throw InputError("T_d list must be ascending");
  ScalingReport r;
  r.steps = td_list;
  for (std::size_t td : td_list) {
    const WalkGenerator gen(model.h0, model.h1, model.schedule, model.kind, model.h, td);
    const auto family = build_walk_family(gen, td);
    const auto track = track_eigenpaths(family, model.selector);
    const auto ideal = ideal_adiabatic_family(track, family);
    const auto diag = volterra_diagnostics(ideal, family, 1);
    const auto& o1 = diag.off_diagonal[1];
    r.interior_max.push_back(*std::max_element(o1.begin(), o1.end()));
    r.boundary_omega1.push_back(o1.back());
    r.boundary_omega.push_back(diag.omega_off_diagonal.back());
    r.intertwining.push_back(ideal.intertwining_residual);
    r.crosscheck.push_back(diag.omega_crosscheck);
  }
  std::vector<double> x(td_list.begin(), td_list.end());
  r.interior_slope = loglog_slope(x, r.interior_max);
  r.boundary_omega1_slope = loglog_slope(x, r.boundary_omega1);
  r.boundary_omega_slope = loglog_slope(x, r.boundary_omega);
  const std::size_t m = x.size();
  const std::size_t half = (m + 1) / 2;
  auto sub = [](const std::vector<double>& v, std::size_t a, std::size_t b) {
    return std::vector<double>(v.begin() + a, v.begin() + b);
  };
  r.boundary_omega1_slope_lower = loglog_slope(sub(x, 0, half), sub(r.boundary_omega1, 0, half));
  r.boundary_omega1_slope_upper = loglog_slope(sub(x, m - half, m), sub(r.boundary_omega1, m - half, m));
  r.boundary_omega_slope_lower = loglog_slope(sub(x, 0, half), sub(r.boundary_omega, 0, half));
  r.boundary_omega_slope_upper = loglog_slope(sub(x, m - half, m), sub(r.boundary_omega, m - half, m));
  return r;
}

}  // namespace adiawalk
