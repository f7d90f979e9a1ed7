#include "adiawalk/toymodels.hpp"

#include <algorithm>
#include <cmath>

#include "adiawalk/errors.hpp"
#include "adiawalk/integrators.hpp"
#include "adiawalk/parallel.hpp"
#include "adiawalk/spectral.hpp"

namespace adiawalk {

ToyKind parse_toy_kind(const std::string& name) {
  if (name == "toy1") return ToyKind::Toy1;
  if (name == "toy2") return ToyKind::Toy2;
  if (name == "four-level") return ToyKind::FourLevel;
  throw InputError("unknown model '" + name + "' (expected toy1, toy2 or four-level)");
}

std::string toy_kind_name(ToyKind kind) {
  switch (kind) {
    case ToyKind::Toy1: return "toy1";
    case ToyKind::Toy2: return "toy2";
    case ToyKind::FourLevel: return "four-level";
  }
  return "unknown";
}

Matrix ordered_eigenbasis(const HermitianOperator& h) {
  Matrix v = hermitian_eig(h).eigenvectors;
  const std::size_t n = v.dim();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = 0;
    while (i < n && std::abs(v(i, k)) < 1e-12) ++i;
    if (i == n) continue;
    const Complex g = std::conj(v(i, k)) / std::abs(v(i, k));
    for (std::size_t r = 0; r < n; ++r) v(r, k) *= g;
  }
  return v;
}

Matrix tridiagonal_basis() {
  const Matrix a = Matrix::from_rows({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  return ordered_eigenbasis(HermitianOperator(a));
}

namespace {

Matrix conjugate(const Matrix& q, const std::vector<Complex>& d) {
  return q * Matrix::diagonal(std::span<const Complex>(d)) * q.adjoint();
}

}  // namespace

ToyModel build_toy(const ToyModelSpec& spec) {
  if (!(spec.eps >= 0.0) || !std::isfinite(spec.eps)) throw InputError("epsilon must be a nonnegative number");
  ToyModel m;
  if (spec.kind == ToyKind::FourLevel) {
    const Matrix a0 = Matrix::from_rows({{2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, 1}, {1, 0, 1, 2}});
    const Matrix a1 = Matrix::from_rows({{3, -0.5, 0, -2}, {-0.5, 3, 1, 0}, {0, 1, 3, -1}, {-2, 0, -1, 3}});
    const Matrix q0 = ordered_eigenbasis(HermitianOperator(a0));
    const Matrix q1 = ordered_eigenbasis(HermitianOperator(a1));
    const std::vector<double> d0{0.5, 0.8, 1.2, 1.4}, d1{0.3, 1.0, 1.5, 1.9};
    m.h0 = HermitianOperator(q0.adjoint() * Matrix::diagonal(std::span<const double>(d0)) * q0);
    m.h1 = HermitianOperator(q1.adjoint() * Matrix::diagonal(std::span<const double>(d1)) * q1);
    m.schedule = Schedule::glue();
    return m;
  }
  const Matrix q = tridiagonal_basis();
  const std::vector<double> d{-0.5, -0.5 + spec.eps, 0.2, 0.6};
  const std::vector<double> h1d{-1.0, -0.6, 0.0, 1.0};
  m.h1 = HermitianOperator(Matrix::diagonal(std::span<const double>(h1d)));
  m.schedule = Schedule::linear();
  if (spec.kind == ToyKind::Toy1) {
    std::vector<Complex> ph(4), half(4);
    for (int k = 0; k < 4; ++k) {
      ph[k] = std::polar(1.0, -d[k]);
      half[k] = std::polar(1.0, 0.5 * h1d[k]);
    }
    const Matrix w = conjugate(q, ph);
    const auto lg = logm_unitary(UnitaryOperator(Matrix::diagonal(std::span<const Complex>(half)) * w));
    // 2i log(U) with log U = i Theta.
    m.h0 = HermitianOperator(lg.theta.matrix() * Complex(-2.0));
    m.branch_cut_warning = lg.branch_cut_warning;
  } else {
    std::vector<Complex> dc(d.begin(), d.end());
    m.h0 = HermitianOperator(conjugate(q, dc) * Complex(2.0) - m.h1.matrix());
  }
  return m;
}

const std::vector<double>& table_eps_values() {
  static const std::vector<double> v{1e-1, 5e-2, 2e-2, 1e-2, 5e-3, 2e-3, 1e-3, 5e-4, 2e-4, 1e-4, 0.0};
  return v;
}

std::optional<ReferenceGaps> reference_gaps(ToyKind kind, double eps) {
  struct Entry {
    double eps, h, w;
  };
  static const Entry toy1[] = {{1e-1, 5.1e-2, 5.2e-2}, {5e-2, 2.3e-2, 2.5e-2}, {2e-2, 7.9e-3, 9.7e-3},
                               {1e-2, 3.0e-2, 4.8e-2}, {5e-3, 5.6e-4, 2.6e-3}, {2e-3, 8.9e-4, 9.5e-4},
                               {1e-3, 1.4e-3, 4.8e-4}, {5e-4, 1.6e-3, 2.4e-4}, {2e-4, 1.8e-3, 1.0e-4},
                               {1e-4, 1.8e-3, 5.2e-5}, {0.0, 1.9e-3, 1.1e-16}};
  static const Entry toy2[] = {{1e-1, 5.1e-2, 5.3e-2}, {5e-2, 2.5e-2, 2.6e-2}, {2e-2, 9.6e-3, 1.1e-2},
                               {1e-2, 4.7e-3, 6.6e-3}, {5e-3, 2.4e-3, 4.2e-3}, {2e-3, 9.4e-4, 2.8e-3},
                               {1e-3, 4.7e-4, 2.4e-3}, {5e-4, 2.3e-4, 2.1e-3}, {2e-4, 1.0e-4, 2.0e-3},
                               {1e-4, 5.1e-5, 1.9e-3}, {0.0, 3.3e-16, 1.9e-3}};
  if (kind == ToyKind::FourLevel) return std::nullopt;
  const auto& table = kind == ToyKind::Toy1 ? toy1 : toy2;
  for (const auto& e : table)
    if (std::abs(e.eps - eps) <= 1e-12 * std::max(1.0, eps))
      return ReferenceGaps{e.h, e.w, kind == ToyKind::Toy1 && e.eps == 1e-2};
  return std::nullopt;
}

GapTableRow gap_table_row(ToyKind kind, double eps, std::size_t grid, double h) {
  if (kind == ToyKind::FourLevel) throw InputError("gap tables are defined for toy1 and toy2");
  const auto m = build_toy({kind, eps});
  GapTableRow row;
  row.eps = eps;
  row.reference = reference_gaps(kind, eps);
  row.gap_h = hamiltonian_gap_profile(m.h0, m.h1, m.schedule, grid, PathSelector::ground_phase()).min_fixed;
  const WalkGenerator gen(m.h0, m.h1, m.schedule, IntegratorKind::pf1(), h, grid);
  const auto track = track_eigenpaths(build_walk_family(gen, grid), PathSelector::ground_phase());
  row.gap_w = track_gap_profile(track).min_fixed;
  return row;
}

std::vector<GapTableRow> gap_table(ToyKind kind, const std::vector<double>& eps_list, std::size_t grid, double h) {
  std::vector<GapTableRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) rows.push_back(gap_table_row(kind, eps, grid, h));
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.eps > b.eps; });
  return rows;
}

namespace {

FidelityRow fidelity_cell(const ToyModel& m, const Vector& initial, const Matrix& basis, double t, double h) {
  if (!(t > 0.0) || !(h > 0.0)) throw InputError("T and h must be positive");
  const auto steps = static_cast<std::size_t>(std::llround(t / h));
  if (steps == 0) throw InputError("T/h must be at least one step");
  const WalkGenerator gen(m.h0, m.h1, m.schedule, IntegratorKind::pf1(), h);
  return {t, h, steps, evolve_streaming(gen, steps, initial, basis, {0})};
}

std::vector<FidelityRow> fidelity_impl(double eps, const std::vector<double>& t_list,
                                       const std::vector<double>& h_list, bool parallel) {
  const auto m = build_toy({ToyKind::Toy2, eps});
  const Vector initial = ordered_eigenbasis(m.h0).column(0);
  const Matrix basis = ordered_eigenbasis(m.h1);
  std::vector<std::pair<double, double>> cells;
  for (double t : t_list)
    for (double h : h_list) cells.emplace_back(t, h);
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  std::vector<FidelityRow> rows(cells.size());
  auto run = [&](std::size_t c) { rows[c] = fidelity_cell(m, initial, basis, cells[c].first, cells[c].second); };
  if (parallel)
    parallel_for(cells.size(), run);
  else
    for (std::size_t c = 0; c < cells.size(); ++c) run(c);
  return rows;
}

}  // namespace

std::vector<FidelityRow> fidelity_sweep(double eps, const std::vector<double>& t_list,
                                        const std::vector<double>& h_list) {
  return fidelity_impl(eps, t_list, h_list, true);
}

std::vector<FidelityRow> fidelity_sweep_serial(double eps, const std::vector<double>& t_list,
                                               const std::vector<double>& h_list) {
  return fidelity_impl(eps, t_list, h_list, false);
}

}  // namespace adiawalk
