#include "adiawalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>

#include "adiawalk/errors.hpp"
#include "adiawalk/parallel.hpp"

namespace adiawalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOverlapFloor = 0.5;
constexpr double kZeroGap = 1e-14;

std::string provenance_of(const WalkGenerator& gen) {
  return gen.kind().tag() + "/" + gen.schedule().tag();
}

}  // namespace

WalkFamily build_walk_family(const WalkGenerator& gen, std::size_t steps) {
  if (steps == 0) throw InputError("T_d must be positive");
  WalkFamily fam{steps, gen.step_size(), std::vector<UnitaryOperator>(steps + 1), provenance_of(gen)};
  parallel_for(steps + 1, [&](std::size_t j) { fam.walks[j] = gen.at(double(j) / double(steps)); });
  return fam;
}

WalkFamily build_walk_family_serial(const WalkGenerator& gen, std::size_t steps) {
  if (steps == 0) throw InputError("T_d must be positive");
  WalkFamily fam{steps, gen.step_size(), {}, provenance_of(gen)};
  fam.walks.reserve(steps + 1);
  for (std::size_t j = 0; j <= steps; ++j) fam.walks.push_back(gen.at(double(j) / double(steps)));
  return fam;
}

WalkFamily make_walk_family(std::vector<UnitaryOperator> walks, double h, std::string provenance) {
  if (walks.size() < 2) throw InputError("a walk family needs at least two operators");
  const std::size_t n = walks.front().dim();
  for (const auto& w : walks)
    if (w.dim() != n) throw InputError("walk dimensions differ");
  return WalkFamily{walks.size() - 1, h, std::move(walks), std::move(provenance)};
}

std::vector<NormalEigenDecomposition> decompose_family(const WalkFamily& family) {
  std::vector<NormalEigenDecomposition> out(family.walks.size());
  parallel_for(out.size(), [&](std::size_t j) { out[j] = normal_eig(family.walks[j]); });
  return out;
}

std::vector<NormalEigenDecomposition> decompose_family_serial(const WalkFamily& family) {
  std::vector<NormalEigenDecomposition> out;
  out.reserve(family.walks.size());
  for (const auto& w : family.walks) out.push_back(normal_eig(w));
  return out;
}

bool EigenpathTrack::in_p(std::size_t p) const {
  return std::find(p_group.begin(), p_group.end(), p) != p_group.end();
}

double EigenpathTrack::distance(std::size_t ja, std::size_t pa, std::size_t jb, std::size_t pb) const {
  if (circular) return angular_distance(eigenvalue(ja, pa), eigenvalue(jb, pb));
  return std::abs(eigenvalue(ja, pa).real() - eigenvalue(jb, pb).real());
}

EigenpathTrack track_decompositions(const std::vector<NormalEigenDecomposition>& decomps,
                                    const PathSelector& selector, bool circular) {
  if (decomps.size() < 2) throw InputError("tracking needs at least two steps");
  const std::size_t n = decomps.front().dim();
  EigenpathTrack t;
  t.steps = decomps.size() - 1;
  t.dim = n;
  t.circular = circular;
  t.phases.resize(decomps.size() * n);
  t.eigenvalues.resize(decomps.size() * n);
  t.vectors.resize(decomps.size());

  auto raw_phase = [circular](Complex z) { return circular ? eigenphase(z) : z.real(); };

  t.vectors[0] = decomps[0].eigenvectors;
  for (std::size_t p = 0; p < n; ++p) {
    t.eigenvalues[p] = decomps[0].eigenvalues[p];
    t.phases[p] = raw_phase(decomps[0].eigenvalues[p]);
  }
  if (selector.ground) {
    t.p_group = {0};
  } else {
    t.p_group = selector.indices;
    std::sort(t.p_group.begin(), t.p_group.end());
    t.p_group.erase(std::unique(t.p_group.begin(), t.p_group.end()), t.p_group.end());
    if (t.p_group.empty() || t.p_group.size() >= n || t.p_group.back() >= n)
      throw InputError("selected path group must be a nonempty proper subset");
  }

  struct Candidate {
    double overlap;
    double dist;
    std::size_t path, slot;
  };
  std::vector<Candidate> cand;
  cand.reserve(n * n);
  std::vector<char> path_done(n), slot_done(n);

  for (std::size_t j = 1; j < decomps.size(); ++j) {
    const auto& d = decomps[j];
    if (d.dim() != n) throw InputError("decomposition dimensions differ");
    cand.clear();
    for (std::size_t p = 0; p < n; ++p) {
      const Vector prev = t.vectors[j - 1].column(p);
      const Complex zp = t.eigenvalues[(j - 1) * n + p];
      for (std::size_t b = 0; b < n; ++b) {
        const Vector next = d.eigenvectors.column(b);
        const double ov = std::norm(inner(prev, next));
        const double dist = circular ? angular_distance(zp, d.eigenvalues[b])
                                     : std::abs(zp.real() - d.eigenvalues[b].real());
        cand.push_back({ov, dist, p, b});
      }
    }
    std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
      if (std::abs(a.overlap - b.overlap) > 1e-12) return a.overlap > b.overlap;
      if (a.dist != b.dist) return a.dist < b.dist;
      return std::make_pair(a.path, a.slot) < std::make_pair(b.path, b.slot);
    });
    std::fill(path_done.begin(), path_done.end(), 0);
    std::fill(slot_done.begin(), slot_done.end(), 0);
    t.vectors[j] = Matrix(n);
    for (const auto& c : cand) {
      if (path_done[c.path] || slot_done[c.slot]) continue;
      if (std::sqrt(c.overlap) < kOverlapFloor)
        throw TrackingAmbiguityError("eigenpath matching ambiguous at step " + std::to_string(j), j);
      path_done[c.path] = slot_done[c.slot] = 1;
      // Align the vector phase with the previous step.
      Vector v = d.eigenvectors.column(c.slot);
      const Complex ov = inner(t.vectors[j - 1].column(c.path), v);
      const Complex g = std::conj(ov) / std::abs(ov);
      for (auto& x : v) x *= g;
      t.vectors[j].set_column(c.path, v);
      const Complex z = d.eigenvalues[c.slot];
      t.eigenvalues[j * n + c.path] = z;
      const double prev = t.phases[(j - 1) * n + c.path];
      double ph = raw_phase(z);
      if (circular) ph = prev + std::remainder(ph - prev, kTwoPi);
      t.phases[j * n + c.path] = ph;
    }
  }
  return t;
}

EigenpathTrack track_eigenpaths(const WalkFamily& family, const PathSelector& selector) {
  return track_decompositions(decompose_family(family), selector, true);
}

EigenpathTrack hamiltonian_track(const HermitianOperator& h0, const HermitianOperator& h1, const Schedule& sched,
                                 std::size_t grid, const PathSelector& selector) {
  if (grid < 2) throw InputError("grid must be at least 2");
  std::vector<NormalEigenDecomposition> decomps(grid + 1);
  parallel_for(grid + 1, [&](std::size_t j) {
    decomps[j] = hermitian_eig(interpolated_hamiltonian(h0, h1, sched.f(double(j) / double(grid))));
  });
  return track_decompositions(decomps, selector, false);
}

namespace {

double window_gap(const EigenpathTrack& t, std::size_t j0, std::size_t j1) {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t a = j0; a <= j1; ++a)
    for (std::size_t b = j0; b <= j1; ++b)
      for (std::size_t p = 0; p < t.dim; ++p) {
        if (!t.in_p(p)) continue;
        for (std::size_t q = 0; q < t.dim; ++q) {
          if (t.in_p(q)) continue;
          g = std::min(g, t.distance(a, p, b, q));
        }
      }
  return g < kZeroGap ? 0.0 : g;
}

double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

GapProfile track_gap_profile(const EigenpathTrack& track) {
  GapProfile g;
  g.s.resize(track.steps + 1);
  g.fixed.resize(track.steps + 1);
  for (std::size_t j = 0; j <= track.steps; ++j) {
    g.s[j] = double(j) / double(track.steps);
    g.fixed[j] = window_gap(track, j, j);
  }
  g.min_fixed = min_of(g.fixed);
  return g;
}

GapProfile hamiltonian_gap_profile(const HermitianOperator& h0, const HermitianOperator& h1, const Schedule& sched,
                                   std::size_t grid, const PathSelector& selector) {
  return track_gap_profile(hamiltonian_track(h0, h1, sched, grid, selector));
}

GapProfile walk_gap_profile(const EigenpathTrack& track) {
  GapProfile g = track_gap_profile(track);
  g.has_multistep = true;
  const std::size_t last = track.steps;
  for (std::size_t k = 0; k < 3; ++k) {
    g.multistep[k].resize(last + 1);
    if (k == 0) {
      g.multistep[0] = g.fixed;
    } else {
      std::vector<double>& m = g.multistep[k];
      parallel_for(last + 1, [&](std::size_t j) { m[j] = window_gap(track, j, std::min(last, j + k)); });
    }
    g.min_multistep[k] = min_of(g.multistep[k]);
  }
  return g;
}

void write_gap_profile_csv(std::ostream& os, const GapProfile& profile) {
  os << "s,fixed_gap,delta0,delta1,delta2\n";
  os << std::setprecision(17);
  for (std::size_t j = 0; j < profile.s.size(); ++j) {
    os << profile.s[j] << ',' << profile.fixed[j];
    for (std::size_t k = 0; k < 3; ++k) {
      os << ',';
      if (profile.has_multistep) os << profile.multistep[k][j];
    }
    os << '\n';
  }
}

double ground_walk_gap(const UnitaryOperator& w) {
  const auto d = normal_eig(w);
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < d.dim(); ++k) g = std::min(g, angular_distance(d.eigenvalues[0], d.eigenvalues[k]));
  return g;
}

double ground_hamiltonian_gap(const HermitianOperator& h) {
  const auto d = hermitian_eig(h);
  return d.eigenvalues.at(1).real() - d.eigenvalues[0].real();
}

double finite_difference_norm(const WalkFamily& family, int k, std::size_t j) {
  if (k < 1 || k > 3) throw InputError("difference order must be 1, 2 or 3");
  if (j + std::size_t(k) > family.steps) throw InputError("finite difference runs past the last step");
  static constexpr int binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  Matrix acc(family.dim());
  for (int i = 0; i <= k; ++i) {
    const double c = ((k - i) % 2 ? -1.0 : 1.0) * binom[k][i];
    acc += family.walks[j + i].matrix() * Complex(c);
  }
  return operator_norm(acc);
}

StepCoefficients measured_step_coefficients(const WalkFamily& family) {
  const std::size_t td = family.steps;
  StepCoefficients c;
  c.c1.assign(td + 1, 0.0);
  c.c2.assign(td + 1, 0.0);
  const double t1 = double(td), t2 = t1 * t1;
  parallel_for(td + 1, [&](std::size_t j) {
    if (j + 1 <= td) c.c1[j] = t1 * finite_difference_norm(family, 1, j);
    if (j + 2 <= td) c.c2[j] = t2 * finite_difference_norm(family, 2, j);
  });
  if (td >= 1) c.c1[td] = c.c1[td - 1];
  if (td >= 2) c.c2[td] = c.c2[td - 1] = c.c2[td - 2];
  return c;
}

GapInterval gap_perturbation_bounds(const HermitianOperator& h0, const HermitianOperator& h1, const Schedule& sched,
                                    double s, double h) {
  const double alpha = operator_norm(h0.matrix()) + operator_norm(h1.matrix());
  if (!(h > 0.0) || h > (1.0 + 1e-12) / alpha)
    throw InputError("step size exceeds 1/(||H0|| + ||H1||); the perturbation bound does not apply");
  const double gap = ground_hamiltonian_gap(interpolated_hamiltonian(h0, h1, sched.f(s)));
  const double width = h * h * h / 95.0 * second_order_commutator_norm(h0, h1);
  return {h * gap - width, h * gap + width};
}

GapInterval gap_perturbation_bounds_order(const HermitianOperator& h0, const HermitianOperator& h1,
                                          const Schedule& sched, double s, double h, int p, double c) {
  const double alpha = operator_norm(h0.matrix()) + operator_norm(h1.matrix());
  if (!(h > 0.0) || h > (1.0 + 1e-12) / alpha)
    throw InputError("step size exceeds 1/(||H0|| + ||H1||); the perturbation bound does not apply");
  const double gap = ground_hamiltonian_gap(interpolated_hamiltonian(h0, h1, sched.f(s)));
  const double width = std::numbers::pi * c * std::pow(h, p + 1) * nested_commutator_sum(h0, h1, p);
  return {h * gap - width, h * gap + width};
}

AdiabaticBound discrete_adiabatic_bound(const GapProfile& gaps, const std::vector<double>& c1,
                                        const std::vector<double>& c2, std::size_t steps) {
  if (!gaps.has_multistep) throw InputError("discrete adiabatic bound needs multistep gaps");
  const auto& d2 = gaps.multistep[2];
  if (d2.size() != steps + 1 || c1.size() != steps + 1 || c2.size() != steps + 1)
    throw InputError("per-step arrays must have T_d + 1 entries");
  auto neighbors = [&](std::size_t j, auto pick, const std::vector<double>& v) {
    double r = v[j];
    if (j > 0) r = pick(r, v[j - 1]);
    if (j < steps) r = pick(r, v[j + 1]);
    return r;
  };
  auto chk = [&](std::size_t j) {
    return neighbors(j, [](double a, double b) { return std::min(a, b); }, d2);
  };
  auto hat = [&](std::size_t j, const std::vector<double>& v) {
    return neighbors(j, [](double a, double b) { return std::max(a, b); }, v);
  };
  const double td = double(steps);
  AdiabaticBound out;
  double sup = 0.0;
  for (std::size_t j = 0; j <= steps; ++j) sup = std::max(sup, 4.0 * hat(j, c1) / chk(j));
  out.required_steps = sup;
  out.precondition_met = td >= sup;
  double acc = hat(0, c1) / std::pow(chk(0), 2) + hat(steps, c1) / std::pow(chk(steps), 2);
  for (std::size_t j = 0; j < steps; ++j) {
    const double g = chk(j);
    acc += hat(j, c1) * hat(j, c1) / (td * g * g * g) + hat(j, c2) / (td * g * g);
  }
  out.value = acc / td;
  return out;
}

}  // namespace adiawalk
