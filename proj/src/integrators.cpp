#include "adiawalk/integrators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "adiawalk/errors.hpp"

namespace adiawalk {

IntegratorKind IntegratorKind::spf(int order) {
  if (order != 1 && order != 2 && order != 4 && order != 6 && order != 8)
    throw InputError("SPF order must be one of 1, 2, 4, 6, 8");
  return {IntegratorFamily::SPF, order, false};
}

std::string IntegratorKind::tag() const {
  switch (family) {
    case IntegratorFamily::Exp: return "exp";
    case IntegratorFamily::PF1: return "pf1";
    case IntegratorFamily::PF2: return midpoint ? "pf2" : "pf2-simplified";
    case IntegratorFamily::SPF: return "spf" + std::to_string(order);
  }
  return "unknown";
}

IntegratorKind IntegratorKind::parse(const std::string& tag) {
  if (tag == "exp") return exp();
  if (tag == "pf1") return pf1();
  if (tag == "pf2") return pf2(true);
  if (tag == "pf2-simplified") return pf2(false);
  if (tag.size() == 4 && tag.rfind("spf", 0) == 0 && std::isdigit(static_cast<unsigned char>(tag[3])))
    return spf(tag[3] - '0');
  throw InputError("unknown integrator tag '" + tag + "'");
}

double SplittingCoefficients::alpha_sum() const {
  double s = 0.0;
  for (const auto& st : stages) s += st.alpha;
  return s;
}

double SplittingCoefficients::beta_sum() const {
  double s = 0.0;
  for (const auto& st : stages) s += st.beta;
  return s;
}

namespace {

struct Factor {
  int op;  // 0: H0 part, 1: H1 part
  double coef;
};

std::vector<Factor> suzuki_factors(int order, double x) {
  if (order == 2) return {{0, 0.5 * x}, {1, x}, {0, 0.5 * x}};
  const int k = order / 2;
  const double u = 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * k - 1.0)));
  const auto outer = suzuki_factors(order - 2, u * x);
  const auto middle = suzuki_factors(order - 2, (1.0 - 4.0 * u) * x);
  std::vector<Factor> out;
  for (int r = 0; r < 2; ++r) out.insert(out.end(), outer.begin(), outer.end());
  out.insert(out.end(), middle.begin(), middle.end());
  for (int r = 0; r < 2; ++r) out.insert(out.end(), outer.begin(), outer.end());
  return out;
}

}  // namespace

SplittingCoefficients suzuki_coefficients(int order) {
  SplittingCoefficients c;
  if (order == 1) {
    c.stages.push_back({1.0, 1.0});
    return c;
  }
  if (order != 2 && order != 4 && order != 6 && order != 8)
    throw InputError("Suzuki order must be one of 2, 4, 6, 8");
  std::vector<Factor> merged;
  for (const auto& f : suzuki_factors(order, 1.0)) {
    if (!merged.empty() && merged.back().op == f.op)
      merged.back().coef += f.coef;
    else
      merged.push_back(f);
  }
  std::size_t i = 0;
  while (i < merged.size()) {
    SplittingStage st;
    if (merged[i].op == 1) st.beta = merged[i++].coef;
    if (i < merged.size() && merged[i].op == 0) st.alpha = merged[i++].coef;
    c.stages.push_back(st);
  }
  return c;
}

HermitianOperator interpolated_hamiltonian(const HermitianOperator& h0, const HermitianOperator& h1, double f) {
  return HermitianOperator((1.0 - f) * h0.matrix() + f * h1.matrix());
}

WalkGenerator::WalkGenerator(HermitianOperator h0, HermitianOperator h1, Schedule sched, IntegratorKind kind,
                             double h, std::size_t steps)
    : h0_(std::move(h0)), h1_(std::move(h1)), sched_(std::move(sched)), kind_(kind), h_(h), steps_(steps) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InputError("step size h must be positive");
  if (h0_.dim() != h1_.dim() || h0_.dim() == 0) throw InputError("H0 and H1 dimensions differ");
  if (kind_.family == IntegratorFamily::PF2 && kind_.midpoint && steps_ == 0)
    throw InputError("midpoint PF2 needs the number of steps");
  eig0_ = hermitian_eig(h0_);
  eig1_ = hermitian_eig(h1_);
  switch (kind_.family) {
    case IntegratorFamily::Exp: break;
    case IntegratorFamily::PF1: coeffs_ = suzuki_coefficients(1); break;
    case IntegratorFamily::PF2: coeffs_ = suzuki_coefficients(2); break;
    case IntegratorFamily::SPF: coeffs_ = suzuki_coefficients(kind_.order); break;
  }
}

double WalkGenerator::schedule_value(double s) const {
  if (kind_.family == IntegratorFamily::PF2 && kind_.midpoint)
    return sched_.f(std::min(1.0, s + 0.5 / double(steps_)));
  return sched_.f(s);
}

Matrix WalkGenerator::factor(int op, double theta) const {
  const auto& e = op == 0 ? eig0_ : eig1_;
  std::vector<Complex> ph(e.dim());
  for (std::size_t k = 0; k < e.dim(); ++k) ph[k] = std::polar(1.0, -theta * e.eigenvalues[k].real());
  return NormalEigenDecomposition{ph, e.eigenvectors}.reconstruct();
}

void WalkGenerator::apply_factor(int op, double theta, Vector& psi) const {
  if (theta == 0.0) return;
  const auto& e = op == 0 ? eig0_ : eig1_;
  const std::size_t n = e.dim();
  Vector c(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(e.eigenvectors(i, k)) * psi[i];
    c[k] = acc * std::polar(1.0, -theta * e.eigenvalues[k].real());
  }
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) acc += e.eigenvectors(i, k) * c[k];
    psi[i] = acc;
  }
}

Matrix WalkGenerator::matrix_at(double s) const {
  const double f = schedule_value(s);
  if (kind_.family == IntegratorFamily::Exp)
    return expm_i_hermitian(interpolated_hamiltonian(h0_, h1_, f), h_).matrix();
  Matrix w = Matrix::identity(dim());
  for (const auto& st : coeffs_.stages) {
    if (st.beta != 0.0) w = w * factor(1, st.beta * h_ * f);
    if (st.alpha != 0.0) w = w * factor(0, st.alpha * h_ * (1.0 - f));
  }
  return w;
}

UnitaryOperator WalkGenerator::at(double s) const { return UnitaryOperator(matrix_at(s)); }

void WalkGenerator::apply(double s, Vector& psi) const {
  if (psi.size() != dim()) throw InputError("state dimension mismatch");
  if (kind_.family == IntegratorFamily::Exp) {
    psi = matrix_at(s) * psi;
    return;
  }
  const double f = schedule_value(s);
  // Rightmost factor acts first.
  for (auto it = coeffs_.stages.rbegin(); it != coeffs_.stages.rend(); ++it) {
    apply_factor(0, it->alpha * h_ * (1.0 - f), psi);
    apply_factor(1, it->beta * h_ * f, psi);
  }
}

UnitaryOperator walk_operator(const HermitianOperator& h0, const HermitianOperator& h1, const Schedule& sched,
                              const IntegratorKind& kind, double h, double s, std::size_t steps) {
  return WalkGenerator(h0, h1, sched, kind, h, steps).at(s);
}

double nested_commutator_sum(const HermitianOperator& h0, const HermitianOperator& h1, int p) {
  if (p < 1 || p > 6) throw InputError("nested commutator order must lie in [1, 6]");
  const Matrix* ops[2] = {&h0.matrix(), &h1.matrix()};
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << (p + 1)); ++mask) {
    Matrix c = *ops[mask & 1u];
    for (int k = 1; k <= p; ++k) c = commutator(*ops[(mask >> k) & 1u], c);
    total += operator_norm(c);
  }
  return total;
}

double second_order_commutator_norm(const HermitianOperator& h0, const HermitianOperator& h1) {
  const Matrix& a = h0.matrix();
  const Matrix& b = h1.matrix();
  return 2.0 * operator_norm(commutator(b, commutator(b, a))) + operator_norm(commutator(a, commutator(a, b)));
}

ProblemConstants compute_problem_constants(const HermitianOperator& h0, const HermitianOperator& h1,
                                           const Schedule& sched, std::size_t grid, int order) {
  if (grid < 2) throw InputError("grid must be at least 2");
  ProblemConstants c;
  c.alpha = operator_norm(h0.matrix()) + operator_norm(h1.matrix());
  c.order = order;
  c.alpha_tilde = nested_commutator_sum(h0, h1, std::min(order, 6));
  c.second_order_commutators = second_order_commutator_norm(h0, h1);
  double gap = std::numeric_limits<double>::infinity();
  if (h0.dim() < 2) throw InputError("a gap needs at least two levels");
  for (std::size_t j = 0; j <= grid; ++j) {
    const auto d = hermitian_eig(interpolated_hamiltonian(h0, h1, sched.f(double(j) / grid)));
    gap = std::min(gap, d.eigenvalues[1].real() - d.eigenvalues[0].real());
  }
  c.delta_star = std::max(0.0, gap);
  return c;
}

double recommended_step_size(const ProblemConstants& c, const IntegratorKind& kind) {
  if (!(c.alpha > 0.0)) throw InputError("alpha must be positive");
  if (!(c.delta_star > 0.0)) throw GaplessError("Hamiltonian gap vanishes; no gap-based step size exists");
  const double h_exp = 1.0 / c.alpha;
  const int order = kind.family == IntegratorFamily::SPF ? kind.order : 1;
  switch (kind.family) {
    case IntegratorFamily::Exp: return h_exp;
    case IntegratorFamily::PF1:
    case IntegratorFamily::PF2: break;
    case IntegratorFamily::SPF:
      if (order > 2) {
        if (c.order != order) throw InputError("problem constants were computed for a different order");
        if (c.alpha_tilde == 0.0) return h_exp;
        return std::min(h_exp, std::pow(c.delta_star / c.alpha_tilde, 1.0 / order));
      }
      break;
  }
  if (c.second_order_commutators == 0.0) return h_exp;
  return std::min(h_exp, std::sqrt(95.0 / 2.0) * std::sqrt(c.delta_star / c.second_order_commutators));
}

}  // namespace adiawalk
