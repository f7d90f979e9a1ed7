#include "adiawalk/schedules.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "adiawalk/errors.hpp"

namespace adiawalk {

namespace {

using boost::math::quadrature::gauss;
using boost::math::quadrature::gauss_kronrod;

constexpr std::size_t kGlueCells = 1024;
constexpr std::size_t kGroverCells = 4096;  // cells in the substituted variable on [0, u_max]
constexpr double kTabulatedSpacing = 1e-5;

double glue_integrand(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  return std::exp(-1.0 / (u * (1.0 - u)));
}

double check_s(double s) {
  if (!(s >= -1e-12 && s <= 1.0 + 1e-12)) throw InputError("schedule argument outside [0, 1]");
  return std::clamp(s, 0.0, 1.0);
}

struct GlueTable {
  double ce = 0.0;
  std::array<double, kGlueCells + 1> cumulative{};
};

const GlueTable& glue_table() {
  static const GlueTable table = [] {
    GlueTable t;
    t.ce = glue_constant_ce();
    for (std::size_t k = 0; k < kGlueCells; ++k) {
      const double a = double(k) / kGlueCells, b = double(k + 1) / kGlueCells;
      t.cumulative[k + 1] = t.cumulative[k] + gauss<double, 20>::integrate(glue_integrand, a, b);
    }
    return t;
  }();
  return table;
}

double glue_value_lower(double s) {
  const auto& t = glue_table();
  const auto k = std::min<std::size_t>(std::size_t(s * kGlueCells), kGlueCells - 1);
  const double a = double(k) / kGlueCells;
  double v = t.cumulative[k];
  if (s > a) v += gauss<double, 20>::integrate(glue_integrand, a, s);
  return v / t.ce;
}

}  // namespace

double glue_constant_ce() {
  static const double ce =
      gauss_kronrod<double, 61>::integrate(glue_integrand, 0.0, 1.0, 15, 1e-12);
  return ce;
}

ScheduleSample glue_function(double s) {
  s = check_s(s);
  ScheduleSample out;
  out.f = s <= 0.5 ? glue_value_lower(s) : 1.0 - glue_value_lower(1.0 - s);
  if (s > 0.0 && s < 1.0) {
    const double w = s * (1.0 - s);
    out.df = glue_integrand(s) / glue_table().ce;
    out.d2f = out.df * (1.0 - 2.0 * s) / (w * w);
  }
  return out;
}

double grover_gap(double f, double n, double m) {
  const double r = m / n;
  const double a = 1.0 - 2.0 * f;
  return std::sqrt(a * a + 4.0 * r * f * (1.0 - f));
}

namespace {

// With x = f - 1/2 the gap is sqrt(A x^2 + B); x = sqrt(B/A) sinh(u) turns
// the integral of gap^{-p} dx into sqrt(B/A) B^{-p/2} times the integral of cosh^{1-p}(u) du.
struct GroverSubstitution {
  double a, b, x_scale, prefactor, u_max;
  explicit GroverSubstitution(double n, double p)
      : a(4.0 * (1.0 - 1.0 / n)),
        b(1.0 / n),
        x_scale(std::sqrt(b / a)),
        prefactor(x_scale * std::pow(b, -0.5 * p)),
        u_max(std::asinh(0.5 / x_scale)) {}
};

double cosh_power(double u, double p) { return p == 1.0 ? 1.0 : std::pow(std::cosh(u), 1.0 - p); }

double cosh_power_integral(double a, double b, double p) {
  if (p == 1.0) return b - a;
  return gauss<double, 20>::integrate([p](double u) { return cosh_power(u, p); }, a, b);
}

}  // namespace

double grover_d_constant(std::uint64_t n, double p) {
  if (n < 2) throw InputError("N must be at least 2");
  if (!(p >= 1.0 && p < 2.0)) throw InputError("power p must lie in [1, 2)");
  const double nd = double(n);
  if (p == 1.0) return std::sqrt(nd / (nd - 1.0)) * std::log(std::sqrt(nd) + std::sqrt(nd - 1.0));
  const GroverSubstitution sub(nd, p);
  auto integrand = [p](double u) { return cosh_power(u, p); };
  return 2.0 * sub.prefactor *
         gauss_kronrod<double, 31>::integrate(integrand, 0.0, sub.u_max, 15, 1e-12);
}

struct Schedule::Impl {
  ScheduleKind kind = ScheduleKind::Linear;
  std::uint64_t n = 0;
  double p = 1.0;
  double d = 1.0;
  // GroverPower: knots in the substituted variable u on [0, u_max] with cumulative integrals.
  // Tabulated: (s_k, f_k) as given.
  std::vector<double> knot_f;
  std::vector<double> knot_s;
  double x_scale = 0.0;
  double prefactor = 0.0;

  // f for s in (1/2, 1).
  double grover_upper(double s) const {
    const double target = (s - 0.5) * d / prefactor;
    double u;
    if (p == 1.0) {
      u = target;
    } else {
      auto it = std::upper_bound(knot_s.begin(), knot_s.end(), target);
      const std::size_t k = std::min<std::size_t>(std::size_t(it - knot_s.begin()), knot_s.size() - 1) - 1;
      double lo = knot_f[k], hi = knot_f[k + 1];
      const double rest = target - knot_s[k];
      u = lo + (hi - lo) * rest / (knot_s[k + 1] - knot_s[k]);
      for (int iter = 0; iter < 60; ++iter) {
        const double r = cosh_power_integral(knot_f[k], u, p) - rest;
        if (r > 0) hi = u; else lo = u;
        double next = u - r / cosh_power(u, p);
        if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
        const bool done = std::abs(next - u) <= 1e-15 * std::max(1.0, std::abs(u));
        u = next;
        if (done) break;
      }
    }
    return std::min(1.0, 0.5 + x_scale * std::sinh(u));
  }

  double grover_f(double s) const {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    if (s == 0.5) return 0.5;
    // Exact symmetry f(1 - s) = 1 - f(s).
    if (s < 0.5) return 1.0 - grover_upper(1.0 - s);
    return grover_upper(s);
  }

  double tabulated_f(double s) const {
    auto it = std::upper_bound(knot_s.begin(), knot_s.end(), s);
    if (it == knot_s.begin()) return knot_f.front();
    if (it == knot_s.end()) return knot_f.back();
    const std::size_t k = std::size_t(it - knot_s.begin()) - 1;
    const double t = (s - knot_s[k]) / (knot_s[k + 1] - knot_s[k]);
    return knot_f[k] + t * (knot_f[k + 1] - knot_f[k]);
  }
};

Schedule::Schedule() : impl_(std::make_shared<Impl>()) {}

Schedule Schedule::linear() { return Schedule(); }

Schedule Schedule::glue() {
  auto impl = std::make_shared<Impl>();
  impl->kind = ScheduleKind::Glue;
  glue_table();
  return Schedule(impl);
}

Schedule Schedule::boundary_cancellation() {
  auto impl = std::make_shared<Impl>();
  impl->kind = ScheduleKind::BoundaryCancellation;
  glue_table();
  return Schedule(impl);
}

Schedule Schedule::tabulated(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) throw InputError("tabulated schedule needs at least two points");
  std::sort(points.begin(), points.end());
  auto impl = std::make_shared<Impl>();
  impl->kind = ScheduleKind::Tabulated;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [s, f] = points[i];
    if (i > 0 && (s <= points[i - 1].first || f < points[i - 1].second))
      throw InputError("tabulated schedule must be strictly increasing in s and monotone in f");
    impl->knot_s.push_back(s);
    impl->knot_f.push_back(f);
  }
  if (std::abs(impl->knot_s.front()) > 1e-12 || std::abs(impl->knot_s.back() - 1.0) > 1e-12)
    throw InputError("tabulated schedule must span s in [0, 1]");
  if (std::abs(impl->knot_f.front()) > 1e-10 || std::abs(impl->knot_f.back() - 1.0) > 1e-10)
    throw InputError("tabulated schedule must satisfy f(0) = 0 and f(1) = 1");
  return Schedule(impl);
}

Schedule build_grover_schedule(std::uint64_t n, double p) {
  const double d_check = grover_d_constant(n, p);
  auto impl = std::make_shared<Schedule::Impl>();
  impl->kind = ScheduleKind::GroverPower;
  impl->n = n;
  impl->p = p;
  const GroverSubstitution sub(double(n), p);
  impl->x_scale = sub.x_scale;
  impl->prefactor = sub.prefactor;
  // knot_f holds u, knot_s the cumulative integral of cosh^{1-p} from 0.
  impl->knot_f.push_back(0.0);
  impl->knot_s.push_back(0.0);
  for (std::size_t k = 1; k <= kGroverCells; ++k) {
    const double u = sub.u_max * double(k) / kGroverCells;
    impl->knot_s.push_back(impl->knot_s.back() + cosh_power_integral(impl->knot_f.back(), u, p));
    impl->knot_f.push_back(u);
  }
  const double total = 2.0 * sub.prefactor * impl->knot_s.back();
  if (std::abs(total - d_check) > 1e-9 * d_check)
    throw NumericalError("Grover schedule normalization disagrees with quadrature");
  impl->d = total;
  return Schedule(impl);
}

ScheduleKind Schedule::kind() const { return impl_->kind; }

std::string Schedule::tag() const {
  switch (impl_->kind) {
    case ScheduleKind::Linear: return "linear";
    case ScheduleKind::GroverPower: return "grover-power";
    case ScheduleKind::Glue: return "glue";
    case ScheduleKind::BoundaryCancellation: return "boundary-cancellation";
    case ScheduleKind::Tabulated: return "tabulated";
  }
  return "unknown";
}

std::uint64_t Schedule::grover_n() const { return impl_->n; }
double Schedule::grover_p() const { return impl_->p; }
double Schedule::normalization() const { return impl_->d; }

std::vector<std::pair<double, double>> Schedule::tabulation() const {
  const Impl& m = *impl_;
  std::vector<std::pair<double, double>> out;
  if (m.kind == ScheduleKind::GroverPower) {
    for (std::size_t k = m.knot_s.size(); k-- > 1;) {
      const double s = 0.5 - m.prefactor * m.knot_s[k] / m.d;
      out.emplace_back(std::max(0.0, s), 1.0 - m.grover_upper(1.0 - s));
    }
    out.front() = {0.0, 0.0};
    for (std::size_t k = 0; k < m.knot_s.size(); ++k) {
      const double s = 0.5 + m.prefactor * m.knot_s[k] / m.d;
      out.emplace_back(std::min(1.0, s), k == 0 ? 0.5 : m.grover_upper(s));
    }
    out.back() = {1.0, 1.0};
    return out;
  }
  for (std::size_t k = 0; k < m.knot_s.size(); ++k) out.emplace_back(m.knot_s[k], m.knot_f[k]);
  return out;
}

ScheduleSample Schedule::eval(double s) const {
  s = check_s(s);
  const Impl& m = *impl_;
  switch (m.kind) {
    case ScheduleKind::Linear:
      return {s, 1.0, 0.0};
    case ScheduleKind::Glue:
      return glue_function(s);
    case ScheduleKind::BoundaryCancellation: {
      const bool lower = s <= 0.5;
      const auto g = glue_function(lower ? 2.0 * s : 2.0 * s - 1.0);
      return {lower ? 0.5 * g.f : 0.5 + 0.5 * g.f, g.df, 2.0 * g.d2f};
    }
    case ScheduleKind::GroverPower: {
      const double nd = double(m.n);
      const double f = m.grover_f(s);
      const double gap = grover_gap(f, nd);
      const double df = m.d * std::pow(gap, m.p);
      const double dgap = (-2.0 + 2.0 / nd) * (1.0 - 2.0 * f) / gap;
      const double d2f = m.p * m.d * m.d * std::pow(gap, 2.0 * m.p - 1.0) * dgap;
      return {f, df, d2f};
    }
    case ScheduleKind::Tabulated: {
      const double f = m.tabulated_f(s);
      const double a = std::max(0.0, s - kTabulatedSpacing), b = std::min(1.0, s + kTabulatedSpacing);
      const double fa = m.tabulated_f(a), fb = m.tabulated_f(b);
      const double df = (fb - fa) / (b - a);
      double d2f = 0.0;
      if (a < s && s < b) d2f = (fb - 2.0 * f + fa) / (kTabulatedSpacing * kTabulatedSpacing);
      return {f, df, d2f};
    }
  }
  return {};
}

ScheduleSample eval_schedule(const Schedule& sched, double s) { return sched.eval(s); }

nlohmann::json schedule_to_json(const Schedule& sched) {
  nlohmann::json j;
  j["kind"] = sched.tag();
  j["parameters"] = nlohmann::json::object();
  if (sched.kind() == ScheduleKind::GroverPower) {
    j["parameters"]["N"] = sched.grover_n();
    j["parameters"]["p"] = sched.grover_p();
  }
  if (sched.kind() == ScheduleKind::Tabulated) {
    auto& t = j["tabulation"] = nlohmann::json::array();
    for (const auto& [s, f] : sched.tabulation()) t.push_back({s, f});
  }
  return j;
}

Schedule schedule_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("schedule must be an object with a string 'kind'");
  for (const auto& [key, _] : j.items())
    if (key != "kind" && key != "parameters" && key != "tabulation")
      throw InputError("unknown schedule key '" + key + "'");
  const std::string kind = j["kind"];
  const nlohmann::json params = j.value("parameters", nlohmann::json::object());
  if (kind == "linear") return Schedule::linear();
  if (kind == "glue") return Schedule::glue();
  if (kind == "boundary-cancellation") return Schedule::boundary_cancellation();
  if (kind == "grover-power") {
    if (!params.contains("N")) throw InputError("grover-power schedule needs parameter N");
    for (const auto& [key, _] : params.items())
      if (key != "N" && key != "p") throw InputError("unknown schedule parameter '" + key + "'");
    return build_grover_schedule(params["N"].get<std::uint64_t>(), params.value("p", 1.0));
  }
  if (kind == "tabulated") {
    if (!j.contains("tabulation")) throw InputError("tabulated schedule needs a tabulation");
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : j["tabulation"]) {
      if (!row.is_array() || row.size() != 2) throw InputError("tabulation rows must be [s, f] pairs");
      pts.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    return Schedule::tabulated(std::move(pts));
  }
  throw InputError("unknown schedule kind '" + kind + "'");
}

}  // namespace adiawalk
