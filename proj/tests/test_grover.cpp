#include <gtest/gtest.h>

#include <cmath>

#include "adiawalk/errors.hpp"
#include "adiawalk/grover.hpp"
#include "support/oracles.hpp"

using namespace adiawalk;

TEST(GroverInstance, Validation) {
  EXPECT_THROW(GroverInstance({1, 1}).validate(), InputError);
  EXPECT_THROW(GroverInstance({16, 0}).validate(), InputError);
  EXPECT_THROW(GroverInstance({16, 9}).validate(), InputError);
  EXPECT_NO_THROW(GroverInstance({16, 8}).validate());
}

TEST(EffectiveModel, ProjectorsAndGroundStates) {
  const GroverInstance inst{64, 3};
  const auto [h0, h1] = effective_hamiltonians(inst);
  EXPECT_LT(oracle::max_diff(oracle::mul(h0.matrix(), h0.matrix()), h0.matrix()), 1e-15);
  const Vector u = grover_initial_state(inst);
  EXPECT_NEAR(norm(u), 1.0, 1e-15);
  const Vector hu = h0.matrix() * u;
  EXPECT_LT(std::abs(hu[0]) + std::abs(hu[1]), 1e-15);
  EXPECT_EQ(h1.matrix()(0, 0), Complex(0.0));
  EXPECT_EQ(h1.matrix()(1, 1), Complex(1.0));
}

TEST(EffectiveModel, HamiltonianGapClosedForm) {
  const GroverInstance inst{256, 4};
  const auto [h0, h1] = effective_hamiltonians(inst);
  for (int k = 0; k <= 100; ++k) {
    const double f = k / 100.0;
    const auto r = oracle::sorted_real_roots(interpolated_hamiltonian(h0, h1, f).matrix());
    EXPECT_NEAR(gap_closed_forms(inst, f).gap_h, r[1] - r[0], 1e-12) << f;
  }
  EXPECT_NEAR(gap_closed_forms({1024, 1}, 0.5).gap_h, 1.0 / 32.0, 1e-15);
}

TEST(EffectiveModel, WalkGapClosedFormOnFineGrid) {
  for (const GroverInstance inst : {GroverInstance{64, 1}, GroverInstance{1024, 16}}) {
    const auto [h0, h1] = effective_hamiltonians(inst);
    const WalkGenerator gen(h0, h1, Schedule::linear(), IntegratorKind::pf1(), 1.0);
    for (int k = 0; k <= 1000; ++k) {
      const double f = k / 1000.0;
      const auto g = gap_closed_forms(inst, f);
      EXPECT_NEAR(g.gap_w, oracle::ground_phase_gap(gen.matrix_at(f)), 1e-10) << inst.n << " " << f;
      EXPECT_GE(g.gap_w, 2.0 / 3.0 * g.gap_h) << inst.n << " " << f;
    }
  }
}

TEST(EffectiveModel, WalkEigenvaluesClosedForm) {
  const GroverInstance inst{128, 5};
  const auto [h0, h1] = effective_hamiltonians(inst);
  const WalkGenerator gen(h0, h1, Schedule::linear(), IntegratorKind::pf1(), 1.0);
  for (double f : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const auto [a, b] = walk_eigenvalues_closed_form(inst, f);
    const auto c = oracle::characteristic_polynomial(gen.matrix_at(f));
    // Monic quadratic: trace and determinant.
    EXPECT_LT(std::abs(-c[1] - (a + b)), 1e-13) << f;
    EXPECT_LT(std::abs(c[0] - a * b), 1e-13) << f;
  }
}

TEST(Search, MatchesGenericWalk) {
  const GroverInstance inst{256, 2};
  const auto sched = build_grover_schedule(256, 1.0);
  const auto [h0, h1] = effective_hamiltonians(inst);
  const WalkGenerator gen(h0, h1, sched, IntegratorKind::pf1(), 1.0);
  const auto ref = evolve_streaming(gen, 300, grover_initial_state(inst), Matrix::identity(2), {0});
  const auto run = run_search(inst, sched, 300, true);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_LT(std::abs(run.result.final_state[i] - ref.final_state[i]), 1e-12);
  EXPECT_NEAR(run.error, std::abs(ref.final_state[1]), 1e-12);
  EXPECT_EQ(run.result.trajectory.size(), 301u);
  EXPECT_EQ(run.below_theory_threshold, 300.0 < 12.0 * grover_d_constant(256, 1.0));
}

TEST(Search, LongRunsFindTheMarkedItem) {
  const GroverInstance inst{1024, 1};
  const auto sched = build_grover_schedule(1024, 1.0);
  EXPECT_GT(run_search(inst, sched, 20).error, 0.5);
  EXPECT_LT(run_search(inst, sched, 4000).error, 0.05);
}

TEST(Qaoa, AnglesFollowSchedule) {
  const auto sched = Schedule::glue();
  const auto a = qaoa_angles(sched, 50);
  ASSERT_EQ(a.betas.size(), 50u);
  for (std::size_t j = 0; j < 50; ++j) {
    EXPECT_DOUBLE_EQ(a.gammas[j], sched.f(j / 50.0));
    EXPECT_DOUBLE_EQ(a.betas[j] + a.gammas[j], 1.0);
  }
  EXPECT_THROW(qaoa_angles(sched, 0), InputError);
}

TEST(Qaoa, ReplayIsBitIdenticalToSearch) {
  const GroverInstance inst{1024, 1};
  for (const auto& sched : {build_grover_schedule(1024, 1.0), Schedule::boundary_cancellation()}) {
    const auto replay = replay_qaoa(inst, qaoa_angles(sched, 200));
    const auto run = run_search(inst, sched, 200);
    EXPECT_EQ(replay, run.result.final_state);
  }
  QaoaAngleSet bad{{0.1, 0.2}, {0.3}};
  EXPECT_THROW(replay_qaoa(inst, bad), InputError);
}

TEST(Scaling, MinimalStepsBracketsTheTarget) {
  const GroverInstance inst{256, 1};
  const GroverScheduleSpec spec{GroverScheduleKind::Power, 1.0};
  const auto sched = spec.build(256);
  const auto row = minimal_steps(inst, sched, spec, 0.1);
  ASSERT_TRUE(row.reached);
  EXPECT_LE(run_search(inst, sched, row.t_required).error, 0.1);
  EXPECT_GT(run_search(inst, sched, row.t_required - 1).error, 0.1);
  EXPECT_NEAR(row.normalized_ratio, row.t_required / (16.0 * std::log(256.0)), 1e-12);
  EXPECT_THROW(minimal_steps(inst, sched, spec, 1.5), InputError);
  const auto capped = minimal_steps(inst, sched, spec, 0.1, 8);
  EXPECT_FALSE(capped.reached);
}

TEST(Scaling, ParallelMatchesSerial) {
  const GroverScheduleSpec spec{GroverScheduleKind::Power, 1.0};
  const auto a = scaling_experiment({2, 1}, {256, 64}, spec, 0.1);
  const auto b = scaling_experiment_serial({1, 2}, {64, 256}, spec, 0.1);
  ASSERT_EQ(a.size(), 4u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].n, b[i].n);
    EXPECT_EQ(a[i].m, b[i].m);
    EXPECT_EQ(a[i].t_required, b[i].t_required);
    EXPECT_EQ(a[i].normalized_ratio, b[i].normalized_ratio);
  }
  EXPECT_EQ(a[0].n, 64u);
  EXPECT_EQ(a[0].m, 1u);
}

TEST(Scaling, ScheduleTags) {
  EXPECT_EQ((GroverScheduleSpec{GroverScheduleKind::Power, 1.0}).tag(), "p1");
  EXPECT_EQ((GroverScheduleSpec{GroverScheduleKind::BoundaryCancellation, 1.0}).tag(), "bc");
  EXPECT_EQ((GroverScheduleSpec{GroverScheduleKind::Linear, 1.0}).tag(), "linear");
}
