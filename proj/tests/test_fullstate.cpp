#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hgrover/fullstate.hpp"
#include "hgrover/grover.hpp"

using namespace hgrover;

TEST(EqualSuperposition, Values) {
  const StateVector s4 = equal_superposition(4);
  for (Eigen::Index i = 0; i < 4; ++i) EXPECT_EQ(s4(i), std::complex<double>(0.5, 0.0));
  const StateVector s2 = equal_superposition(2);
  EXPECT_NEAR(s2(0).real(), 1 / std::sqrt(2.0), 1e-16);
  const StateVector s9 = equal_superposition(9);
  EXPECT_NEAR(s9(8).real(), 1.0 / 3, 1e-16);
  EXPECT_NEAR(s9.norm(), 1.0, 1e-15);
}

TEST(SolutionSet, Validation) {
  EXPECT_THROW(SolutionSet({}, 4), std::invalid_argument);
  EXPECT_THROW(SolutionSet({0, 1, 2, 3}, 4), std::invalid_argument);
  EXPECT_THROW(SolutionSet({1, 1}, 4), std::invalid_argument);
  EXPECT_THROW(SolutionSet({4}, 4), std::invalid_argument);
  const SolutionSet s({3, 0}, 5);
  EXPECT_EQ(s.indices(), (std::vector<int>{0, 3}));
  EXPECT_EQ(s.size(), 2);
}

TEST(Householder, Examples) {
  const StateVector axis = equal_superposition(6);
  const StateVector r = apply_generalized_householder(axis, axis, kPi);
  EXPECT_NEAR((r + axis).norm(), 0.0, 1e-15);

  StateVector s(3);
  s << std::complex<double>(0.6, 0.0), std::complex<double>(0.0, 0.8), 0.0;
  const StateVector u = solution_superposition(SolutionSet({0, 2}, 3));
  const StateVector twice = apply_generalized_householder(apply_generalized_householder(s, u, kPi), u, kPi);
  EXPECT_NEAR((twice - s).norm(), 0.0, 1e-12);
  EXPECT_NEAR((apply_generalized_householder(s, u, 0.0) - s).norm(), 0.0, 0.0);
}

TEST(Householder, RejectsBadAxis) {
  const StateVector s = equal_superposition(4);
  EXPECT_THROW(apply_generalized_householder(s, 2.0 * s, 1.0), std::invalid_argument);
  EXPECT_THROW(apply_generalized_householder(s, equal_superposition(5), 1.0), std::invalid_argument);
}

TEST(Householder, Unitary) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int t = 0; t < 200; ++t) {
    StateVector s(16), u(16);
    for (Eigen::Index i = 0; i < 16; ++i) {
      s(i) = {g(rng), g(rng)};
      u(i) = {g(rng), g(rng)};
    }
    s.normalize();
    u.normalize();
    ASSERT_NEAR(apply_generalized_householder(s, u, angle(rng)).norm(), 1.0, 1e-12);
  }
}

TEST(RunFull, Examples) {
  const auto std_grover = PhaseSchedule::make(ScheduleKind::OPH, kPi, kPi);
  EXPECT_NEAR(run_full(ProblemSpec(4), SolutionSet::first(1, 4), std_grover), 1.0, 1e-12);
  EXPECT_NEAR(run_full(ProblemSpec(9), SolutionSet::first(1, 9), std_grover), 0.98359, 5e-4);
  EXPECT_THROW(run_full(ProblemSpec(9), SolutionSet::first(2, 9), std_grover), std::invalid_argument);
}

TEST(RunFull, MatchesReducedForSeveralSolutions) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const ProblemSpec spec(12, 3);
  for (ScheduleKind kind : kStudiedSchedules) {
    for (int t = 0; t < 20; ++t) {
      const auto s = PhaseSchedule::make(kind, angle(rng), angle(rng));
      ASSERT_NEAR(run_full(spec, SolutionSet({2, 5, 11}, 12), s), run(spec, s), 1e-10);
    }
  }
}

TEST(RunFull, CustomScheduleMatchesReduced) {
  const ProblemSpec spec(20, 2);
  const auto s = PhaseSchedule::custom({{0.3, 1.9}, {4.0, 2.2}, {5.5, 0.1}});
  EXPECT_NEAR(run_full(spec, SolutionSet::first(2, 20), s), run(spec, s, 3), 1e-12);
}

TEST(RunFull, InvariantUnderSolutionRelabeling) {
  const ProblemSpec spec(16, 3);
  const auto s = PhaseSchedule::make(ScheduleKind::ACBP, 2.0, 1.1);
  const double reference = run_full(spec, SolutionSet::first(3, 16), s);
  std::mt19937_64 rng(4);
  std::vector<int> order(16);
  std::iota(order.begin(), order.end(), 0);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    const SolutionSet marked({order[0], order[1], order[2]}, 16);
    ASSERT_NEAR(run_full(spec, marked, s), reference, 1e-12);
  }
}
