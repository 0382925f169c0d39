#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hgrover/hill.hpp"
#include "hgrover/problem.hpp"

using namespace hgrover;

namespace {

struct Curve {
  std::vector<double> x, y;
};

Curve hill_curve(const HillParams& hp, int count) {
  Curve c;
  for (int i = 0; i < count; ++i) {
    c.x.push_back(kTwoPi * i / (count - 1));
    c.y.push_back(hill_eval(c.x.back(), hp));
  }
  return c;
}

std::vector<SeriesPoint> series(auto&& f, int from = 7, int to = 110) {
  std::vector<SeriesPoint> out;
  for (int n = from; n <= to; ++n) out.push_back({n, f(static_cast<double>(n))});
  return out;
}

}  // namespace

TEST(HillEval, Examples) {
  EXPECT_DOUBLE_EQ(hill_eval(kPi, {2.5, 1.4, 7, kPi}), 2.5);
  for (const HillParams& hp : {HillParams{1, 2, 6, kPi}, HillParams{0.3, 0.1, 2.5, 1.0}}) {
    EXPECT_NEAR(hill_eval(hp.c + hp.k, hp), hp.b / 2, 1e-15);
    EXPECT_NEAR(hill_eval(hp.c - hp.k, hp), hp.b / 2, 1e-15);
  }
  const HillParams hp{1.7, 0.3, 7, 2.0};
  EXPECT_LE(hill_eval(hp.c + 10 * hp.k, hp), hp.b * 1e-7 / (1 + 1e-7));
}

TEST(HillEval, EvenAndDecreasing) {
  const HillParams hp{0.9, 1.2, 4.5, 3.0};
  double previous = hill_eval(hp.c, hp);
  for (int i = 1; i <= 400; ++i) {
    const double d = i / 128.0;  // exact offsets
    EXPECT_EQ(hill_eval(hp.c + d, hp), hill_eval(hp.c - d, hp));
    const double v = hill_eval(hp.c + d, hp);
    EXPECT_LT(v, previous);
    previous = v;
  }
}

TEST(HillGradient, MatchesFiniteDifferences) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ub(0.5, 1.5), uk(0.3, 2.5), un(1.5, 9.0), uc(2.5, 3.8),
      ux(0.0, kTwoPi);
  int checked = 0;
  while (checked < 100) {
    const HillParams hp{ub(rng), uk(rng), un(rng), uc(rng)};
    const double x = ux(rng);
    if (std::abs(x - hp.c) <= 0.01) continue;
    const Eigen::Vector4d g = hill_gradient(x, hp);
    const double h = 1e-6;
    auto shifted = [&](int i, double s) {
      HillParams q = hp;
      (i == 0 ? q.b : i == 1 ? q.k : i == 2 ? q.n : q.c) += s;
      return hill_eval(x, q);
    };
    for (int i = 0; i < 4; ++i) {
      const double fd = (shifted(i, h) - shifted(i, -h)) / (2 * h);
      const double scale = std::max(std::abs(g(i)), 1e-3);
      ASSERT_LE(std::abs(fd - g(i)) / scale, 1e-6) << "param " << i << " x=" << x;
    }
    ++checked;
  }
}

TEST(HillGradient, AtCentre) {
  const HillParams hp{0.8, 1.1, 5.0, 2.0};
  const Eigen::Vector4d g = hill_gradient(hp.c, hp);
  EXPECT_EQ(g(2), 0.0);
  EXPECT_EQ(g(3), 0.0);
  EXPECT_DOUBLE_EQ(g(0), hill_eval(hp.c, hp) / hp.b);
  EXPECT_DOUBLE_EQ(hill_gradient(0.7, hp)(0), hill_eval(0.7, hp) / hp.b);
}

TEST(FitHill, RecoversNoiselessParameters) {
  const HillParams truth{1.0, 2.0, 6.0, kPi};
  const Curve c = hill_curve(truth, 1001);
  const FitResult fit = fit_hill(c.x, c.y);
  EXPECT_TRUE(fit.converged);
  const HillParams got = fit.hill();
  EXPECT_NEAR(got.b, truth.b, 1e-6);
  EXPECT_NEAR(got.k, truth.k, 1e-6);
  EXPECT_NEAR(got.n, truth.n, 1e-6);
  EXPECT_NEAR(got.c, truth.c, 1e-6);
  EXPECT_LE(fit.sigma, 1e-14);
}

TEST(FitHill, RecoversOffCentreNarrowPeak) {
  const HillParams truth{0.7, 0.35, 3.0, 2.4};
  const Curve c = hill_curve(truth, 801);
  const HillParams got = fit_hill(c.x, c.y).hill();
  EXPECT_NEAR(got.b, truth.b, 1e-6);
  EXPECT_NEAR(got.k, truth.k, 1e-6);
  EXPECT_NEAR(got.n, truth.n, 1e-6);
  EXPECT_NEAR(got.c, truth.c, 1e-6);
}

TEST(FitHill, Deterministic) {
  Curve c = hill_curve({0.95, 0.6, 3.3, 3.0}, 501);
  std::mt19937_64 rng(8);
  std::normal_distribution<double> noise(0.0, 0.01);
  for (double& y : c.y) y += noise(rng);
  const FitResult a = fit_hill(c.x, c.y);
  const FitResult b = fit_hill(c.x, c.y);
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.sse, b.sse);
  EXPECT_EQ(a.sigma, b.sigma);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_NEAR(a.sigma, std::sqrt(a.sse / (501 - 4)), 1e-15);
}

TEST(FitHill, RejectsTooFewSamples) {
  const Curve c = hill_curve({1, 1, 2, kPi}, 15);
  EXPECT_THROW(fit_hill(c.x, c.y), std::invalid_argument);
  std::vector<double> shorter(c.y.begin(), c.y.end() - 1);
  EXPECT_THROW(fit_hill(c.x, shorter), std::invalid_argument);
}

TEST(FitSecondary, RecoversSaturatingExponential) {
  const double a = 0.180438, b = -0.816018, tau = 12.7592;
  const auto data = series([&](double n) { return a + b * std::exp(-n / tau); });
  const FitResult fit = fit_secondary(data, ModelId::SatExp);
  EXPECT_TRUE(fit.converged);
  EXPECT_NEAR(fit.params(0), a, 1e-4 * std::abs(a));
  EXPECT_NEAR(fit.params(1), b, 1e-4 * std::abs(b));
  EXPECT_NEAR(fit.params(2), tau, 1e-4 * tau);
}

TEST(FitSecondary, RecoversLogistic) {
  const double u = -20.0, v = 14.5435, d = -0.0222395;
  const auto data = series([&](double n) {
    const double e = std::exp((n + u) / v);
    return e / (1 + e) + d;
  });
  const FitResult fit = fit_secondary(data, ModelId::LogisticOffset);
  EXPECT_NEAR(fit.params(0), u, 1e-4 * std::abs(u));
  EXPECT_NEAR(fit.params(1), v, 1e-4 * v);
  EXPECT_NEAR(fit.params(2), d, 1e-4 * std::abs(d));
}

TEST(FitSecondary, ConstantData) {
  const auto data = series([](double) { return 0.42; });
  const FitResult fit = fit_secondary(data, ModelId::SatExp);
  EXPECT_NEAR(fit.params(0) + fit.params(1) * std::exp(-7.0 / fit.params(2)), 0.42, 1e-9);
  EXPECT_NEAR(extrapolate(fit, 1000), 0.42, 1e-9);
  EXPECT_NEAR(fit.params(1) * std::exp(-7.0 / fit.params(2)), 0.0, 1e-9);
}

TEST(FitSecondary, SelectionIsDeterministic) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> noise(0.0, 0.01);
  const auto data = series([&](double n) { return 2.0 - 0.9 * std::exp(-n / 3.1) + noise(rng); });
  const FitResult s1 = fit_secondary(data, ModelId::SatExp);
  const FitResult l1 = fit_secondary(data, ModelId::LogisticOffset);
  const FitResult s2 = fit_secondary(data, ModelId::SatExp);
  const FitResult l2 = fit_secondary(data, ModelId::LogisticOffset);
  EXPECT_EQ(s1.sse, s2.sse);
  EXPECT_EQ(l1.sse, l2.sse);
  EXPECT_EQ(s1.params, s2.params);
  EXPECT_EQ(l1.params, l2.params);
}

TEST(FitSecondary, InputValidation) {
  std::vector<SeriesPoint> few{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
  EXPECT_THROW(fit_secondary(few, ModelId::SatExp), std::invalid_argument);
  std::vector<SeriesPoint> unordered{{1, 0}, {2, 0}, {3, 0}, {3, 0}, {5, 0}, {6, 0}};
  EXPECT_THROW(fit_secondary(unordered, ModelId::SatExp), std::invalid_argument);
  EXPECT_THROW(fit_secondary(series([](double) { return 1.0; }), ModelId::Hill), std::invalid_argument);
}

TEST(Extrapolate, PublishedForms) {
  FitResult sat;
  sat.model = ModelId::SatExp;
  sat.params = Eigen::Vector3d(2.07982, -0.950311, 3.11062);
  EXPECT_NEAR(extrapolate(sat, 1000), 2.07982, 1e-12);

  FitResult logi;
  logi.model = ModelId::LogisticOffset;
  logi.params = Eigen::Vector3d(57.1447, 14.5435, -0.0222395);
  EXPECT_NEAR(extrapolate(logi, 1000), 0.97776, 1e-5);
}

TEST(Extrapolate, InsideDataRange) {
  const auto data = series([](double n) { return 0.3 + 0.5 * std::exp(-n / 20.0); });
  for (ModelId m : {ModelId::SatExp, ModelId::LogisticOffset}) {
    const FitResult fit = fit_secondary(data, m);
    for (int n : {10, 40, 90}) {
      const double v = extrapolate(fit, n);
      EXPECT_GE(v, 0.3 + 0.5 * std::exp(-110 / 20.0) - 5 * fit.sigma - 1e-9);
      EXPECT_LE(v, 0.3 + 0.5 * std::exp(-7 / 20.0) + 5 * fit.sigma + 1e-9);
    }
  }
}

TEST(ModelId, Names) {
  for (ModelId m : {ModelId::Hill, ModelId::SatExp, ModelId::LogisticOffset}) {
    EXPECT_EQ(parse_model_id(to_string(m)), m);
  }
  EXPECT_THROW(parse_model_id("gauss"), std::invalid_argument);
  EXPECT_EQ(parameter_names(ModelId::Hill), (std::vector<std::string>{"b", "k", "n", "c"}));
}
