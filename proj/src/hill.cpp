#include "hgrover/hill.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hgrover/lm.hpp"

namespace hgrover {

std::string_view to_string(ModelId id) {
  switch (id) {
    case ModelId::Hill: return "hill";
    case ModelId::SatExp: return "sat-exp";
    case ModelId::LogisticOffset: return "logistic-offset";
  }
  return "?";
}

ModelId parse_model_id(std::string_view name) {
  for (ModelId m : {ModelId::Hill, ModelId::SatExp, ModelId::LogisticOffset}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (expected hill, sat-exp or logistic-offset)");
}

std::vector<std::string> parameter_names(ModelId id) {
  switch (id) {
    case ModelId::Hill: return {"b", "k", "n", "c"};
    case ModelId::SatExp: return {"A", "B", "tau"};
    case ModelId::LogisticOffset: return {"u", "v", "d"};
  }
  return {};
}

HillParams FitResult::hill() const {
  if (model != ModelId::Hill || params.size() != 4) {
    throw std::logic_error("fit result does not hold Hill parameters");
  }
  return {params(0), params(1), params(2), params(3)};
}

namespace {

// Shared pieces of W and its partials: w = 1/(1+r), r = (|x-c|/k)^n.
struct HillTerms {
  double d;  // |x - c|
  double w;
};

HillTerms hill_terms(double x, const HillParams& p) {
  const double d = std::abs(x - p.c);
  if (d == 0.0) return {0.0, 1.0};
  const double log_r = p.n * (std::log(d) - std::log(p.k));
  return {d, 1.0 / (1.0 + std::exp(log_r))};
}

double logistic(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double sigma_of(double sse, std::size_t samples, std::size_t params) {
  if (samples <= params) return 0.0;
  return std::sqrt(sse / static_cast<double>(samples - params));
}

}  // namespace

double hill_eval(double x, const HillParams& params) {
  return params.b * hill_terms(x, params).w;
}

Eigen::Vector4d hill_gradient(double x, const HillParams& params) {
  const auto [d, w] = hill_terms(x, params);
  const double bump = params.b * w * (1.0 - w);
  Eigen::Vector4d g;
  g(0) = w;
  g(1) = bump * params.n / params.k;
  if (d == 0.0) {
    g(2) = 0.0;
    g(3) = 0.0;
  } else {
    g(2) = -bump * std::log(d / params.k);
    g(3) = bump * params.n / d * (x > params.c ? 1.0 : -1.0);
  }
  return g;
}

FitResult fit_hill(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y lengths differ");
  if (x.size() < 16) throw std::invalid_argument("Hill fit needs at least 16 samples");
  const auto m = static_cast<Eigen::Index>(x.size());

  const std::size_t arg =
      static_cast<std::size_t>(std::max_element(y.begin(), y.end()) - y.begin());
  const double b0 = std::max(y[arg], 1e-12);
  const double c0 = x[arg];
  std::size_t lo = arg;
  std::size_t hi = arg;
  while (lo > 0 && y[lo - 1] >= 0.5 * b0) --lo;
  while (hi + 1 < y.size() && y[hi + 1] >= 0.5 * b0) ++hi;
  const double step = std::abs(x[x.size() - 1] - x[0]) / static_cast<double>(x.size() - 1);
  const double k0 = std::max(0.5 * std::abs(x[hi] - x[lo]), step);

  auto model = [&](const Eigen::VectorXd& q, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
    if (!q.allFinite()) return false;
    const HillParams hp{std::exp(q(0)), std::exp(q(1)), std::exp(q(2)), q(3)};
    if (!(hp.b > 0.0 && hp.k > 0.0 && hp.n > 0.0) || !std::isfinite(hp.n)) return false;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double xi = x[static_cast<std::size_t>(i)];
      r(i) = hill_eval(xi, hp) - y[static_cast<std::size_t>(i)];
      if (jac) {
        const Eigen::Vector4d g = hill_gradient(xi, hp);
        // Chain rule for the log-parametrized b, k, n.
        (*jac)(i, 0) = g(0) * hp.b;
        (*jac)(i, 1) = g(1) * hp.k;
        (*jac)(i, 2) = g(2) * hp.n;
        (*jac)(i, 3) = g(3);
      }
    }
    return true;
  };

  LmResult best;
  best.sse = std::numeric_limits<double>::infinity();
  for (double n0 : {2.0, 4.0, 8.0, 16.0}) {
    Eigen::VectorXd q0(4);
    q0 << std::log(b0), std::log(k0), std::log(n0), c0;
    LmResult res = levenberg_marquardt(model, q0, m);
    if (res.sse < best.sse) best = std::move(res);
  }

  FitResult out;
  out.model = ModelId::Hill;
  out.params.resize(4);
  if (best.x.size() == 4) {
    out.params << std::exp(best.x(0)), std::exp(best.x(1)), std::exp(best.x(2)), best.x(3);
  } else {
    out.params << b0, k0, 2.0, c0;
  }
  out.sse = best.sse;
  out.sigma = sigma_of(best.sse, x.size(), 4);
  out.converged = best.converged;
  out.iterations = best.iterations;
  return out;
}

FitResult fit_hill(const SampleSet& samples) {
  const std::vector<double> x = sweep_axis(samples);
  const std::vector<double> y = probabilities(samples);
  return fit_hill(x, y);
}

double model_eval(ModelId model, const Eigen::VectorXd& params, double x) {
  switch (model) {
    case ModelId::Hill:
      return hill_eval(x, {params(0), params(1), params(2), params(3)});
    case ModelId::SatExp:
      return params(0) + params(1) * std::exp(-x / params(2));
    case ModelId::LogisticOffset:
      return logistic((x + params(0)) / params(1)) + params(2);
  }
  throw std::logic_error("unknown model");
}

double extrapolate(const FitResult& fit, int n) {
  return model_eval(fit.model, fit.params, static_cast<double>(n));
}

namespace {

FitResult fit_sat_exp(std::span<const SeriesPoint> data) {
  const auto m = static_cast<Eigen::Index>(data.size());
  auto model = [&](const Eigen::VectorXd& q, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
    if (!q.allFinite()) return false;
    const double tau = std::exp(q(2));
    if (!(tau > 0.0) || !std::isfinite(tau)) return false;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double n = data[static_cast<std::size_t>(i)].n;
      const double e = std::exp(-n / tau);
      r(i) = q(0) + q(1) * e - data[static_cast<std::size_t>(i)].y;
      if (jac) {
        (*jac)(i, 0) = 1.0;
        (*jac)(i, 1) = e;
        (*jac)(i, 2) = q(1) * e * n / tau;  // d/d(log tau)
      }
    }
    return true;
  };

  const SeriesPoint& first = data.front();
  const SeriesPoint& last = data.back();
  const double range = static_cast<double>(last.n - first.n);
  LmResult best;
  best.sse = std::numeric_limits<double>::infinity();
  for (double divisor : {3.0, 10.0, 30.0}) {
    const double tau0 = range / divisor;
    Eigen::VectorXd q0(3);
    q0 << last.y, (first.y - last.y) * std::exp(first.n / tau0), std::log(tau0);
    LmResult res = levenberg_marquardt(model, q0, m);
    if (res.sse < best.sse) best = std::move(res);
  }
  FitResult out;
  out.model = ModelId::SatExp;
  out.params.resize(3);
  out.params << best.x(0), best.x(1), std::exp(best.x(2));
  out.sse = best.sse;
  out.sigma = sigma_of(best.sse, data.size(), 3);
  out.converged = best.converged;
  out.iterations = best.iterations;
  return out;
}

FitResult fit_logistic_offset(std::span<const SeriesPoint> data) {
  const auto m = static_cast<Eigen::Index>(data.size());
  auto model = [&](const Eigen::VectorXd& q, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
    if (!q.allFinite() || std::abs(q(1)) < 1e-9) return false;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double n = data[static_cast<std::size_t>(i)].n;
      const double z = (n + q(0)) / q(1);
      const double s = logistic(z);
      r(i) = s + q(2) - data[static_cast<std::size_t>(i)].y;
      if (jac) {
        const double ds = s * (1.0 - s);
        (*jac)(i, 0) = ds / q(1);
        (*jac)(i, 1) = -ds * z / q(1);
        (*jac)(i, 2) = 1.0;
      }
    }
    return true;
  };

  const SeriesPoint& first = data.front();
  const SeriesPoint& last = data.back();
  const double range = static_cast<double>(last.n - first.n);
  const double trend = last.y >= first.y ? 1.0 : -1.0;
  const double n_mid = 0.5 * (first.n + last.n);
  const double y_mid = 0.5 * (first.y + last.y);

  LmResult best;
  best.sse = std::numeric_limits<double>::infinity();
  for (double d0 : {0.0, last.y - 1.0, last.y}) {
    for (double sign : {trend, -trend}) {
      for (bool anchor_mid : {true, false}) {
        const double v0 = sign * range / 5.0;
        const double target = std::clamp((anchor_mid ? y_mid : first.y) - d0, 0.02, 0.98);
        const double at = anchor_mid ? n_mid : static_cast<double>(first.n);
        // logistic((at + u)/v) = target
        const double u0 = v0 * std::log(target / (1.0 - target)) - at;
        Eigen::VectorXd q0(3);
        q0 << u0, v0, d0;
        LmResult res = levenberg_marquardt(model, q0, m);
        if (res.sse < best.sse) best = std::move(res);
      }
    }
  }
  FitResult out;
  out.model = ModelId::LogisticOffset;
  out.params = best.x;
  out.sse = best.sse;
  out.sigma = sigma_of(best.sse, data.size(), 3);
  out.converged = best.converged;
  out.iterations = best.iterations;
  return out;
}

}  // namespace

FitResult fit_secondary(std::span<const SeriesPoint> data, ModelId model) {
  if (data.size() < 6) throw std::invalid_argument("secondary fit needs at least 6 points");
  for (std::size_t i = 1; i < data.size(); ++i) {
    if (data[i].n <= data[i - 1].n) {
      throw std::invalid_argument("secondary fit needs strictly increasing N");
    }
  }
  switch (model) {
    case ModelId::SatExp: return fit_sat_exp(data);
    case ModelId::LogisticOffset: return fit_logistic_offset(data);
    case ModelId::Hill: break;
  }
  throw std::invalid_argument("hill is not a secondary model");
}

}  // namespace hgrover
