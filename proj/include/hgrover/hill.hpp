#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hgrover/sweep.hpp"

namespace hgrover {

/// Modified Hill bell W(x) = b k^n / (|x - c|^n + k^n).
/// b is the height, k the half-width at half maximum, n the steepness and
/// c the centre. b, k, n > 0.
struct HillParams {
  double b = 1.0;
  double k = 1.0;
  double n = 2.0;
  double c = kPi;
};

enum class ModelId {
  Hill,           ///< (b, k, n, c)
  SatExp,         ///< A + B exp(-N / tau); (A, B, tau)
  LogisticOffset  ///< e^{(N+u)/v} / (1 + e^{(N+u)/v}) + d; (u, v, d)
};

std::string_view to_string(ModelId id);
/// hill, sat-exp, logistic-offset
ModelId parse_model_id(std::string_view name);
/// Parameter names in storage order.
std::vector<std::string> parameter_names(ModelId id);

struct FitResult {
  ModelId model = ModelId::Hill;
  Eigen::VectorXd params;
  double sigma = 0.0;  ///< sqrt(SSE / (samples - parameters))
  double sse = 0.0;
  bool converged = false;
  int iterations = 0;

  HillParams hill() const;
};

double hill_eval(double x, const HillParams& params);

/// Partials (dW/db, dW/dk, dW/dn, dW/dc). At x == c the n and c partials
/// are taken as 0.
Eigen::Vector4d hill_gradient(double x, const HillParams& params);

/// Least-squares fit of the modified Hill bell, over (log b, log k, log n, c).
/// Starts: b0 = max y, c0 = argmax, k0 = observed half width at half
/// maximum, n0 in {2, 4, 8, 16}; the lowest-SSE start wins.
/// Requires at least 16 samples.
FitResult fit_hill(std::span<const double> x, std::span<const double> y);
FitResult fit_hill(const SampleSet& samples);

struct SeriesPoint {
  int n = 0;
  double y = 0.0;
};

/// Fits a parameter series y(N) with SatExp or LogisticOffset. Requires at
/// least 6 points with strictly increasing N.
FitResult fit_secondary(std::span<const SeriesPoint> data, ModelId model);

/// Evaluates any model at x (phi for Hill, N for the secondary models).
double model_eval(ModelId model, const Eigen::VectorXd& params, double x);

double extrapolate(const FitResult& fit, int n);

}  // namespace hgrover
