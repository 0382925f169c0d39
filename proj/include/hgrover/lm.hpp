#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace hgrover {

struct LmOptions {
  int max_iterations = 500;
  /// Stop once an accepted step lowers the SSE by less than this fraction.
  double relative_tolerance = 1e-12;
  double initial_damping = 1e-3;
  double damping_factor = 10.0;
  /// Give up raising the damping past this value; the point is then
  /// stationary to working precision and counts as converged.
  double max_damping = 1e16;
};

struct LmResult {
  Eigen::VectorXd x;
  double sse = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Damped Gauss-Newton (Levenberg-Marquardt) on sum r_i(x)^2.
///
/// `model(x, r, J)` fills the residual vector r (size m) and, when J is
/// non-null, the m x p Jacobian. It returns false if x lies outside the
/// model's domain, which is treated like an SSE increase. Damping uses
/// Marquardt's diagonal scaling and moves by `damping_factor` per rejected
/// or accepted step. Fully deterministic.
template <typename Model>
LmResult levenberg_marquardt(Model&& model, Eigen::VectorXd x0, Eigen::Index residual_count,
                             const LmOptions& opt = {}) {
  const Eigen::Index p = x0.size();
  Eigen::VectorXd r(residual_count);
  Eigen::MatrixXd jac(residual_count, p);

  LmResult out;
  out.x = std::move(x0);
  if (!model(out.x, r, &jac) || !r.allFinite() || !jac.allFinite()) {
    out.sse = std::numeric_limits<double>::infinity();
    return out;
  }
  out.sse = r.squaredNorm();

  double lambda = opt.initial_damping;
  Eigen::VectorXd trial_r(residual_count);
  while (out.iterations < opt.max_iterations) {
    if (out.sse == 0.0) {
      out.converged = true;
      break;
    }
    ++out.iterations;
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;
    Eigen::VectorXd scale = jtj.diagonal();
    const double floor = 1e-12 * std::max(1.0, scale.maxCoeff());
    for (Eigen::Index i = 0; i < p; ++i) scale(i) = std::max(scale(i), floor);

    bool accepted = false;
    while (!accepted) {
      Eigen::MatrixXd a = jtj;
      a.diagonal() += lambda * scale;
      const Eigen::VectorXd step = a.ldlt().solve(-grad);
      const Eigen::VectorXd trial = out.x + step;
      const bool ok = step.allFinite() && model(trial, trial_r, nullptr) && trial_r.allFinite();
      const double trial_sse = ok ? trial_r.squaredNorm() : std::numeric_limits<double>::infinity();
      if (trial_sse < out.sse) {
        const double rel = (out.sse - trial_sse) / out.sse;
        out.x = trial;
        out.sse = trial_sse;
        lambda = std::max(lambda / opt.damping_factor, 1e-15);
        model(out.x, r, &jac);
        accepted = true;
        if (rel < opt.relative_tolerance) out.converged = true;
      } else {
        lambda *= opt.damping_factor;
        if (lambda > opt.max_damping) {
          out.converged = true;
          break;
        }
      }
    }
    if (out.converged) break;
  }
  return out;
}

}  // namespace hgrover
