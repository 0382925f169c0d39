#include "hgrover/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hgrover {

ProblemSpec::ProblemSpec(int register_size, int num_solutions)
    : n_(register_size), m_(num_solutions) {
  if (n_ < 2) {
    throw std::invalid_argument("register size must be >= 2, got " +
                                std::to_string(n_));
  }
  if (m_ < 1 || m_ >= n_) {
    throw std::invalid_argument("number of solutions must satisfy 1 <= M < N, got M=" +
                                std::to_string(m_));
  }
  if (2 * m_ > n_) {
    throw std::invalid_argument("M/N must not exceed 1/2 (N=" + std::to_string(n_) +
                                ", M=" + std::to_string(m_) + ")");
  }
}

double theta(const ProblemSpec& spec) {
  const double ratio = static_cast<double>(spec.num_solutions()) /
                       static_cast<double>(spec.register_size());
  return 2.0 * std::asin(std::sqrt(ratio));
}

int optimal_iterations(const ProblemSpec& spec, IterationRule rule) {
  const double t = theta(spec);
  switch (rule) {
    case IterationRule::FloorQuarterPi: {
      const double ratio = static_cast<double>(spec.register_size()) /
                           static_cast<double>(spec.num_solutions());
      const int k = static_cast<int>(std::floor(kPi / 4.0 * std::sqrt(ratio)));
      return k < 1 ? 1 : k;
    }
    case IterationRule::NearestRotation: {
      // |(2k+1) theta/2 - pi/2| is convex in k; its minimum sits near pi/(2 theta) - 1/2.
      const int guess = static_cast<int>(std::floor(kPi / (2.0 * t) - 0.5));
      int best = 1;
      double best_gap = std::abs(1.5 * t - kPi / 2.0);
      for (int k = std::max(1, guess - 1); k <= guess + 2; ++k) {
        const double gap = std::abs((2.0 * k + 1.0) * t / 2.0 - kPi / 2.0);
        if (gap < best_gap) {
          best_gap = gap;
          best = k;
        }
      }
      return best;
    }
  }
  throw std::logic_error("unknown iteration rule");
}

}  // namespace hgrover
