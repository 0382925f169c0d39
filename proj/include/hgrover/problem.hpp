#pragma once

namespace hgrover {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// How the iteration count is derived from the register size.
enum class IterationRule {
  /// floor((pi/4) * sqrt(N/M)), at least 1. Matches the published scans
  /// (1 iteration up to N=6, 2 for N=7..14, 8 at N=104).
  FloorQuarterPi,
  /// argmax over k >= 1 of sin^2((2k+1) theta / 2).
  NearestRotation,
};

/// Register size N and solution count M. Construction validates
/// N >= 2, 1 <= M < N and M/N <= 1/2.
class ProblemSpec {
 public:
  ProblemSpec(int register_size, int num_solutions = 1);

  int register_size() const { return n_; }
  int num_solutions() const { return m_; }

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;

 private:
  int n_;
  int m_;
};

/// Rotation angle of one standard iteration, 2 asin(sqrt(M/N)).
double theta(const ProblemSpec& spec);

int optimal_iterations(const ProblemSpec& spec,
                       IterationRule rule = IterationRule::FloorQuarterPi);

}  // namespace hgrover
