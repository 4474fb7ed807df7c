#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace precession {

/// Thrown when an eigensolver fails to converge or exceeds its residual budget.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One protocol instance: K evenly spaced probing angles in [0, pi) and the
/// width Delta of the score region |A_x| <= Delta/2.
struct ProtocolConfig {
  int K;
  double delta;

  ProtocolConfig(int K_, double delta_);
};

/// Acceptance slack added to the classical bound when deciding `violation`
/// for scores obtained from exact operators.
inline constexpr double kExactViolationSlack = 1e-9;

/// Maximum classical score, 1/K (independent of Delta).
double classical_bound(const ProtocolConfig& config);

/// theta_k = pi*k/K for k = 0..K-1.
std::vector<double> angle_grid(const ProtocolConfig& config);

/// An expected protocol score. At most half of the K terms can carry
/// weight +1/K, so |value| <= 1/2 for any state, classical or quantum.
struct ScoreValue {
  double value;

  explicit ScoreValue(double v);
};

struct ScoreReport {
  ProtocolConfig config;
  ScoreValue score;
  double bound;      // classical bound, exactly 1/K
  bool violation;    // score.value > bound + slack
  std::string context;
};

/// Builds a report with the given slack; `context` should record provenance
/// (system, truncation, j, slack, residual, ...).
ScoreReport make_report(const ProtocolConfig& config, double score, double slack,
                        std::string context);

}  // namespace precession
