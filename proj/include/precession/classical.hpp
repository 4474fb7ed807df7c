#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "precession/protocol.hpp"

namespace precession {

/// A classical pure state of the precessing pair, A_x(theta) = A0*cos(theta + phi0).
struct ClassicalState {
  double amplitude;  // A0 = sqrt(Ax^2 + Ay^2) >= 0
  double phase;      // phi0 = arg(Ax + i*Ay), reduced to [0, 2pi)

  ClassicalState(double A0, double phi0);
  static ClassicalState from_cartesian(double ax, double ay);
  double ax(double theta) const;
};

/// Probability distribution over classical pure states; weights sum to 1.
struct ClassicalEnsemble {
  std::vector<std::pair<double, ClassicalState>> components;

  explicit ClassicalEnsemble(std::vector<std::pair<double, ClassicalState>> comps);
};

/// Exact score of a pure state: (1/K) sum_k (-1)^k [ |A_x(theta_k)| <= Delta/2 ].
/// Always one of {0, +1/K, -1/K}; the boundary |A_x| = Delta/2 counts as inside.
ScoreValue classical_score(const ProtocolConfig& config, const ClassicalState& state);

/// The score evaluated over a grid of initial conditions (A_x(0), A_y(0)).
struct ScoreField {
  double x_min, x_max;
  double y_min, y_max;
  int nx, ny;
  std::vector<double> values;  // row-major: index = iy*nx + ix

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
  double x_at(int ix) const;
  double y_at(int iy) const;
};

ScoreField classical_score_field(const ProtocolConfig& config,
                                 double x_min, double x_max,
                                 double y_min, double y_max,
                                 int nx, int ny);

/// Weighted mean of the component scores; |result| <= 1/K by convexity.
ScoreValue ensemble_score(const ProtocolConfig& config, const ClassicalEnsemble& ensemble);

/// Monte Carlo verification of the classical bound over random pure states.
struct BoundCheckReport {
  int K;
  double delta;
  long long samples;
  std::uint64_t seed;
  long long count_plus;        // score == +1/K
  long long count_zero;        // score == 0
  long long count_minus;       // score == -1/K
  long long count_out_of_set;  // score outside {0, +-1/K}; must be 0
  std::string distribution;    // human-readable description of the sampler
};

/// Samples A0 log-uniformly on [lo, 100*max(Delta,1)] with lo = Delta/100
/// (or max(Delta,1)/100 when Delta = 0) and phi0 uniformly on [0, 2pi).
BoundCheckReport mc_bound_check(const ProtocolConfig& config, long long n_samples,
                                std::uint64_t seed);

/// CSV with header `ax,ay,score`, row-major over the grid.
void write_csv(const ScoreField& field, std::ostream& out);

}  // namespace precession
