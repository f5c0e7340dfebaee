#pragma once

#include <complex>

#include "quess/errors.hpp"

namespace quess {

// Symmetric 2x2 bimatrix game with payoff pairs
//
//   (alpha, alpha)  (beta, gamma)
//   (gamma, beta)   (sigma, sigma)
//
// Admissible constants satisfy
//   alpha, beta, gamma, sigma >= 0
//   sigma - beta  > 0
//   gamma - alpha >= 0
//   gamma - alpha < sigma - beta
struct GameMatrix {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double sigma = 0.0;

  double sigma_minus_beta() const { return sigma - beta; }
  double gamma_minus_alpha() const { return gamma - alpha; }

  // Denominator of both stability thresholds: (gamma-alpha)+(sigma-beta).
  double gap_sum() const { return gamma_minus_alpha() + sigma_minus_beta(); }

  // Slope of the fitness gap in the tactic probability:
  // (sigma-beta)-(gamma-alpha), strictly positive for a valid game.
  double gap_diff() const { return sigma_minus_beta() - gamma_minus_alpha(); }
};

// Checks the admissibility conditions in order and throws Error naming the
// first one violated.
GameMatrix validate_game(double alpha, double beta, double gamma, double sigma);

// Two-qubit initial state a|S1S1> + b|S2S2>, |a|^2 + |b|^2 = 1.
//
// The squared moduli are stored alongside the amplitudes so that a state
// built from an exact |a|^2 keeps that value bit-for-bit; payoffs depend on
// the state only through |a|^2 and |b|^2.
class InitialState {
 public:
  // Throws AmplitudeOutOfRange unless |a|^2 + |b|^2 = 1 within 1e-12.
  InitialState(std::complex<double> a, std::complex<double> b);

  std::complex<double> a() const { return a_; }
  std::complex<double> b() const { return b_; }
  double a_sq() const { return a_sq_; }
  double b_sq() const { return b_sq_; }

 private:
  InitialState(std::complex<double> a, std::complex<double> b, double a_sq,
               double b_sq)
      : a_(a), b_(b), a_sq_(a_sq), b_sq_(b_sq) {}

  friend InitialState make_initial_state(double a_sq, double phase_a,
                                         double phase_b);

  std::complex<double> a_;
  std::complex<double> b_;
  double a_sq_;
  double b_sq_;
};

// Builds the state with |a|^2 = a_sq, |b|^2 = 1 - a_sq and the given
// amplitude phases. Phases never affect payoffs; they are accepted so that
// phase invariance can be exercised rather than assumed.
// Throws AmplitudeOutOfRange if a_sq is outside [0, 1].
InitialState make_initial_state(double a_sq, double phase_a = 0.0,
                                double phase_b = 0.0);

// Entanglement thresholds in |a|^2 separating the stability regions:
//   tau0 = (gamma-alpha) / ((gamma-alpha)+(sigma-beta))
//   tau1 = (sigma-beta)  / ((gamma-alpha)+(sigma-beta))
// tau0 + tau1 = 1 and tau0 < tau1 for every valid game.
struct Thresholds {
  double tau0 = 0.0;
  double tau1 = 1.0;
};

Thresholds thresholds(const GameMatrix& g);

}  // namespace quess
