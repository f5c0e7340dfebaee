#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "quess/game_model.hpp"

namespace quess {

// Probabilities of each player applying the identity operator; with the
// complementary probability the player applies the spin flip.
struct TacticProfile {
  double p = 1.0;  // first player
  double q = 1.0;  // second player
};

// 4x4 density matrix over the ordered two-qubit basis
// (S1S1, S1S2, S2S1, S2S2). All serialization and payoff extraction uses
// this order.
class DensityMatrix4 {
 public:
  DensityMatrix4() : m_(Eigen::Matrix4cd::Zero()) {}
  explicit DensityMatrix4(const Eigen::Matrix4cd& entries) : m_(entries) {}

  const Eigen::Matrix4cd& entries() const { return m_; }
  std::complex<double> operator()(int row, int col) const {
    return m_(row, col);
  }

  double trace_real() const { return m_.trace().real(); }

  // max |m - m^dagger| over all entries
  double hermiticity_error() const;

  // Smallest eigenvalue of the Hermitian part; a physical state has all
  // eigenvalues >= 0 up to rounding.
  double min_eigenvalue() const;

  bool is_valid(double herm_tol = 1e-12, double trace_tol = 1e-12,
                double psd_tol = 1e-10) const;

 private:
  Eigen::Matrix4cd m_;
};

// Diagonal payoff operator, one weight per basis state. In this basis the
// game's payoff operators are diagonal, so extraction reads only the
// diagonal of the final state.
struct PayoffOperator {
  std::array<double, 4> weights{};

  static PayoffOperator row_player(const GameMatrix& g) {
    return {{g.alpha, g.beta, g.gamma, g.sigma}};
  }
  static PayoffOperator column_player(const GameMatrix& g) {
    return {{g.alpha, g.gamma, g.beta, g.sigma}};
  }
};

// rho = |psi><psi| for psi = a|S1S1> + b|S2S2>: |a|^2 and |b|^2 on the
// outer diagonal corners, a b* and a* b on the anti-diagonal corners,
// zero elsewhere.
DensityMatrix4 initial_density(const InitialState& s);

// Classical mixture of the four local operator choices:
//   p q     (I (x) I) rho (I (x) I)
// + p(1-q)  (I (x) X) rho (I (x) X)
// + (1-p)q  (X (x) I) rho (X (x) I)
// + (1-p)(1-q) (X (x) X) rho (X (x) X)
// where X exchanges S1 and S2 on one qubit. Preserves Hermiticity, unit
// trace and positive semidefiniteness.
DensityMatrix4 apply_tactics(const DensityMatrix4& rho, const TacticProfile& t);

// Sum over basis states of weight * diagonal entry (real part; the
// imaginary parts of the diagonal vanish up to rounding).
double payoff_trace(const DensityMatrix4& rho_final, const PayoffOperator& op);

// Payoff to a p player against a q player, directly as a polynomial in
// (p, q, |a|^2, |b|^2):
//   alpha {pq|a|^2 + (1-p)(1-q)|b|^2} + beta  {p(1-q)|a|^2 + q(1-p)|b|^2}
// + gamma {p(1-q)|b|^2 + q(1-p)|a|^2} + sigma {pq|b|^2 + (1-p)(1-q)|a|^2}
// Agrees with the density-matrix route
// payoff_trace(apply_tactics(initial_density(s), t), row_player) to 1e-12.
double payoff_closed_form(const GameMatrix& g, const InitialState& s,
                          const TacticProfile& t);

}  // namespace quess
