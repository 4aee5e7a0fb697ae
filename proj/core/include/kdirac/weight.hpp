#pragma once

#include <iosfwd>
#include <vector>

#include "kdirac/rational.hpp"

namespace kdirac {

class WeylElement;

// Which simple roots are crossed: R = {alpha_m}, Q = {alpha_k, alpha_m},
// P = {alpha_k}.  The flavor selects the dominance predicate.
enum class ParabolicFlavor { R, Q, P };

// Weight of so(2m) in the epsilon-basis, m = k+n coordinates, exact
// rationals.  The (k, n) split travels with the weight so dominance tests
// need no extra argument.
class Weight {
public:
  Weight(std::vector<Rational> coords, int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int rank() const { return k_ + n_; }

  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  std::vector<Rational> fiber() const;  // last n coordinates

  // lambda_i - lambda_j integral for all i, j and 2*lambda_m integral.
  bool g_integral() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight& o) const;
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const;  // lexicographic, for ordered containers

  // "(c_1, ..., c_k | c_{k+1}, ..., c_m)" with exact rational entries.
  std::string str() const;
  // {"k":..., "n":..., "coords":["p/q", ...]}
  std::string json() const;

private:
  std::vector<Rational> coords_;
  int k_;
  int n_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// rho = (m-1, m-2, ..., 1, 0); requires m = k+n >= 4.
Weight rho(int k, int n);

// omega_i; the two spinor weights omega_{m-1}, omega_m are half-integral.
Weight fundamental_weight(int i, int k, int n);

// s_i for i < m swaps coordinates i, i+1; s_m sends
// (..., c_{m-1}, c_m) to (..., -c_m, -c_{m-1}).
Weight simple_reflection(int i, const Weight& w);

// w.lambda = w(lambda + rho) - rho.
Weight affine_action(const WeylElement& w, const Weight& lambda);

// Dominance per flavor:
//   R: c_i - c_{i+1} in N_0 for all 1 <= i <= m-1
//   Q: same, skipping i = k
//   P: same as Q plus c_{m-1} >= |c_m|
// Throws std::domain_error when the weight is not g-integral.
bool is_dominant(const Weight& w, ParabolicFlavor flavor);

}  // namespace kdirac
