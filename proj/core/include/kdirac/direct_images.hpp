#pragma once

#include <optional>
#include <vector>

#include "kdirac/partition.hpp"
#include "kdirac/weight.hpp"

namespace kdirac {

// Direct image of the sheaf attached to lambda_a along the second fibration:
// either a single nonzero image in one degree, or nothing at all.
struct DirectImage {
  std::optional<Weight> mu;  // empty <=> all direct images vanish
  int degree = -1;           // ell(a) = C(n,2) - q(a) when nonzero

  bool vanishes() const { return !mu.has_value(); }
};

// Closed form: vanishes unless a is symmetric; otherwise
//   mu_a = mu^* - (a_k, ..., a_1 | 0, ..., 0),
//   mu^+- = 1/2 (-2n+1, ..., -2n+1 | 1, ..., 1, +-1),
// with * = + exactly when durfee(a) == n mod 2, in degree C(n,2) - q(a).
// Requires the stable range n >= k >= 2.
DirectImage direct_image(const Partition& a);

// Independent oracle: detects singularity of lambda_a + rho on the last n
// coordinates (two equal absolute values), otherwise searches all of W(D_n)
// acting there for the unique element w with w.lambda_a P-dominant and
// returns that weight with degree = length(w).  Capacity n <= 4.
DirectImage direct_image_bruteforce(const Partition& a);

// Weyl dimension of the gl(r) irreducible with highest weight mu
// (mu_1 >= ... >= mu_r, integral differences; entries may be rational).
Int gl_weyl_dimension(const std::vector<Rational>& mu);

// Weyl dimension of the so(2n) (type D_n) irreducible with dominant extreme
// weight mu on n coordinates.
Int so_even_weyl_dimension(const std::vector<Rational>& mu);

// dim of the irreducible P-module with extreme weight mu: gl(k) factor on
// the first k coordinates times the so(2n) factor on the last n.
Int levi_dimension(const Weight& mu);

struct BbwResult {
  int degree = 0;                  // length of the regularizing element
  std::vector<Rational> dominant;  // rho_n-unshifted dominant fiber weight
};

// Bott-Borel-Weil on the fiber Gr^+_h(n,n): shift by rho(D_n) =
// (n-1, ..., 1, 0); singular shifted weights (an |value| collision) give
// nothing; otherwise the unique W(D_n) element sorting the shift to
// l_1 > ... > l_{n-1} > |l_n| gives the degree and the dominant weight.
std::optional<BbwResult> bbw_Dn(const std::vector<Rational>& fiber_weight);

}  // namespace kdirac
