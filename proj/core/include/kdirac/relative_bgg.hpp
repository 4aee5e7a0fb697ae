#pragma once

#include <vector>

#include "kdirac/partition.hpp"
#include "kdirac/weight.hpp"

namespace kdirac {

// lambda = (1-2n) * omega_m, the twisting weight; r-dominant and g-integral.
Weight lambda_weight(int k, int n);

// lambda_a = lambda + (-a_k, ..., -a_1 | b_1, ..., b_n); always Q-dominant.
Weight lambda_a(const Partition& a);

struct BggArrow {
  int source = 0;  // indices into nodes
  int target = 0;
};

// Graph of the relative BGG sequence: one node per partition of the box,
// weighted by lambda_a; one arrow per covering pair a < a', |a'| = |a|+1.
struct RelativeBggGraph {
  int k = 0, n = 0;
  std::vector<Partition> nodes;  // lexicographically sorted
  std::vector<Weight> weights;   // lambda_a, parallel to nodes
  std::vector<BggArrow> arrows;
};

RelativeBggGraph build_bgg_graph(int k, int n);

// Kostant decomposition certificate in homogeneity p: the Levi dimensions of
// the lambda_a with |a| = p (Levi of Q is gl(k) + gl(n)) must sum to
// C(nk, p) = dim Lambda^p E^*.
bool kostant_dimension_check(int k, int n, int p);

// The gl(k) x gl(n) Weyl dimension of the irreducible with extreme weight w.
Int levi_q_dimension(const Weight& w);

}  // namespace kdirac
