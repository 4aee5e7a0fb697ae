#pragma once

#include <map>
#include <string>
#include <vector>

#include "kdirac/direct_images.hpp"
#include "kdirac/partition.hpp"

namespace kdirac {

// Which graded pieces of the weighted jet filtration to count:
//   full: S^i g_1 (x) S^j g_2 with i + 2j = level, dim g_1 = 2nk,
//         dim g_2 = C(k,2)
//   sym:  S^level g_1 only
enum class JetVariant { full, sym };

struct ComplexNode {
  Partition a;
  Weight mu;     // mu_a
  int degree;    // ell(a)
  Int dim;       // Levi dimension of mu_a
};

struct ComplexArrow {
  int source = 0;  // indices into nodes
  int target = 0;
  int order = 0;   // weighted order bound: |a'| - |a|, 1 or 2
};

// Graph of the k-Dirac complex: slot j holds the symmetric partitions of
// grade j; arrows join a < a' in consecutive slots.
struct DiracComplex {
  int k = 0, n = 0;
  std::vector<ComplexNode> nodes;
  std::vector<std::vector<int>> slots;  // slot j -> node indices
  std::vector<ComplexArrow> arrows;
};

DiracComplex build_complex(int k, int n);

// Dimension of the graded jet piece of the bundle with fiber weight mu.
Int graded_dim(const Weight& mu, long level, JetVariant variant);

// Entry j = sum over symmetric a of grade j of
// graded_dim(mu_a, r - j - q(a)); the grading shift by q(a) aligns all
// arrows to drop the level by exactly one.  Length k(k+1)/2 + 1.
std::vector<Int> jet_sequence(int k, int n, long r, JetVariant variant);

struct DimTable {
  std::string label;
  int k = 0, n = 0;
  long r = 0;
  JetVariant variant = JetVariant::sym;
  int cols = 0;  // p = 0..cols-1
  int rows = 0;  // q = 0..rows-1
  std::map<std::pair<int, int>, Int> entries;  // (p, q) -> dim, zeros omitted

  Int at(int p, int q) const;
};

// First page of the column spectral sequence: entry (p, q) collects
// graded_dim(mu_a, r - p) over symmetric a with |a| = p, ell(a) = q.
DimTable e1_page(int k, int n, long r, JetVariant variant);

struct RankReport {
  std::vector<Int> ranks;  // rank of the map out of position j
  Int kernel0 = 0;         // V_0 - rank_0
  bool ok = false;
};

// Back-substitute ranks assuming exactness at positions 1..N (and
// surjectivity of the last map): rank_N = 0, rank_j = V_{j+1} - rank_{j+1}.
// ok <=> every rank lies in [0, min(V_j, V_{j+1})] and kernel0 >= 0.
RankReport rank_feasibility(const std::vector<Int>& seq);

}  // namespace kdirac
