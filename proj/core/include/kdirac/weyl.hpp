#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdirac/weight.hpp"

namespace kdirac {

// Signed permutation of {1..m} in window notation: window[i] = +j or -j
// (1-based j) means the element maps the i+1-th coordinate slot to the j-th,
// with that sign; on a weight, (w c)_j = sign * c_{i+1}.  Plain permutations
// have all entries positive.  Products compose as functions: (v*w)(x) =
// v(w(x)), so in a word the rightmost factor acts first.
class WeylElement {
public:
  explicit WeylElement(std::vector<int> window);
  WeylElement(std::vector<int> window, std::vector<int> word);

  static WeylElement identity(int m);
  // s_i for 1 <= i < m is the transposition (i, i+1); s_m is the type-D
  // generator mapping (.., x, y) |-> (.., -y, -x) on the last two slots.
  static WeylElement simple(int i, int m);

  int rank() const { return static_cast<int>(window_.size()); }
  // Signed image of x (1-based): returns +-j.
  int operator()(int x) const { return window_[x - 1]; }
  int image(int x) const;  // |w(x)|
  bool plain() const;      // no sign changes
  int negatives() const;

  WeylElement compose(const WeylElement& rhs) const;  // (*this) after rhs
  WeylElement inverse() const;

  // Coxeter length: inversion count for plain permutations; for signed
  // elements the type-D count matching generators s_1..s_m above.
  long length() const { return length_; }

  Weight apply(const Weight& c) const;  // linear action on coordinates

  const std::vector<int>& window() const { return window_; }
  const std::optional<std::vector<int>>& word() const { return word_; }

  bool operator==(const WeylElement& o) const { return window_ == o.window_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const { return window_ < o.window_; }

private:
  std::vector<int> window_;
  std::optional<std::vector<int>> word_;  // reduced word, when known
  long length_ = 0;
};

long coxeter_length(const std::vector<int>& window);

// Exhaustive closure of the group generated by the given simple reflections,
// breadth-first, so every returned element carries a reduced word and its
// BFS depth equals its length.  Capacity: m <= 7 when all generators are
// plain, m <= 4 when the type-D generator s_m is included.
std::vector<WeylElement> generate_group(const std::vector<int>& generator_indices, int m);

// Minimal-length representatives of the right cosets H\G where H, G are
// generated by the given subsets of simple reflections.  Output is sorted by
// the canonical coset key (the lexicographically smallest window in the
// coset).
std::vector<WeylElement> minimal_coset_reps(const std::vector<int>& subgroup_gens,
                                            const std::vector<int>& group_gens,
                                            int m);

// Bruhat order on plain permutations (dominance criterion).
bool bruhat_leq(const WeylElement& a, const WeylElement& b);

struct HasseEdge {
  int source = 0;  // indices into nodes
  int target = 0;
  std::string label;
};

struct HasseGraph {
  std::vector<WeylElement> nodes;
  std::vector<std::string> labels;  // display labels, parallel to nodes
  std::vector<HasseEdge> edges;
};

// Covering edges w -> w' within the given node set: w' = w * t for a
// reflection t with length(w') = length(w) + 1.  Labels record the
// reflection ("s3" when simple, "(1 4)" or "-(1 4)" otherwise).
HasseGraph bruhat_covers(const std::vector<WeylElement>& elements);

// If the element is a reflection, the moved pair (i, j) and whether it is
// the sign-flipping kind (epsilon_i + epsilon_j).
std::optional<std::pair<std::pair<int, int>, bool>> as_reflection(const WeylElement& t);

}  // namespace kdirac
