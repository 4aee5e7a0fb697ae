#pragma once

#include <string>
#include <vector>

#include "kdirac/weyl.hpp"

namespace kdirac {

// Partition in a k x n box: n >= a_1 >= ... >= a_k >= 0, stored with k
// entries (trailing zeros kept).  The box is part of the value: conjugation
// and symmetry depend on it.  Statistics are cached at construction:
//   durfee    d = max{i : a_i >= i}          (0 for the empty partition)
//   excess    q = sum_i max(a_i - i, 0)      (boxes strictly above the diagonal)
//   grade     r = d + q
class Partition {
public:
  Partition(std::vector<int> parts, int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[i - 1]; }  // 1-based

  int size() const { return size_; }  // |a|
  int durfee() const { return d_; }
  int excess() const { return q_; }
  int grade() const { return r_; }
  bool symmetric() const { return symmetric_; }

  const std::vector<int>& conjugate_parts() const { return conj_; }  // n entries
  Partition conjugate() const;  // lives in the n x k box

  bool same_box(const Partition& o) const { return k_ == o.k_ && n_ == o.n_; }
  // Componentwise a <= o (same box required).
  bool leq(const Partition& o) const;
  bool lt(const Partition& o) const { return leq(o) && parts_ != o.parts_; }

  // All b in the same box with a < b and |b| = |a| + 1.
  std::vector<Partition> covers() const;

  // Box filling numbers k-i+j read in lexicographic row order.
  std::vector<int> box_word() const;
  // w_a: the product of simple reflections over box_word(), leftmost first.
  WeylElement weyl_element() const;

  std::string str() const;  // "(a_1,...,a_k)@kxn"
  std::string json() const;
  std::string young_ascii() const;

  bool operator==(const Partition& o) const { return same_box(o) && parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }  // lex

private:
  std::vector<int> parts_;
  std::vector<int> conj_;
  int k_, n_;
  int size_, d_, q_, r_;
  bool symmetric_;
};

enum class PartitionFilter { all, symmetric };

// Lexicographically sorted partitions of the k x n box.  Requires the
// stable range n >= k >= 2.
std::vector<Partition> enumerate_partitions(int k, int n,
                                            PartitionFilter filter = PartitionFilter::all);
std::vector<Partition> symmetric_partitions_with_grade(int k, int n, int r);
std::vector<Partition> partitions_of_size(int k, int n, int p);

// w(k-i) > k for some i in 0..k-1 forces w(k+i+1) <= k.
bool is_k_balanced(const WeylElement& w, int k);

void require_stable_range(int k, int n);

}  // namespace kdirac
