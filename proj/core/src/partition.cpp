#include "kdirac/partition.hpp"

#include <algorithm>
#include <sstream>

namespace kdirac {

void require_stable_range(int k, int n) {
  if (k < 2 || n < k)
    throw std::domain_error("stable range n >= k >= 2 required");
}

Partition::Partition(std::vector<int> parts, int k, int n)
    : parts_(std::move(parts)), k_(k), n_(n) {
  if (k_ < 1 || n_ < 0) throw std::domain_error("Partition: bad box");
  if (parts_.size() != static_cast<std::size_t>(k_))
    throw std::domain_error("Partition: expected exactly k parts (pad with zeros)");
  for (int i = 0; i < k_; ++i) {
    const int lo = i + 1 < k_ ? parts_[i + 1] : 0;
    if (parts_[i] < lo || parts_[i] > n_ || parts_[i] < 0)
      throw std::domain_error("Partition: parts must satisfy n >= a_1 >= ... >= a_k >= 0");
  }

  size_ = 0;
  for (int a : parts_) size_ += a;

  conj_.assign(n_, 0);
  for (int j = 1; j <= n_; ++j)
    conj_[j - 1] = static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [j](int a) { return a >= j; }));

  d_ = 0;
  for (int i = 1; i <= k_; ++i)
    if (parts_[i - 1] >= i) d_ = i;

  q_ = 0;
  for (int i = 1; i <= k_; ++i) q_ += std::max(parts_[i - 1] - i, 0);
  r_ = d_ + q_;

  // The diagram equals its transpose: compare rows with column heights,
  // padding the shorter list with zeros.
  symmetric_ = true;
  const int len = std::max(k_, n_);
  for (int i = 0; i < len; ++i) {
    const int a = i < k_ ? parts_[i] : 0;
    const int b = i < n_ ? conj_[i] : 0;
    if (a != b) {
      symmetric_ = false;
      break;
    }
  }
}

Partition Partition::conjugate() const { return Partition(conj_, n_, k_); }

bool Partition::leq(const Partition& o) const {
  if (!same_box(o)) throw std::domain_error("Partition: box mismatch in comparison");
  for (int i = 0; i < k_; ++i)
    if (parts_[i] > o.parts_[i]) return false;
  return true;
}

std::vector<Partition> Partition::covers() const {
  std::vector<Partition> out;
  for (int i = 0; i < k_; ++i) {
    const int cap = i == 0 ? n_ : parts_[i - 1];
    if (parts_[i] < cap) {
      std::vector<int> p(parts_);
      ++p[i];
      out.emplace_back(std::move(p), k_, n_);
    }
  }
  return out;
}

std::vector<int> Partition::box_word() const {
  std::vector<int> word;
  word.reserve(size_);
  for (int i = 1; i <= k_; ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) word.push_back(k_ - i + j);
  return word;
}

WeylElement Partition::weyl_element() const {
  const int m = k_ + n_;
  WeylElement w = WeylElement::identity(m);
  for (int idx : box_word()) w = w.compose(WeylElement::simple(idx, m));
  return WeylElement(w.window(), box_word());
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < k_; ++i) os << (i ? "," : "") << parts_[i];
  os << ")@" << k_ << "x" << n_;
  return os.str();
}

std::string Partition::json() const {
  std::ostringstream os;
  os << "{\"parts\":[";
  for (int i = 0; i < k_; ++i) os << (i ? "," : "") << parts_[i];
  os << "],\"k\":" << k_ << ",\"n\":" << n_ << "}";
  return os.str();
}

std::string Partition::young_ascii() const {
  std::ostringstream os;
  for (int i = 0; i < k_; ++i) {
    if (parts_[i] == 0) break;
    for (int j = 0; j < parts_[i]; ++j) os << "#";
    os << "\n";
  }
  return os.str();
}

namespace {

void enumerate_rec(int row, int cap, int k, int n, std::vector<int>& acc,
                   std::vector<Partition>& out) {
  if (row == k) {
    out.emplace_back(acc, k, n);
    return;
  }
  for (int a = 0; a <= cap; ++a) {
    acc[row] = a;
    enumerate_rec(row + 1, a, k, n, acc, out);
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k, int n, PartitionFilter filter) {
  require_stable_range(k, n);
  std::vector<Partition> all;
  std::vector<int> acc(k, 0);
  enumerate_rec(0, n, k, n, acc, all);
  std::sort(all.begin(), all.end());
  if (filter == PartitionFilter::all) return all;
  std::vector<Partition> sym;
  for (const Partition& p : all)
    if (p.symmetric()) sym.push_back(p);
  return sym;
}

std::vector<Partition> symmetric_partitions_with_grade(int k, int n, int r) {
  std::vector<Partition> out;
  for (const Partition& p : enumerate_partitions(k, n, PartitionFilter::symmetric))
    if (p.grade() == r) out.push_back(p);
  return out;
}

std::vector<Partition> partitions_of_size(int k, int n, int p) {
  std::vector<Partition> out;
  for (const Partition& a : enumerate_partitions(k, n))
    if (a.size() == p) out.push_back(a);
  return out;
}

bool is_k_balanced(const WeylElement& w, int k) {
  if (!w.plain()) throw std::domain_error("is_k_balanced: plain permutation required");
  const int m = w.rank();
  if (k < 1 || 2 * k > m)
    throw std::domain_error("is_k_balanced: need 1 <= k and 2k <= m");
  for (int i = 0; i <= k - 1; ++i)
    if (w(k - i) > k && w(k + i + 1) > k) return false;
  return true;
}

}  // namespace kdirac
