#include "kdirac/weight.hpp"

#include <ostream>
#include <sstream>

#include "kdirac/weyl.hpp"

namespace kdirac {

Int binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Int num = 1, den = 1;
  for (long i = 0; i < r; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

Int sym_power_dim(long dim, long power) {
  if (power < 0) return 0;
  if (dim == 0) return power == 0 ? 1 : 0;
  return binomial(dim + power - 1, power);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("rational_from_string: zero denominator");
  return Rational(num, den);
}

Weight::Weight(std::vector<Rational> coords, int k, int n)
    : coords_(std::move(coords)), k_(k), n_(n) {
  if (k_ < 1 || n_ < 1)
    throw std::domain_error("Weight: k and n must be positive");
  if (coords_.size() != static_cast<std::size_t>(k_ + n_))
    throw std::domain_error("Weight: coordinate count must equal k+n");
}

std::vector<Rational> Weight::fiber() const {
  return std::vector<Rational>(coords_.begin() + k_, coords_.end());
}

bool Weight::g_integral() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!is_integer(coords_[i] - coords_[i - 1])) return false;
  return is_integer(2 * coords_.back());
}

Weight Weight::operator+(const Weight& o) const {
  if (k_ != o.k_ || n_ != o.n_) throw std::domain_error("Weight: split mismatch in +");
  std::vector<Rational> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return Weight(std::move(c), k_, n_);
}

Weight Weight::operator-(const Weight& o) const {
  if (k_ != o.k_ || n_ != o.n_) throw std::domain_error("Weight: split mismatch in -");
  std::vector<Rational> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return Weight(std::move(c), k_, n_);
}

bool Weight::operator==(const Weight& o) const {
  return k_ == o.k_ && n_ == o.n_ && coords_ == o.coords_;
}

bool Weight::operator<(const Weight& o) const {
  if (k_ != o.k_) return k_ < o.k_;
  if (n_ != o.n_) return n_ < o.n_;
  return coords_ < o.coords_;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) {
    if (i == k_) os << " | ";
    else if (i > 0) os << ", ";
    os << coords_[i];
  }
  os << ")";
  return os.str();
}

std::string Weight::json() const {
  std::ostringstream os;
  os << "{\"k\":" << k_ << ",\"n\":" << n_ << ",\"coords\":[";
  for (int i = 0; i < rank(); ++i) {
    if (i > 0) os << ",";
    os << "\"" << coords_[i] << "\"";
  }
  os << "]}";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

Weight rho(int k, int n) {
  const int m = k + n;
  if (k < 1 || n < 1 || m < 4)
    throw std::domain_error("rho: rank m = k+n must be at least 4");
  std::vector<Rational> c(m);
  for (int i = 0; i < m; ++i) c[i] = m - 1 - i;
  return Weight(std::move(c), k, n);
}

Weight fundamental_weight(int i, int k, int n) {
  const int m = k + n;
  if (i < 1 || i > m) throw std::domain_error("fundamental_weight: index out of range");
  std::vector<Rational> c(m, Rational(0));
  if (i <= m - 2) {
    for (int t = 0; t < i; ++t) c[t] = 1;
  } else {
    for (int t = 0; t < m; ++t) c[t] = Rational(1, 2);
    if (i == m - 1) c[m - 1] = Rational(-1, 2);
  }
  return Weight(std::move(c), k, n);
}

Weight simple_reflection(int i, const Weight& w) {
  const int m = w.rank();
  if (i < 1 || i > m) throw std::domain_error("simple_reflection: index out of range");
  std::vector<Rational> c(w.coords());
  if (i < m) {
    std::swap(c[i - 1], c[i]);
  } else {
    Rational a = c[m - 2], b = c[m - 1];
    c[m - 2] = -b;
    c[m - 1] = -a;
  }
  return Weight(std::move(c), w.k(), w.n());
}

Weight affine_action(const WeylElement& w, const Weight& lambda) {
  if (w.rank() != lambda.rank())
    throw std::domain_error("affine_action: rank mismatch");
  const Weight r = rho(lambda.k(), lambda.n());
  return w.apply(lambda + r) - r;
}

bool is_dominant(const Weight& w, ParabolicFlavor flavor) {
  if (!w.g_integral())
    throw std::domain_error("is_dominant: weight is not g-integral: " + w.str());
  const int m = w.rank(), k = w.k();
  for (int i = 1; i <= m - 1; ++i) {
    if (i == k && flavor != ParabolicFlavor::R) continue;
    const Rational d = w[i - 1] - w[i];
    if (d < 0 || !is_integer(d)) return false;
  }
  if (flavor == ParabolicFlavor::P) {
    // 2*c_m is integral for any g-integral weight; the extra row condition
    // is c_{m-1} >= |c_m|.
    if (w[m - 2] < abs(w[m - 1])) return false;
  }
  return true;
}

}  // namespace kdirac
