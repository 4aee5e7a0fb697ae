#include "kdirac/direct_images.hpp"

#include <algorithm>
#include <map>

#include "kdirac/relative_bgg.hpp"

namespace kdirac {

namespace {

long pair_count(long n) { return n * (n - 1) / 2; }

std::vector<Rational> rho_dn(int n) {
  std::vector<Rational> r(n);
  for (int j = 0; j < n; ++j) r[j] = n - 1 - j;
  return r;
}

}  // namespace

DirectImage direct_image(const Partition& a) {
  const int k = a.k(), n = a.n();
  require_stable_range(k, n);
  if (!a.symmetric()) return {};

  // Sign rule: + exactly when durfee(a) and n have the same parity.
  const bool plus = (a.durfee() - n) % 2 == 0;
  std::vector<Rational> c(k + n);
  for (int i = 0; i < k; ++i)
    c[i] = Rational(1 - 2 * n, 2) - a.parts()[k - 1 - i];
  for (int j = 0; j < n; ++j) c[k + j] = Rational(1, 2);
  if (!plus) c[k + n - 1] = Rational(-1, 2);

  DirectImage d;
  d.mu = Weight(std::move(c), k, n);
  d.degree = static_cast<int>(pair_count(n)) - a.excess();
  return d;
}

DirectImage direct_image_bruteforce(const Partition& a) {
  const int k = a.k(), n = a.n();
  require_stable_range(k, n);
  if (n > 4) throw capacity_error("direct_image_bruteforce: W(D_n) search is limited to n <= 4");

  const Weight lam = lambda_a(a);
  const Weight shifted = lam + rho(k, n);

  // Singular infinitesimal character on the fiber: two of the last n
  // coordinates share an absolute value.
  std::vector<Rational> absvals;
  for (int j = 0; j < n; ++j) absvals.push_back(abs(shifted[k + j]));
  std::sort(absvals.begin(), absvals.end());
  const bool singular =
      std::adjacent_find(absvals.begin(), absvals.end()) != absvals.end();

  // Generators s_{k+1}, ..., s_{k+n} restrict to W(D_n) on the fiber block.
  std::vector<int> gens_n;
  for (int i = 1; i <= n; ++i) gens_n.push_back(i);
  const std::vector<WeylElement> wdn = generate_group(gens_n, n);

  std::vector<std::pair<Weight, long>> hits;
  for (const WeylElement& w : wdn) {
    std::vector<int> window(k + n);
    for (int i = 0; i < k; ++i) window[i] = i + 1;
    for (int j = 0; j < n; ++j) {
      const int t = w.window()[j];
      window[k + j] = t > 0 ? k + t : -(k - t);  // -t = |t| here
    }
    const WeylElement embedded{std::move(window)};
    const Weight mu = affine_action(embedded, lam);
    if (is_dominant(mu, ParabolicFlavor::P)) hits.emplace_back(mu, w.length());
  }

  if (singular) {
    if (!hits.empty())
      throw std::logic_error("direct_image_bruteforce: singular weight has a dominant orbit point");
    return {};
  }
  if (hits.size() != 1)
    throw std::logic_error("direct_image_bruteforce: expected exactly one dominant orbit point");

  DirectImage d;
  d.mu = hits.front().first;
  d.degree = static_cast<int>(hits.front().second);
  return d;
}

Int gl_weyl_dimension(const std::vector<Rational>& mu) {
  const int r = static_cast<int>(mu.size());
  for (int i = 0; i + 1 < r; ++i) {
    const Rational d = mu[i] - mu[i + 1];
    if (d < 0 || !is_integer(d))
      throw std::domain_error("gl_weyl_dimension: weight is not gl-dominant");
  }
  Rational prod(1);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      prod *= (mu[i] - mu[j] + (j - i)) / Rational(j - i);
  if (!is_integer(prod))
    throw std::logic_error("gl_weyl_dimension: non-integral product");
  return to_int(prod);
}

Int so_even_weyl_dimension(const std::vector<Rational>& mu) {
  const int n = static_cast<int>(mu.size());
  if (n >= 2) {
    for (int i = 0; i + 2 < n; ++i) {
      const Rational d = mu[i] - mu[i + 1];
      if (d < 0 || !is_integer(d))
        throw std::domain_error("so_even_weyl_dimension: weight is not D_n-dominant");
    }
    if (mu[n - 2] < abs(mu[n - 1]) || !is_integer(mu[n - 2] - mu[n - 1]))
      throw std::domain_error("so_even_weyl_dimension: weight is not D_n-dominant");
  }
  const std::vector<Rational> rho = rho_dn(n);
  Rational prod(1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rational li = mu[i] + rho[i], lj = mu[j] + rho[j];
      prod *= (li * li - lj * lj) / (rho[i] * rho[i] - rho[j] * rho[j]);
    }
  }
  if (!is_integer(prod))
    throw std::logic_error("so_even_weyl_dimension: non-integral product");
  return to_int(prod);
}

Int levi_dimension(const Weight& mu) {
  if (!is_dominant(mu, ParabolicFlavor::P))
    throw std::domain_error("levi_dimension: weight is not P-dominant: " + mu.str());
  const int k = mu.k();
  std::vector<Rational> head(mu.coords().begin(), mu.coords().begin() + k);
  return gl_weyl_dimension(head) * so_even_weyl_dimension(mu.fiber());
}

std::optional<BbwResult> bbw_Dn(const std::vector<Rational>& fiber_weight) {
  const int n = static_cast<int>(fiber_weight.size());
  if (n < 2) throw std::domain_error("bbw_Dn: rank must be at least 2");
  for (int i = 0; i + 1 < n; ++i)
    if (!is_integer(fiber_weight[i] - fiber_weight[i + 1]))
      throw std::domain_error("bbw_Dn: weight is not D_n-integral");
  if (!is_integer(2 * fiber_weight[n - 1]))
    throw std::domain_error("bbw_Dn: weight is not D_n-integral");

  const std::vector<Rational> rho = rho_dn(n);
  std::vector<Rational> l(n);
  for (int j = 0; j < n; ++j) l[j] = fiber_weight[j] + rho[j];

  std::vector<Rational> absvals(n);
  for (int j = 0; j < n; ++j) absvals[j] = abs(l[j]);
  {
    std::vector<Rational> sorted(absvals);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return std::nullopt;  // singular: some reflection fixes the shift
  }

  // Slot of each source coordinate after sorting |values| descending.
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return absvals[x] > absvals[y]; });
  std::vector<int> slot(n);
  for (int p = 0; p < n; ++p) slot[order[p]] = p;

  // Target: all positive except that the last slot carries the product of
  // the source signs (an even number of flips is available).
  int sign_product = 1;
  for (int j = 0; j < n; ++j)
    if (l[j] < 0) sign_product = -sign_product;

  std::vector<int> window(n);
  int flips = 0;
  for (int j = 0; j < n; ++j) {
    const int target_sign = slot[j] == n - 1 ? sign_product : 1;
    const int source_sign = l[j] < 0 ? -1 : 1;
    const int w = source_sign * target_sign;  // w(l_j) must hit the target sign
    window[j] = w * (slot[j] + 1);
    if (w < 0) ++flips;
  }
  if (flips % 2 != 0) {
    // Only possible when some l_j = 0; flip that slot's sign.
    for (int j = 0; j < n; ++j) {
      if (l[j] == 0) {
        window[j] = -window[j];
        ++flips;
        break;
      }
    }
    if (flips % 2 != 0)
      throw std::logic_error("bbw_Dn: parity fix failed");
  }

  const WeylElement w{window};
  BbwResult res;
  res.degree = static_cast<int>(w.length());
  res.dominant.resize(n);
  for (int j = 0; j < n; ++j) {
    const int t = window[j];
    res.dominant[std::abs(t) - 1] = (t > 0 ? l[j] : -l[j]) - rho[std::abs(t) - 1];
  }
  return res;
}

}  // namespace kdirac
