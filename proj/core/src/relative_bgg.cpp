#include "kdirac/relative_bgg.hpp"

#include <algorithm>
#include <map>

#include "kdirac/direct_images.hpp"

namespace kdirac {

Weight lambda_weight(int k, int n) {
  require_stable_range(k, n);
  std::vector<Rational> c(k + n, Rational(1 - 2 * n, 2));
  return Weight(std::move(c), k, n);
}

Weight lambda_a(const Partition& a) {
  const int k = a.k(), n = a.n();
  Weight lam = lambda_weight(k, n);
  std::vector<Rational> c(lam.coords());
  for (int i = 0; i < k; ++i) c[i] -= a.parts()[k - 1 - i];
  for (int j = 0; j < n; ++j) c[k + j] += a.conjugate_parts()[j];
  return Weight(std::move(c), k, n);
}

RelativeBggGraph build_bgg_graph(int k, int n) {
  RelativeBggGraph g;
  g.k = k;
  g.n = n;
  g.nodes = enumerate_partitions(k, n);
  g.weights.reserve(g.nodes.size());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    g.weights.push_back(lambda_a(g.nodes[i]));
    index[g.nodes[i].parts()] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (const Partition& c : g.nodes[i].covers())
      g.arrows.push_back({static_cast<int>(i), index.at(c.parts())});
  return g;
}

Int levi_q_dimension(const Weight& w) {
  const int k = w.k();
  std::vector<Rational> head(w.coords().begin(), w.coords().begin() + k);
  std::vector<Rational> tail(w.coords().begin() + k, w.coords().end());
  return gl_weyl_dimension(head) * gl_weyl_dimension(tail);
}

bool kostant_dimension_check(int k, int n, int p) {
  require_stable_range(k, n);
  if (p < 0 || p > n * k) throw std::domain_error("kostant_dimension_check: 0 <= p <= nk");
  Int total = 0;
  for (const Partition& a : partitions_of_size(k, n, p))
    total += levi_q_dimension(lambda_a(a));
  return total == binomial(static_cast<long>(n) * k, p);
}

}  // namespace kdirac
