#include "kdirac/dirac_complex.hpp"

#include <algorithm>

namespace kdirac {

namespace {

long pair_count(long n) { return n * (n - 1) / 2; }

}  // namespace

DiracComplex build_complex(int k, int n) {
  require_stable_range(k, n);
  DiracComplex c;
  c.k = k;
  c.n = n;
  const int jmax = k * (k + 1) / 2;
  c.slots.resize(jmax + 1);
  for (int j = 0; j <= jmax; ++j) {
    for (const Partition& a : symmetric_partitions_with_grade(k, n, j)) {
      const DirectImage d = direct_image(a);
      c.slots[j].push_back(static_cast<int>(c.nodes.size()));
      c.nodes.push_back({a, *d.mu, d.degree, levi_dimension(*d.mu)});
    }
  }
  for (int j = 0; j + 1 <= jmax; ++j) {
    for (int s : c.slots[j]) {
      for (int t : c.slots[j + 1]) {
        if (!c.nodes[s].a.lt(c.nodes[t].a)) continue;
        const int order = c.nodes[t].a.size() - c.nodes[s].a.size();
        if (order != 1 && order != 2)
          throw std::logic_error("build_complex: arrow order outside {1,2}");
        c.arrows.push_back({s, t, order});
      }
    }
  }
  return c;
}

Int graded_dim(const Weight& mu, long level, JetVariant variant) {
  if (level < 0) return 0;
  const long g1 = 2L * mu.n() * mu.k();
  const Int dim_v = levi_dimension(mu);
  if (variant == JetVariant::sym) return sym_power_dim(g1, level) * dim_v;
  const long g2 = pair_count(mu.k());
  Int total = 0;
  for (long j = 0; 2 * j <= level; ++j)
    total += sym_power_dim(g1, level - 2 * j) * sym_power_dim(g2, j);
  return total * dim_v;
}

std::vector<Int> jet_sequence(int k, int n, long r, JetVariant variant) {
  require_stable_range(k, n);
  if (r < 0) throw std::domain_error("jet_sequence: r >= 0 required");
  const int jmax = k * (k + 1) / 2;
  std::vector<Int> seq(jmax + 1, Int(0));
  for (int j = 0; j <= jmax; ++j)
    for (const Partition& a : symmetric_partitions_with_grade(k, n, j))
      seq[j] += graded_dim(*direct_image(a).mu, r - j - a.excess(), variant);
  return seq;
}

Int DimTable::at(int p, int q) const {
  auto it = entries.find({p, q});
  return it == entries.end() ? Int(0) : it->second;
}

DimTable e1_page(int k, int n, long r, JetVariant variant) {
  require_stable_range(k, n);
  if (r < 0) throw std::domain_error("e1_page: r >= 0 required");
  DimTable t;
  t.label = "E1";
  t.k = k;
  t.n = n;
  t.r = r;
  t.variant = variant;
  t.cols = k * k + 1;
  t.rows = static_cast<int>(pair_count(n)) + 1;
  for (const Partition& a : enumerate_partitions(k, n, PartitionFilter::symmetric)) {
    const DirectImage d = direct_image(a);
    const int p = a.size(), q = d.degree;
    const Int dim = graded_dim(*d.mu, r - p, variant);
    if (dim != 0) t.entries[{p, q}] += dim;
  }
  return t;
}

RankReport rank_feasibility(const std::vector<Int>& seq) {
  RankReport rep;
  const int len = static_cast<int>(seq.size());
  if (len == 0) {
    rep.ok = true;
    return rep;
  }
  rep.ranks.assign(len, Int(0));
  // rank of the map out of the last position is 0 (the sequence stops).
  for (int j = len - 2; j >= 0; --j) rep.ranks[j] = seq[j + 1] - rep.ranks[j + 1];
  rep.ok = true;
  for (int j = 0; j < len; ++j) {
    const Int hi = j + 1 < len ? std::min(seq[j], seq[j + 1]) : seq[j];
    if (rep.ranks[j] < 0 || rep.ranks[j] > hi) rep.ok = false;
  }
  rep.kernel0 = seq[0] - rep.ranks[0];
  if (rep.kernel0 < 0) rep.ok = false;
  return rep;
}

}  // namespace kdirac
