#include "kdirac/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

namespace kdirac {

namespace {

void validate_window(const std::vector<int>& w) {
  const int m = static_cast<int>(w.size());
  if (m == 0) throw std::domain_error("WeylElement: empty window");
  std::vector<char> seen(m, 0);
  for (int v : w) {
    const int j = std::abs(v);
    if (j < 1 || j > m || seen[j - 1])
      throw std::domain_error("WeylElement: window is not a signed permutation");
    seen[j - 1] = 1;
  }
}

long inversions(const std::vector<int>& v) {
  long count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++count;
  return count;
}

}  // namespace

// Length with respect to the generators s_1..s_m of simple(): adjacent
// transpositions plus the negate-swap of the last two slots.  The standard
// type-D count (inversions plus negative-sum pairs) is stated for the
// convention where the special generator acts on the *first* two slots, so
// conjugate by the coordinate reversal first.  For plain windows this
// reduces to the inversion count.
long coxeter_length(const std::vector<int>& window) {
  const int m = static_cast<int>(window.size());
  std::vector<int> v(m);
  for (int i = 0; i < m; ++i) {
    const int t = window[m - 1 - i];
    const int j = std::abs(t);
    v[i] = (t > 0 ? 1 : -1) * (m + 1 - j);
  }
  long nsp = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (v[i] + v[j] < 0) ++nsp;
  return inversions(v) + nsp;
}

WeylElement::WeylElement(std::vector<int> window) : window_(std::move(window)) {
  validate_window(window_);
  length_ = coxeter_length(window_);
}

WeylElement::WeylElement(std::vector<int> window, std::vector<int> word)
    : window_(std::move(window)), word_(std::move(word)) {
  validate_window(window_);
  length_ = coxeter_length(window_);
  if (length_ != static_cast<long>(word_->size()))
    throw std::logic_error("WeylElement: word length disagrees with Coxeter length");
}

WeylElement WeylElement::identity(int m) {
  std::vector<int> w(m);
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  return WeylElement(std::move(w), {});
}

WeylElement WeylElement::simple(int i, int m) {
  if (i < 1 || i > m || m < 2)
    throw std::domain_error("WeylElement::simple: index out of range");
  std::vector<int> w(m);
  for (int t = 0; t < m; ++t) w[t] = t + 1;
  if (i < m) {
    w[i - 1] = i + 1;
    w[i] = i;
  } else {
    w[m - 2] = -m;
    w[m - 1] = -(m - 1);
  }
  return WeylElement(std::move(w), {i});
}

int WeylElement::image(int x) const { return std::abs(window_[x - 1]); }

bool WeylElement::plain() const {
  return std::all_of(window_.begin(), window_.end(), [](int v) { return v > 0; });
}

int WeylElement::negatives() const {
  return static_cast<int>(std::count_if(window_.begin(), window_.end(),
                                        [](int v) { return v < 0; }));
}

WeylElement WeylElement::compose(const WeylElement& rhs) const {
  if (rank() != rhs.rank()) throw std::domain_error("WeylElement: rank mismatch");
  std::vector<int> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int t = rhs.window_[i];
    const int a = window_[std::abs(t) - 1];
    w[i] = t > 0 ? a : -a;
  }
  return WeylElement(std::move(w));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int t = window_[i];
    const int j = std::abs(t) - 1;
    w[j] = t > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
  }
  return WeylElement(std::move(w));
}

Weight WeylElement::apply(const Weight& c) const {
  if (rank() != c.rank()) throw std::domain_error("WeylElement: rank mismatch");
  std::vector<Rational> out(c.rank());
  for (int i = 0; i < rank(); ++i) {
    const int t = window_[i];
    out[std::abs(t) - 1] = t > 0 ? c[i] : -c[i];
  }
  return Weight(std::move(out), c.k(), c.n());
}

namespace {

// Right-multiply by s_i: touch only the affected window slots.
std::vector<int> right_multiply(const std::vector<int>& w, int i) {
  std::vector<int> out(w);
  const int m = static_cast<int>(w.size());
  if (i < m) {
    std::swap(out[i - 1], out[i]);
  } else {
    out[m - 2] = -w[m - 1];
    out[m - 1] = -w[m - 2];
  }
  return out;
}

void check_capacity(const std::vector<int>& gens, int m) {
  const bool type_d = std::find(gens.begin(), gens.end(), m) != gens.end();
  if (type_d && m > 4)
    throw capacity_error("generate_group: exhaustive W(D_m) enumeration is limited to m <= 4");
  if (!type_d && m > 7)
    throw capacity_error("generate_group: exhaustive S_m enumeration is limited to m <= 7");
}

}  // namespace

std::vector<WeylElement> generate_group(const std::vector<int>& generator_indices, int m) {
  for (int g : generator_indices)
    if (g < 1 || g > m) throw std::domain_error("generate_group: generator index out of range");
  check_capacity(generator_indices, m);

  std::vector<int> id(m);
  for (int i = 0; i < m; ++i) id[i] = i + 1;

  std::map<std::vector<int>, long> depth;
  std::map<std::vector<int>, std::vector<int>> words;
  std::deque<std::vector<int>> queue;
  depth[id] = 0;
  words[id] = {};
  queue.push_back(id);

  std::vector<WeylElement> out;
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    const long d = depth[cur];
    std::vector<int> word = words[cur];
    out.emplace_back(cur, word);
    if (out.back().length() != d)
      throw std::logic_error("generate_group: BFS depth disagrees with length formula");
    for (int g : generator_indices) {
      std::vector<int> next = right_multiply(cur, g);
      if (depth.find(next) != depth.end()) continue;
      depth[next] = d + 1;
      std::vector<int> w = word;
      w.push_back(g);
      words[next] = std::move(w);
      queue.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<WeylElement> minimal_coset_reps(const std::vector<int>& subgroup_gens,
                                            const std::vector<int>& group_gens,
                                            int m) {
  for (int s : subgroup_gens)
    if (std::find(group_gens.begin(), group_gens.end(), s) == group_gens.end())
      throw std::domain_error("minimal_coset_reps: subgroup generators must be group generators");

  const std::vector<WeylElement> group = generate_group(group_gens, m);
  const std::vector<WeylElement> sub = generate_group(subgroup_gens, m);

  // Key each right coset H*g by its lexicographically smallest window.
  std::map<std::vector<int>, const WeylElement*> best;
  for (const WeylElement& g : group) {
    std::vector<int> key = g.window();
    for (const WeylElement& h : sub) {
      std::vector<int> cand = h.compose(g).window();
      if (cand < key) key = std::move(cand);
    }
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), &g);
    } else if (g.length() < it->second->length()) {
      it->second = &g;
    } else if (g.length() == it->second->length() && g != *it->second) {
      throw std::logic_error("minimal_coset_reps: coset has two minimal-length elements");
    }
  }

  std::vector<WeylElement> reps;
  reps.reserve(best.size());
  for (const auto& [key, elt] : best) reps.push_back(*elt);
  return reps;
}

bool bruhat_leq(const WeylElement& a, const WeylElement& b) {
  if (!a.plain() || !b.plain())
    throw std::domain_error("bruhat_leq: implemented for plain permutations only");
  if (a.rank() != b.rank()) throw std::domain_error("bruhat_leq: rank mismatch");
  const int m = a.rank();
  // Dominance criterion: #{t <= i : a(t) >= j} <= same count for b, all i, j.
  for (int i = 1; i <= m; ++i) {
    int ca = 0, cb = 0;
    for (int j = m; j >= 1; --j) {
      // counts for threshold j accumulate as j decreases
      for (int t = 1; t <= i; ++t) {
        if (a(t) == j) ++ca;
        if (b(t) == j) ++cb;
      }
      if (ca > cb) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::pair<int, int>, bool>> as_reflection(const WeylElement& t) {
  const int m = t.rank();
  std::vector<int> moved;
  for (int x = 1; x <= m; ++x)
    if (t(x) != x) moved.push_back(x);
  if (moved.size() != 2) return std::nullopt;
  const int i = moved[0], j = moved[1];
  if (t(i) == j && t(j) == i) return std::make_pair(std::make_pair(i, j), false);
  if (t(i) == -j && t(j) == -i) return std::make_pair(std::make_pair(i, j), true);
  return std::nullopt;
}

HasseGraph bruhat_covers(const std::vector<WeylElement>& elements) {
  HasseGraph g;
  g.nodes = elements;
  g.labels.reserve(elements.size());
  for (const WeylElement& e : elements) {
    std::ostringstream os;
    for (std::size_t i = 0; i < e.window().size(); ++i)
      os << (i ? " " : "") << e.window()[i];
    g.labels.push_back(os.str());
  }
  for (std::size_t s = 0; s < elements.size(); ++s) {
    for (std::size_t d = 0; d < elements.size(); ++d) {
      if (elements[d].length() != elements[s].length() + 1) continue;
      const WeylElement t = elements[s].inverse().compose(elements[d]);
      const auto refl = as_reflection(t);
      if (!refl) continue;
      const auto [pair, negative] = *refl;
      std::ostringstream label;
      if (!negative && pair.second == pair.first + 1)
        label << "s" << pair.first;
      else if (negative && pair.second == pair.first + 1 && pair.second == t.rank())
        label << "s" << t.rank();
      else
        label << (negative ? "-(" : "(") << pair.first << " " << pair.second << ")";
      g.edges.push_back({static_cast<int>(s), static_cast<int>(d), label.str()});
    }
  }
  return g;
}

}  // namespace kdirac
