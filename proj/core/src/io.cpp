#include "kdirac/io.hpp"

#include <functional>
#include <sstream>

#include "json.hpp"

namespace kdirac::io {

using nlohmann::json;

namespace {

json header(const char* what, json params) {
  json j;
  j["tool"] = "kdirac";
  j["version"] = kVersion;
  j["object"] = what;
  j["params"] = std::move(params);
  return j;
}

json partition_json(const Partition& a) {
  return json{{"parts", a.parts()}, {"k", a.k()}, {"n", a.n()}};
}

json weight_json(const Weight& w) {
  std::vector<std::string> coords;
  coords.reserve(w.rank());
  for (const Rational& c : w.coords()) coords.push_back(to_string(c));
  return json{{"k", w.k()}, {"n", w.n()}, {"coords", coords}};
}

std::string int_str(const Int& v) { return v.str(); }

}  // namespace

const char* variant_name(JetVariant v) { return v == JetVariant::sym ? "sym" : "full"; }

std::string partition_line(const Partition& a) {
  std::ostringstream os;
  os << a.str() << " |a|=" << a.size() << " d=" << a.durfee() << " q=" << a.excess()
     << " r=" << a.grade() << " b=(";
  const auto& b = a.conjugate_parts();
  for (std::size_t j = 0; j < b.size(); ++j) os << (j ? "," : "") << b[j];
  os << ") symmetric=" << (a.symmetric() ? "yes" : "no");
  return os.str();
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << "s" << word[i];
  return os.str();
}

std::string weyl_line(const Partition& a) {
  std::ostringstream os;
  os << a.str() << " w = " << word_str(a.box_word()) << " len=" << a.weyl_element().length();
  return os.str();
}

std::string partitions_text(const std::vector<Partition>& ps, bool diagrams) {
  std::ostringstream os;
  for (const Partition& p : ps) {
    os << partition_line(p) << "\n";
    if (diagrams) os << p.young_ascii();
  }
  return os.str();
}

std::string partitions_csv(const std::vector<Partition>& ps) {
  std::ostringstream os;
  os << "partition,size,d,q,r,conjugate,symmetric\n";
  for (const Partition& p : ps) {
    os << "\"" << p.str() << "\"," << p.size() << "," << p.durfee() << "," << p.excess()
       << "," << p.grade() << ",\"(";
    const auto& b = p.conjugate_parts();
    for (std::size_t j = 0; j < b.size(); ++j) os << (j ? "," : "") << b[j];
    os << ")\"," << (p.symmetric() ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string partitions_json(const std::vector<Partition>& ps, int k, int n) {
  json j = header("partitions", {{"k", k}, {"n", n}});
  j["partitions"] = json::array();
  for (const Partition& p : ps) {
    json e = partition_json(p);
    e["size"] = p.size();
    e["d"] = p.durfee();
    e["q"] = p.excess();
    e["r"] = p.grade();
    e["conjugate"] = p.conjugate_parts();
    e["symmetric"] = p.symmetric();
    j["partitions"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string weyl_text(int k, int n) {
  std::ostringstream os;
  os << "rho = " << rho(k, n).str() << "\n";
  os << "lambda = " << lambda_weight(k, n).str() << "\n";
  os << "lambda+rho = " << (lambda_weight(k, n) + rho(k, n)).str() << "\n";
  for (const Partition& a : enumerate_partitions(k, n)) os << weyl_line(a) << "\n";
  return os.str();
}

std::string weyl_json(int k, int n) {
  json j = header("weyl", {{"k", k}, {"n", n}});
  j["rho"] = weight_json(rho(k, n));
  j["lambda"] = weight_json(lambda_weight(k, n));
  j["elements"] = json::array();
  for (const Partition& a : enumerate_partitions(k, n)) {
    const WeylElement w = a.weyl_element();
    j["elements"].push_back(json{{"partition", partition_json(a)},
                                 {"word", a.box_word()},
                                 {"window", w.window()},
                                 {"length", w.length()}});
  }
  return j.dump(2) + "\n";
}

std::string hasse_dot(const HasseGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  \"" << g.labels[i] << "\";\n";
  for (const HasseEdge& e : g.edges)
    os << "  \"" << g.labels[e.source] << "\" -> \"" << g.labels[e.target]
       << "\" [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string hasse_json(const HasseGraph& g, const std::string& what) {
  json j = header(what.c_str(), json::object());
  j["nodes"] = json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    j["nodes"].push_back(json{{"label", g.labels[i]},
                              {"window", g.nodes[i].window()},
                              {"length", g.nodes[i].length()}});
  j["edges"] = json::array();
  for (const HasseEdge& e : g.edges)
    j["edges"].push_back(json{{"source", e.source}, {"target", e.target}, {"label", e.label}});
  return j.dump(2) + "\n";
}

std::string bgg_text(const RelativeBggGraph& g) {
  std::ostringstream os;
  os << "relative BGG graph k=" << g.k << " n=" << g.n << "\n";
  os << "lambda = " << lambda_weight(g.k, g.n).str() << "\n";
  os << "lambda+rho = " << (lambda_weight(g.k, g.n) + rho(g.k, g.n)).str() << "\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << g.nodes[i].str() << " lambda_a = " << g.weights[i].str() << "\n";
  for (const BggArrow& a : g.arrows)
    os << g.nodes[a.source].str() << " -> " << g.nodes[a.target].str() << "\n";
  return os.str();
}

std::string bgg_dot(const RelativeBggGraph& g) {
  std::ostringstream os;
  os << "digraph bgg {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  \"" << g.nodes[i].str() << "\" [label=\"" << g.nodes[i].str() << "\\n"
       << g.weights[i].str() << "\"];\n";
  for (const BggArrow& a : g.arrows)
    os << "  \"" << g.nodes[a.source].str() << "\" -> \"" << g.nodes[a.target].str()
       << "\";\n";
  os << "}\n";
  return os.str();
}

std::string bgg_json(const RelativeBggGraph& g) {
  json j = header("bgg", {{"k", g.k}, {"n", g.n}});
  j["nodes"] = json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    j["nodes"].push_back(json{{"partition", partition_json(g.nodes[i])},
                              {"lambda_a", weight_json(g.weights[i])}});
  j["edges"] = json::array();
  for (const BggArrow& a : g.arrows)
    j["edges"].push_back(json{{"source", a.source}, {"target", a.target}});
  return j.dump(2) + "\n";
}

namespace {

void images_rows(int k, int n,
                 const std::function<void(const Partition&, const DirectImage&)>& emit) {
  for (const Partition& a : enumerate_partitions(k, n)) emit(a, direct_image(a));
}

}  // namespace

std::string images_text(int k, int n) {
  std::ostringstream os;
  images_rows(k, n, [&](const Partition& a, const DirectImage& d) {
    os << a.str() << (a.symmetric() ? " symmetric " : " ");
    if (d.vanishes())
      os << "-> 0\n";
    else
      os << "-> mu = " << d.mu->str() << " degree=" << d.degree
         << " dim=" << levi_dimension(*d.mu) << "\n";
  });
  return os.str();
}

std::string images_csv(int k, int n) {
  std::ostringstream os;
  os << "partition,symmetric,mu,degree,dim\n";
  images_rows(k, n, [&](const Partition& a, const DirectImage& d) {
    os << "\"" << a.str() << "\"," << (a.symmetric() ? "yes" : "no") << ",";
    if (d.vanishes())
      os << "0,,\n";
    else
      os << "\"" << d.mu->str() << "\"," << d.degree << ","
         << int_str(levi_dimension(*d.mu)) << "\n";
  });
  return os.str();
}

std::string images_json(int k, int n) {
  json j = header("images", {{"k", k}, {"n", n}});
  j["images"] = json::array();
  images_rows(k, n, [&](const Partition& a, const DirectImage& d) {
    json e{{"partition", partition_json(a)}, {"symmetric", a.symmetric()}};
    if (d.vanishes()) {
      e["vanishes"] = true;
    } else {
      e["vanishes"] = false;
      e["mu"] = weight_json(*d.mu);
      e["degree"] = d.degree;
      e["dim"] = int_str(levi_dimension(*d.mu));
    }
    j["images"].push_back(std::move(e));
  });
  return j.dump(2) + "\n";
}

std::string complex_text(const DiracComplex& c) {
  std::ostringstream os;
  os << "k-Dirac complex graph k=" << c.k << " n=" << c.n << "\n";
  for (std::size_t j = 0; j < c.slots.size(); ++j) {
    os << "slot " << j << ":\n";
    for (int idx : c.slots[j]) {
      const ComplexNode& node = c.nodes[idx];
      os << "  " << node.a.str() << " mu = " << node.mu.str()
         << " degree=" << node.degree << " dim=" << int_str(node.dim) << "\n";
    }
  }
  for (const ComplexArrow& a : c.arrows)
    os << c.nodes[a.source].a.str() << " -> " << c.nodes[a.target].a.str()
       << " order=" << a.order << "\n";
  return os.str();
}

std::string complex_dot(const DiracComplex& c) {
  std::ostringstream os;
  os << "digraph dirac {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const ComplexNode& node : c.nodes)
    os << "  \"" << node.a.str() << "\" [label=\"" << node.a.str() << "\\nmu="
       << node.mu.str() << "\\ndim=" << int_str(node.dim) << "\"];\n";
  for (const ComplexArrow& a : c.arrows)
    os << "  \"" << c.nodes[a.source].a.str() << "\" -> \"" << c.nodes[a.target].a.str()
       << "\" [label=\"order=" << a.order << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string complex_json(const DiracComplex& c) {
  json j = header("complex", {{"k", c.k}, {"n", c.n}});
  j["slots"] = c.slots;
  j["nodes"] = json::array();
  for (const ComplexNode& node : c.nodes)
    j["nodes"].push_back(json{{"partition", partition_json(node.a)},
                              {"mu", weight_json(node.mu)},
                              {"degree", node.degree},
                              {"dim", int_str(node.dim)}});
  j["arrows"] = json::array();
  for (const ComplexArrow& a : c.arrows)
    j["arrows"].push_back(json{{"source", a.source}, {"target", a.target}, {"order", a.order}});
  return j.dump(2) + "\n";
}

std::string jets_text(int k, int n, long r, JetVariant v) {
  std::ostringstream os;
  os << "jet sequence k=" << k << " n=" << n << " r=" << r << " variant=" << variant_name(v)
     << "\n";
  const std::vector<Int> seq = jet_sequence(k, n, r, v);
  for (std::size_t j = 0; j < seq.size(); ++j)
    os << "j=" << j << ": " << int_str(seq[j]) << "\n";
  const RankReport rep = rank_feasibility(seq);
  os << "ranks:";
  for (const Int& x : rep.ranks) os << " " << int_str(x);
  os << "\nkernel0 = " << int_str(rep.kernel0) << "\nfeasible = " << (rep.ok ? "yes" : "no")
     << "\n";
  return os.str();
}

std::string jets_csv(int k, int n, long r, JetVariant v) {
  std::ostringstream os;
  os << "j,dim\n";
  const std::vector<Int> seq = jet_sequence(k, n, r, v);
  for (std::size_t j = 0; j < seq.size(); ++j) os << j << "," << int_str(seq[j]) << "\n";
  return os.str();
}

std::string jets_json(int k, int n, long r, JetVariant v) {
  json j = header("jets", {{"k", k}, {"n", n}, {"r", r}, {"variant", variant_name(v)}});
  const std::vector<Int> seq = jet_sequence(k, n, r, v);
  std::vector<std::string> dims;
  for (const Int& x : seq) dims.push_back(int_str(x));
  j["sequence"] = dims;
  const RankReport rep = rank_feasibility(seq);
  std::vector<std::string> ranks;
  for (const Int& x : rep.ranks) ranks.push_back(int_str(x));
  j["ranks"] = ranks;
  j["kernel0"] = int_str(rep.kernel0);
  j["feasible"] = rep.ok;
  return j.dump(2) + "\n";
}

std::string table_text(const DimTable& t) {
  std::ostringstream os;
  os << t.label << " page k=" << t.k << " n=" << t.n << " r=" << t.r
     << " variant=" << variant_name(t.variant) << "\n";
  for (int q = t.rows - 1; q >= 0; --q) {
    os << "q=" << q << ":";
    for (int p = 0; p < t.cols; ++p) os << " " << int_str(t.at(p, q));
    os << "\n";
  }
  return os.str();
}

std::string table_csv(const DimTable& t) {
  std::ostringstream os;
  os << "q\\p";
  for (int p = 0; p < t.cols; ++p) os << "," << p;
  os << "\n";
  for (int q = t.rows - 1; q >= 0; --q) {
    os << q;
    for (int p = 0; p < t.cols; ++p) os << "," << int_str(t.at(p, q));
    os << "\n";
  }
  return os.str();
}

std::string table_json(const DimTable& t) {
  json j = header("e1_page",
                  {{"k", t.k}, {"n", t.n}, {"r", t.r}, {"variant", variant_name(t.variant)}});
  j["rows"] = t.rows;
  j["cols"] = t.cols;
  j["entries"] = json::array();
  for (const auto& [pq, dim] : t.entries)
    j["entries"].push_back(json{{"p", pq.first}, {"q", pq.second}, {"dim", int_str(dim)}});
  return j.dump(2) + "\n";
}

std::string euler_json(const EulerIdentity& e, int k, int n, long r, JetVariant v) {
  json j = header("euler_identity",
                  {{"k", k}, {"n", n}, {"r", r}, {"variant", variant_name(v)}});
  j["lhs"] = int_str(e.lhs);
  j["rhs"] = int_str(e.rhs);
  j["ok"] = e.ok;
  j["singular_terms"] = e.rhs_report.singular_terms;
  j["terms"] = json::array();
  for (const EulerTerm& t : e.rhs_report.terms) {
    json te{{"s3", t.s3}, {"mu", t.mu}, {"mult", int_str(t.mult)}};
    if (t.singular) {
      te["degree"] = "singular";
    } else {
      te["degree"] = t.degree;
      te["dim"] = int_str(t.dim);
    }
    j["terms"].push_back(std::move(te));
  }
  return j.dump(2) + "\n";
}

}  // namespace kdirac::io
