#pragma once

#include <string>

#include "kdirac/cohomology.hpp"
#include "kdirac/dirac_complex.hpp"
#include "kdirac/relative_bgg.hpp"

// Text, CSV, DOT and JSON renderings.  All output is byte-deterministic for
// fixed inputs: exact integers, rationals as "p/q", canonical node order.
namespace kdirac::io {

// "(4,3,1,0,0)@5x6 |a|=8 d=2 q=4 r=6 b=(3,2,2,1,0,0) symmetric=no"
std::string partition_line(const Partition& a);
// "s5 s6 s7 s8 s4 s5 s6 s3" ("e" for the empty word)
std::string word_str(const std::vector<int>& word);
// "(4,3,1,0,0)@5x6 w = s5 s6 ... len=8"
std::string weyl_line(const Partition& a);

std::string partitions_text(const std::vector<Partition>& ps, bool diagrams);
std::string partitions_csv(const std::vector<Partition>& ps);
std::string partitions_json(const std::vector<Partition>& ps, int k, int n);

std::string weyl_text(int k, int n);
std::string weyl_json(int k, int n);

std::string hasse_dot(const HasseGraph& g, const std::string& name);
std::string hasse_json(const HasseGraph& g, const std::string& what);

std::string bgg_text(const RelativeBggGraph& g);
std::string bgg_dot(const RelativeBggGraph& g);
std::string bgg_json(const RelativeBggGraph& g);

std::string images_text(int k, int n);
std::string images_csv(int k, int n);
std::string images_json(int k, int n);

std::string complex_text(const DiracComplex& c);
std::string complex_dot(const DiracComplex& c);
std::string complex_json(const DiracComplex& c);

std::string jets_text(int k, int n, long r, JetVariant v);
std::string jets_csv(int k, int n, long r, JetVariant v);
std::string jets_json(int k, int n, long r, JetVariant v);

std::string table_text(const DimTable& t);
std::string table_csv(const DimTable& t);
std::string table_json(const DimTable& t);

std::string euler_json(const EulerIdentity& e, int k, int n, long r, JetVariant v);

const char* variant_name(JetVariant v);

}  // namespace kdirac::io
