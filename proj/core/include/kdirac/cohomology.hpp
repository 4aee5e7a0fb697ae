#pragma once

#include <vector>

#include "kdirac/dirac_complex.hpp"

namespace kdirac {

// One Cauchy summand of S^r(C^k (x) C^n): the gl(k) factor contributes a
// multiplicity, the gl(n) factor a fiber weight shift.
struct CauchyTerm {
  std::vector<int> mu;           // partition of r, at most min(k,n) parts
  Int mult;                      // dim S_mu(C^k)
  std::vector<int> fiber_shift;  // mu padded to n entries
};

// S^r(C^k (x) C^n) = (+) over mu |- r with <= min(k,n) parts of
// S_mu(C^k) (x) S_mu(C^n).
std::vector<CauchyTerm> cauchy_decompose(long r, int k, int n);

struct EulerTerm {
  int s3 = 0;           // symmetric power of the trivial Lambda^2 C^k factor
  std::vector<int> mu;  // Cauchy partition
  Int mult;             // gl(k) multiplicity times the trivial-factor dimension
  bool singular = false;
  int degree = -1;      // BBW degree when regular
  Int dim;              // so(2n) dimension of the resulting module
};

struct FiberEulerReport {
  Int total;  // sum of (-1)^degree * mult * dim over regular terms
  std::vector<EulerTerm> terms;
  int singular_terms = 0;
};

// Euler characteristic of H^*(X_0, K_r) where K_r is the kernel bundle of
// the degree-r jet row: sym uses K_r = S^r G_2(lambda) with G_2 of fiber
// C^k (x) C^n; full adds the trivial S^{s3}(Lambda^2 C^k) factors with
// s2 + 2 s3 = r.  Each term is resolved by bbw_Dn.  Capacity n <= 4.
FiberEulerReport fiber_euler(int k, int n, long r, JetVariant variant);

struct EulerIdentity {
  Int lhs;  // alternating sum of the first-page table
  Int rhs;  // fiber Euler number
  bool ok = false;
  FiberEulerReport rhs_report;
};

EulerIdentity euler_identity_check(int k, int n, long r, JetVariant variant);

}  // namespace kdirac
