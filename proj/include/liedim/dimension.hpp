#ifndef LIEDIM_DIMENSION_HPP
#define LIEDIM_DIMENSION_HPP

#include <cmath>
#include <string>
#include <vector>

#include "liedim/bignat.hpp"
#include "liedim/pcomposition.hpp"

namespace liedim {

/// a_0, ..., a_{m_max} of the recurrence a_m = a_{m-1}^p + p^{2p^m - 1}(p-1),
/// a_{-1} = 0.  a_m counts the representatives at level p^m.
inline std::vector<BigNat> a_sequence(int p, int m_max) {
  require_prime(p);
  if (m_max < 0) throw std::invalid_argument("a_sequence: need m_max >= 0");
  std::vector<BigNat> out;
  BigNat prev = 0;
  BigNat pm = 1;  // p^m
  for (int m = 0; m <= m_max; ++m) {
    BigNat a = bignat_pow(prev, p) +
               bignat_pow(BigNat(p), (2 * pm - 1).convert_to<int64_t>()) * (p - 1);
    out.push_back(a);
    prev = a;
    pm *= p;
  }
  return out;
}

/// Exact dimension data for one pair (p,k) with p not dividing k.
///   N          = prod_{i=1}^{l-1} a_{kappa_i}   (empty product when l = 1)
///   dim_pf     = (p-1) (k-1)! N         dimension of the projective-free part
///                                       of the restricted module
///   dim_lie    = (pk-1)!
///   liemax_upper = dim_lie - dim_pf     upper bound for the maximal
///                                       projective submodule
struct DimensionReport {
  int p = 2;
  int64_t k = 1;
  PComposition kappa;
  std::vector<BigNat> a_values;  // a_{kappa_i} for i < l, the factors of N
  BigNat N;
  BigNat dim_pf;
  BigNat dim_lie;
  BigNat liemax_upper;
  std::string ratio;       // dim_pf / dim_lie, 30 significant digits
  BigNat sandwich_lo;      // a_{kappa_1}
  BigNat sandwich_hi;      // a_{kappa_1 + 1}
  bool sandwich_ok = true;
  double log_growth = 0.0;  // ln(N)/k, marked approximate
};

inline DimensionReport dimension_report(int p, int64_t k, int ratio_digits = 30) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("dimension_report: need k >= 1");
  if (k % p == 0)
    throw std::invalid_argument("dimension_report: k = " + std::to_string(k) +
                                " is divisible by p = " + std::to_string(p) +
                                "; the formula requires p not dividing k");
  DimensionReport r;
  r.p = p;
  r.k = k;
  r.kappa = p_adic_pcomposition(p, k);
  const int kappa1 = r.kappa.parts.front();
  const std::vector<BigNat> a = a_sequence(p, kappa1 + 1);
  r.N = 1;
  for (size_t i = 0; i + 1 < r.kappa.parts.size(); ++i) {
    r.a_values.push_back(a[static_cast<size_t>(r.kappa.parts[i])]);
    r.N *= r.a_values.back();
  }
  r.dim_pf = BigNat(p - 1) * factorial(k - 1) * r.N;
  r.dim_lie = factorial(int64_t{p} * k - 1);
  r.liemax_upper = r.dim_lie - r.dim_pf;
  r.ratio = ratio_decimal(r.dim_pf, r.dim_lie, ratio_digits);
  r.sandwich_lo = a[static_cast<size_t>(kappa1)];
  r.sandwich_hi = a[static_cast<size_t>(kappa1) + 1];
  // The two-sided bound concerns the non-empty product, i.e. l >= 2; the
  // only l = 1 case with p not dividing k is k = 1, where N = 1 vacuously.
  r.sandwich_ok = r.kappa.parts.size() == 1 ||
                  (r.sandwich_lo <= r.N && r.N <= r.sandwich_hi);
  r.log_growth = bignat_log(r.N == 0 ? BigNat(1) : r.N) / static_cast<double>(k);
  return r;
}

/// Reports for every k <= k_max with p not dividing k.
inline std::vector<DimensionReport> growth_table(int p, int64_t k_max, int ratio_digits = 30) {
  require_prime(p);
  if (k_max < 1) throw std::invalid_argument("growth_table: need k_max >= 1");
  std::vector<DimensionReport> out;
  for (int64_t k = 1; k <= k_max; ++k)
    if (k % p != 0) out.push_back(dimension_report(p, k, ratio_digits));
  return out;
}

}  // namespace liedim

#endif
