#ifndef LIEDIM_PCOMPOSITION_HPP
#define LIEDIM_PCOMPOSITION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "liedim/blocks.hpp"
#include "liedim/permutation.hpp"

namespace liedim {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

inline int64_t ipow(int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (int64_t{1} << 56) / base)
      throw std::overflow_error("ipow: value too large");
    r *= base;
  }
  return r;
}

/// Exponent sequence (lambda_1,...,lambda_s) such that each partial sum
/// sum_{i<=j} p^{lambda_i} is divisible by p^{lambda_j}.  The canonical
/// encoding is the exponents, not the part sizes p^lambda.
struct PComposition {
  int p = 2;
  std::vector<int> parts;

  int64_t total() const {
    int64_t s = 0;
    for (int e : parts) s += ipow(p, e);
    return s;
  }

  std::vector<int64_t> partial_sums() const {
    std::vector<int64_t> out;
    out.reserve(parts.size());
    int64_t s = 0;
    for (int e : parts) {
      s += ipow(p, e);
      out.push_back(s);
    }
    return out;
  }

  friend bool operator==(const PComposition& a, const PComposition& b) {
    return a.p == b.p && a.parts == b.parts;
  }
  friend bool operator!=(const PComposition& a, const PComposition& b) { return !(a == b); }
  friend bool operator<(const PComposition& a, const PComposition& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.parts < b.parts;
  }
};

/// Text form "p=2:[1,0,0]".
inline std::string to_string(const PComposition& c) {
  std::string out = "p=" + std::to_string(c.p) + ":[";
  for (size_t i = 0; i < c.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.parts[i]);
  }
  out += ']';
  return out;
}

/// Check the divisibility invariant; rejects with the first failing index
/// (1-based) in the message.
inline PComposition validate_pcomposition(int p, std::vector<int> parts) {
  require_prime(p);
  int64_t sum = 0;
  for (size_t j = 0; j < parts.size(); ++j) {
    if (parts[j] < 0) throw std::invalid_argument("p-composition: negative exponent at index " +
                                                  std::to_string(j + 1));
    int64_t pw = ipow(p, parts[j]);
    sum += pw;
    if (sum % pw != 0)
      throw std::invalid_argument("p-composition: partial sum " + std::to_string(sum) +
                                  " not divisible by p^" + std::to_string(parts[j]) +
                                  " at index " + std::to_string(j + 1));
  }
  return PComposition{p, std::move(parts)};
}

inline bool is_valid_pcomposition(int p, const std::vector<int>& parts) {
  try {
    validate_pcomposition(p, parts);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

/// The p-adic p-composition of r: digit b_i of the base-p expansion
/// contributes b_i parts equal to i, in weakly decreasing order.
inline PComposition p_adic_pcomposition(int p, int64_t r) {
  require_prime(p);
  if (r < 1) throw std::invalid_argument("p_adic_pcomposition: need r >= 1");
  std::vector<int> digits;
  for (int64_t v = r; v > 0; v /= p) digits.push_back(static_cast<int>(v % p));
  std::vector<int> parts;
  for (int e = static_cast<int>(digits.size()) - 1; e >= 0; --e)
    for (int c = 0; c < digits[static_cast<size_t>(e)]; ++c) parts.push_back(e);
  return PComposition{p, std::move(parts)};
}

/// All p-compositions of r, each exactly once.  Extension is by the largest
/// legal exponent first, so the output is deterministic and begins with the
/// shortest compositions; an exponent e may follow partial sum S exactly when
/// p^e divides S and S + p^e <= r.
inline std::vector<PComposition> enumerate_pcompositions(int p, int64_t r,
                                                         size_t budget = 1000000) {
  require_prime(p);
  if (r < 1) throw std::invalid_argument("enumerate_pcompositions: need r >= 1");
  std::vector<PComposition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int64_t sum) -> void {
    if (sum == r) {
      if (out.size() >= budget)
        throw BudgetExceeded("enumerate_pcompositions: more than " + std::to_string(budget) +
                             " compositions");
      out.push_back(PComposition{p, cur});
      return;
    }
    int emax = 0;
    while (ipow(p, emax + 1) <= r - sum) ++emax;
    for (int e = emax; e >= 0; --e) {
      if (sum % ipow(p, e) != 0) continue;
      cur.push_back(e);
      self(self, sum + ipow(p, e));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// True iff mu splits into consecutive segments, the i-th being a
/// p-composition of p^{lambda_i}.  The split is forced by the running sums.
inline bool is_refinement(const PComposition& mu, const PComposition& lambda) {
  if (mu.p != lambda.p) throw std::invalid_argument("is_refinement: mismatched p");
  const int p = mu.p;
  size_t j = 0;
  for (int le : lambda.parts) {
    const int64_t target = ipow(p, le);
    int64_t seg = 0;
    while (seg < target) {
      if (j >= mu.parts.size()) return false;
      int64_t pw = ipow(p, mu.parts[j]);
      if (seg % pw != 0) return false;  // segment must itself be a p-composition
      seg += pw;
      ++j;
    }
    if (seg != target) return false;
  }
  return j == mu.parts.size();
}

/// The order-p fixed-point-free element of S_{p*total} realizing lambda:
/// on the r-th window of p^{lambda_r + 1} points, a lifted p-cycle
/// pi^[p^{lambda_r}].
inline Permutation element_of_composition(const PComposition& lambda) {
  validate_pcomposition(lambda.p, lambda.parts);
  const int p = lambda.p;
  const int64_t n64 = int64_t{p} * lambda.total();
  if (n64 > 1 << 22) throw BudgetExceeded("element_of_composition: degree too large");
  const int n = static_cast<int>(n64);
  std::vector<int32_t> img(static_cast<size_t>(n));
  std::vector<int32_t> pi_img(static_cast<size_t>(p));
  for (int j = 0; j < p; ++j) pi_img[static_cast<size_t>(j)] = static_cast<int32_t>((j + 1) % p);
  Permutation pi = Permutation::from_images0(std::move(pi_img));
  Permutation g(n);
  int64_t offset = 0;
  for (int e : lambda.parts) {
    const int b = static_cast<int>(ipow(p, e));
    g = g * embed_shifted(block_lift(pi, b), static_cast<int>(offset), n);
    offset += int64_t{p} * b;
  }
  return g;
}

}  // namespace liedim

#endif
