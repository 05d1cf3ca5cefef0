#ifndef LIEDIM_GROUP_ALGEBRA_HPP
#define LIEDIM_GROUP_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <stdexcept>

#include "liedim/pcomposition.hpp"
#include "liedim/permutation.hpp"

namespace liedim {

/// Finitely supported integer combination of elements of S_n, with exact
/// coefficient arithmetic.  Zero coefficients are pruned.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}

  static GroupAlgebraElement basis(const Permutation& g, int64_t coeff = 1) {
    GroupAlgebraElement e(g.degree());
    e.add_term(g, coeff);
    return e;
  }

  int degree() const { return n_; }
  const std::map<Permutation, int64_t>& terms() const { return coeff_; }
  size_t support_size() const { return coeff_.size(); }
  bool is_zero() const { return coeff_.empty(); }

  void add_term(const Permutation& g, int64_t c) {
    if (g.degree() != n_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    if (c == 0) return;
    auto [it, inserted] = coeff_.emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeff_.erase(it);
    }
  }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_degrees(a, b);
    GroupAlgebraElement out = a;
    for (const auto& [g, c] : b.coeff_) out.add_term(g, c);
    return out;
  }

  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_degrees(a, b);
    GroupAlgebraElement out = a;
    for (const auto& [g, c] : b.coeff_) out.add_term(g, -c);
    return out;
  }

  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_degrees(a, b);
    GroupAlgebraElement out(a.n_);
    for (const auto& [g, c] : a.coeff_)
      for (const auto& [h, d] : b.coeff_) out.add_term(g * h, c * d);
    return out;
  }

  friend GroupAlgebraElement operator*(int64_t s, const GroupAlgebraElement& a) {
    GroupAlgebraElement out(a.n_);
    if (s != 0)
      for (const auto& [g, c] : a.coeff_) out.add_term(g, s * c);
    return out;
  }

  /// Coefficients reduced into [0, p).
  GroupAlgebraElement mod(int64_t p) const {
    GroupAlgebraElement out(n_);
    for (const auto& [g, c] : coeff_) out.add_term(g, ((c % p) + p) % p);
    return out;
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.coeff_ == b.coeff_;
  }

 private:
  static void check_degrees(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
  }
  int n_;
  std::map<Permutation, int64_t> coeff_;
};

/// omega_n = (1 - c_2)(1 - c_3)...(1 - c_n), c_k the k-cycle (1,...,k).
inline GroupAlgebraElement omega_element(int n, int max_degree = 7) {
  if (n < 1) throw std::invalid_argument("omega_element: need n >= 1");
  if (n > max_degree)
    throw BudgetExceeded("omega_element: degree " + std::to_string(n) + " beyond limit " +
                         std::to_string(max_degree));
  GroupAlgebraElement acc = GroupAlgebraElement::basis(Permutation(n));
  for (int k = 2; k <= n; ++k) {
    std::vector<int32_t> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    for (int i = 0; i < k; ++i) img[static_cast<size_t>(i)] = (i + 1) % k;
    const Permutation ck = Permutation::from_images0(std::move(img));
    GroupAlgebraElement shifted(n);
    for (const auto& [g, c] : acc.terms()) shifted.add_term(g * ck, c);
    acc = acc - shifted;
  }
  return acc;
}

/// omega_n^2 == n * omega_n over the integers.
inline bool omega_identity_check(int n, int max_degree = 7) {
  const GroupAlgebraElement w = omega_element(n, max_degree);
  return w * w == n * w;
}

/// omega_n^2 == (n mod p) * omega_n with coefficients in the prime field;
/// at n = p this is the nilpotency statement omega_p^2 == 0.
inline bool omega_identity_check_mod(int n, int p, int max_degree = 7) {
  require_prime(p);
  const GroupAlgebraElement w = omega_element(n, max_degree);
  return (w * w).mod(p) == ((n % p) * w).mod(p);
}

}  // namespace liedim

#endif
