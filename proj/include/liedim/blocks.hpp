#ifndef LIEDIM_BLOCKS_HPP
#define LIEDIM_BLOCKS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "liedim/permutation.hpp"

namespace liedim {

/// Interval partition of (0,n]: cut points 0 = a_0 < a_1 < ... < a_s = n.
struct IntervalPartition {
  int n = 0;
  std::vector<int> cuts;

  IntervalPartition(int n_, std::vector<int> cuts_) : n(n_), cuts(std::move(cuts_)) {
    if (cuts.size() < 2 || cuts.front() != 0 || cuts.back() != n)
      throw std::invalid_argument("IntervalPartition: cuts must run from 0 to n");
    for (size_t i = 1; i < cuts.size(); ++i)
      if (cuts[i - 1] >= cuts[i])
        throw std::invalid_argument("IntervalPartition: cuts must be strictly increasing");
  }

  int parts() const { return static_cast<int>(cuts.size()) - 1; }

  /// True if every interval of *this appears as a union of this->cuts... i.e.
  /// every cut of other is also a cut of *this.
  bool refines(const IntervalPartition& other) const {
    size_t j = 0;
    for (int c : other.cuts) {
      while (j < cuts.size() && cuts[j] < c) ++j;
      if (j >= cuts.size() || cuts[j] != c) return false;
    }
    return true;
  }

  friend bool operator==(const IntervalPartition& a, const IntervalPartition& b) {
    return a.n == b.n && a.cuts == b.cuts;
  }
};

/// sigma^[b]: permutes the a successive blocks of size b in [1,ab] according
/// to sigma in S_a.  Injective group homomorphism S_a -> S_ab.
inline Permutation block_lift(const Permutation& s, int b) {
  if (b < 1) throw std::invalid_argument("block_lift: block size must be positive");
  const int a = s.degree();
  std::vector<int32_t> img(static_cast<size_t>(a) * static_cast<size_t>(b));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      img[static_cast<size_t>(i) * b + j] = s.apply(i) * b + j;
  return Permutation::from_images0(std::move(img));
}

/// Support of t translated by offset, inside degree n.
inline Permutation embed_shifted(const Permutation& t, int offset, int n) {
  if (offset < 0 || offset + t.degree() > n)
    throw std::invalid_argument("embed_shifted: support does not fit");
  std::vector<int32_t> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
  for (int i = 0; i < t.degree(); ++i) img[static_cast<size_t>(offset + i)] = offset + t.apply(i);
  return Permutation::from_images0(std::move(img));
}

/// tau[r]: acts as tau on the r-th successive block of size b = deg(tau) in
/// [1, sb], fixes everything else.  r is 1-based, r in [1,s].
inline Permutation embed_at(const Permutation& t, int r, int s) {
  if (r < 1 || r > s) throw std::invalid_argument("embed_at: block index out of range");
  return embed_shifted(t, (r - 1) * t.degree(), s * t.degree());
}

/// Delta_a tau = prod_{i=1}^{a} tau[i]: all a blocks simultaneously.
inline Permutation diagonal(const Permutation& t, int a) {
  if (a < 1) throw std::invalid_argument("diagonal: need a >= 1");
  const int b = t.degree();
  std::vector<int32_t> img(static_cast<size_t>(a) * static_cast<size_t>(b));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      img[static_cast<size_t>(i) * b + j] = i * b + t.apply(j);
  return Permutation::from_images0(std::move(img));
}

/// The unique finest g-invariant interval partition of (0,n].
/// Single pass: a cut is emitted at m exactly when the running maximum of
/// images over the current segment equals m.
inline IntervalPartition finest_invariant_partition(const Permutation& g) {
  const int n = g.degree();
  if (n == 0) throw std::invalid_argument("finest_invariant_partition: empty permutation");
  std::vector<int> cuts{0};
  int running_max = -1;
  for (int i = 0; i < n; ++i) {
    running_max = std::max(running_max, static_cast<int>(g.apply(i)));
    if (running_max == i) cuts.push_back(i + 1);
  }
  return IntervalPartition(n, std::move(cuts));
}

/// If g = sigma^[b] for some sigma, recover sigma.
inline bool as_block_lift(const Permutation& g, int b, Permutation* sigma_out = nullptr) {
  if (b < 1 || g.degree() % b != 0) return false;
  const int a = g.degree() / b;
  std::vector<int32_t> sig(static_cast<size_t>(a));
  for (int i = 0; i < a; ++i) {
    int32_t v = g.apply(i * b);
    if (v % b != 0) return false;
    sig[static_cast<size_t>(i)] = v / b;
    for (int j = 0; j < b; ++j)
      if (g.apply(i * b + j) != v + j) return false;
  }
  std::vector<bool> seen(static_cast<size_t>(a), false);
  for (int32_t v : sig) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  if (sigma_out) *sigma_out = Permutation::from_images0(std::move(sig));
  return true;
}

/// If g = Delta_a tau for some tau of degree deg(g)/a, recover tau.
inline bool as_diagonal(const Permutation& g, int a, Permutation* tau_out = nullptr) {
  if (a < 1 || g.degree() % a != 0) return false;
  const int b = g.degree() / a;
  for (int j = 0; j < b; ++j) {
    int32_t v = g.apply(j);
    if (v < 0 || v >= b) return false;
  }
  for (int i = 1; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (g.apply(i * b + j) != i * b + g.apply(j)) return false;
  if (tau_out) *tau_out = g.restricted(0, b);
  return true;
}

}  // namespace liedim

#endif
