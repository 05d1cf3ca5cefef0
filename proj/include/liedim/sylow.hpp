#ifndef LIEDIM_SYLOW_HPP
#define LIEDIM_SYLOW_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liedim/blocks.hpp"
#include "liedim/group.hpp"
#include "liedim/pcomposition.hpp"
#include "liedim/permutation.hpp"

namespace liedim {

/// pi = (1,2,...,p).
inline Permutation p_cycle(int p) {
  require_prime(p);
  std::vector<int32_t> img(static_cast<size_t>(p));
  for (int j = 0; j < p; ++j) img[static_cast<size_t>(j)] = static_cast<int32_t>((j + 1) % p);
  return Permutation::from_images0(std::move(img));
}

/// pi^[p^i], the top cycle of R_i, at degree p^{i+1}.
inline Permutation top_cycle(int p, int i) {
  return block_lift(p_cycle(p), static_cast<int>(ipow(p, i)));
}

// ---------------------------------------------------------------------------
// The explicit groups: R_i, B_i, H_s, R_m^0, P_k, D.
// ---------------------------------------------------------------------------

/// R_i <= S_{p^{i+1}}, generated by pi^[p^j] for j in [0,i]; a Sylow
/// p-subgroup of S_{p^{i+1}}.  R_{-1} is the trivial group on one point.
inline GroupSpec build_R(int p, int i) {
  require_prime(p);
  if (i < -1) throw std::invalid_argument("build_R: need i >= -1");
  const std::string name = "R:p=" + std::to_string(p) + ",i=" + std::to_string(i);
  if (i == -1) return GroupSpec(name, 1, {});
  const int n = static_cast<int>(ipow(p, i + 1));
  std::vector<Permutation> gens;
  for (int j = 0; j <= i; ++j) gens.push_back(top_cycle(p, j).padded(n));
  return GroupSpec(name, n, std::move(gens));
}

/// B_i = R_{i-1}[1] x ... x R_{i-1}[p], the base group of R_i.
inline GroupSpec build_B(int p, int i) {
  require_prime(p);
  if (i < 0) throw std::invalid_argument("build_B: need i >= 0");
  const int n = static_cast<int>(ipow(p, i + 1));
  const int b = static_cast<int>(ipow(p, i));
  GroupSpec sub = build_R(p, i - 1);
  std::vector<Permutation> gens;
  for (int r = 1; r <= p; ++r)
    for (const auto& g : sub.generators())
      gens.push_back(embed_shifted(g.padded(b), (r - 1) * b, n));
  return GroupSpec("B:p=" + std::to_string(p) + ",i=" + std::to_string(i), n, std::move(gens));
}

/// H_s = prod_{a=1}^{s} <pi[a]> <= S_{sp}.
inline GroupSpec build_H(int p, int s) {
  require_prime(p);
  if (s < 1) throw std::invalid_argument("build_H: need s >= 1");
  const int n = s * p;
  std::vector<Permutation> gens;
  for (int a = 1; a <= s; ++a) gens.push_back(embed_at(p_cycle(p), a, s));
  return GroupSpec("H:p=" + std::to_string(p) + ",s=" + std::to_string(s), n, std::move(gens));
}

/// R_m^0 = prod_{j=1}^{p-1} R_{m-1}[j]: the part of the base group fixing the
/// last block of p^m points pointwise.
inline GroupSpec build_R0(int p, int m) {
  require_prime(p);
  if (m < 0) throw std::invalid_argument("build_R0: need m >= 0");
  const int n = static_cast<int>(ipow(p, m + 1));
  const int b = static_cast<int>(ipow(p, m));
  GroupSpec sub = build_R(p, m - 1);
  std::vector<Permutation> gens;
  for (int r = 1; r <= p - 1; ++r)
    for (const auto& g : sub.generators())
      gens.push_back(embed_shifted(g.padded(b), (r - 1) * b, n));
  return GroupSpec("R0:p=" + std::to_string(p) + ",m=" + std::to_string(m), n, std::move(gens));
}

/// P_k = < pi^[p^i][j] : j*p^i <= k >, the fixed Sylow p-subgroup of S_{pk}.
/// Equivalently the product of R_{kappa_i} on the windows cut out by the
/// p-adic p-composition kappa of k.
inline GroupSpec build_P(int p, int k) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("build_P: need k >= 1");
  const int n = p * k;
  std::vector<Permutation> gens;
  for (int i = 0; ipow(p, i) <= k; ++i) {
    const int pi_block = static_cast<int>(ipow(p, i));
    const Permutation lifted = top_cycle(p, i);
    for (int j = 1; int64_t{j} * pi_block <= k; ++j)
      gens.push_back(embed_shifted(lifted, (j - 1) * lifted.degree(), n));
  }
  return GroupSpec("P:p=" + std::to_string(p) + ",k=" + std::to_string(k), n, std::move(gens));
}

/// D = Delta_k S_p x S_k^[p] <= S_{pk}, both factors acting regularly.
inline GroupSpec build_D(int p, int k) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("build_D: need k >= 1");
  const int n = p * k;
  std::vector<Permutation> gens;
  gens.push_back(diagonal(p_cycle(p), k));
  if (p > 1) {
    std::vector<int32_t> tr(static_cast<size_t>(p));
    for (int j = 0; j < p; ++j) tr[static_cast<size_t>(j)] = j;
    std::swap(tr[0], tr[1]);
    gens.push_back(diagonal(Permutation::from_images0(std::move(tr)), k));
  }
  if (k > 1) {
    std::vector<int32_t> kcyc(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) kcyc[static_cast<size_t>(j)] = static_cast<int32_t>((j + 1) % k);
    gens.push_back(block_lift(Permutation::from_images0(std::move(kcyc)), p));
    std::vector<int32_t> tr(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) tr[static_cast<size_t>(j)] = j;
    std::swap(tr[0], tr[1]);
    gens.push_back(block_lift(Permutation::from_images0(std::move(tr)), p));
  }
  return GroupSpec("D:p=" + std::to_string(p) + ",k=" + std::to_string(k), n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Structural membership tests.  These recurse on the wreath tower instead of
// materializing closures, so they work at any degree.
// ---------------------------------------------------------------------------

namespace detail {

/// The uniform block shift of g on the p blocks of size b, or nullopt if the
/// induced block map is not a power of the p-cycle or blocks are torn.
inline std::optional<int> uniform_block_shift(const Permutation& g, int p, int b) {
  int t = -1;
  for (int a = 0; a < p; ++a) {
    for (int j = 0; j < b; ++j) {
      int32_t v = g.apply(a * b + j);
      int shift = (v / b - a % p + p) % p;
      if (t == -1)
        t = shift;
      else if (shift != t)
        return std::nullopt;
    }
  }
  return t;
}

}  // namespace detail

/// g in R_i, checked structurally.  Permutations of smaller degree are
/// padded to p^{i+1}.
inline bool in_R(int p, int i, const Permutation& g) {
  require_prime(p);
  if (i < -1) return false;
  const int n = static_cast<int>(ipow(p, i + 1));
  if (g.degree() > n) {
    if (!g.leaves_invariant(0, n)) return false;
    for (int q = n; q < g.degree(); ++q)
      if (g.apply(q) != q) return false;
    return in_R(p, i, g.restricted(0, n));
  }
  if (i == -1) return g.is_identity();
  const Permutation gp = g.degree() < n ? g.padded(n) : g;
  const int b = n / p;
  auto t = detail::uniform_block_shift(gp, p, b);
  if (!t) return false;
  const Permutation base = gp * top_cycle(p, i).power(-*t);
  for (int a = 0; a < p; ++a)
    if (!in_R(p, i - 1, base.restricted(a * b, (a + 1) * b))) return false;
  return true;
}

/// g in B_i.  B_{-1} is empty by convention.
inline bool in_B(int p, int i, const Permutation& g) {
  if (i < 0) return false;
  const int n = static_cast<int>(ipow(p, i + 1));
  if (g.degree() > n) {
    if (!g.leaves_invariant(0, n)) return false;
    for (int q = n; q < g.degree(); ++q)
      if (g.apply(q) != q) return false;
    return in_B(p, i, g.restricted(0, n));
  }
  const Permutation gp = g.degree() < n ? g.padded(n) : g;
  const int b = n / p;
  for (int a = 0; a < p; ++a) {
    if (!gp.leaves_invariant(a * b, (a + 1) * b)) return false;
    if (!in_R(p, i - 1, gp.restricted(a * b, (a + 1) * b))) return false;
  }
  return true;
}

/// Membership in the difference R_i \ B_i, honoring B_{-1} = empty set.
inline bool in_R_minus_B(int p, int i, const Permutation& g) {
  return in_R(p, i, g) && !in_B(p, i, g);
}

/// g in P_k, checked window by window against the p-adic p-composition.
inline bool in_P(int p, int k, const Permutation& g) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("in_P: need k >= 1");
  const int n = p * k;
  if (g.degree() > n) {
    for (int q = n; q < g.degree(); ++q)
      if (g.apply(q) != q) return false;
  }
  const Permutation gp = g.degree() < n   ? g.padded(n)
                         : g.degree() > n ? (g.leaves_invariant(0, n) ? g.restricted(0, n) : g)
                                          : g;
  if (gp.degree() != n) return false;
  const PComposition kappa = p_adic_pcomposition(p, k);
  int64_t lo = 0;
  for (int e : kappa.parts) {
    const int64_t width = int64_t{p} * ipow(p, e);
    if (!gp.leaves_invariant(static_cast<int>(lo), static_cast<int>(lo + width))) return false;
    if (!in_R(p, e, gp.restricted(static_cast<int>(lo), static_cast<int>(lo + width))))
      return false;
    lo += width;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Wreath normal form.
// ---------------------------------------------------------------------------

/// g restricted to the intervals of its finest invariant partition:
/// g = prod_j factors[j] shifted to (cuts[j-1], cuts[j]], with
/// factors[j] in R_{exponents[j]-1} \ B_{exponents[j]-1}.
struct WreathNormalForm {
  IntervalPartition cuts;
  std::vector<int> exponents;
  std::vector<Permutation> factors;

  Permutation reconstruct() const {
    Permutation g(cuts.n);
    for (size_t j = 0; j < factors.size(); ++j)
      g = g * embed_shifted(factors[j], cuts.cuts[j], cuts.n);
    return g;
  }
};

inline WreathNormalForm wreath_normal_form(int p, int i, const Permutation& g) {
  require_prime(p);
  const int n = static_cast<int>(ipow(p, i + 1));
  if (!in_R(p, i, g)) throw std::invalid_argument("wreath_normal_form: element is not in R_i");
  const Permutation gp = g.degree() < n ? g.padded(n) : g;
  IntervalPartition cuts = finest_invariant_partition(gp);
  std::vector<int> exponents;
  std::vector<Permutation> factors;
  for (int j = 1; j <= cuts.parts(); ++j) {
    const int width = cuts.cuts[static_cast<size_t>(j)] - cuts.cuts[static_cast<size_t>(j - 1)];
    int e = 0;
    int w = width;
    while (w % p == 0) {
      w /= p;
      ++e;
    }
    if (w != 1 || cuts.cuts[static_cast<size_t>(j)] % width != 0)
      throw std::logic_error("wreath_normal_form: interval widths must be p-powers dividing cuts");
    exponents.push_back(e);
    factors.push_back(gp.restricted(cuts.cuts[static_cast<size_t>(j - 1)],
                                    cuts.cuts[static_cast<size_t>(j)]));
  }
  return WreathNormalForm{std::move(cuts), std::move(exponents), std::move(factors)};
}

// ---------------------------------------------------------------------------
// Unique conjugate expression for order-p elements outside the base group.
// ---------------------------------------------------------------------------

/// g = ((pi^[p^i])^t)^b with t in [1,p-1] and b in R_i^0; the pair is unique.
struct ConjugateForm {
  int t = 1;
  Permutation b;
};

/// Decompose an order-p element g of R_i \ B_i.  The top power t is read off
/// the coset B_i g; b is solved coordinate-wise: with base coordinates
/// r_0..r_{p-1} of g (pi^[p^i])^{-t}, the coordinates c_a of b satisfy
/// c_{(a+t) mod p} = c_a r_a and c_{p-1} = 1, which the walk a -> a+t (mod p)
/// determines completely.
inline ConjugateForm unique_conjugate_form(int p, int i, const Permutation& g) {
  require_prime(p);
  if (i < 0) throw std::invalid_argument("unique_conjugate_form: need i >= 0");
  const int n = static_cast<int>(ipow(p, i + 1));
  const int b = n / p;
  if (!in_R(p, i, g)) throw std::invalid_argument("unique_conjugate_form: element not in R_i");
  const Permutation gp = g.degree() < n ? g.padded(n) : g;
  if (in_B(p, i, gp)) throw std::invalid_argument("unique_conjugate_form: element lies in B_i");
  if (gp.order() != p)
    throw std::invalid_argument("unique_conjugate_form: element does not have order p");

  const Permutation y = top_cycle(p, i);
  const int t = gp.apply(0) / b;  // uniform block shift; nonzero since g is outside B_i
  const Permutation base = gp * y.power(-t);

  std::vector<Permutation> r(static_cast<size_t>(p));
  for (int a = 0; a < p; ++a) r[static_cast<size_t>(a)] = base.restricted(a * b, (a + 1) * b);

  std::vector<Permutation> c(static_cast<size_t>(p), Permutation(b));
  int a = p - 1;
  for (int step = 0; step < p; ++step) {
    const int next = (a + t) % p;
    if (next != p - 1) c[static_cast<size_t>(next)] = c[static_cast<size_t>(a)] * r[static_cast<size_t>(a)];
    a = next;
  }

  Permutation bperm(n);
  for (int j = 0; j < p - 1; ++j)
    bperm = bperm * embed_shifted(c[static_cast<size_t>(j)], j * b, n);
  return ConjugateForm{t, std::move(bperm)};
}

// ---------------------------------------------------------------------------
// Fixed-point-free order-p elements <-> p-compositions.
// ---------------------------------------------------------------------------

/// The p-composition of k associated to a fixed-point-free element g of P_k:
/// per window of P_k, the finest-invariant-partition interval widths p^e
/// contribute exponents e-1, concatenated across windows.
inline PComposition composition_of_element(int p, const Permutation& g) {
  require_prime(p);
  if (g.degree() % p != 0 || g.degree() == 0)
    throw std::invalid_argument("composition_of_element: degree must be a positive multiple of p");
  const int k = g.degree() / p;
  if (!g.fixed_point_free())
    throw std::invalid_argument("composition_of_element: element has a fixed point");
  if (!in_P(p, k, g)) throw std::invalid_argument("composition_of_element: element not in P_k");
  const PComposition kappa = p_adic_pcomposition(p, k);
  std::vector<int> parts;
  int64_t lo = 0;
  for (int e : kappa.parts) {
    const int64_t width = int64_t{p} * ipow(p, e);
    const Permutation piece =
        g.restricted(static_cast<int>(lo), static_cast<int>(lo + width));
    IntervalPartition fip = finest_invariant_partition(piece);
    for (int j = 1; j <= fip.parts(); ++j) {
      int w = fip.cuts[static_cast<size_t>(j)] - fip.cuts[static_cast<size_t>(j - 1)];
      int ex = 0;
      while (w % p == 0) {
        w /= p;
        ++ex;
      }
      if (w != 1 || ex < 1)
        throw std::logic_error("composition_of_element: interval width is not a positive p-power");
      parts.push_back(ex - 1);
    }
    lo += width;
  }
  return validate_pcomposition(p, std::move(parts));
}

}  // namespace liedim

#endif
