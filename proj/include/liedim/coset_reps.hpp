#ifndef LIEDIM_COSET_REPS_HPP
#define LIEDIM_COSET_REPS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liedim/blocks.hpp"
#include "liedim/group.hpp"
#include "liedim/pcomposition.hpp"
#include "liedim/permutation.hpp"
#include "liedim/sylow.hpp"

namespace liedim {

// ---------------------------------------------------------------------------
// The canonical elements z_{m,t}.
// ---------------------------------------------------------------------------

/// z_{m,t} in S_{p^{m+1}}: the point (i-1)p + j maps to i + (t(j-1) mod p)p^m
/// for i in [1,p^m], j in [1,p].  z_{0,1} is the identity, and conjugation by
/// z_{m,t} takes the diagonal p-cycle to the t-th power of the lifted one.
inline Permutation z_element(int p, int m, int t) {
  require_prime(p);
  if (m < 0) throw std::invalid_argument("z_element: need m >= 0");
  if (t < 1 || t > p - 1) throw std::invalid_argument("z_element: t must lie in [1,p-1]");
  const int pm = static_cast<int>(ipow(p, m));
  const int n = pm * p;
  std::vector<int32_t> img(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) {
    const int i0 = q / p;
    const int j0 = q % p;
    img[static_cast<size_t>(q)] = i0 + ((t * j0) % p) * pm;
  }
  return Permutation::from_images0(std::move(img));
}

// ---------------------------------------------------------------------------
// Y_m and the representative sets X_d.
// ---------------------------------------------------------------------------

/// One factor h z_{lambda,t} b with h in H_{p^lambda}, t a unit mod p and
/// b in R_lambda^0, at local degree p^{lambda+1}.
struct YFactor {
  int lambda = 0;
  Permutation h;
  int t = 1;
  Permutation b;

  Permutation realize(int p) const { return h * z_element(p, lambda, t) * b; }
};

namespace detail {

inline uint64_t y_count(int p, int m) {
  const int64_t e = 2 * ipow(p, m) - 1;
  if (e > 56) throw BudgetExceeded("Y_m: size overflows the enumeration budget");
  return static_cast<uint64_t>(ipow(p, static_cast<int>(e))) * static_cast<uint64_t>(p - 1);
}

}  // namespace detail

/// All factors (h, t, b) of Y_m, ordered lexicographically: h by exponent
/// vector over the blocks, t ascending, b by the closure ordering of R_{m-1}
/// on each of its p-1 coordinates.
inline std::vector<YFactor> enumerate_Y_factors(int p, int m, size_t budget = 1000000) {
  require_prime(p);
  if (m < 0) throw std::invalid_argument("enumerate_Y_factors: need m >= 0");
  const uint64_t count = detail::y_count(p, m);
  if (count > budget)
    throw BudgetExceeded("Y_m has " + std::to_string(count) + " elements, budget " +
                         std::to_string(budget));
  const int pm = static_cast<int>(ipow(p, m));
  const int n = pm * p;
  const Permutation pi = p_cycle(p);

  std::vector<Permutation> h_list;
  {
    std::vector<int> e(static_cast<size_t>(pm), 0);
    for (;;) {
      Permutation h(n);
      for (int a = 0; a < pm; ++a)
        if (e[static_cast<size_t>(a)] != 0)
          h = h * embed_shifted(pi.power(e[static_cast<size_t>(a)]), a * p, n);
      h_list.push_back(std::move(h));
      int pos = pm - 1;
      while (pos >= 0 && e[static_cast<size_t>(pos)] == p - 1) e[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++e[static_cast<size_t>(pos)];
    }
  }

  std::vector<Permutation> b_list;
  {
    GroupSpec sub = build_R(p, m - 1);
    const auto& sub_elems = sub.elements();
    const int b_width = pm;
    std::vector<size_t> idx(static_cast<size_t>(p - 1), 0);
    for (;;) {
      Permutation b(n);
      for (int j = 0; j < p - 1; ++j)
        b = b * embed_shifted(sub_elems[idx[static_cast<size_t>(j)]].padded(b_width), j * b_width, n);
      b_list.push_back(std::move(b));
      int pos = p - 2;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == sub_elems.size() - 1)
        idx[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
    }
  }

  std::vector<YFactor> out;
  out.reserve(count);
  for (const auto& h : h_list)
    for (int t = 1; t <= p - 1; ++t)
      for (const auto& b : b_list) out.push_back(YFactor{m, h, t, b});
  return out;
}

/// The set Y_m = { h z_{m,t} b } as permutations, in factor order.
inline std::vector<Permutation> enumerate_Y(int p, int m, size_t budget = 1000000) {
  std::vector<Permutation> out;
  auto factors = enumerate_Y_factors(p, m, budget);
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.realize(p));
  return out;
}

/// A representative of X_d: the p-composition lambda of d it belongs to,
/// one (h,t,b) factor per part, and the realized permutation of degree p*d.
struct CanonicalRep {
  int p = 2;
  int d = 0;
  PComposition lambda;
  std::vector<YFactor> parts;
  Permutation realized;
};

/// Product of the shifted factors; the r-th factor lands on the window
/// (p*Sigma_{r-1}, p*Sigma_r] of width p^{lambda_r + 1}.
inline Permutation realize_parts(int p, const PComposition& lambda,
                                 const std::vector<YFactor>& parts) {
  if (lambda.parts.size() != parts.size())
    throw std::invalid_argument("realize_parts: composition and factor list disagree");
  const int n = static_cast<int>(int64_t{p} * lambda.total());
  Permutation g(n);
  int off = 0;
  for (size_t r = 0; r < parts.size(); ++r) {
    if (parts[r].lambda != lambda.parts[r])
      throw std::invalid_argument("realize_parts: factor exponent mismatch");
    g = g * embed_shifted(parts[r].realize(p), off, n);
    off += p * static_cast<int>(ipow(p, parts[r].lambda));
  }
  return g;
}

inline CanonicalRep make_rep(int p, PComposition lambda, std::vector<YFactor> parts) {
  Permutation realized = realize_parts(p, lambda, parts);
  const int d = static_cast<int>(lambda.total());
  return CanonicalRep{p, d, std::move(lambda), std::move(parts), std::move(realized)};
}

/// X_d, enumerated through the recursion
///   X_{p^m} = Y_m  ∪  (p-fold product of shifted copies of X_{p^{m-1}}),
///   X_d     = product of X_{p^{kappa_i}} over the p-adic windows of d,
/// with Y_m first and tuples in lexicographic order, leftmost factor most
/// significant.
inline std::vector<CanonicalRep> enumerate_X(int p, int d, size_t budget = 1000000) {
  require_prime(p);
  if (d < 0) throw std::invalid_argument("enumerate_X: need d >= 0");
  if (d == 0)
    return {CanonicalRep{p, 0, PComposition{p, {}}, {}, Permutation(0)}};

  const PComposition kappa = p_adic_pcomposition(p, d);
  const int mmax = kappa.parts.front();

  auto check_budget = [budget](size_t have) {
    if (have > budget)
      throw BudgetExceeded("enumerate_X: more than " + std::to_string(budget) +
                           " representatives");
  };

  // X_{p^m} for every level up to mmax.
  std::vector<std::vector<CanonicalRep>> level(static_cast<size_t>(mmax) + 1);
  for (int m = 0; m <= mmax; ++m) {
    std::vector<CanonicalRep> reps;
    for (auto& f : enumerate_Y_factors(p, m, budget)) {
      check_budget(reps.size() + 1);
      reps.push_back(make_rep(p, PComposition{p, {m}}, {f}));
    }
    if (m > 0) {
      const auto& sub = level[static_cast<size_t>(m - 1)];
      const int sub_deg = static_cast<int>(ipow(p, m));  // p * p^{m-1}
      const int n = sub_deg * p;
      std::vector<size_t> idx(static_cast<size_t>(p), 0);
      for (;;) {
        check_budget(reps.size() + 1);
        std::vector<int> lam;
        std::vector<YFactor> parts;
        Permutation realized(n);
        for (int i = 0; i < p; ++i) {
          const CanonicalRep& piece = sub[idx[static_cast<size_t>(i)]];
          lam.insert(lam.end(), piece.lambda.parts.begin(), piece.lambda.parts.end());
          parts.insert(parts.end(), piece.parts.begin(), piece.parts.end());
          realized = realized * embed_shifted(piece.realized, i * sub_deg, n);
        }
        reps.push_back(CanonicalRep{p, static_cast<int>(ipow(p, m)),
                                    PComposition{p, std::move(lam)}, std::move(parts),
                                    std::move(realized)});
        int pos = p - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == sub.size() - 1)
          idx[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
      }
    }
    level[static_cast<size_t>(m)] = std::move(reps);
  }

  const size_t l = kappa.parts.size();
  if (l == 1) return std::move(level[static_cast<size_t>(mmax)]);

  // Product over the p-adic windows.
  const int n = p * d;
  std::vector<CanonicalRep> out;
  std::vector<size_t> idx(l, 0);
  std::vector<int> offsets(l);
  {
    int off = 0;
    for (size_t i = 0; i < l; ++i) {
      offsets[i] = off;
      off += static_cast<int>(int64_t{p} * ipow(p, kappa.parts[i]));
    }
  }
  for (;;) {
    check_budget(out.size() + 1);
    std::vector<int> lam;
    std::vector<YFactor> parts;
    Permutation realized(n);
    for (size_t i = 0; i < l; ++i) {
      const CanonicalRep& piece = level[static_cast<size_t>(kappa.parts[i])][idx[i]];
      lam.insert(lam.end(), piece.lambda.parts.begin(), piece.lambda.parts.end());
      parts.insert(parts.end(), piece.parts.begin(), piece.parts.end());
      realized = realized * embed_shifted(piece.realized, offsets[i], n);
    }
    out.push_back(CanonicalRep{p, d, PComposition{p, std::move(lam)}, std::move(parts),
                               std::move(realized)});
    int pos = static_cast<int>(l) - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] ==
                           level[static_cast<size_t>(kappa.parts[static_cast<size_t>(pos)])].size() - 1)
      idx[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
  }
  return out;
}

/// X_d straight from the definition: the union over all p-compositions
/// lambda of d of the products of shifted Y_{lambda_r}.  Slower; kept as the
/// independent route for cross-checking the recursion.
inline std::vector<CanonicalRep> enumerate_X_direct(int p, int d, size_t budget = 1000000) {
  require_prime(p);
  if (d == 0) return enumerate_X(p, 0, budget);
  std::vector<CanonicalRep> out;
  for (const auto& lam : enumerate_pcompositions(p, d, budget)) {
    std::vector<std::vector<YFactor>> choices;
    for (int e : lam.parts) choices.push_back(enumerate_Y_factors(p, e, budget));
    std::vector<size_t> idx(choices.size(), 0);
    for (;;) {
      if (out.size() + 1 > budget) throw BudgetExceeded("enumerate_X_direct: budget exceeded");
      std::vector<YFactor> parts;
      for (size_t r = 0; r < choices.size(); ++r) parts.push_back(choices[r][idx[r]]);
      out.push_back(make_rep(p, lam, std::move(parts)));
      int pos = static_cast<int>(choices.size()) - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == choices[static_cast<size_t>(pos)].size() - 1)
        idx[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Membership of a product in D = Delta_k S_p x S_k^[p].
// ---------------------------------------------------------------------------

/// g = (Delta_k tau)(sigma^[p]) for some tau in S_p, sigma in S_k?
inline bool as_D_element(int p, int k, const Permutation& g, Permutation* tau_out = nullptr,
                         Permutation* sigma_out = nullptr) {
  if (g.degree() != p * k) return false;
  std::vector<int32_t> sigma(static_cast<size_t>(k));
  std::vector<int32_t> tau(static_cast<size_t>(p));
  for (int i = 0; i < k; ++i) sigma[static_cast<size_t>(i)] = g.apply(i * p) / p;
  const int32_t s0 = sigma[0];
  for (int j = 0; j < p; ++j) {
    const int32_t v = g.apply(j);
    if (v / p != s0) return false;
    tau[static_cast<size_t>(j)] = v % p;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < p; ++j)
      if (g.apply(i * p + j) != sigma[static_cast<size_t>(i)] * p + tau[static_cast<size_t>(j)])
        return false;
  std::vector<bool> seen_s(static_cast<size_t>(k), false), seen_t(static_cast<size_t>(p), false);
  for (int32_t v : sigma) {
    if (seen_s[static_cast<size_t>(v)]) return false;
    seen_s[static_cast<size_t>(v)] = true;
  }
  for (int32_t v : tau) {
    if (seen_t[static_cast<size_t>(v)]) return false;
    seen_t[static_cast<size_t>(v)] = true;
  }
  if (tau_out) *tau_out = Permutation::from_images0(std::move(tau));
  if (sigma_out) *sigma_out = Permutation::from_images0(std::move(sigma));
  return true;
}

inline bool in_D(int p, int k, const Permutation& g) { return as_D_element(p, k, g); }

// ---------------------------------------------------------------------------
// Reduction of an arbitrary witnessed element to its representative.
// ---------------------------------------------------------------------------

/// Some y = (Delta_k g)^x in P_k for a p-cycle g, if one exists.
inline std::optional<Permutation> find_witness(int p, int k, const Permutation& x) {
  require_prime(p);
  if (x.degree() != p * k) throw std::invalid_argument("find_witness: degree mismatch");
  std::vector<int32_t> ids(static_cast<size_t>(p));
  for (int j = 0; j < p; ++j) ids[static_cast<size_t>(j)] = j;
  std::vector<int32_t> img = ids;
  do {
    Permutation g = Permutation::from_images0(img);
    if (g.order() == p) {
      Permutation y = diagonal(g, k).conjugated_by(x);
      if (in_P(p, k, y)) return y;
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

namespace detail {

/// Left-multiply x by a lifted block sort so that the i-th window of the
/// given cut list receives exactly the size-p blocks that x already maps
/// into it, in ascending order (the minimal-lexicographic choice).
inline Permutation sort_blocks_to_windows(int p, const Permutation& x,
                                          const std::vector<int>& cuts) {
  const int n = x.degree();
  const int blocks = n / p;
  auto window_of = [&cuts](int32_t point) {
    int w = 0;
    while (cuts[static_cast<size_t>(w + 1)] <= point) ++w;
    return w;
  };
  std::vector<std::vector<int32_t>> members(cuts.size() - 1);
  for (int i = 0; i < blocks; ++i) {
    const int w = window_of(x.apply(i * p));
    for (int j = 1; j < p; ++j)
      if (window_of(x.apply(i * p + j)) != w)
        throw std::invalid_argument("sort_blocks_to_windows: a block straddles a window");
    members[static_cast<size_t>(w)].push_back(i);
  }
  std::vector<int32_t> sigma;
  sigma.reserve(static_cast<size_t>(blocks));
  for (size_t w = 0; w < members.size(); ++w) {
    const int width = cuts[w + 1] - cuts[w];
    if (static_cast<int>(members[w].size()) * p != width)
      throw std::invalid_argument("sort_blocks_to_windows: window population mismatch");
    for (int32_t i : members[w]) sigma.push_back(i);
  }
  return block_lift(Permutation::from_images0(std::move(sigma)), p) * x;
}

/// c centralizes the diagonal p-cycle, i.e. c = h' sigma^[p] with h' in
/// H_{p^m}; split it.
inline std::pair<Permutation, Permutation> centralizer_split(int p, int m, const Permutation& c) {
  const int blocks = static_cast<int>(ipow(p, m));
  const int n = blocks * p;
  if (c.degree() != n) throw std::invalid_argument("centralizer_split: degree mismatch");
  std::vector<int32_t> sigma(static_cast<size_t>(blocks));
  for (int a = 0; a < blocks; ++a) {
    const int32_t w = c.apply(a * p) / p;
    for (int j = 0; j < p; ++j)
      if (c.apply(a * p + j) / p != w)
        throw std::invalid_argument("centralizer_split: element does not permute the blocks");
    sigma[static_cast<size_t>(a)] = w;
  }
  Permutation s = block_lift(Permutation::from_images0(std::move(sigma)), p);
  Permutation hp = c * s.inverse();
  for (int a = 0; a < blocks; ++a) {
    const int32_t e = hp.apply(a * p) - a * p;
    for (int j = 0; j < p; ++j)
      if (hp.apply(a * p + j) != a * p + (j + e) % p)
        throw std::invalid_argument(
            "centralizer_split: element does not centralize the diagonal p-cycle");
  }
  return {std::move(hp), std::move(s)};
}

/// One window: x in S_{p^{m+1}} conjugates the diagonal p-cycle into R_m.
/// Returns the factors of the unique element of X_{p^m} in the coset
/// S_{p^m}^[p] x.
inline std::vector<YFactor> reduce_window(int p, int m, const Permutation& x) {
  const int pm = static_cast<int>(ipow(p, m));
  const Permutation w = diagonal(p_cycle(p), pm).conjugated_by(x);
  if (!in_R(p, m, w))
    throw std::invalid_argument("reduce: conjugated diagonal cycle left the Sylow tower");
  const IntervalPartition fip = finest_invariant_partition(w);
  const Permutation xs = sort_blocks_to_windows(p, x, fip.cuts);
  std::vector<YFactor> out;
  for (int r = 1; r <= fip.parts(); ++r) {
    const int lo = fip.cuts[static_cast<size_t>(r - 1)];
    const int hi = fip.cuts[static_cast<size_t>(r)];
    int width = hi - lo;
    int lam = -1;
    while (width > 1) {
      width /= p;
      ++lam;
    }
    const Permutation xr = xs.restricted(lo, hi);
    const Permutation wr = diagonal(p_cycle(p), static_cast<int>(ipow(p, lam))).conjugated_by(xr);
    const ConjugateForm cf = unique_conjugate_form(p, lam, wr);
    const Permutation c = z_element(p, lam, cf.t) * cf.b * xr.inverse();
    const Permutation hprime = centralizer_split(p, lam, c).first;
    out.push_back(YFactor{lam, hprime.inverse(), cf.t, cf.b});
  }
  return out;
}

}  // namespace detail

/// The unique representative in X_{k-1} of the coset D x, given a witness
/// y != 1 with y in (Delta_k S_p)^x ∩ P_k.  Stages: normalize the witness to
/// the diagonal p-cycle, sort size-p blocks onto the p-adic windows, factor
/// each window through the unique conjugate expression and the centralizer
/// split, then absorb the final degree-p factor into the diagonal.
inline CanonicalRep reduce_to_canonical(int p, int k, const Permutation& x,
                                        const Permutation& witness) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("reduce_to_canonical: need k >= 1");
  if (k % p == 0)
    throw std::invalid_argument("reduce_to_canonical: k divisible by p is out of scope");
  const int n = p * k;
  if (x.degree() != n || witness.degree() != n)
    throw std::invalid_argument("reduce_to_canonical: degree mismatch");
  if (witness.is_identity())
    throw std::invalid_argument("reduce_to_canonical: witness must be non-trivial");
  if (!in_P(p, k, witness))
    throw std::invalid_argument("reduce_to_canonical: witness does not lie in P_k");

  // Witness back to a diagonal: x y x^{-1} = Delta_k g.
  const Permutation w = witness.conjugated_by(x.inverse());
  Permutation g;
  if (!as_diagonal(w, k, &g) || g.order() != p)
    throw std::invalid_argument("reduce_to_canonical: witness is not conjugate to a diagonal p-cycle");
  const auto cyc = g.cycles().front();
  std::vector<int32_t> tau_img(static_cast<size_t>(p));
  for (int j = 0; j < p; ++j) tau_img[static_cast<size_t>(j)] = cyc[static_cast<size_t>(j)] - 1;
  const Permutation tau = Permutation::from_images0(std::move(tau_img));
  Permutation x1 = diagonal(tau, k) * x;

  // Sort the k cycles onto the p-adic windows of P_k, then reduce windows.
  const PComposition kappa = p_adic_pcomposition(p, k);
  std::vector<int> cuts{0};
  for (int e : kappa.parts)
    cuts.push_back(cuts.back() + static_cast<int>(int64_t{p} * ipow(p, e)));
  x1 = detail::sort_blocks_to_windows(p, x1, cuts);

  std::vector<int> lam;
  std::vector<YFactor> parts;
  for (size_t r = 0; r < kappa.parts.size(); ++r) {
    const Permutation xr = x1.restricted(cuts[r], cuts[r + 1]);
    for (auto& f : detail::reduce_window(p, kappa.parts[r], xr)) {
      lam.push_back(f.lambda);
      parts.push_back(std::move(f));
    }
  }
  const CanonicalRep in_Xk = make_rep(p, PComposition{p, lam}, parts);

  // Absorb the trailing degree-p factor: with the tail h* z_{0,t*}, multiply
  // by Delta_k(z_{0,u} h*^{-1}) for u = t*^{-1}; every remaining factor keeps
  // its b, its t becomes u t, and its h is conjugated through the diagonal.
  const YFactor tail = parts.back();
  if (tail.lambda != 0) throw std::logic_error("reduce_to_canonical: tail exponent must be 0");
  int u = 1;
  while ((u * tail.t) % p != 1) ++u;
  const Permutation zu = z_element(p, 0, u);
  const Permutation c = zu * tail.h.inverse();

  std::vector<int> lam2(lam.begin(), lam.end() - 1);
  std::vector<YFactor> parts2;
  for (size_t r = 0; r + 1 < parts.size(); ++r) {
    const YFactor& f = parts[r];
    const int pm = static_cast<int>(ipow(p, f.lambda));
    const Permutation zdiag = diagonal(zu, pm);
    const Permutation h2 = diagonal(tail.h, pm).inverse() * f.h;
    parts2.push_back(YFactor{f.lambda, zdiag * h2 * zdiag.inverse(), (u * f.t) % p, f.b});
  }
  CanonicalRep rep = make_rep(p, PComposition{p, std::move(lam2)}, std::move(parts2));

  if (diagonal(c, k) * in_Xk.realized != rep.realized.padded(n))
    throw std::logic_error("reduce_to_canonical: tail absorption failed to match");
  if (!in_D(p, k, rep.realized.padded(n) * x.inverse()))
    throw std::logic_error("reduce_to_canonical: result left the coset");
  return rep;
}

}  // namespace liedim

#endif
