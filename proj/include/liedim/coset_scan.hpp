#ifndef LIEDIM_COSET_SCAN_HPP
#define LIEDIM_COSET_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "liedim/coset_reps.hpp"
#include "liedim/group.hpp"
#include "liedim/permutation.hpp"
#include "liedim/sylow.hpp"

namespace liedim {

// This oracle counts cosets by direct search over S_{pk}.  Its counting path
// deliberately avoids enumerate_X and reduce_to_canonical; only
// certify_transversal bridges the two routes.

inline uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::overflow_error("factorial_u64: out of range");
  uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<uint64_t>(i);
  return r;
}

/// Lexicographic unranking of S_n (rank 0 is the identity), matching the
/// order std::next_permutation walks.
inline Permutation unrank_permutation(int n, uint64_t rank) {
  std::vector<int32_t> pool(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
  std::vector<int32_t> img;
  img.reserve(static_cast<size_t>(n));
  uint64_t f = factorial_u64(n);
  for (int i = 0; i < n; ++i) {
    f /= static_cast<uint64_t>(n - i);
    const size_t d = static_cast<size_t>(rank / f);
    rank %= f;
    img.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation::from_images0(std::move(img));
}

/// All of D = Delta_k S_p x S_k^[p] as a list, in (tau, sigma) lexicographic
/// order.  |D| = p! k!.
inline std::vector<Permutation> d_elements(int p, int k) {
  std::vector<Permutation> out;
  out.reserve(factorial_u64(p) * factorial_u64(k));
  std::vector<int32_t> tau(static_cast<size_t>(p));
  for (int j = 0; j < p; ++j) tau[static_cast<size_t>(j)] = j;
  do {
    const Permutation dt = diagonal(Permutation::from_images0(tau), k);
    std::vector<int32_t> sig(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) sig[static_cast<size_t>(j)] = j;
    do {
      out.push_back(dt * block_lift(Permutation::from_images0(sig), p));
    } while (std::next_permutation(sig.begin(), sig.end()));
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

/// The lexicographic minimum of D x, used as the coset id.
inline Permutation canonical_coset_rep(const std::vector<Permutation>& d_elems,
                                       const Permutation& x) {
  const Permutation* best = nullptr;
  Permutation cur;
  Permutation min;
  for (const auto& d : d_elems) {
    cur = d * x;
    if (!best || cur < min) {
      min = cur;
      best = &d;
    }
  }
  return min;
}

struct CosetWitness {
  Permutation x;  // a hit element of the coset (smallest lexicographic rank seen)
  Permutation y;  // (Delta_k g)^x in P_k, y != 1
  uint64_t rank = 0;
};

struct CosetScanResult {
  int p = 2;
  int k = 1;
  uint64_t total_cosets = 0;  // (pk)! / |D|
  uint64_t hit_cosets = 0;
  uint64_t hit_elements = 0;
  bool exhaustive_intersection = false;
  std::map<Permutation, CosetWitness> witnesses;  // keyed by canonical coset rep
};

/// Scan all of S_{pk} in lexicographic order.  An element x is a hit when
/// (Delta_k g)^x lies in P_k for some test element g; hit elements are
/// grouped into cosets by the canonical minimal representative.  The default
/// test set is the p-cycles of S_p (an intersection that is a non-trivial
/// p-group contains such a conjugate); the exhaustive flag tests every
/// non-identity element of S_p instead.
inline CosetScanResult scan_cosets(int p, int k, int threads = 1, bool exhaustive = false,
                                   uint64_t budget = 3628800) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("scan_cosets: need k >= 1");
  const int n = p * k;
  if (n > 20 || factorial_u64(n) > budget)
    throw BudgetExceeded("scan_cosets: |S_" + std::to_string(n) + "| exceeds the scan budget of " +
                         std::to_string(budget));
  if (threads < 1) threads = 1;

  const uint64_t nfact = factorial_u64(n);
  const std::vector<Permutation> d_elems = d_elements(p, k);

  GroupSpec P = build_P(p, k);
  std::unordered_set<Permutation, PermHash> p_set;
  for (const auto& g : P.elements()) p_set.insert(g);

  std::vector<Permutation> tests;
  {
    std::vector<int32_t> img(static_cast<size_t>(p));
    for (int j = 0; j < p; ++j) img[static_cast<size_t>(j)] = j;
    do {
      const Permutation g = Permutation::from_images0(img);
      if (g.is_identity()) continue;
      if (exhaustive || g.order() == p) tests.push_back(diagonal(g, k));
    } while (std::next_permutation(img.begin(), img.end()));
  }

  struct Local {
    uint64_t hit_elements = 0;
    std::map<Permutation, CosetWitness> witnesses;
  };
  std::vector<Local> locals(static_cast<size_t>(threads));

  auto worker = [&](int w, uint64_t lo, uint64_t hi) {
    Local& out = locals[static_cast<size_t>(w)];
    if (lo >= hi) return;
    Permutation x = unrank_permutation(n, lo);
    std::vector<int32_t> img(x.images0());
    std::vector<int32_t> y(static_cast<size_t>(n));
    std::vector<int32_t> xinv(static_cast<size_t>(n));
    for (uint64_t r = lo; r < hi; ++r) {
      for (int i = 0; i < n; ++i) xinv[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
      for (const auto& dg : tests) {
        for (int i = 0; i < n; ++i)
          y[static_cast<size_t>(i)] =
              img[static_cast<size_t>(dg.apply(xinv[static_cast<size_t>(i)]))];
        Permutation yp = Permutation::from_images0(y);
        if (p_set.count(yp)) {
          ++out.hit_elements;
          Permutation xp = Permutation::from_images0(img);
          Permutation canon = canonical_coset_rep(d_elems, xp);
          auto it = out.witnesses.find(canon);
          if (it == out.witnesses.end())
            out.witnesses.emplace(std::move(canon),
                                  CosetWitness{std::move(xp), std::move(yp), r});
          break;
        }
      }
      std::next_permutation(img.begin(), img.end());
    }
  };

  if (threads == 1) {
    worker(0, 0, nfact);
  } else {
    std::vector<std::thread> pool;
    const uint64_t chunk = (nfact + static_cast<uint64_t>(threads) - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const uint64_t lo = chunk * static_cast<uint64_t>(w);
      const uint64_t hi = std::min(nfact, lo + chunk);
      pool.emplace_back(worker, w, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  CosetScanResult result;
  result.p = p;
  result.k = k;
  result.exhaustive_intersection = exhaustive;
  result.total_cosets = nfact / d_elems.size();
  for (auto& loc : locals) {
    result.hit_elements += loc.hit_elements;
    for (auto& [canon, wit] : loc.witnesses) {
      auto it = result.witnesses.find(canon);
      if (it == result.witnesses.end())
        result.witnesses.emplace(canon, wit);
      else if (wit.rank < it->second.rank)
        it->second = wit;
    }
  }
  result.hit_cosets = result.witnesses.size();
  if (result.hit_elements != result.hit_cosets * d_elems.size())
    throw std::logic_error("scan_cosets: hit elements do not fill whole cosets");
  return result;
}

struct TransversalVerdict {
  int p = 2;
  int k = 1;
  uint64_t total_cosets = 0;
  uint64_t hits = 0;     // from the scan
  uint64_t expected = 0; // |X_{k-1}| by enumeration
  bool ok = false;
  std::string counterexample;  // empty when ok
};

/// Certify that X_{k-1} is a transversal of the hit cosets: the enumerated
/// representatives are pairwise in distinct cosets, and their coset ids are
/// exactly the scan's hit ids.
inline TransversalVerdict certify_transversal(int p, int k, int threads = 1,
                                              bool exhaustive = false,
                                              uint64_t budget = 3628800) {
  require_prime(p);
  if (k < 1 || k % p == 0)
    throw std::invalid_argument("certify_transversal: need k >= 1 with p not dividing k");
  TransversalVerdict v;
  v.p = p;
  v.k = k;

  const CosetScanResult scan = scan_cosets(p, k, threads, exhaustive, budget);
  v.total_cosets = scan.total_cosets;
  v.hits = scan.hit_cosets;

  const std::vector<Permutation> d_elems = d_elements(p, k);
  const auto reps = enumerate_X(p, k - 1);
  v.expected = reps.size();

  std::map<Permutation, Permutation> rep_cosets;  // canonical id -> representative
  for (const auto& rep : reps) {
    Permutation padded = rep.realized.padded(p * k);
    Permutation canon = canonical_coset_rep(d_elems, padded);
    auto [it, inserted] = rep_cosets.emplace(std::move(canon), padded);
    if (!inserted) {
      v.ok = false;
      v.counterexample = "representatives " + to_cycle_string(it->second) + " and " +
                         to_cycle_string(padded) + " share the coset of " +
                         to_cycle_string(it->first);
      return v;
    }
  }

  if (v.expected != v.hits) {
    v.ok = false;
    v.counterexample = "|X_{k-1}| = " + std::to_string(v.expected) + " but the scan found " +
                       std::to_string(v.hits) + " hit cosets";
    return v;
  }
  for (const auto& [canon, wit] : scan.witnesses) {
    if (!rep_cosets.count(canon)) {
      v.ok = false;
      v.counterexample = "hit coset of " + to_cycle_string(canon) +
                         " (witness x = " + to_cycle_string(wit.x) +
                         ") contains no representative";
      return v;
    }
  }
  v.ok = true;
  return v;
}

}  // namespace liedim

#endif
