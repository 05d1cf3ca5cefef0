// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure.  Run as:  liedim_acceptance --cli <path-to-cli> [--threads N]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "liedim/coset_reps.hpp"
#include "liedim/coset_scan.hpp"
#include "liedim/dimension.hpp"
#include "liedim/group_algebra.hpp"

using namespace liedim;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void fail(Outcome& o, const std::string& msg) {
  o.ok = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += msg;
}

std::string run_command(const std::string& cmd, int* exit_code) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  *exit_code = pclose(pipe);
  return out;
}

std::vector<Permutation> all_perms(int n) {
  std::vector<int32_t> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images0(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// --- criterion 1: the CLI reproduces dim_pf = 24 and liemax_upper = 96 ----

Outcome criterion1(const std::string& cli) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  const std::string out = run_command(cli + " dims --p 2 --k 3 --format csv", &code);
  const double elapsed = seconds_since(t0);
  if (code != 0) fail(o, "exit code " + std::to_string(code));
  bool found = false;
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("2,3,", 0) == 0) {
      found = true;
      if (line.find(",24,") == std::string::npos) fail(o, "dim_pf 24 missing in: " + line);
      if (line.find(",96,") == std::string::npos) fail(o, "liemax_upper 96 missing in: " + line);
    }
  }
  if (!found) fail(o, "no k=3 row in output: " + out);
  if (elapsed >= 1.0) fail(o, "took " + std::to_string(elapsed) + "s (limit 1s)");
  return o;
}

// --- criterion 2: |X_{p^m}| equals a_m -----------------------------------

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::tuple<int, int, uint64_t>> cases{
      {2, 0, 2}, {2, 1, 12}, {2, 2, 272}, {3, 0, 6}, {3, 1, 702}};
  for (auto [p, m, expected] : cases) {
    const auto a = a_sequence(p, m);
    if (a.back() != expected)
      fail(o, "a_" + std::to_string(m) + "(p=" + std::to_string(p) + ") != " +
                  std::to_string(expected));
    const auto reps = enumerate_X(p, static_cast<int>(ipow(p, m)));
    if (reps.size() != expected)
      fail(o, "|X_{p^m}| = " + std::to_string(reps.size()) + " for p=" + std::to_string(p) +
                  ", m=" + std::to_string(m) + ", expected " + std::to_string(expected));
    std::set<Permutation> distinct;
    for (const auto& r : reps) distinct.insert(r.realized);
    if (distinct.size() != reps.size()) fail(o, "representatives not pairwise distinct");
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 10.0) fail(o, "took " + std::to_string(elapsed) + "s (limit 10s)");
  return o;
}

// --- criteria 3 and 4: transversal certification + formula agreement ------

Outcome criterion3(int threads, std::vector<TransversalVerdict>& verdicts) {
  Outcome o;
  const std::vector<std::tuple<int, int, uint64_t>> cases{
      {2, 1, 1}, {2, 3, 12}, {3, 2, 6}};
  for (auto [p, k, hits] : cases) {
    const TransversalVerdict v = certify_transversal(p, k, threads);
    verdicts.push_back(v);
    if (!v.ok) fail(o, "certification failed at p=" + std::to_string(p) +
                           ", k=" + std::to_string(k) + ": " + v.counterexample);
    if (v.hits != hits)
      fail(o, "hit count " + std::to_string(v.hits) + " at p=" + std::to_string(p) +
                  ", k=" + std::to_string(k) + ", expected " + std::to_string(hits));
  }
  const auto t0 = std::chrono::steady_clock::now();
  const TransversalVerdict big = certify_transversal(2, 5, threads);
  const double elapsed = seconds_since(t0);
  verdicts.push_back(big);
  if (!big.ok) fail(o, "certification failed at p=2, k=5: " + big.counterexample);
  if (big.hits != 272)
    fail(o, "hit count " + std::to_string(big.hits) + " at p=2, k=5, expected 272");
  if (big.total_cosets != 15120)
    fail(o, "total cosets " + std::to_string(big.total_cosets) + " at p=2, k=5");
  const double limit = threads >= 8 ? 120.0 : 600.0;
  if (elapsed >= limit)
    fail(o, "p=2, k=5 took " + std::to_string(elapsed) + "s (limit " + std::to_string(limit) +
                "s with " + std::to_string(threads) + " workers)");
  return o;
}

Outcome criterion4(const std::vector<TransversalVerdict>& verdicts) {
  Outcome o;
  for (const auto& v : verdicts) {
    const PComposition kappa = p_adic_pcomposition(v.p, v.k);
    BigNat expected = 1;
    if (!kappa.parts.empty()) {
      const auto a = a_sequence(v.p, kappa.parts.front());
      for (size_t i = 0; i + 1 < kappa.parts.size(); ++i)
        expected *= a[static_cast<size_t>(kappa.parts[i])];
    }
    if (expected != v.hits)
      fail(o, "N_oracle = " + std::to_string(v.hits) + " at p=" + std::to_string(v.p) +
                  ", k=" + std::to_string(v.k) + " but the formula gives " + expected.str());
  }
  return o;
}

// --- criterion 5: exhaustive lemma-level suites ---------------------------

void check_block_operator_identities(Outcome& o) {
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; a * b <= 8; ++b) {
      const auto sigmas = all_perms(a);
      const auto taus = all_perms(b);
      for (const auto& sigma : sigmas) {
        const Permutation lifted = block_lift(sigma, b);
        for (const auto& tau : taus) {
          for (int r = 1; r <= a; ++r)
            if (embed_at(tau, r, a).conjugated_by(lifted) !=
                embed_at(tau, sigma.apply(r - 1) + 1, a)) {
              fail(o, "embedding conjugation failed at a=" + std::to_string(a) +
                          ", b=" + std::to_string(b));
              return;
            }
          if (lifted * diagonal(tau, a) != diagonal(tau, a) * lifted) {
            fail(o, "diagonal commutation failed at a=" + std::to_string(a) +
                        ", b=" + std::to_string(b));
            return;
          }
        }
      }
    }
}

void check_finest_partition(Outcome& o) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::vector<int>> partitions;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> cuts{0};
      for (int c = 1; c < n; ++c)
        if (mask & (1u << (c - 1))) cuts.push_back(c);
      cuts.push_back(n);
      partitions.push_back(std::move(cuts));
    }
    auto invariant = [](const Permutation& g, const std::vector<int>& cuts) {
      for (size_t j = 1; j < cuts.size(); ++j)
        if (!g.leaves_invariant(cuts[j - 1], cuts[j])) return false;
      return true;
    };
    for (const auto& g : all_perms(n)) {
      const IntervalPartition fip = finest_invariant_partition(g);
      if (!invariant(g, fip.cuts)) {
        fail(o, "finest partition not invariant at n=" + std::to_string(n));
        return;
      }
      for (const auto& cuts : partitions)
        if (invariant(g, cuts) && !fip.refines(IntervalPartition(n, cuts))) {
          fail(o, "finest partition fails to refine an invariant one at n=" + std::to_string(n));
          return;
        }
    }
  }
}

void check_wreath_reconstruction(Outcome& o) {
  for (int p : {2, 3}) {
    const GroupSpec R = build_R(p, 1);
    for (const auto& g : R.elements()) {
      const WreathNormalForm f = wreath_normal_form(p, 1, g);
      if (f.reconstruct() != g) {
        fail(o, "wreath reconstruction failed at p=" + std::to_string(p));
        return;
      }
      for (size_t j = 0; j < f.factors.size(); ++j) {
        const int width = f.cuts.cuts[j + 1] - f.cuts.cuts[j];
        if (f.cuts.cuts[j + 1] % width != 0 ||
            !in_R_minus_B(p, f.exponents[j] - 1, f.factors[j])) {
          fail(o, "wreath factor constraint failed at p=" + std::to_string(p));
          return;
        }
      }
    }
  }
}

void check_conjugate_form(Outcome& o) {
  for (auto [p, i] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 1}}) {
    const GroupSpec R = build_R(p, i);
    const GroupSpec R0 = build_R0(p, i);
    const Permutation y = top_cycle(p, i);
    uint64_t count = 0;
    for (const auto& g : R.elements()) {
      if (g.order() != p || in_B(p, i, g)) continue;
      ++count;
      const ConjugateForm f = unique_conjugate_form(p, i, g);
      if (!R0.contains(f.b) || y.power(f.t).conjugated_by(f.b) != g) {
        fail(o, "conjugate form does not reconstruct at p=" + std::to_string(p) +
                    ", i=" + std::to_string(i));
        return;
      }
    }
    std::set<Permutation> images;
    for (int t = 1; t <= p - 1; ++t)
      for (const auto& b : R0.elements())
        if (!images.insert(y.power(t).conjugated_by(b)).second) {
          fail(o, "conjugate form is not injective at p=" + std::to_string(p) +
                      ", i=" + std::to_string(i));
          return;
        }
    if (images.size() != count) {
      fail(o, "order-p census mismatch at p=" + std::to_string(p) + ", i=" + std::to_string(i));
      return;
    }
  }
}

void check_z_laws(Outcome& o) {
  for (int p : {2, 3, 5}) {
    for (int m = 0; m <= 2; ++m) {
      const int pm = static_cast<int>(ipow(p, m));
      if (pm * p > 125) continue;
      for (int t = 1; t <= p - 1; ++t) {
        if (diagonal(p_cycle(p), pm).conjugated_by(z_element(p, m, t)) !=
            top_cycle(p, m).power(t)) {
          fail(o, "z conjugation law failed at p=" + std::to_string(p) +
                      ", m=" + std::to_string(m));
          return;
        }
        for (int s = 1; s <= p - 1; ++s)
          if (diagonal(z_element(p, 0, t), pm) * z_element(p, m, s) !=
              z_element(p, m, (t * s) % p)) {
            fail(o, "z composition law failed at p=" + std::to_string(p) +
                        ", m=" + std::to_string(m));
            return;
          }
      }
    }
  }
}

void check_block_intersection(Outcome& o) {
  // S_4^[2] ∩ (S_4[1] x S_4[2]) = S_2^[2][1] x S_2^[2][2] inside S_8
  std::set<Permutation> lhs;
  for (const auto& sigma : all_perms(4)) {
    const Permutation lifted = block_lift(sigma, 2);
    if (lifted.leaves_invariant(0, 4) && lifted.leaves_invariant(4, 8)) lhs.insert(lifted);
  }
  std::set<Permutation> rhs;
  for (const auto& s1 : all_perms(2))
    for (const auto& s2 : all_perms(2))
      rhs.insert(embed_shifted(block_lift(s1, 2), 0, 8) * embed_shifted(block_lift(s2, 2), 4, 8));
  if (lhs != rhs) fail(o, "block intersection identity failed");
}

void check_sylow_containment(Outcome& o) {
  for (int k = 1; k <= 5; ++k) {
    const GroupSpec next = build_P(2, k + 1);
    const GroupSpec cur = build_P(2, k);
    for (const auto& g : cur.elements())
      if (!next.contains(g)) {
        fail(o, "P_k not contained in P_{k+1} at k=" + std::to_string(k));
        return;
      }
  }
}

void check_refinements(Outcome& o) {
  for (int p : {2, 3}) {
    for (int64_t k = 1; k <= 6; ++k) {
      const PComposition kappa = p_adic_pcomposition(p, k);
      for (const auto& lam : enumerate_pcompositions(p, k))
        if (!is_refinement(lam, kappa)) {
          fail(o, "a p-composition fails to refine the p-adic one at p=" + std::to_string(p) +
                      ", k=" + std::to_string(k));
          return;
        }
    }
  }
  for (auto [p, mmax] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
    for (int m = 1; m <= mmax; ++m) {
      const PComposition coarse{p, std::vector<int>(static_cast<size_t>(p), m - 1)};
      for (const auto& lam : enumerate_pcompositions(p, ipow(p, m)))
        if (lam.parts.size() > 1 && !is_refinement(lam, coarse)) {
          fail(o, "one-level refinement failed at p=" + std::to_string(p) +
                      ", m=" + std::to_string(m));
          return;
        }
    }
  }
}

Outcome criterion5() {
  Outcome o;
  check_block_operator_identities(o);
  check_finest_partition(o);
  check_wreath_reconstruction(o);
  check_conjugate_form(o);
  check_z_laws(o);
  check_block_intersection(o);
  check_sylow_containment(o);
  check_refinements(o);
  return o;
}

// --- criterion 6: the omega identity --------------------------------------

Outcome criterion6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 6; ++n)
    if (!omega_identity_check(n)) fail(o, "omega identity failed over Z at n=" + std::to_string(n));
  for (int p : {2, 3, 5}) {
    const GroupAlgebraElement w = omega_element(p);
    if (!(w * w).mod(p).is_zero())
      fail(o, "omega_p^2 != 0 mod p at p=" + std::to_string(p));
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 30.0) fail(o, "took " + std::to_string(elapsed) + "s (limit 30s)");
  return o;
}

// --- criterion 7: growth behavior -----------------------------------------

Outcome criterion7() {
  Outcome o;
  const auto table = growth_table(2, 31, 30);
  for (const auto& r : table) {
    if (!r.sandwich_ok) fail(o, "sandwich violated at k=" + std::to_string(r.k));
    if (r.k > 1 && !(r.sandwich_lo <= r.N && r.N <= r.sandwich_hi))
      fail(o, "sandwich violated at k=" + std::to_string(r.k));
    if (r.ratio.size() < 30) fail(o, "ratio narrower than 30 digits at k=" + std::to_string(r.k));
  }
  for (size_t i = 1; i < table.size(); ++i)
    if (!(table[i - 1].dim_pf * table[i].dim_lie > table[i].dim_pf * table[i - 1].dim_lie))
      fail(o, "ratio not strictly decreasing at k=" + std::to_string(table[i].k));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = "./tools/liedim";
  int threads = static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) cli = argv[++i];
    if (arg == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
  }

  int failures = 0;
  auto report = [&failures](int idx, const std::string& name, const Outcome& o) {
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name;
    if (!o.ok) std::cout << "  [" << o.detail << "]";
    std::cout << std::endl;
    if (!o.ok) ++failures;
  };

  report(1, "dims --p 2 --k 3 reports dim_pf = 24 and liemax_upper = 96", criterion1(cli));
  report(2, "|X_{p^m}| matches the recurrence (2,12,272,6,702)", criterion2());
  std::vector<TransversalVerdict> verdicts;
  report(3, "transversal certification at (2,1),(2,3),(3,2),(2,5)", criterion3(threads, verdicts));
  report(4, "oracle count equals the product formula on certified pairs", criterion4(verdicts));
  report(5, "exhaustive lemma-level property suites", criterion5());
  report(6, "omega identity over Z (n <= 6) and nilpotency mod p", criterion6());
  report(7, "sandwich bounds and strictly decreasing ratio (p=2, odd k <= 31)", criterion7());

  if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
