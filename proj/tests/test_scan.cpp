#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "liedim/coset_scan.hpp"
#include "liedim/dimension.hpp"
#include "test_util.hpp"

using namespace liedim;
using test::all_permutations;
using test::random_permutation;

TEST_CASE("lexicographic unranking matches next_permutation") {
  CHECK(unrank_permutation(4, 0) == Permutation(4));
  const auto perms = all_permutations(4);
  for (uint64_t r = 0; r < perms.size(); ++r) CHECK(unrank_permutation(4, r) == perms[r]);
}

TEST_CASE("the D listing is the full subgroup") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 1}}) {
    const auto list = d_elements(p, k);
    CHECK(list.size() == factorial_u64(p) * factorial_u64(k));
    const std::set<Permutation> set(list.begin(), list.end());
    CHECK(set.size() == list.size());
    const GroupSpec D = build_D(p, k);
    const auto& closure = D.elements();
    CHECK(set == std::set<Permutation>(closure.begin(), closure.end()));
    for (const auto& g : list) CHECK(in_D(p, k, g));
  }
}

TEST_CASE("canonical representatives are constant on cosets") {
  const auto d_elems = d_elements(2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const Permutation x = random_permutation(6);
    const Permutation canon = canonical_coset_rep(d_elems, x);
    const Permutation& d = d_elems[static_cast<size_t>(trial) % d_elems.size()];
    CHECK(canonical_coset_rep(d_elems, d * x) == canon);
    CHECK(in_D(2, 3, canon * x.inverse()));
  }
}

TEST_CASE("coset assignment agrees with direct membership, fuzzed") {
  const auto d_elems = d_elements(2, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const Permutation x = random_permutation(6);
    Permutation y = random_permutation(6);
    if (trial % 2 == 0) y = d_elems[static_cast<size_t>(trial) % d_elems.size()] * x;
    const bool same_canon = canonical_coset_rep(d_elems, x) == canonical_coset_rep(d_elems, y);
    CHECK(same_canon == in_D(2, 3, y * x.inverse()));
  }
}

TEST_CASE("scan counts for the certified pairs") {
  const CosetScanResult one = scan_cosets(2, 1);
  CHECK(one.total_cosets == 1);
  CHECK(one.hit_cosets == 1);

  const CosetScanResult r23 = scan_cosets(2, 3);
  CHECK(r23.total_cosets == 60);
  CHECK(r23.hit_cosets == 12);
  CHECK(r23.hit_elements == 144);

  const CosetScanResult r32 = scan_cosets(3, 2);
  CHECK(r32.total_cosets == 60);
  CHECK(r32.hit_cosets == 6);
  CHECK(r32.hit_elements == 72);
}

TEST_CASE("stored witnesses are genuine") {
  const CosetScanResult r = scan_cosets(3, 2);
  for (const auto& [canon, wit] : r.witnesses) {
    CHECK_FALSE(wit.y.is_identity());
    CHECK(in_P(3, 2, wit.y));
    Permutation g;
    CHECK(as_diagonal(wit.y.conjugated_by(wit.x.inverse()), 2, &g));
    CHECK(g.order() == 3);
    CHECK(canonical_coset_rep(d_elements(3, 2), wit.x) == canon);
  }
}

TEST_CASE("exhaustive intersection testing finds the same cosets") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
    const CosetScanResult a = scan_cosets(p, k, 1, false);
    const CosetScanResult b = scan_cosets(p, k, 1, true);
    CHECK(a.hit_cosets == b.hit_cosets);
    std::set<Permutation> ka, kb;
    for (const auto& [c, w] : a.witnesses) ka.insert(c);
    for (const auto& [c, w] : b.witnesses) kb.insert(c);
    CHECK(ka == kb);
  }
}

TEST_CASE("worker count does not change the result") {
  const CosetScanResult a = scan_cosets(2, 3, 1);
  const CosetScanResult b = scan_cosets(2, 3, 3);
  const CosetScanResult c = scan_cosets(2, 3, 8);
  CHECK(a.hit_cosets == b.hit_cosets);
  CHECK(a.hit_elements == b.hit_elements);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  REQUIRE(a.witnesses.size() == c.witnesses.size());
  for (const auto& [canon, wit] : a.witnesses) {
    REQUIRE(b.witnesses.count(canon) == 1);
    CHECK(b.witnesses.at(canon).x == wit.x);
    CHECK(b.witnesses.at(canon).y == wit.y);
    CHECK(c.witnesses.at(canon).x == wit.x);
  }
}

TEST_CASE("every hit coset reduces onto its stored representative") {
  const CosetScanResult r = scan_cosets(2, 3);
  const auto d_elems = d_elements(2, 3);
  for (const auto& [canon, wit] : r.witnesses) {
    const CanonicalRep rep = reduce_to_canonical(2, 3, wit.x, wit.y);
    CHECK(canonical_coset_rep(d_elems, rep.realized.padded(6)) == canon);
  }
}

TEST_CASE("certification of the desk-scale pairs") {
  const TransversalVerdict v1 = certify_transversal(2, 1);
  CHECK(v1.ok);
  CHECK(v1.hits == 1);
  CHECK(v1.expected == 1);

  const TransversalVerdict v23 = certify_transversal(2, 3);
  CHECK(v23.ok);
  CHECK(v23.hits == 12);
  CHECK(v23.total_cosets == 60);
  CHECK(v23.counterexample.empty());

  const TransversalVerdict v32 = certify_transversal(3, 2, 2);
  CHECK(v32.ok);
  CHECK(v32.hits == 6);

  CHECK_THROWS_AS(certify_transversal(2, 4), std::invalid_argument);
}

TEST_CASE("oracle agrees with the recurrence formula") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 2}}) {
    const CosetScanResult r = scan_cosets(p, k);
    const PComposition kappa = p_adic_pcomposition(p, k);
    const auto a = a_sequence(p, kappa.parts.front());
    BigNat expected = 1;
    for (size_t i = 0; i + 1 < kappa.parts.size(); ++i)
      expected *= a[static_cast<size_t>(kappa.parts[i])];
    CHECK(expected == r.hit_cosets);
  }
}

TEST_CASE("scan budget guards the factorial explosion") {
  CHECK_THROWS_AS(scan_cosets(2, 7), BudgetExceeded);
  CHECK_THROWS_AS(scan_cosets(2, 5, 1, false, 1000), BudgetExceeded);
}

TEST_CASE("hit cosets reduce onto representatives at p=3 and at depth") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {2, 5}}) {
    const CosetScanResult r = scan_cosets(p, k, 4);
    const auto d_elems = d_elements(p, k);
    std::set<Permutation> rep_ids;
    for (const auto& [canon, wit] : r.witnesses) {
      const CanonicalRep rep = reduce_to_canonical(p, k, wit.x, wit.y);
      const Permutation id_of_rep = canonical_coset_rep(d_elems, rep.realized.padded(p * k));
      CHECK(id_of_rep == canon);
      rep_ids.insert(id_of_rep);
    }
    CHECK(rep_ids.size() == r.hit_cosets);
  }
}

TEST_CASE("certification across primes at trivial k") {
  const TransversalVerdict v = certify_transversal(5, 1);
  CHECK(v.ok);
  CHECK(v.hits == 1);
  CHECK(v.total_cosets == 1);
}
