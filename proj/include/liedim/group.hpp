#ifndef LIEDIM_GROUP_HPP
#define LIEDIM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "liedim/permutation.hpp"

namespace liedim {

constexpr size_t kDefaultClosureBudget = 10000000;

/// A finite permutation group given by generators, with on-demand element
/// closure.  The closure is a breadth-first orbit of the identity under
/// right multiplication by the generators; its insertion order is
/// deterministic, so element listings are reproducible.  The cache fill is
/// idempotent: concurrent readers see either no cache or the complete one.
class GroupSpec {
 public:
  GroupSpec(std::string name, int degree, std::vector<Permutation> generators)
      : name_(std::move(name)), degree_(degree), gens_(std::move(generators)),
        cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
      if (g.degree() != degree_)
        throw std::invalid_argument(name_ + ": generator degree " + std::to_string(g.degree()) +
                                    " != group degree " + std::to_string(degree_));
  }

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  /// Full element list in closure order.  Throws BudgetExceeded past budget.
  /// Lvalue-only: the reference lives with this GroupSpec's cache.
  const std::vector<Permutation>& elements(size_t budget = kDefaultClosureBudget) const& {
    fill(budget);
    return cache_->elems;
  }
  const std::vector<Permutation>& elements(size_t budget = kDefaultClosureBudget) const&& = delete;

  uint64_t order(size_t budget = kDefaultClosureBudget) const { return elements(budget).size(); }

  /// Membership via the cached closure.  An element of smaller degree is
  /// padded; one of larger degree must fix everything beyond degree().
  bool contains(const Permutation& x, size_t budget = kDefaultClosureBudget) const {
    fill(budget);
    if (x.degree() == degree_) return cache_->set.count(x) > 0;
    if (x.degree() < degree_) return cache_->set.count(x.padded(degree_)) > 0;
    if (!x.leaves_invariant(0, degree_)) return false;
    for (int i = degree_; i < x.degree(); ++i)
      if (x.apply(i) != i) return false;
    return cache_->set.count(x.restricted(0, degree_)) > 0;
  }

  bool closure_cached() const {
    std::lock_guard<std::mutex> lock(cache_->m);
    return cache_->filled;
  }

  /// "R:p=2,i=1 gens=[(1,2),(1,3)(2,4)]"
  std::string describe() const {
    std::string out = name_ + " gens=[";
    for (size_t i = 0; i < gens_.size(); ++i) {
      if (i) out += ',';
      out += to_cycle_string(gens_[i]);
    }
    out += ']';
    return out;
  }

 private:
  struct Cache {
    std::mutex m;
    bool filled = false;
    std::vector<Permutation> elems;
    std::unordered_set<Permutation, PermHash> set;
  };

  void fill(size_t budget) const {
    std::lock_guard<std::mutex> lock(cache_->m);
    if (cache_->filled) return;
    std::vector<Permutation> elems;
    std::unordered_set<Permutation, PermHash> set;
    Permutation id(degree_);
    elems.push_back(id);
    set.insert(id);
    for (size_t i = 0; i < elems.size(); ++i) {
      for (const auto& g : gens_) {
        Permutation next = elems[i] * g;
        if (set.insert(next).second) {
          if (elems.size() >= budget)
            throw BudgetExceeded(name_ + ": closure exceeds budget of " + std::to_string(budget));
          elems.push_back(std::move(next));
        }
      }
    }
    cache_->elems = std::move(elems);
    cache_->set = std::move(set);
    cache_->filled = true;
  }

  std::string name_;
  int degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace liedim

#endif
