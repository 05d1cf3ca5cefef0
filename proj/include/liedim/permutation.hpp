#ifndef LIEDIM_PERMUTATION_HPP
#define LIEDIM_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liedim {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Permutation of [1,n] under a right action: i * (gh) = (i * g) * h.
/// Points are stored 0-based; every text format (cycle notation,
/// one-line images) is 1-based.  Values are immutable after construction
/// and the degree is explicit: embedding S_m into S_n is the explicit
/// padded() operation, never an implicit coercion.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on n points.
  explicit Permutation(int n) : img_(static_cast<size_t>(check_degree(n))) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  /// From 0-based image vector; must be a bijection of [0,n).
  static Permutation from_images0(std::vector<int32_t> img) {
    const int n = static_cast<int>(img.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int32_t v : img) {
      if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[static_cast<size_t>(v)] = true;
    }
    Permutation g;
    g.img_ = std::move(img);
    return g;
  }

  /// From 1-based image vector (the external convention).
  static Permutation from_images1(const std::vector<int32_t>& img) {
    std::vector<int32_t> shifted(img.size());
    for (size_t i = 0; i < img.size(); ++i) shifted[i] = img[i] - 1;
    return from_images0(std::move(shifted));
  }

  int degree() const { return static_cast<int>(img_.size()); }

  /// Image of 0-based point i.
  int32_t apply(int32_t i) const { return img_[static_cast<size_t>(i)]; }

  const std::vector<int32_t>& images0() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  bool fixed_point_free() const {
    if (degree() == 0) return false;
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] == i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int32_t> inv(img_.size());
    for (int32_t i = 0; i < degree(); ++i) inv[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    Permutation g;
    g.img_ = std::move(inv);
    return g;
  }

  /// Left-to-right product: (*this) then rhs.
  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
    if (lhs.degree() != rhs.degree())
      throw std::invalid_argument("compose: degree mismatch (" + std::to_string(lhs.degree()) +
                                  " vs " + std::to_string(rhs.degree()) + ")");
    std::vector<int32_t> out(lhs.img_.size());
    for (size_t i = 0; i < lhs.img_.size(); ++i)
      out[i] = rhs.img_[static_cast<size_t>(lhs.img_[i])];
    Permutation g;
    g.img_ = std::move(out);
    return g;
  }

  /// Conjugate g^x = x^{-1} g x; a cycle of g through c_1,...,c_r maps to
  /// the cycle through c_1·x,...,c_r·x.
  Permutation conjugated_by(const Permutation& x) const {
    if (degree() != x.degree())
      throw std::invalid_argument("conjugate: degree mismatch");
    std::vector<int32_t> out(img_.size());
    for (int32_t i = 0; i < degree(); ++i)
      out[static_cast<size_t>(x.img_[static_cast<size_t>(i)])] =
          x.img_[static_cast<size_t>(img_[static_cast<size_t>(i)])];
    Permutation g;
    g.img_ = std::move(out);
    return g;
  }

  Permutation power(int64_t e) const {
    if (e < 0) return inverse().power(-e);
    Permutation acc(degree());
    Permutation base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// lcm of cycle lengths.
  int64_t order() const {
    std::vector<bool> seen(img_.size(), false);
    int64_t ord = 1;
    for (int32_t i = 0; i < degree(); ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      int64_t len = 0;
      for (int32_t j = i; !seen[static_cast<size_t>(j)]; j = img_[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  /// Extend to degree n >= degree(), fixing the new points.
  Permutation padded(int n) const {
    if (n < degree()) throw std::invalid_argument("padded: target degree smaller than current");
    std::vector<int32_t> out(static_cast<size_t>(n));
    std::copy(img_.begin(), img_.end(), out.begin());
    std::iota(out.begin() + degree(), out.end(), degree());
    Permutation g;
    g.img_ = std::move(out);
    return g;
  }

  /// Restriction to the 0-based interval [lo,hi), translated to degree hi-lo.
  /// The interval must be invariant.
  Permutation restricted(int lo, int hi) const {
    if (lo < 0 || hi > degree() || lo >= hi)
      throw std::invalid_argument("restricted: bad interval");
    std::vector<int32_t> out(static_cast<size_t>(hi - lo));
    for (int i = lo; i < hi; ++i) {
      int32_t v = img_[static_cast<size_t>(i)];
      if (v < lo || v >= hi)
        throw std::invalid_argument("restricted: interval is not invariant");
      out[static_cast<size_t>(i - lo)] = v - lo;
    }
    Permutation g;
    g.img_ = std::move(out);
    return g;
  }

  /// True if [lo,hi) is mapped onto itself.
  bool leaves_invariant(int lo, int hi) const {
    for (int i = lo; i < hi; ++i) {
      int32_t v = img_[static_cast<size_t>(i)];
      if (v < lo || v >= hi) return false;
    }
    return true;
  }

  /// Canonical cycles, 1-based: each cycle starts at its least point,
  /// cycles ordered by least point, fixed points omitted.
  std::vector<std::vector<int32_t>> cycles() const {
    std::vector<std::vector<int32_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int32_t i = 0; i < degree(); ++i) {
      if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i) continue;
      std::vector<int32_t> cyc;
      for (int32_t j = i; !seen[static_cast<size_t>(j)]; j = img_[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = true;
        cyc.push_back(j + 1);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.img_ < b.img_;
  }

 private:
  static int check_degree(int n) {
    if (n < 0) throw std::invalid_argument("Permutation: negative degree");
    return n;
  }
  std::vector<int32_t> img_;
};

struct PermHash {
  size_t operator()(const Permutation& g) const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t v : g.images0()) {
      h ^= static_cast<uint64_t>(v) + 1;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// ---------------------------------------------------------------------------
// Text formats: cycle notation "(1,2,3)(4,5)" and one-line "[2,3,1,5,4]".
// The identity prints as "()".
// ---------------------------------------------------------------------------

inline std::string to_cycle_string(const Permutation& g) {
  auto cycs = g.cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

inline std::string to_oneline_string(const Permutation& g) {
  std::string out = "[";
  for (int i = 0; i < g.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.apply(i) + 1);
  }
  out += ']';
  return out;
}

namespace detail {

inline void skip_ws(std::string_view s, size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

inline int32_t parse_point(std::string_view s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw std::invalid_argument("parse: expected a point");
  int32_t v = 0;
  for (size_t i = start; i < pos; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

}  // namespace detail

/// Parse cycle notation at a given degree.  "()" is the identity.
inline Permutation parse_cycles(std::string_view s, int degree) {
  std::vector<int32_t> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<size_t>(degree), false);
  size_t pos = 0;
  detail::skip_ws(s, pos);
  while (pos < s.size()) {
    if (s[pos] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++pos;
    detail::skip_ws(s, pos);
    std::vector<int32_t> cyc;
    while (pos < s.size() && s[pos] != ')') {
      int32_t pt = detail::parse_point(s, pos);
      if (pt < 1 || pt > degree) throw std::invalid_argument("parse_cycles: point out of range");
      if (used[static_cast<size_t>(pt - 1)])
        throw std::invalid_argument("parse_cycles: repeated point");
      used[static_cast<size_t>(pt - 1)] = true;
      cyc.push_back(pt - 1);
      detail::skip_ws(s, pos);
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        detail::skip_ws(s, pos);
      }
    }
    if (pos >= s.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
    ++pos;  // ')'
    for (size_t i = 0; i < cyc.size(); ++i)
      img[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    detail::skip_ws(s, pos);
  }
  return Permutation::from_images0(std::move(img));
}

/// Parse one-line image notation; degree is the number of entries.
inline Permutation parse_oneline(std::string_view s) {
  size_t pos = 0;
  detail::skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("parse_oneline: expected '['");
  ++pos;
  std::vector<int32_t> img;
  detail::skip_ws(s, pos);
  while (pos < s.size() && s[pos] != ']') {
    img.push_back(detail::parse_point(s, pos));
    detail::skip_ws(s, pos);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      detail::skip_ws(s, pos);
    }
  }
  if (pos >= s.size()) throw std::invalid_argument("parse_oneline: unterminated");
  return Permutation::from_images1(img);
}

/// Dispatch on the leading character; degree is required for cycle input.
inline Permutation parse_permutation(std::string_view s, int degree) {
  size_t pos = 0;
  detail::skip_ws(s, pos);
  if (pos < s.size() && s[pos] == '[') return parse_oneline(s);
  return parse_cycles(s, degree);
}

}  // namespace liedim

#endif
