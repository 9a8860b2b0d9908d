#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "cake/error.hpp"
#include "cake/rational.hpp"

namespace cake {

// A piece [lo, hi) of the unit cake. Measures are non-atomic, so whether an
// endpoint is included never changes a value; half-open storage just makes
// disjointness syntactic.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo < 0 || hi > 1 || lo > hi)
      throw DomainError("interval [" + format_rational(lo) + ", " + format_rational(hi) +
                        ") is not inside [0, 1]");
  }

  Rational length() const { return hi - lo; }
  bool empty() const { return lo == hi; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Finite disjoint union of intervals, kept sorted with touching intervals
// merged and empty ones dropped, so equal sets have equal representations.
class Subcake {
 public:
  Subcake() = default;
  explicit Subcake(std::vector<Interval> parts) : parts_(std::move(parts)) { normalize(); }
  Subcake(std::initializer_list<Interval> parts) : parts_(parts) { normalize(); }

  static Subcake unit() { return Subcake{Interval(Rational(0), Rational(1))}; }
  static Subcake between(const Rational& lo, const Rational& hi) { return Subcake{Interval(lo, hi)}; }

  const std::vector<Interval>& intervals() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // Leftmost and rightmost points of the closure. Undefined on an empty subcake.
  const Rational& min() const {
    if (parts_.empty()) throw DomainError("min of empty subcake");
    return parts_.front().lo;
  }
  const Rational& sup() const {
    if (parts_.empty()) throw DomainError("sup of empty subcake");
    return parts_.back().hi;
  }

  Rational length() const {
    Rational total = 0;
    for (const auto& p : parts_) total += p.length();
    return total;
  }

  // this ∩ [a, b)
  Subcake clip(const Rational& a, const Rational& b) const {
    std::vector<Interval> out;
    for (const auto& p : parts_) {
      Rational lo = std::max(p.lo, a);
      Rational hi = std::min(p.hi, b);
      if (lo < hi) out.emplace_back(lo, hi);
    }
    return Subcake(std::move(out));
  }

  Subcake unite(const Subcake& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Subcake(std::move(all));
  }

  Subcake intersect(const Subcake& other) const {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
      const auto& a = parts_[i];
      const auto& b = other.parts_[j];
      Rational lo = std::max(a.lo, b.lo);
      Rational hi = std::min(a.hi, b.hi);
      if (lo < hi) out.emplace_back(lo, hi);
      if (a.hi < b.hi) ++i; else ++j;
    }
    return Subcake(std::move(out));
  }

  Subcake minus(const Subcake& other) const {
    std::vector<Interval> out;
    for (const auto& p : parts_) {
      Rational cursor = p.lo;
      for (const auto& q : other.parts_) {
        if (q.hi <= cursor) continue;
        if (q.lo >= p.hi) break;
        if (q.lo > cursor) out.emplace_back(cursor, q.lo);
        cursor = std::max(cursor, q.hi);
        if (cursor >= p.hi) break;
      }
      if (cursor < p.hi) out.emplace_back(cursor, p.hi);
    }
    return Subcake(std::move(out));
  }

  bool disjoint_from(const Subcake& other) const { return intersect(other).empty(); }

  // Index of the interval whose closure contains x, or size() if none.
  std::size_t locate(const Rational& x) const {
    for (std::size_t k = 0; k < parts_.size(); ++k)
      if (parts_[k].lo <= x && x <= parts_[k].hi) return k;
    return parts_.size();
  }

  friend bool operator==(const Subcake& a, const Subcake& b) { return a.parts_ == b.parts_; }

  std::string to_string() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) s += " u ";
      s += "[" + format_rational(parts_[k].lo) + ", " + format_rational(parts_[k].hi) + "]";
    }
    return s;
  }

 private:
  void normalize() {
    std::erase_if(parts_, [](const Interval& p) { return p.empty(); });
    std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (auto& p : parts_) {
      if (!merged.empty() && p.lo <= merged.back().hi) {
        if (p.hi > merged.back().hi) merged.back().hi = p.hi;
      } else {
        merged.push_back(std::move(p));
      }
    }
    parts_ = std::move(merged);
  }

  std::vector<Interval> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Subcake& s) { return os << s.to_string(); }

}  // namespace cake
