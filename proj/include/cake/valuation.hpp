#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cake/error.hpp"
#include "cake/rational.hpp"
#include "cake/subcake.hpp"

namespace cake {

struct DensitySegment {
  Interval span;
  Rational density;

  friend bool operator==(const DensitySegment& a, const DensitySegment& b) {
    return a.span == b.span && a.density == b.density;
  }
};

// A probability measure on [0, 1] with piecewise-constant density and
// rational breakpoints. Stored in canonical form: zero-density pieces
// dropped, equal-density neighbours merged. Two valuations are the same
// measure iff their canonical forms compare equal.
class Valuation {
 public:
  // Throws DomainError on overlapping segments, negative density or total
  // mass different from 1.
  explicit Valuation(std::vector<DensitySegment> segments) : segments_(std::move(segments)) {
    canonicalize();
    Rational mass = 0;
    for (const auto& s : segments_) mass += s.density * s.span.length();
    if (mass != 1) throw DomainError("valuation has total mass " + format_rational(mass) + ", expected 1/1");
  }

  static Valuation lebesgue() { return Valuation({{Interval(0, 1), Rational(1)}}); }

  // Uniform on [lo, hi).
  static Valuation uniform_on(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw DomainError("uniform_on needs lo < hi");
    return Valuation({{Interval(lo, hi), 1 / Rational(hi - lo)}});
  }

  const std::vector<DensitySegment>& segments() const { return segments_; }

  // μ([a, b]) by direct integration.
  Rational measure(const Rational& a, const Rational& b) const {
    Rational total = 0;
    if (!(a < b)) return total;
    for (const auto& s : segments_) {
      if (s.span.hi <= a) continue;
      if (s.span.lo >= b) break;
      total += s.density * (std::min(s.span.hi, b) - std::max(s.span.lo, a));
    }
    return total;
  }

  Rational measure(const Subcake& x) const {
    Rational total = 0;
    for (const auto& p : x.intervals()) total += measure(p.lo, p.hi);
    return total;
  }

  // Smallest y >= x with μ([x, y]) = mass.
  Rational leftmost_point(const Rational& x, const Rational& mass) const {
    if (mass < 0) throw DomainError("negative cut value");
    if (mass == 0) return x;
    Rational remaining = mass;
    for (const auto& s : segments_) {
      if (s.span.hi <= x) continue;
      Rational start = std::max(s.span.lo, x);
      Rational available = s.density * (s.span.hi - start);
      if (remaining <= available) return start + remaining / s.density;
      remaining -= available;
    }
    throw InfeasibleCut("cut value " + format_rational(mass) + " exceeds the mass right of " + format_rational(x));
  }

  friend bool operator==(const Valuation& a, const Valuation& b) { return a.segments_ == b.segments_; }

 private:
  void canonicalize() {
    for (const auto& s : segments_)
      if (s.density < 0) throw DomainError("negative density");
    std::erase_if(segments_, [](const DensitySegment& s) { return s.density == 0 || s.span.empty(); });
    std::sort(segments_.begin(), segments_.end(),
              [](const DensitySegment& a, const DensitySegment& b) { return a.span.lo < b.span.lo; });
    std::vector<DensitySegment> merged;
    for (auto& s : segments_) {
      if (!merged.empty()) {
        auto& last = merged.back();
        if (s.span.lo < last.span.hi) throw DomainError("overlapping density segments");
        if (s.span.lo == last.span.hi && s.density == last.density) {
          last.span.hi = s.span.hi;
          continue;
        }
      }
      merged.push_back(std::move(s));
    }
    segments_ = std::move(merged);
  }

  std::vector<DensitySegment> segments_;
};

// A valuation with the display name used in instance and division files.
struct NamedValuation {
  std::string name;
  Valuation valuation;
};

}  // namespace cake
