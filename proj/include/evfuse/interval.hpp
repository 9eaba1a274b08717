#pragma once

#include <iosfwd>

namespace evfuse {

// Absolute tolerance used when comparing O(1) pipeline quantities.
inline constexpr double kCompareTolerance = 1e-9;

// Inverted endpoints closer than this are treated as equal on construction.
inline constexpr double kEndpointTolerance = 1e-12;

/// Closed real interval [lo, hi] with finite endpoints and lo <= hi.
///
/// The arithmetic below is the endpoint-wise algebra for positive interval
/// numbers, not general outward-rounded interval analysis. Division in
/// particular divides lo by lo and hi by hi.
class Interval {
public:
    constexpr Interval() = default;

    /// Throws Error(InvalidInterval) on non-finite input or lo > hi beyond
    /// kEndpointTolerance; inversions within tolerance collapse to [lo, lo].
    static Interval make(double lo, double hi);

    /// Degenerate interval [x, x].
    static Interval point(double x) { return make(x, x); }

    constexpr double lo() const { return lo_; }
    constexpr double hi() const { return hi_; }
    constexpr double width() const { return hi_ - lo_; }
    constexpr bool is_degenerate() const { return lo_ == hi_; }
    constexpr bool contains(const Interval& other) const {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;

private:
    constexpr Interval(double lo, double hi) : lo_(lo), hi_(hi) {}

    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);

// [a.lo*b.lo, a.hi*b.hi]; NegativeOperand if either lo < 0.
Interval multiply(const Interval& a, const Interval& b);

// [a.lo/b.lo, a.hi/b.hi]; DivisionByZero if b.lo <= 0, InvertedResult if the
// endpoint quotients come out reversed.
Interval divide(const Interval& a, const Interval& b);

// [k*a.lo, k*a.hi]; NegativeScalar for k < 0.
Interval scale(double k, const Interval& a);

// [1/a.hi, 1/a.lo]; DivisionByZero if a.lo <= 0.
Interval reciprocal(const Interval& a);

// |a.lo - b.lo| + |a.hi - b.hi|
double distance(const Interval& a, const Interval& b);

bool approx_equal(const Interval& a, const Interval& b, double tol = kCompareTolerance);

std::ostream& operator<<(std::ostream& os, const Interval& iv);

} // namespace evfuse
