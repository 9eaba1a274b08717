#include "evfuse/interval.hpp"

#include "evfuse/error.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace evfuse {

namespace {

std::string describe(double lo, double hi) {
    std::ostringstream os;
    os << '[' << lo << ", " << hi << ']';
    return os.str();
}

} // namespace

Interval Interval::make(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw Error(ErrorKind::InvalidInterval, "non-finite endpoint in " + describe(lo, hi));
    }
    if (lo > hi) {
        if (lo - hi > kEndpointTolerance) {
            throw Error(ErrorKind::InvalidInterval, "lower bound exceeds upper bound in " + describe(lo, hi));
        }
        hi = lo;
    }
    return Interval(lo, hi);
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval::make(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval multiply(const Interval& a, const Interval& b) {
    if (a.lo() < 0.0 || b.lo() < 0.0) {
        throw Error(ErrorKind::NegativeOperand,
                    "multiplication is defined for positive intervals only, got " +
                        describe(a.lo(), a.hi()) + " and " + describe(b.lo(), b.hi()));
    }
    return Interval::make(a.lo() * b.lo(), a.hi() * b.hi());
}

Interval divide(const Interval& a, const Interval& b) {
    if (b.lo() <= 0.0) {
        throw Error(ErrorKind::DivisionByZero, "divisor " + describe(b.lo(), b.hi()) + " is not strictly positive");
    }
    const double lo = a.lo() / b.lo();
    const double hi = a.hi() / b.hi();
    if (lo > hi && lo - hi > kEndpointTolerance) {
        throw Error(ErrorKind::InvertedResult, "endpoint-wise quotient " + describe(lo, hi) + " is inverted");
    }
    return Interval::make(lo, hi);
}

Interval scale(double k, const Interval& a) {
    if (!(k >= 0.0)) {
        throw Error(ErrorKind::NegativeScalar, "scale factor must be non-negative");
    }
    return Interval::make(k * a.lo(), k * a.hi());
}

Interval reciprocal(const Interval& a) {
    if (a.lo() <= 0.0) {
        throw Error(ErrorKind::DivisionByZero, "reciprocal of " + describe(a.lo(), a.hi()) + " is undefined");
    }
    return Interval::make(1.0 / a.hi(), 1.0 / a.lo());
}

double distance(const Interval& a, const Interval& b) {
    return std::fabs(a.lo() - b.lo()) + std::fabs(a.hi() - b.hi());
}

bool approx_equal(const Interval& a, const Interval& b, double tol) {
    return std::fabs(a.lo() - b.lo()) <= tol && std::fabs(a.hi() - b.hi()) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << '[' << iv.lo() << ", " << iv.hi() << ']';
}

} // namespace evfuse
