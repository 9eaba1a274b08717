#include "evfuse/error.hpp"
#include "evfuse/interval.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <algorithm>
#include <cmath>
#include <random>

using namespace evfuse;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an evfuse::Error");
    return ErrorKind::ValidationError;
}

void check_interval(const Interval& iv, double lo, double hi, double tol = 1e-12) {
    CHECK(std::fabs(iv.lo() - lo) <= tol);
    CHECK(std::fabs(iv.hi() - hi) <= tol);
}

} // namespace

TEST_CASE("construction") {
    check_interval(Interval::make(0.20, 0.35), 0.20, 0.35);
    CHECK(Interval::make(0.5, 0.5).is_degenerate());
    CHECK(kind_of([] { Interval::make(0.9, 0.1); }) == ErrorKind::InvalidInterval);
    CHECK(kind_of([] { Interval::make(std::nan(""), 1.0); }) == ErrorKind::InvalidInterval);
    CHECK(kind_of([] { Interval::make(0.0, std::numeric_limits<double>::infinity()); }) ==
          ErrorKind::InvalidInterval);

    // Inversions inside the endpoint tolerance collapse to a point.
    const Interval nearly = Interval::make(0.3 + 5e-13, 0.3);
    CHECK(nearly.is_degenerate());
}

TEST_CASE("addition") {
    CHECK(Interval::make(1, 2) + Interval::make(3, 4) == Interval::make(4, 6));
    CHECK(Interval::make(0, 0) + Interval::make(0.3, 0.7) == Interval::make(0.3, 0.7));
    check_interval(Interval::make(0.2, 0.35) + Interval::make(0.3, 0.55), 0.5, 0.9);
}

TEST_CASE("multiplication") {
    CHECK(multiply(Interval::make(1, 1), Interval::make(0.3, 0.7)) == Interval::make(0.3, 0.7));
    check_interval(multiply(Interval::make(0.2, 0.5), Interval::make(0.6, 0.6)), 0.12, 0.30);
    check_interval(multiply(Interval::make(0.2857, 0.5), Interval::make(0.6, 0.6)), 0.1714, 0.3, 1e-4);
    CHECK(kind_of([] { multiply(Interval::make(-0.1, 0.5), Interval::make(1, 1)); }) == ErrorKind::NegativeOperand);
}

TEST_CASE("division is endpoint-wise") {
    check_interval(divide(Interval::make(0.20, 0.35), Interval::point(0.70)), 0.2857, 0.5, 1e-4);
    CHECK(divide(Interval::make(0.3, 0.7), Interval::make(1, 1)) == Interval::make(0.3, 0.7));
    CHECK(kind_of([] { divide(Interval::make(2, 3), Interval::make(1, 10)); }) == ErrorKind::InvertedResult);
    CHECK(kind_of([] { divide(Interval::make(2, 3), Interval::make(0, 1)); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("scaling") {
    check_interval(scale(2, Interval::make(0.1, 0.3)), 0.2, 0.6);
    CHECK(scale(0, Interval::make(0.1, 0.3)) == Interval::make(0, 0));
    check_interval(scale(0.5, Interval::make(0.70, 0.95)), 0.35, 0.475);
    CHECK(kind_of([] { scale(-1, Interval::make(0.1, 0.3)); }) == ErrorKind::NegativeScalar);
}

TEST_CASE("reciprocal") {
    CHECK(reciprocal(Interval::make(1, 1)) == Interval::make(1, 1));
    CHECK(reciprocal(Interval::make(0.5, 2)) == Interval::make(0.5, 2));
    check_interval(reciprocal(Interval::make(0.2, 0.4)), 2.5, 5.0);
    CHECK(kind_of([] { reciprocal(Interval::make(0, 1)); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("distance") {
    CHECK(distance(Interval::make(0.1, 0.9), Interval::make(0.1, 0.9)) == 0.0);
    CHECK(distance(Interval::make(0.1, 0.9), Interval::make(0.4, 0.6)) == doctest::Approx(0.6));
    CHECK(distance(Interval::make(0, 0), Interval::make(0.25, 0.50)) == 0.75);
}

TEST_CASE("algebraic properties on random intervals") {
    std::mt19937_64 rng(20170301);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    auto random_iv = [&] {
        double a = u(rng), b = u(rng);
        return Interval::make(std::min(a, b), std::max(a, b));
    };
    for (int i = 0; i < 500; ++i) {
        const Interval a = random_iv(), b = random_iv(), c = random_iv();
        CHECK(a + b == b + a);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(Interval::point(1), a) == a);
        CHECK(multiply(a, Interval::point(1)) == a);

        // Exact associativity needs exactly representable sums; check with
        // dyadic rationals.
        const Interval da = Interval::make(std::ldexp(std::floor(a.lo() * 64), -6), std::ldexp(std::ceil(a.hi() * 64), -6));
        const Interval db = Interval::make(std::ldexp(std::floor(b.lo() * 64), -6), std::ldexp(std::ceil(b.hi() * 64), -6));
        const Interval dc = Interval::make(std::ldexp(std::floor(c.lo() * 64), -6), std::ldexp(std::ceil(c.hi() * 64), -6));
        CHECK((da + db) + dc == da + (db + dc));

        // Metric axioms.
        CHECK(distance(a, a) == 0.0);
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
        if (!(a == b)) {
            CHECK(distance(a, b) > 0.0);
        }

        if (a.lo() > 0.0) {
            CHECK(approx_equal(reciprocal(reciprocal(a)), a, 1e-12));
        }
        const double k = u(rng) + 0.1;
        CHECK(approx_equal(divide(a, Interval::point(k)), scale(1.0 / k, a), 1e-12));
    }
}
