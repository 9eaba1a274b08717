#include "evfuse/error.hpp"
#include "evfuse/fuzzy.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace evfuse;

TEST_CASE("triangular membership") {
    const auto medium = TriangularFuzzyNumber::make(0.3, 0.5, 0.7);
    CHECK(tfn_membership(medium, 0.5) == 1.0);
    CHECK(tfn_membership(medium, 0.2) == 0.0);
    CHECK(tfn_membership(medium, 0.8) == 0.0);
    CHECK(tfn_membership(medium, 0.4) == doctest::Approx(0.5));
    CHECK(tfn_membership(medium, 0.65) == doctest::Approx(0.25));

    // Degenerate flanks.
    const auto left_sharp = TriangularFuzzyNumber::make(0.0, 0.0, 0.3);
    CHECK(left_sharp.membership(0.0) == 1.0);
    CHECK(left_sharp.membership(-0.01) == 0.0);
    const auto right_sharp = TriangularFuzzyNumber::make(0.7, 1.0, 1.0);
    CHECK(right_sharp.membership(1.0) == 1.0);
    CHECK(right_sharp.membership(1.01) == 0.0);
    const auto crisp = TriangularFuzzyNumber::make(0.4, 0.4, 0.4);
    CHECK(crisp.membership(0.4) == 1.0);
    CHECK(crisp.membership(0.41) == 0.0);

    CHECK_THROWS_AS(TriangularFuzzyNumber::make(0.5, 0.3, 0.7), Error);
}

TEST_CASE("alpha cuts") {
    const auto medium = TriangularFuzzyNumber::make(0.3, 0.5, 0.7);
    CHECK(tfn_to_interval(medium, 0.0) == Interval::make(0.3, 0.7));
    CHECK(tfn_to_interval(medium, 1.0) == Interval::make(0.5, 0.5));
    const auto cut = tfn_to_interval(TriangularFuzzyNumber::make(0.1, 0.3, 0.5), 0.5);
    CHECK(cut.lo() == doctest::Approx(0.2));
    CHECK(cut.hi() == doctest::Approx(0.4));

    try {
        medium.alpha_cut(1.5);
        FAIL("alpha > 1 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidAlpha);
    }
}

TEST_CASE("membership and alpha-cut properties") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        double p[3] = {u(rng), u(rng), u(rng)};
        std::sort(p, p + 3);
        const auto t = TriangularFuzzyNumber::make(p[0], p[1], p[2]);
        const double x = u(rng) * 1.4 - 0.2;
        const double mu = t.membership(x);
        CHECK(mu >= 0.0);
        CHECK(mu <= 1.0);
        CHECK(t.membership(t.b()) == 1.0);

        double a1 = u(rng), a2 = u(rng);
        if (a1 > a2) {
            std::swap(a1, a2);
        }
        CHECK(t.alpha_cut(a1).contains(t.alpha_cut(a2)));
        // Points of the alpha-cut have membership >= alpha (up to rounding).
        const Interval cut = t.alpha_cut(a2);
        CHECK(t.membership(cut.lo()) >= a2 - 1e-9);
        CHECK(t.membership(cut.hi()) >= a2 - 1e-9);
    }
}

TEST_CASE("built-in scales") {
    const auto& intervals = LinguisticScale::interval_default();
    CHECK(std::get<Interval>(scale_lookup(intervals, "Medium (M)")) == Interval::make(0.3, 0.7));
    CHECK(intervals.to_interval("High (H)") == Interval::make(0.5, 0.9));
    CHECK(intervals.entries().size() == 5);

    const auto& tfns = LinguisticScale::kaufmann_tfn();
    CHECK(std::get<TriangularFuzzyNumber>(scale_lookup(tfns, "Very high (VH)")) ==
          TriangularFuzzyNumber::make(0.7, 0.9, 1.0));
    CHECK(tfns.to_interval("Very high (VH)") == Interval::make(0.7, 1.0));
    CHECK(tfns.to_interval("Very high (VH)", 1.0) == Interval::make(0.9, 0.9));

    try {
        scale_lookup(intervals, "Extreme");
        FAIL("unknown term accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownTerm);
        CHECK(std::string(e.what()).find("'Very low (VL)'") != std::string::npos);
    }
}

TEST_CASE("user scales reject duplicates and mixed kinds") {
    LinguisticScale s("custom", ScaleKind::interval);
    s.add_term("a", Interval::make(0, 1));
    CHECK_THROWS_AS(s.add_term("a", Interval::make(0, 0.5)), Error);
    CHECK_THROWS_AS(s.add_term("b", TriangularFuzzyNumber::make(0, 0.5, 1)), Error);
    CHECK(s.lookup("a") == ScaleValue{Interval::make(0, 1)});
}

TEST_CASE("crisp weights") {
    CHECK(crisp_to_interval(0.5) == Interval::make(0.5, 0.5));
    CHECK(crisp_to_interval(0.0) == Interval::make(0, 0));
    const Interval w = crisp_to_interval(0.95);
    CHECK(w.width() == 0.0);
    CHECK(distance(w, w) == 0.0);
    CHECK_THROWS_AS(crisp_to_interval(-0.1), Error);
    CHECK_THROWS_AS(crisp_to_interval(std::nan("")), Error);
}
