#include "evfuse/error.hpp"
#include "evfuse/pipeline.hpp"
#include "evfuse/problem_io.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace evfuse;
namespace t = evfuse::testing;

namespace {

void check_triple(const MassFunction& m, double is, double ns, double theta, double tol) {
    CHECK(std::fabs(m.mass(kIS) - is) <= tol);
    CHECK(std::fabs(m.mass(kNS) - ns) <= tol);
    CHECK(std::fabs(m.mass(kISNS) - theta) <= tol);
}

const DecisionProblem& example_problem() {
    static const DecisionProblem p = load_problem(bundled_supplier_selection());
    return p;
}

} // namespace

TEST_CASE("weight normalization") {
    std::vector<Interval> pooled;
    for (const auto& row : example_problem().criterion_weights) {
        pooled.insert(pooled.end(), row.begin(), row.end());
    }
    const auto n = normalize_weight_group(pooled);
    CHECK(approx_equal(n[0], Interval::make(0.2857, 0.5), 1e-4));

    const Interval dms[] = {Interval::make(0.20, 0.45), Interval::make(0.35, 0.55), Interval::make(0.70, 0.95)};
    const auto nd = normalize_weight_group(dms);
    CHECK(approx_equal(nd[2], Interval::make(0.7368, 1.0), 1e-4));
    CHECK(nd[2].hi() == 1.0);

    const Interval single[] = {Interval::make(0.4, 0.4)};
    CHECK(normalize_weight_group(single)[0] == Interval::make(1, 1));

    const Interval zeros[] = {Interval::make(0, 0), Interval::make(0, 0)};
    CHECK_THROWS_WITH_AS(normalize_weight_group(zeros), doctest::Contains("AllZeroWeights"), Error);
}

TEST_CASE("normalization is invariant under a common positive factor") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> factor(1e-3, 10.0);
    for (int i = 0; i < 200; ++i) {
        std::vector<Interval> w, scaled;
        const double k = factor(rng);
        for (int j = 0; j < 6; ++j) {
            w.push_back(t::random_weight(rng, 2.0));
            scaled.push_back(scale(k, w.back()));
        }
        const auto a = normalize_weight_group(w);
        const auto b = normalize_weight_group(scaled);
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(approx_equal(a[j], b[j], 1e-12));
            CHECK(b[j].hi() <= 1.0);
        }
    }
}

TEST_CASE("discounting a classical BPA") {
    const auto m = binary_mass(0.60, 0.20, 0.20);
    const auto ib = discount_to_interval_bpa(m, Interval::make(0.20 / 0.70, 0.35 / 0.70));
    check_triple(ib.left(), 0.1714, 0.0571, 0.7715, 1e-4);
    check_triple(ib.right(), 0.3, 0.1, 0.6, 1e-12);

    const auto same = discount_to_interval_bpa(m, Interval::make(1, 1));
    CHECK(same.left() == m);
    CHECK(same.right() == m);
    const auto none = discount_to_interval_bpa(m, Interval::make(0, 0));
    CHECK(none.left() == vacuous(Frame::binary()));
    CHECK(none.right() == vacuous(Frame::binary()));

    CHECK_THROWS_WITH_AS(discount_to_interval_bpa(m, Interval::make(0.5, 1.5)), doctest::Contains("InvalidWeight"),
                         Error);

    // Three-interval display view; the {IS,NS} pair runs backwards.
    CHECK(ib.theta().left > ib.theta().right);
    CHECK(ib.is().left <= ib.is().right);
}

TEST_CASE("discount identities and complement relation on random inputs") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto m = t::random_binary_mass(rng);
        const Interval w = t::random_weight(rng);
        const auto ib = discount_to_interval_bpa(m, w);
        for (const MassFunction* part : {&ib.left(), &ib.right()}) {
            const BinaryMasses p = split(*part);
            CHECK(std::fabs(p.theta - (1.0 - p.is - p.ns)) <= 1e-12);
            CHECK(std::fabs(part->total() - 1.0) <= 1e-9);
        }
        CHECK(ib.left().mass(kIS) <= ib.right().mass(kIS));
        CHECK(ib.left().mass(kNS) <= ib.right().mass(kNS));

        const auto id = discount_to_interval_bpa(m, Interval::make(1, 1));
        CHECK(id.left() == m);
        CHECK(id.right() == m);
        const auto again = discount_interval_bpa(ib, Interval::make(1, 1));
        CHECK(again == ib);
        const auto zero = discount_interval_bpa(ib, Interval::make(0, 0));
        CHECK(zero.left() == vacuous(Frame::binary()));
        CHECK(zero.right() == vacuous(Frame::binary()));
    }
}

TEST_CASE("fusion of the DM1 / Supplier1 cell") {
    const DecisionProblem& p = example_problem();
    const RankingReport r = rank_alternatives(p);
    const auto& fused = r.per_dm_fused[0][0];
    check_triple(fused.left(), 0.5133, 0.0980, 0.3887, 2e-3);
    check_triple(fused.right(), 0.8009, 0.0987, 0.1004, 2e-3);

    // Same result through the individual operations.
    std::vector<IntervalBPA> cells;
    for (std::size_t c = 0; c < 4; ++c) {
        cells.push_back(discount_to_interval_bpa(p.ratings[0][0][c], r.normalized_criterion_weights[0][c]));
    }
    CHECK(fuse_interval_bpas(cells) == fused);

    const auto dm1 = discount_interval_bpa(fused, Interval::make(0.20 / 0.95, 0.45 / 0.95));
    check_triple(dm1.left(), 0.1080, 0.0206, 0.8714, 2e-3);
    check_triple(dm1.right(), 0.3795, 0.0468, 0.5737, 2e-3);

    const IntervalBPA one[] = {fused};
    CHECK(fuse_interval_bpas(one) == fused);
    CHECK_THROWS_AS(fuse_interval_bpas({}), Error);

    check_triple(r.final_bpas[0].left(), 0.4950, 0.0733, 0.4317, 2e-3);
    check_triple(r.final_bpas[0].right(), 0.9696, 0.0201, 0.0103, 2e-3);
}

TEST_CASE("collapsing interval BPAs") {
    const auto ib = IntervalBPA::make(binary_mass(0.4950, 0.0733, 0.4317), binary_mass(0.9696, 0.0201, 0.0103));
    check_triple(collapse_interval_bpa(ib), 0.9833, 0.0119, 0.0048, 1e-4);

    const auto m = binary_mass(0.3, 0.2, 0.5);
    const auto self = IntervalBPA::make(m, m);
    CHECK(collapse_interval_bpa(self) == combine(m, m));
    CHECK(!(collapse_interval_bpa(self) == m));

    const auto half = IntervalBPA::make(vacuous(Frame::binary()), m);
    CHECK(collapse_interval_bpa(half) == m);

    const auto clash = IntervalBPA::make(binary_mass(1, 0, 0), binary_mass(0, 1, 0));
    CHECK_THROWS_WITH_AS(collapse_interval_bpa(clash), doctest::Contains("TotalConflict"), Error);
}

TEST_CASE("ranking the supplier example") {
    const RankingReport r = rank_alternatives(example_problem());
    const std::vector<std::string> expected = {"Supplier4", "Supplier1", "Supplier2",
                                               "Supplier3", "Supplier6", "Supplier5"};
    CHECK(r.ranking_labels() == expected);
    const double bets[] = {0.9857, 0.9213, 0.9129, 0.9908, 0.0071, 0.0332};
    for (std::size_t a = 0; a < 6; ++a) {
        CHECK(std::fabs(r.bet_is[a] - bets[a]) <= 2e-3);
        CHECK(std::fabs(r.bet_is[a] - pignistic(r.collapsed[a])[0]) <= 1e-15);
    }
    check_triple(r.collapsed[3], 0.9879, 0.0063, 0.0058, 2e-3);
    CHECK(r.ranks() == std::vector<std::size_t>{2, 3, 4, 1, 6, 5});
}

TEST_CASE("single decision maker, single criterion reduces to self-combination") {
    std::mt19937_64 rng(11);
    DecisionProblem p;
    p.criteria = {"C"};
    p.decision_makers = {{"D", Interval::make(1, 1)}};
    p.criterion_weights = {{Interval::make(1, 1)}};
    p.ratings.resize(1);
    for (int a = 0; a < 5; ++a) {
        p.alternatives.push_back("A" + std::to_string(a));
        p.ratings[0].push_back({t::random_binary_mass(rng)});
    }
    const RankingReport r = rank_alternatives(p);
    for (std::size_t a = 0; a < 5; ++a) {
        const auto& m = p.ratings[0][a][0];
        CHECK(r.bet_is[a] == doctest::Approx(pignistic(combine(m, m))[0]).epsilon(1e-14));
    }
}

TEST_CASE("degenerate weights match a crisp-weight reimplementation") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const DecisionProblem p = t::random_problem(rng, true);
        const RankingReport r = rank_alternatives(p);

        const auto crisp = t::crisp_reference(p);
        for (std::size_t a = 0; a < p.alternatives.size(); ++a) {
            CHECK(r.final_bpas[a].left() == r.final_bpas[a].right());
            check_triple(r.collapsed[a], crisp[a].is, crisp[a].ns, crisp[a].theta, 1e-9);
        }
    }
}

TEST_CASE("report invariants on random problems") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        const DecisionProblem p = t::random_problem(rng, false);
        const RankingReport r = rank_alternatives(p);
        const RankingReport again = rank_alternatives(p);
        CHECK(r.bet_is == again.bet_is);
        CHECK(r.collapsed == again.collapsed);
        CHECK(r.final_bpas == again.final_bpas);

        auto sorted = r.ranking;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t a = 0; a < sorted.size(); ++a) {
            CHECK(sorted[a] == a);
        }
        for (std::size_t k = 1; k < r.ranking.size(); ++k) {
            CHECK(r.bet_is[r.ranking[k - 1]] >= r.bet_is[r.ranking[k]]);
        }
        for (std::size_t a = 0; a < p.alternatives.size(); ++a) {
            const auto bet = pignistic(r.collapsed[a]);
            CHECK(std::fabs(bet[0] + bet[1] - 1.0) <= 1e-12);
            for (const auto& ib : {r.final_bpas[a]}) {
                CHECK(std::fabs(ib.left().total() - 1.0) <= 1e-9);
                CHECK(std::fabs(ib.right().total() - 1.0) <= 1e-9);
            }
        }

        // Rescaling a whole weight group leaves every result unchanged.
        DecisionProblem scaled = p;
        std::uniform_real_distribution<double> factor(0.1, 10.0);
        const double k = factor(rng);
        for (auto& row : scaled.criterion_weights) {
            for (auto& w : row) {
                w = scale(k, w);
            }
        }
        const RankingReport rs = rank_alternatives(scaled);
        CHECK(rs.ranking == r.ranking);
        for (std::size_t a = 0; a < p.alternatives.size(); ++a) {
            CHECK(std::fabs(rs.bet_is[a] - r.bet_is[a]) <= 1e-12);
        }
    }
}

TEST_CASE("ties keep input order") {
    const double scores[] = {0.5, 0.9, 0.5, 0.9, 0.1};
    CHECK(rank_descending(scores) == std::vector<std::size_t>{1, 3, 0, 2, 4});
}

TEST_CASE("per-decision-maker criterion normalization") {
    const RankingReport r = rank_alternatives(example_problem(), {CriterionNormalization::per_dm});
    // DM1's largest criterion bound is 0.55.
    CHECK(approx_equal(r.normalized_criterion_weights[0][1], Interval::make(0.30 / 0.55, 1.0), 1e-12));
    CHECK(r.normalized_criterion_weights[2][1].hi() == 1.0);
    CHECK(r.criterion_normalization == CriterionNormalization::per_dm);
}

TEST_CASE("pipeline errors carry cell coordinates") {
    DecisionProblem p;
    p.alternatives = {"good", "clash"};
    p.criteria = {"x", "y"};
    p.decision_makers = {{"expert", Interval::make(1, 1)}};
    p.criterion_weights = {{Interval::make(1, 1), Interval::make(1, 1)}};
    p.ratings = {{{binary_mass(0.5, 0.2, 0.3), binary_mass(0.5, 0.2, 0.3)},
                  {binary_mass(1, 0, 0), binary_mass(0, 1, 0)}}};
    try {
        rank_alternatives(p);
        FAIL("total conflict not reported");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TotalConflict);
        CHECK(std::string(e.what()).find("alternative 'clash'") != std::string::npos);
        CHECK(std::string(e.what()).find("decision maker 'expert'") != std::string::npos);
    }

    DecisionProblem zero = p;
    zero.ratings[0][1] = zero.ratings[0][0];
    zero.decision_makers[0].weight = Interval::make(0, 0);
    CHECK_THROWS_WITH_AS(rank_alternatives(zero), doctest::Contains("decision maker weights"), Error);

    DecisionProblem ragged = p;
    ragged.ratings[0][1].pop_back();
    CHECK_THROWS_WITH_AS(rank_alternatives(ragged), doctest::Contains("ValidationError"), Error);
}
