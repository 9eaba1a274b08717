#pragma once

#include "evfuse/evidence.hpp"
#include "evfuse/interval.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace evfuse {

// Focal sets of the {IS, NS} frame.
inline constexpr FocalSet kIS{0b01};
inline constexpr FocalSet kNS{0b10};
inline constexpr FocalSet kISNS{0b11};

// (m{IS}, m{NS}, m{IS,NS}) view of a binary-frame mass function.
struct BinaryMasses {
    double is = 0.0;
    double ns = 0.0;
    double theta = 0.0;
};

BinaryMasses split(const MassFunction& m);

// Mass function over Frame::binary(); same validation as MassFunction::make.
MassFunction binary_mass(double is, double ns, double theta, double sum_tolerance = kMassSumTolerance);

// Keeps w of the committed mass on {IS} and {NS}; the rest moves to {IS,NS}.
// Requires 0 <= w <= 1 (InvalidWeight otherwise) and a binary-frame input.
MassFunction discount(const MassFunction& m, double w);

/// Interval BPA stored as two classical BPAs: the left part built from the
/// lower weight bound and the right part from the upper one.
class IntervalBPA {
public:
    // Throws FrameMismatch unless both parts live on the {IS, NS} frame.
    static IntervalBPA make(MassFunction left, MassFunction right);

    const MassFunction& left() const { return left_; }
    const MassFunction& right() const { return right_; }

    // Per-focal-element (left, right) pairs for display. These are not
    // Intervals: the {IS,NS} pair is usually reversed.
    struct Bounds {
        double left = 0.0;
        double right = 0.0;
    };
    Bounds is() const { return {left_.mass(kIS), right_.mass(kIS)}; }
    Bounds ns() const { return {left_.mass(kNS), right_.mass(kNS)}; }
    Bounds theta() const { return {left_.mass(kISNS), right_.mass(kISNS)}; }

    friend bool operator==(const IntervalBPA&, const IntervalBPA&) = default;

private:
    IntervalBPA(MassFunction left, MassFunction right) : left_(std::move(left)), right_(std::move(right)) {}

    MassFunction left_;
    MassFunction right_;
};

// Divides every interval by the largest endpoint of the whole group.
// Errors: InvalidWeight for a negative lower bound, AllZeroWeights.
std::vector<Interval> normalize_weight_group(std::span<const Interval> weights);

// Classical BPA -> interval BPA: left = discount(m, w.lo), right = discount(m, w.hi).
IntervalBPA discount_to_interval_bpa(const MassFunction& m, const Interval& w);

// Interval BPA re-discounted part-wise by w.lo / w.hi.
IntervalBPA discount_interval_bpa(const IntervalBPA& ib, const Interval& w);

// Lefts and rights are fused separately, each as a left fold.
IntervalBPA fuse_interval_bpas(std::span<const IntervalBPA> ibs);

// Dempster combination of the two parts.
MassFunction collapse_interval_bpa(const IntervalBPA& ib);

// m{IS} + m{IS,NS}/2, the pignistic belief in IS on the binary frame.
double bet_is(const MassFunction& m);

// Indices sorted by descending score; ties keep input order.
std::vector<std::size_t> rank_descending(std::span<const double> scores);

struct DecisionMaker {
    std::string label;
    Interval weight;
};

struct DecisionProblem {
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<DecisionMaker> decision_makers;
    // [dm][criterion]
    std::vector<std::vector<Interval>> criterion_weights;
    // [dm][alternative][criterion], all over Frame::binary()
    std::vector<std::vector<std::vector<MassFunction>>> ratings;

    // Shape and weight checks; throws ValidationError / AllZeroWeights.
    void validate() const;
};

enum class CriterionNormalization {
    pooled,  // one group across every decision maker's criterion weights
    per_dm,  // one group per decision maker
};

struct PipelineOptions {
    CriterionNormalization criterion_normalization = CriterionNormalization::pooled;
};

struct RankingReport {
    CriterionNormalization criterion_normalization = CriterionNormalization::pooled;
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::string> decision_makers;

    std::vector<std::vector<Interval>> normalized_criterion_weights;  // [dm][criterion]
    std::vector<Interval> normalized_dm_weights;                      // [dm]

    std::vector<std::vector<std::vector<IntervalBPA>>> discounted;  // [dm][alt][criterion]
    std::vector<std::vector<IntervalBPA>> per_dm_fused;             // [dm][alt]
    std::vector<std::vector<IntervalBPA>> dm_discounted;            // [dm][alt]
    std::vector<IntervalBPA> final_bpas;                            // [alt]
    std::vector<MassFunction> collapsed;                            // [alt]

    std::vector<double> bet_is;        // from the collapsed BPA
    std::vector<double> left_bet_is;   // from the final left part alone
    std::vector<double> right_bet_is;  // from the final right part alone

    std::vector<std::size_t> ranking;  // alternative indices, best first

    std::vector<std::string> ranking_labels() const;
    // 1-based rank of each alternative, in input order.
    std::vector<std::size_t> ranks() const;
};

// Errors from any stage are rethrown with the cell coordinates prepended.
RankingReport rank_alternatives(const DecisionProblem& problem, const PipelineOptions& options = {});

} // namespace evfuse
