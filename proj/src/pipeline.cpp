#include "evfuse/pipeline.hpp"

#include "evfuse/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace evfuse {

BinaryMasses split(const MassFunction& m) {
    if (!(m.frame() == Frame::binary())) {
        throw Error(ErrorKind::FrameMismatch, "expected a mass function over {IS,NS}");
    }
    return {m.mass(kIS), m.mass(kNS), m.mass(kISNS)};
}

MassFunction binary_mass(double is, double ns, double theta, double sum_tolerance) {
    return MassFunction::make(Frame::binary(), {{kIS, is}, {kNS, ns}, {kISNS, theta}}, sum_tolerance);
}

namespace {

void require_unit_weight(double w) {
    if (!(w >= 0.0 && w <= 1.0)) {
        std::ostringstream os;
        os << "discount weight " << w << " is outside [0, 1]";
        throw Error(ErrorKind::InvalidWeight, os.str());
    }
}

void require_unit_weight(const Interval& w) {
    require_unit_weight(w.lo());
    require_unit_weight(w.hi());
}

} // namespace

MassFunction discount(const MassFunction& m, double w) {
    require_unit_weight(w);
    const BinaryMasses p = split(m);
    // w*theta + (1 - w) == 1 - w*is - w*ns, but never negative and exact at
    // w = 0 and w = 1.
    return binary_mass(w * p.is, w * p.ns, w * p.theta + (1.0 - w));
}

IntervalBPA IntervalBPA::make(MassFunction left, MassFunction right) {
    if (!(left.frame() == Frame::binary()) || !(right.frame() == Frame::binary())) {
        throw Error(ErrorKind::FrameMismatch, "interval BPA parts must be defined over {IS,NS}");
    }
    return IntervalBPA(std::move(left), std::move(right));
}

std::vector<Interval> normalize_weight_group(std::span<const Interval> weights) {
    if (weights.empty()) {
        throw Error(ErrorKind::AllZeroWeights, "empty weight group");
    }
    double a_max = 0.0;
    for (const Interval& w : weights) {
        if (w.lo() < 0.0) {
            throw Error(ErrorKind::InvalidWeight, "weights must be non-negative");
        }
        a_max = std::max(a_max, w.hi());
    }
    if (!(a_max > 0.0)) {
        throw Error(ErrorKind::AllZeroWeights, "every weight in the group is zero");
    }
    const Interval divisor = Interval::point(a_max);
    std::vector<Interval> out;
    out.reserve(weights.size());
    for (const Interval& w : weights) {
        out.push_back(divide(w, divisor));
    }
    return out;
}

IntervalBPA discount_to_interval_bpa(const MassFunction& m, const Interval& w) {
    require_unit_weight(w);
    return IntervalBPA::make(discount(m, w.lo()), discount(m, w.hi()));
}

IntervalBPA discount_interval_bpa(const IntervalBPA& ib, const Interval& w) {
    require_unit_weight(w);
    return IntervalBPA::make(discount(ib.left(), w.lo()), discount(ib.right(), w.hi()));
}

IntervalBPA fuse_interval_bpas(std::span<const IntervalBPA> ibs) {
    if (ibs.empty()) {
        throw Error(ErrorKind::EmptyEvidenceList, "no interval BPAs to fuse");
    }
    std::vector<MassFunction> lefts;
    std::vector<MassFunction> rights;
    lefts.reserve(ibs.size());
    rights.reserve(ibs.size());
    for (const auto& ib : ibs) {
        lefts.push_back(ib.left());
        rights.push_back(ib.right());
    }
    MassFunction left = [&] {
        try {
            return combine_all(lefts);
        } catch (const Error& e) {
            throw e.with_context("left part");
        }
    }();
    MassFunction right = [&] {
        try {
            return combine_all(rights);
        } catch (const Error& e) {
            throw e.with_context("right part");
        }
    }();
    return IntervalBPA::make(std::move(left), std::move(right));
}

MassFunction collapse_interval_bpa(const IntervalBPA& ib) {
    return combine(ib.left(), ib.right());
}

double bet_is(const MassFunction& m) {
    const BinaryMasses p = split(m);
    return p.is + p.theta / 2.0;
}

std::vector<std::size_t> rank_descending(std::span<const double> scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    return order;
}

void DecisionProblem::validate() const {
    if (alternatives.empty() || criteria.empty() || decision_makers.empty()) {
        throw Error(ErrorKind::ValidationError,
                    "a decision problem needs at least one alternative, criterion and decision maker");
    }
    if (criterion_weights.size() != decision_makers.size() || ratings.size() != decision_makers.size()) {
        throw Error(ErrorKind::ValidationError, "per-decision-maker tables do not match the decision makers");
    }
    for (std::size_t d = 0; d < decision_makers.size(); ++d) {
        const std::string& dm = decision_makers[d].label;
        if (decision_makers[d].weight.lo() < 0.0) {
            throw Error(ErrorKind::ValidationError, "decision maker '" + dm + "': weight must be non-negative");
        }
        if (criterion_weights[d].size() != criteria.size()) {
            throw Error(ErrorKind::ValidationError,
                        "decision maker '" + dm + "': expected one weight per criterion");
        }
        for (std::size_t c = 0; c < criteria.size(); ++c) {
            if (criterion_weights[d][c].lo() < 0.0) {
                throw Error(ErrorKind::ValidationError,
                            "decision maker '" + dm + "', criterion '" + criteria[c] + "': weight must be non-negative");
            }
        }
        if (ratings[d].size() != alternatives.size()) {
            throw Error(ErrorKind::ValidationError,
                        "decision maker '" + dm + "': expected ratings for every alternative");
        }
        for (std::size_t a = 0; a < alternatives.size(); ++a) {
            if (ratings[d][a].size() != criteria.size()) {
                throw Error(ErrorKind::ValidationError, "decision maker '" + dm + "', alternative '" +
                                                            alternatives[a] + "': expected one rating per criterion");
            }
            for (std::size_t c = 0; c < criteria.size(); ++c) {
                if (!(ratings[d][a][c].frame() == Frame::binary())) {
                    throw Error(ErrorKind::ValidationError, "decision maker '" + dm + "', alternative '" +
                                                                alternatives[a] + "', criterion '" + criteria[c] +
                                                                "': rating must be over {IS,NS}");
                }
            }
        }
    }
}

std::vector<std::string> RankingReport::ranking_labels() const {
    std::vector<std::string> out;
    out.reserve(ranking.size());
    for (std::size_t i : ranking) {
        out.push_back(alternatives[i]);
    }
    return out;
}

std::vector<std::size_t> RankingReport::ranks() const {
    std::vector<std::size_t> out(ranking.size());
    for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
        out[ranking[pos]] = pos + 1;
    }
    return out;
}

namespace {

std::string cell(const DecisionProblem& p, std::size_t d, std::size_t a) {
    return "decision maker '" + p.decision_makers[d].label + "', alternative '" + p.alternatives[a] + "'";
}

std::string cell(const DecisionProblem& p, std::size_t d, std::size_t a, std::size_t c) {
    return cell(p, d, a) + ", criterion '" + p.criteria[c] + "'";
}

std::vector<std::vector<Interval>> normalize_criteria(const DecisionProblem& p, CriterionNormalization mode) {
    const std::size_t n_dm = p.decision_makers.size();
    const std::size_t n_c = p.criteria.size();
    std::vector<std::vector<Interval>> out(n_dm);
    if (mode == CriterionNormalization::per_dm) {
        for (std::size_t d = 0; d < n_dm; ++d) {
            try {
                out[d] = normalize_weight_group(p.criterion_weights[d]);
            } catch (const Error& e) {
                throw e.with_context("criterion weights of decision maker '" + p.decision_makers[d].label + "'");
            }
        }
        return out;
    }
    std::vector<Interval> pooled;
    pooled.reserve(n_dm * n_c);
    for (const auto& row : p.criterion_weights) {
        pooled.insert(pooled.end(), row.begin(), row.end());
    }
    std::vector<Interval> normalized;
    try {
        normalized = normalize_weight_group(pooled);
    } catch (const Error& e) {
        throw e.with_context("criterion weights");
    }
    for (std::size_t d = 0; d < n_dm; ++d) {
        out[d].assign(normalized.begin() + static_cast<std::ptrdiff_t>(d * n_c),
                      normalized.begin() + static_cast<std::ptrdiff_t>((d + 1) * n_c));
    }
    return out;
}

} // namespace

RankingReport rank_alternatives(const DecisionProblem& p, const PipelineOptions& options) {
    p.validate();

    const std::size_t n_dm = p.decision_makers.size();
    const std::size_t n_alt = p.alternatives.size();
    const std::size_t n_c = p.criteria.size();

    RankingReport r;
    r.criterion_normalization = options.criterion_normalization;
    r.alternatives = p.alternatives;
    r.criteria = p.criteria;
    for (const auto& dm : p.decision_makers) {
        r.decision_makers.push_back(dm.label);
    }

    r.normalized_criterion_weights = normalize_criteria(p, options.criterion_normalization);
    {
        std::vector<Interval> dm_weights;
        for (const auto& dm : p.decision_makers) {
            dm_weights.push_back(dm.weight);
        }
        try {
            r.normalized_dm_weights = normalize_weight_group(dm_weights);
        } catch (const Error& e) {
            throw e.with_context("decision maker weights");
        }
    }

    r.discounted.resize(n_dm);
    r.per_dm_fused.resize(n_dm);
    r.dm_discounted.resize(n_dm);
    for (std::size_t d = 0; d < n_dm; ++d) {
        r.discounted[d].resize(n_alt);
        for (std::size_t a = 0; a < n_alt; ++a) {
            auto& row = r.discounted[d][a];
            row.reserve(n_c);
            for (std::size_t c = 0; c < n_c; ++c) {
                try {
                    row.push_back(discount_to_interval_bpa(p.ratings[d][a][c], r.normalized_criterion_weights[d][c]));
                } catch (const Error& e) {
                    throw e.with_context(cell(p, d, a, c));
                }
            }
            try {
                r.per_dm_fused[d].push_back(fuse_interval_bpas(row));
                r.dm_discounted[d].push_back(discount_interval_bpa(r.per_dm_fused[d][a], r.normalized_dm_weights[d]));
            } catch (const Error& e) {
                throw e.with_context(cell(p, d, a));
            }
        }
    }

    for (std::size_t a = 0; a < n_alt; ++a) {
        std::vector<IntervalBPA> opinions;
        opinions.reserve(n_dm);
        for (std::size_t d = 0; d < n_dm; ++d) {
            opinions.push_back(r.dm_discounted[d][a]);
        }
        try {
            r.final_bpas.push_back(fuse_interval_bpas(opinions));
            r.collapsed.push_back(collapse_interval_bpa(r.final_bpas.back()));
        } catch (const Error& e) {
            throw e.with_context("alternative '" + p.alternatives[a] + "'");
        }
        r.bet_is.push_back(bet_is(r.collapsed.back()));
        r.left_bet_is.push_back(bet_is(r.final_bpas.back().left()));
        r.right_bet_is.push_back(bet_is(r.final_bpas.back().right()));
    }

    r.ranking = rank_descending(r.bet_is);
    return r;
}

} // namespace evfuse
