#include "evfuse/evidence.hpp"

#include "evfuse/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace evfuse {

namespace {

constexpr double kRenormalizeThreshold = 1e-12;

} // namespace

Frame Frame::make(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw Error(ErrorKind::ValidationError, "frame of discernment must have at least one element");
    }
    if (labels.size() > kMaxFrameSize) {
        throw Error(ErrorKind::ValidationError, "frame of discernment is limited to 16 elements");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) {
                throw Error(ErrorKind::ValidationError, "duplicate frame element '" + labels[i] + "'");
            }
        }
    }
    return Frame(std::make_shared<const std::vector<std::string>>(std::move(labels)));
}

const Frame& Frame::binary() {
    static const Frame frame = make({"IS", "NS"});
    return frame;
}

std::size_t Frame::index_of(std::string_view label) const {
    const auto& l = *labels_;
    auto it = std::find(l.begin(), l.end(), label);
    if (it == l.end()) {
        throw Error(ErrorKind::ValidationError, "'" + std::string(label) + "' is not an element of the frame");
    }
    return static_cast<std::size_t>(it - l.begin());
}

FocalSet Frame::subset(std::initializer_list<std::string_view> labels) const {
    FocalSet set;
    for (auto label : labels) {
        set = set | FocalSet::singleton(index_of(label));
    }
    return set;
}

std::string Frame::describe(FocalSet set) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
        if (set.contains(i)) {
            if (!first) {
                out += ',';
            }
            out += (*labels_)[i];
            first = false;
        }
    }
    return out + "}";
}

MassFunction MassFunction::make(const Frame& frame,
                                std::span<const std::pair<FocalSet, double>> assignments,
                                double sum_tolerance) {
    std::vector<FocalElement> elements;
    double sum = 0.0;
    for (const auto& [set, mass] : assignments) {
        if (set.empty() || !set.is_subset_of(frame.full())) {
            throw Error(ErrorKind::EmptyFocalSet, "focal sets must be non-empty subsets of the frame");
        }
        if (!std::isfinite(mass)) {
            throw Error(ErrorKind::NegativeMass, "mass on " + frame.describe(set) + " is not finite");
        }
        if (mass < 0.0) {
            std::ostringstream os;
            os << "mass " << mass << " on " << frame.describe(set) << " is negative";
            throw Error(ErrorKind::NegativeMass, os.str());
        }
        sum += mass;
        if (mass == 0.0) {
            continue;
        }
        auto it = std::find_if(elements.begin(), elements.end(), [&](const FocalElement& e) { return e.set == set; });
        if (it != elements.end()) {
            it->mass += mass;
        } else {
            elements.push_back({set, mass});
        }
    }
    if (!(std::fabs(sum - 1.0) <= sum_tolerance)) {
        std::ostringstream os;
        os << "masses sum to " << sum << ", expected 1";
        throw Error(ErrorKind::MassSumViolation, os.str());
    }
    // Rounding noise in an already-normalized input is left alone so that
    // rebuilding a MassFunction from its own elements is exact.
    if (std::fabs(sum - 1.0) > kRenormalizeThreshold) {
        for (auto& e : elements) {
            e.mass /= sum;
        }
    }
    std::sort(elements.begin(), elements.end(),
              [](const FocalElement& a, const FocalElement& b) { return a.set < b.set; });
    return MassFunction(frame, std::move(elements));
}

MassFunction MassFunction::make(const Frame& frame,
                                std::initializer_list<std::pair<FocalSet, double>> assignments,
                                double sum_tolerance) {
    return make(frame, std::span<const std::pair<FocalSet, double>>(assignments.begin(), assignments.size()),
                sum_tolerance);
}

MassFunction MassFunction::vacuous(const Frame& frame) {
    return MassFunction(frame, {FocalElement{frame.full(), 1.0}});
}

double MassFunction::mass(FocalSet set) const {
    for (const auto& e : elements_) {
        if (e.set == set) {
            return e.mass;
        }
    }
    return 0.0;
}

double MassFunction::total() const {
    double sum = 0.0;
    for (const auto& e : elements_) {
        sum += e.mass;
    }
    return sum;
}

double max_abs_difference(const MassFunction& a, const MassFunction& b) {
    double worst = 0.0;
    for (const auto& e : a.focal_elements()) {
        worst = std::max(worst, std::fabs(e.mass - b.mass(e.set)));
    }
    for (const auto& e : b.focal_elements()) {
        worst = std::max(worst, std::fabs(e.mass - a.mass(e.set)));
    }
    return worst;
}

bool approx_equal(const MassFunction& a, const MassFunction& b, double tol) {
    return a.frame() == b.frame() && max_abs_difference(a, b) <= tol;
}

namespace {

void require_same_frame(const MassFunction& m1, const MassFunction& m2) {
    if (!(m1.frame() == m2.frame())) {
        throw Error(ErrorKind::FrameMismatch, "mass functions are defined over different frames");
    }
}

} // namespace

double conflict(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    double k = 0.0;
    for (const auto& x : m1.focal_elements()) {
        for (const auto& y : m2.focal_elements()) {
            if ((x.set & y.set).empty()) {
                k += x.mass * y.mass;
            }
        }
    }
    return k;
}

MassFunction combine(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    std::vector<FocalElement> joint;
    double k = 0.0;
    for (const auto& x : m1.focal_elements()) {
        for (const auto& y : m2.focal_elements()) {
            const FocalSet meet = x.set & y.set;
            const double product = x.mass * y.mass;
            if (meet.empty()) {
                k += product;
                continue;
            }
            auto it = std::find_if(joint.begin(), joint.end(), [&](const FocalElement& e) { return e.set == meet; });
            if (it != joint.end()) {
                it->mass += product;
            } else {
                joint.push_back({meet, product});
            }
        }
    }
    if (k >= 1.0 - kTotalConflictMargin) {
        std::ostringstream os;
        os << "conflict coefficient " << k << " leaves nothing to normalize";
        throw Error(ErrorKind::TotalConflict, os.str());
    }
    const double norm = 1.0 - k;
    std::erase_if(joint, [](const FocalElement& e) { return e.mass == 0.0; });
    for (auto& e : joint) {
        e.mass /= norm;
    }
    std::sort(joint.begin(), joint.end(), [](const FocalElement& a, const FocalElement& b) { return a.set < b.set; });
    return MassFunction(m1.frame(), std::move(joint));
}

MassFunction combine_all(std::span<const MassFunction> masses) {
    if (masses.empty()) {
        throw Error(ErrorKind::EmptyEvidenceList, "nothing to combine");
    }
    MassFunction acc = masses.front();
    for (std::size_t i = 1; i < masses.size(); ++i) {
        acc = combine(acc, masses[i]);
    }
    return acc;
}

std::vector<double> pignistic(const MassFunction& m) {
    std::vector<double> bet(m.frame().size(), 0.0);
    for (const auto& e : m.focal_elements()) {
        const double share = e.mass / static_cast<double>(e.set.size());
        for (std::size_t i = 0; i < bet.size(); ++i) {
            if (e.set.contains(i)) {
                bet[i] += share;
            }
        }
    }
    return bet;
}

} // namespace evfuse
