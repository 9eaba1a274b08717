#include "evfuse/fuzzy.hpp"

#include "evfuse/error.hpp"

#include <algorithm>
#include <cmath>

namespace evfuse {

TriangularFuzzyNumber TriangularFuzzyNumber::make(double a, double b, double c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw Error(ErrorKind::InvalidInterval, "triangular fuzzy number has a non-finite parameter");
    }
    if (a > b || b > c) {
        throw Error(ErrorKind::InvalidInterval, "triangular fuzzy number requires a <= b <= c");
    }
    return TriangularFuzzyNumber(a, b, c);
}

double TriangularFuzzyNumber::membership(double x) const {
    if (x == b_) {
        return 1.0;
    }
    if (x < a_ || x > c_) {
        return 0.0;
    }
    // a < x < b or b < x < c here, so the denominators are non-zero.
    if (x < b_) {
        return (x - a_) / (b_ - a_);
    }
    return (c_ - x) / (c_ - b_);
}

Interval TriangularFuzzyNumber::alpha_cut(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorKind::InvalidAlpha, "alpha must lie in [0, 1]");
    }
    return Interval::make(a_ + alpha * (b_ - a_), c_ - alpha * (c_ - b_));
}

Interval crisp_to_interval(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw Error(ErrorKind::InvalidInterval, "crisp weight must be finite and non-negative");
    }
    return Interval::point(x);
}

LinguisticScale::LinguisticScale(std::string name, ScaleKind kind)
    : name_(std::move(name)), kind_(kind) {}

void LinguisticScale::add_term(std::string term, ScaleValue value) {
    if (contains(term)) {
        throw Error(ErrorKind::ValidationError, "duplicate term '" + term + "' in scale '" + name_ + "'");
    }
    const bool is_interval = std::holds_alternative<Interval>(value);
    if (is_interval != (kind_ == ScaleKind::interval)) {
        throw Error(ErrorKind::ValidationError, "term '" + term + "' does not match the kind of scale '" + name_ + "'");
    }
    entries_.emplace_back(std::move(term), value);
}

bool LinguisticScale::contains(std::string_view term) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == term; });
}

const ScaleValue& LinguisticScale::lookup(std::string_view term) const {
    for (const auto& [label, value] : entries_) {
        if (label == term) {
            return value;
        }
    }
    std::string valid;
    for (const auto& entry : entries_) {
        if (!valid.empty()) {
            valid += ", ";
        }
        valid += '\'' + entry.first + '\'';
    }
    throw Error(ErrorKind::UnknownTerm,
                "term '" + std::string(term) + "' is not in scale '" + name_ + "' (valid terms: " + valid + ")");
}

Interval LinguisticScale::to_interval(std::string_view term, double alpha) const {
    const ScaleValue& value = lookup(term);
    if (const auto* iv = std::get_if<Interval>(&value)) {
        return *iv;
    }
    return std::get<TriangularFuzzyNumber>(value).alpha_cut(alpha);
}

const LinguisticScale& LinguisticScale::kaufmann_tfn() {
    static const LinguisticScale scale = [] {
        LinguisticScale s("kaufmann-tfn", ScaleKind::triangular);
        s.add_term("Very low (VL)", TriangularFuzzyNumber::make(0.0, 0.1, 0.3));
        s.add_term("Low (L)", TriangularFuzzyNumber::make(0.1, 0.3, 0.5));
        s.add_term("Medium (M)", TriangularFuzzyNumber::make(0.3, 0.5, 0.7));
        s.add_term("High (H)", TriangularFuzzyNumber::make(0.5, 0.7, 0.9));
        s.add_term("Very high (VH)", TriangularFuzzyNumber::make(0.7, 0.9, 1.0));
        return s;
    }();
    return scale;
}

const LinguisticScale& LinguisticScale::interval_default() {
    static const LinguisticScale scale = [] {
        LinguisticScale s("interval-default", ScaleKind::interval);
        s.add_term("Very low (VL)", Interval::make(0.0, 0.3));
        s.add_term("Low (L)", Interval::make(0.1, 0.5));
        s.add_term("Medium (M)", Interval::make(0.3, 0.7));
        s.add_term("High (H)", Interval::make(0.5, 0.9));
        s.add_term("Very high (VH)", Interval::make(0.7, 1.0));
        return s;
    }();
    return scale;
}

} // namespace evfuse
