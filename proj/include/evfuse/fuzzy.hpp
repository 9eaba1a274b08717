#pragma once

#include "evfuse/interval.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace evfuse {

/// Triangular fuzzy number (a, b, c): support [a, c], peak at b.
class TriangularFuzzyNumber {
public:
    constexpr TriangularFuzzyNumber() = default;

    /// Throws InvalidInterval unless a <= b <= c and all finite.
    static TriangularFuzzyNumber make(double a, double b, double c);

    constexpr double a() const { return a_; }
    constexpr double b() const { return b_; }
    constexpr double c() const { return c_; }

    /// Piecewise-linear membership. Exactly 1 at the peak, including the
    /// degenerate flanks a == b or b == c.
    double membership(double x) const;

    /// Alpha-cut [a + alpha(b-a), c - alpha(c-b)]. alpha = 0 is the support.
    /// Throws InvalidAlpha outside [0, 1].
    Interval alpha_cut(double alpha) const;

    friend constexpr bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;

private:
    constexpr TriangularFuzzyNumber(double a, double b, double c) : a_(a), b_(b), c_(c) {}

    double a_ = 0.0;
    double b_ = 0.0;
    double c_ = 0.0;
};

// Free-function spellings used by callers that work on values.
inline double tfn_membership(const TriangularFuzzyNumber& t, double x) { return t.membership(x); }
inline Interval tfn_to_interval(const TriangularFuzzyNumber& t, double alpha) { return t.alpha_cut(alpha); }

// [x, x]; InvalidInterval for negative or non-finite x.
Interval crisp_to_interval(double x);

enum class ScaleKind { interval, triangular };

using ScaleValue = std::variant<Interval, TriangularFuzzyNumber>;

// Ordered term -> value table. All values of one scale share a kind.
class LinguisticScale {
public:
    LinguisticScale(std::string name, ScaleKind kind);

    // Throws ValidationError on duplicate labels or a value of the wrong kind.
    void add_term(std::string term, ScaleValue value);

    const std::string& name() const { return name_; }
    ScaleKind kind() const { return kind_; }
    const std::vector<std::pair<std::string, ScaleValue>>& entries() const { return entries_; }
    bool contains(std::string_view term) const;

    // Throws UnknownTerm, listing the valid terms.
    const ScaleValue& lookup(std::string_view term) const;

    // Interval scales return the mapped interval; TFN scales the alpha-cut.
    Interval to_interval(std::string_view term, double alpha = 0.0) const;

    // Built-ins: importance terms as TFNs, and the same terms as intervals.
    static const LinguisticScale& kaufmann_tfn();
    static const LinguisticScale& interval_default();

private:
    std::string name_;
    ScaleKind kind_;
    std::vector<std::pair<std::string, ScaleValue>> entries_;
};

inline const ScaleValue& scale_lookup(const LinguisticScale& scale, std::string_view term) {
    return scale.lookup(term);
}

} // namespace evfuse
