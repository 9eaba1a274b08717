#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evfuse {

inline constexpr std::size_t kMaxFrameSize = 16;

// Masses within this distance of summing to 1 are renormalized; beyond it
// construction fails.
inline constexpr double kMassSumTolerance = 1e-6;

// Dempster's rule is undefined once the conflict reaches 1 - this.
inline constexpr double kTotalConflictMargin = 1e-12;

/// Subset of a frame, bit i set when element i is a member.
struct FocalSet {
    std::uint32_t bits = 0;

    constexpr bool empty() const { return bits == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
    constexpr bool contains(std::size_t element) const { return ((bits >> element) & 1u) != 0; }
    constexpr bool is_subset_of(FocalSet other) const { return (bits & ~other.bits) == 0; }

    static constexpr FocalSet singleton(std::size_t element) { return FocalSet{1u << element}; }

    friend constexpr FocalSet operator&(FocalSet a, FocalSet b) { return FocalSet{a.bits & b.bits}; }
    friend constexpr FocalSet operator|(FocalSet a, FocalSet b) { return FocalSet{a.bits | b.bits}; }
    friend constexpr auto operator<=>(FocalSet, FocalSet) = default;
};

/// Ordered, non-empty set of unique hypothesis labels (at most 16).
class Frame {
public:
    // Throws ValidationError on empty, oversized or duplicate-label input.
    static Frame make(std::vector<std::string> labels);

    // The {IS, NS} frame shared by every pipeline mass function.
    static const Frame& binary();

    std::size_t size() const { return labels_->size(); }
    const std::vector<std::string>& labels() const { return *labels_; }
    FocalSet full() const { return FocalSet{static_cast<std::uint32_t>((1u << size()) - 1u)}; }

    // Throws ValidationError for an unknown label.
    std::size_t index_of(std::string_view label) const;
    FocalSet subset(std::initializer_list<std::string_view> labels) const;
    std::string describe(FocalSet set) const;

    friend bool operator==(const Frame& a, const Frame& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

private:
    explicit Frame(std::shared_ptr<const std::vector<std::string>> labels) : labels_(std::move(labels)) {}

    std::shared_ptr<const std::vector<std::string>> labels_;
};

struct FocalElement {
    FocalSet set;
    double mass = 0.0;

    friend bool operator==(const FocalElement&, const FocalElement&) = default;
};

/// Basic probability assignment over a frame.
///
/// Only strictly positive masses are stored, sorted by subset bits, so two
/// assignments compare equal regardless of explicit zeros in their input.
class MassFunction {
public:
    /// Validates and stores the assignment. Repeated subsets are summed.
    ///
    /// Errors: EmptyFocalSet for the empty set or a set outside the frame,
    /// NegativeMass, MassSumViolation when |sum - 1| > sum_tolerance.
    /// Sums within tolerance are renormalized to 1.
    static MassFunction make(const Frame& frame,
                             std::span<const std::pair<FocalSet, double>> assignments,
                             double sum_tolerance = kMassSumTolerance);
    static MassFunction make(const Frame& frame,
                             std::initializer_list<std::pair<FocalSet, double>> assignments,
                             double sum_tolerance = kMassSumTolerance);

    static MassFunction vacuous(const Frame& frame);

    const Frame& frame() const { return frame_; }
    std::span<const FocalElement> focal_elements() const { return elements_; }
    double mass(FocalSet set) const;
    double total() const;

    friend bool operator==(const MassFunction& a, const MassFunction& b) {
        return a.frame_ == b.frame_ && a.elements_ == b.elements_;
    }

private:
    MassFunction(Frame frame, std::vector<FocalElement> elements)
        : frame_(std::move(frame)), elements_(std::move(elements)) {}

    friend MassFunction combine(const MassFunction&, const MassFunction&);

    Frame frame_;
    std::vector<FocalElement> elements_;
};

// Largest per-subset mass difference over the union of focal sets.
double max_abs_difference(const MassFunction& a, const MassFunction& b);
bool approx_equal(const MassFunction& a, const MassFunction& b, double tol);

inline MassFunction vacuous(const Frame& frame) { return MassFunction::vacuous(frame); }

// Total mass on pairs of focal sets with empty intersection. FrameMismatch
// if the frames differ.
double conflict(const MassFunction& m1, const MassFunction& m2);

// Dempster's normalized conjunctive rule. Throws TotalConflict when the
// conflict is within kTotalConflictMargin of 1.
MassFunction combine(const MassFunction& m1, const MassFunction& m2);

// Left fold of combine in input order. EmptyEvidenceList on no input.
MassFunction combine_all(std::span<const MassFunction> masses);

// Pignistic probability of each frame element, in frame order.
std::vector<double> pignistic(const MassFunction& m);

} // namespace evfuse
