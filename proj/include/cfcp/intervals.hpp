#pragma once

#include <vector>

namespace cfcp {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals, kept normalized: sorted
/// ascending, pairwise disjoint, touching intervals merged.
class IntervalSet {
  public:
    IntervalSet() = default;
    IntervalSet(double lo, double hi);
    explicit IntervalSet(std::vector<Interval> intervals); // normalizes

    bool empty() const { return ivs_.empty(); }
    std::size_t count() const { return ivs_.size(); }
    const std::vector<Interval>& intervals() const { return ivs_; }

    /// Sum of interval lengths.
    double measure() const;

    /// Closed-bounds membership.
    bool contains(double y) const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  private:
    std::vector<Interval> ivs_;
};

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_intersection(const IntervalSet& a, const IntervalSet& b);

/// a subset of b, exact on the stored bounds.
bool interval_subset(const IntervalSet& a, const IntervalSet& b);

/// 1 - m(a&b)/m(a|b) with Lebesgue measure; 0 when the union has measure 0
/// (both sets empty or measure-null counts as identical).
double jaccard_distance(const IntervalSet& a, const IntervalSet& b);

/// Label-set flavor: inputs are sorted ascending class-index sets.
double jaccard_distance(const std::vector<int>& a, const std::vector<int>& b);

} // namespace cfcp
