#include "cfcp/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfcp {

namespace {

std::vector<Interval> normalize(std::vector<Interval> ivs) {
    for (const auto& iv : ivs)
        if (!(iv.lo <= iv.hi)) throw std::invalid_argument("interval with lo > hi");
    std::sort(ivs.begin(), ivs.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    std::vector<Interval> out;
    for (const auto& iv : ivs) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            out.back().hi = std::max(out.back().hi, iv.hi); // merge, touching included
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

} // namespace

IntervalSet::IntervalSet(double lo, double hi) : ivs_(normalize({{lo, hi}})) {}

IntervalSet::IntervalSet(std::vector<Interval> intervals) : ivs_(normalize(std::move(intervals))) {}

double IntervalSet::measure() const {
    double m = 0.0;
    for (const auto& iv : ivs_) m += iv.hi - iv.lo;
    return m;
}

bool IntervalSet::contains(double y) const {
    for (const auto& iv : ivs_) {
        if (y < iv.lo) return false;
        if (y <= iv.hi) return true;
    }
    return false;
}

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all = a.intervals();
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return IntervalSet(std::move(all));
}

IntervalSet interval_intersection(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    const auto& av = a.intervals();
    const auto& bv = b.intervals();
    while (i < av.size() && j < bv.size()) {
        const double lo = std::max(av[i].lo, bv[j].lo);
        const double hi = std::min(av[i].hi, bv[j].hi);
        if (lo <= hi) out.push_back({lo, hi});
        if (av[i].hi < bv[j].hi)
            ++i;
        else
            ++j;
    }
    return IntervalSet(std::move(out));
}

bool interval_subset(const IntervalSet& a, const IntervalSet& b) {
    return interval_intersection(a, b) == a;
}

double jaccard_distance(const IntervalSet& a, const IntervalSet& b) {
    if (a == b) return 0.0;
    const double mu = interval_union(a, b).measure();
    if (mu <= 0.0) return 0.0;
    const double mi = interval_intersection(a, b).measure();
    return 1.0 - mi / mu;
}

double jaccard_distance(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0, inter = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    const std::size_t uni = a.size() + b.size() - inter;
    if (uni == 0) return 0.0;
    return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

} // namespace cfcp
