#pragma once

#include "mtk/rat.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mtk {

/// Half-open rational interval [lo, hi) inside [0, 1). The empty interval
/// canonicalizes to [0, 0).
struct Interval {
    Rat lo = 0;
    Rat hi = 0;

    Interval() = default;
    Interval(Rat lo_, Rat hi_); // throws on lo > hi or endpoints outside [0,1]

    bool empty() const { return lo == hi; }
    Rat length() const { return hi - lo; }

    bool operator==(const Interval&) const = default;
};

Interval iv_intersect(const Interval& a, const Interval& b);
bool iv_subset(const Interval& inner, const Interval& outer);

/// whole = part + left remainder + right remainder, empty remainders omitted.
/// At most three pieces, part first. Throws when part is not inside whole.
std::vector<Interval> iv_subtract_expansion(const Interval& whole, const Interval& part);

/// Finite disjoint union of intervals in canonical form: sorted by lo,
/// pairwise disjoint with strictly positive gaps (touching pieces merged),
/// no empty pieces.
class IntervalUnion {
public:
    IntervalUnion() = default;
    /// Normalizes any list of intervals (overlap legal) into canonical form.
    explicit IntervalUnion(std::vector<Interval> pieces);

    static IntervalUnion unit() { return IntervalUnion({Interval(Rat(0), Rat(1))}); }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    Rat length() const;

    bool operator==(const IntervalUnion&) const = default;

private:
    std::vector<Interval> parts_;
};

IntervalUnion iu_union(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion iu_intersect(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion iu_subtract(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion iu_symdiff(const IntervalUnion& a, const IntervalUnion& b);
/// Complement within the unit interval [0, 1).
IntervalUnion iu_complement(const IntervalUnion& a);
bool iu_subset(const IntervalUnion& inner, const IntervalUnion& outer);

/// "lo:hi" with rational endpoints; unions join pieces with '+', empty is "{}".
std::string iu_str(const IntervalUnion& u);
IntervalUnion parse_interval_union(std::string_view text);

} // namespace mtk
