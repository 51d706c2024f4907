#pragma once

#include "mtk/interval.hpp"
#include "mtk/measure.hpp"

#include <string>

namespace mtk {

/// Integration-facing view of a finite measurable space.
struct FiniteSpace {
    MeasurableSpace ms;

    using Set = Subset;
    Set whole() const { return ms.unit; }
    bool is_measurable(Set s) const { return ms.algebra.contains(s); }
    Rat measure(Set s) const { return ms.mu.value(s); }
    static Set intersect(Set a, Set b) { return a & b; }
    static Set unite(Set a, Set b) { return a | b; }
    static Set subtract(Set a, Set b) { return a - b; }
    static bool is_empty(Set s) { return s.empty(); }
    static bool set_less(Set a, Set b) { return tie_break_less(a, b); }
    std::string set_str(Set s) const { return subset_str(ms.algebra.carrier(), s); }
};

/// Integration-facing view of the interval space [0,1) with length measure.
/// Every representable set (finite interval union) is measurable.
struct IntervalSpace {
    using Set = IntervalUnion;
    Set whole() const { return IntervalUnion::unit(); }
    bool is_measurable(const Set&) const { return true; }
    Rat measure(const Set& s) const { return s.length(); }
    static Set intersect(const Set& a, const Set& b) { return iu_intersect(a, b); }
    static Set unite(const Set& a, const Set& b) { return iu_union(a, b); }
    static Set subtract(const Set& a, const Set& b) { return iu_subtract(a, b); }
    static bool is_empty(const Set& s) { return s.empty(); }
    static bool set_less(const Set& a, const Set& b) {
        if (a.empty() || b.empty()) return !a.empty() < !b.empty();
        if (a.parts().front().lo != b.parts().front().lo)
            return a.parts().front().lo < b.parts().front().lo;
        return a.length() < b.length();
    }
    std::string set_str(const Set& s) const { return iu_str(s); }
};

} // namespace mtk
