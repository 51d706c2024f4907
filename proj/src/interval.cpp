#include "mtk/interval.hpp"

#include "mtk/error.hpp"

#include <algorithm>

namespace mtk {

Interval::Interval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) {
        throw Error("interval with lo > hi");
    }
    if (lo < 0 || hi > 1) {
        throw Error("interval endpoints must lie in [0,1]");
    }
    if (lo == hi) {
        lo = 0;
        hi = 0;
    }
}

Interval iv_intersect(const Interval& a, const Interval& b) {
    const Rat lo = std::max(a.lo, b.lo);
    const Rat hi = std::min(a.hi, b.hi);
    if (lo >= hi) return Interval();
    return Interval(lo, hi);
}

bool iv_subset(const Interval& inner, const Interval& outer) {
    if (inner.empty()) return true;
    return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

std::vector<Interval> iv_subtract_expansion(const Interval& whole, const Interval& part) {
    if (!iv_subset(part, whole)) {
        throw Error("part is not a subset of whole");
    }
    std::vector<Interval> pieces{part};
    if (part.empty()) {
        if (!whole.empty()) pieces.push_back(whole);
        return pieces;
    }
    if (whole.lo < part.lo) pieces.emplace_back(whole.lo, part.lo);
    if (part.hi < whole.hi) pieces.emplace_back(part.hi, whole.hi);
    return pieces;
}

IntervalUnion::IntervalUnion(std::vector<Interval> pieces) {
    std::erase_if(pieces, [](const Interval& iv) { return iv.empty(); });
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (const Interval& iv : pieces) {
        if (!parts_.empty() && iv.lo <= parts_.back().hi) {
            if (iv.hi > parts_.back().hi) parts_.back().hi = iv.hi;
        } else {
            parts_.push_back(iv);
        }
    }
}

Rat IntervalUnion::length() const {
    Rat total = 0;
    for (const Interval& iv : parts_) total += iv.length();
    return total;
}

IntervalUnion iu_union(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<Interval> pieces(a.parts());
    pieces.insert(pieces.end(), b.parts().begin(), b.parts().end());
    return IntervalUnion(std::move(pieces));
}

IntervalUnion iu_intersect(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<Interval> pieces;
    for (const Interval& x : a.parts()) {
        for (const Interval& y : b.parts()) {
            Interval z = iv_intersect(x, y);
            if (!z.empty()) pieces.push_back(z);
        }
    }
    return IntervalUnion(std::move(pieces));
}

IntervalUnion iu_subtract(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<Interval> pieces;
    for (const Interval& x : a.parts()) {
        // walk the cut points of b across x
        Rat cursor = x.lo;
        for (const Interval& y : b.parts()) {
            if (y.hi <= cursor) continue;
            if (y.lo >= x.hi) break;
            if (y.lo > cursor) pieces.emplace_back(cursor, std::min(y.lo, x.hi));
            cursor = std::max(cursor, std::min(y.hi, x.hi));
            if (cursor >= x.hi) break;
        }
        if (cursor < x.hi) pieces.emplace_back(cursor, x.hi);
    }
    return IntervalUnion(std::move(pieces));
}

IntervalUnion iu_symdiff(const IntervalUnion& a, const IntervalUnion& b) {
    return iu_union(iu_subtract(a, b), iu_subtract(b, a));
}

IntervalUnion iu_complement(const IntervalUnion& a) {
    return iu_subtract(IntervalUnion::unit(), a);
}

bool iu_subset(const IntervalUnion& inner, const IntervalUnion& outer) {
    return iu_subtract(inner, outer).empty();
}

std::string iu_str(const IntervalUnion& u) {
    if (u.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < u.parts().size(); ++i) {
        if (i) out += "+";
        out += rat_str(u.parts()[i].lo) + ":" + rat_str(u.parts()[i].hi);
    }
    return out;
}

IntervalUnion parse_interval_union(std::string_view text) {
    if (text == "{}" || text.empty()) return IntervalUnion();
    std::vector<Interval> pieces;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto plus = text.find('+', pos);
        if (plus == std::string_view::npos) plus = text.size();
        std::string_view item = text.substr(pos, plus - pos);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw Error("interval literal must look like lo:hi");
        }
        pieces.emplace_back(parse_rat(item.substr(0, colon)), parse_rat(item.substr(colon + 1)));
        pos = plus + 1;
        if (plus == text.size()) break;
    }
    return IntervalUnion(std::move(pieces));
}

} // namespace mtk
