#include "mtk/product.hpp"

#include "mtk/error.hpp"

#include <algorithm>

namespace mtk {

Carrier pair_carrier(const Carrier& left, const Carrier& right) {
    std::vector<std::string> names;
    names.reserve(left.size() * right.size());
    for (const auto& a : left.points()) {
        for (const auto& b : right.points()) {
            names.push_back("(" + a + "," + b + ")");
        }
    }
    return Carrier(std::move(names));
}

Subset rectangle(std::size_t n_right, Subset a, Subset b) {
    Subset r;
    for (std::size_t i = 0; i < Carrier::max_points; ++i) {
        if (!a.contains(i)) continue;
        for (std::size_t j = 0; j < n_right; ++j) {
            if (b.contains(j)) r.bits |= Mask(1) << (i * n_right + j);
        }
    }
    return r;
}

SetSystem product_system(const SetSystem& s1, const SetSystem& s2) {
    if (!is_semiring(s1) || !is_semiring(s2)) {
        throw Error("product factors must be semirings");
    }
    const Carrier pairs = pair_carrier(s1.carrier(), s2.carrier());
    const std::size_t n_right = s2.carrier().size();
    std::vector<Subset> rects;
    rects.reserve(s1.size() * s2.size());
    for (Subset a : s1.members()) {
        for (Subset b : s2.members()) {
            rects.push_back(rectangle(n_right, a, b));
        }
    }
    return SetSystem(pairs, std::move(rects), SystemClass::semiring);
}

MeasureTable product_measure_table(const SetSystem& rects, std::size_t n_right,
                                   const MeasureTable& m1, const MeasureTable& m2) {
    std::map<Mask, Rat> values;
    for (Subset a : m1.base.members()) {
        for (Subset b : m2.base.members()) {
            const Subset r = rectangle(n_right, a, b);
            values[r.bits] = m1.value(a) * m2.value(b);
        }
    }
    return make_measure_table(rects, std::move(values), MeasureLevel::semiring);
}

ProductSpace make_product_space(const MeasurableSpace& left, const MeasurableSpace& right) {
    ProductSpace ps{left, right, right.algebra.carrier().size(), {}, {}};
    SetSystem rects = product_system(left.algebra, right.algebra);
    MeasureTable rect_m = product_measure_table(rects, ps.n_right, left.mu, right.mu);
    ps.rect_space = make_semiring_space(std::move(rects), std::move(rect_m));
    ps.product = lebesgue_extension(ps.rect_space);
    return ps;
}

Subset section(const ProductSpace& space, Subset a, Side fixed_side, std::size_t point) {
    const std::size_t n_left = space.left.algebra.carrier().size();
    const std::size_t n_right = space.n_right;
    Subset out;
    if (fixed_side == Side::left) {
        if (point >= n_left) throw Error("point outside factor carrier");
        for (std::size_t j = 0; j < n_right; ++j) {
            if (a.contains(point * n_right + j)) out.bits |= Mask(1) << j;
        }
    } else {
        if (point >= n_right) throw Error("point outside factor carrier");
        for (std::size_t i = 0; i < n_left; ++i) {
            if (a.contains(i * n_right + point)) out.bits |= Mask(1) << i;
        }
    }
    return out;
}

namespace {

/// Integrates a rational-valued point function over a factor space by
/// grouping its level sets; every level set must be measurable there.
Rat integrate_levels(const MeasurableSpace& factor, const std::vector<Rat>& value_at,
                     Subset domain) {
    std::vector<char> done(value_at.size(), 0);
    Rat total = 0;
    for (std::size_t i = 0; i < value_at.size(); ++i) {
        if (done[i] || !domain.contains(i)) continue;
        Subset level;
        for (std::size_t j = i; j < value_at.size(); ++j) {
            if (!done[j] && domain.contains(j) && value_at[j] == value_at[i]) {
                level.bits |= Mask(1) << j;
                done[j] = 1;
            }
        }
        if (!factor.algebra.contains(level)) {
            throw Error("section-measure map is not measurable in the factor");
        }
        total += factor.mu.value(level) * value_at[i];
    }
    return total;
}

} // namespace

SectionEvaluation measure_via_sections(const ProductSpace& space, Subset a,
                                       IterationOrder order) {
    if (!space.product.generated.ring.contains(a)) {
        throw Error("set is not in the generated product ring");
    }
    SectionEvaluation ev{space.product.ring_table.value(a), 0, Report{"product.sections"}};

    if (order == IterationOrder::left_first) {
        const std::size_t n_left = space.left.algebra.carrier().size();
        std::vector<Rat> vals(n_left, Rat(0));
        for (std::size_t i = 0; i < n_left; ++i) {
            if (!space.left.unit.contains(i)) continue;
            vals[i] = space.right.mu.value(section(space, a, Side::left, i));
        }
        ev.iterated = integrate_levels(space.left, vals, space.left.unit);
    } else {
        const std::size_t n_right = space.n_right;
        std::vector<Rat> vals(n_right, Rat(0));
        for (std::size_t j = 0; j < n_right; ++j) {
            if (!space.right.unit.contains(j)) continue;
            vals[j] = space.left.mu.value(section(space, a, Side::right, j));
        }
        ev.iterated = integrate_levels(space.right, vals, space.right.unit);
    }

    ev.report.add(order == IterationOrder::left_first ? "product.sections-left"
                                                      : "product.sections-right",
                  ev.direct == ev.iterated,
                  "direct = " + rat_str(ev.direct) + ", iterated = " + rat_str(ev.iterated));
    return ev;
}

MixedRectSet::MixedRectSet(std::vector<std::pair<Interval, Subset>> rects) {
    std::erase_if(rects, [](const auto& r) { return r.first.empty() || r.second.empty(); });
    if (rects.empty()) return;

    std::vector<Rat> cuts;
    for (const auto& [iv, fin] : rects) {
        cuts.push_back(iv.lo);
        cuts.push_back(iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const Interval cell(cuts[k], cuts[k + 1]);
        Subset fiber;
        for (const auto& [iv, fin] : rects) {
            if (iv.lo <= cell.lo && cell.hi <= iv.hi) fiber = fiber | fin;
        }
        if (fiber.empty()) continue;
        if (!columns_.empty() && columns_.back().second == fiber
            && columns_.back().first.hi == cell.lo) {
            columns_.back().first.hi = cell.hi;
        } else {
            columns_.emplace_back(cell, fiber);
        }
    }
}

Subset MixedRectSet::section_at(const Rat& x) const {
    for (const auto& [iv, fin] : columns_) {
        if (iv.lo <= x && x < iv.hi) return fin;
    }
    return Subset{};
}

IntervalUnion MixedRectSet::section_at(std::size_t point) const {
    std::vector<Interval> parts;
    for (const auto& [iv, fin] : columns_) {
        if (fin.contains(point)) parts.push_back(iv);
    }
    return IntervalUnion(std::move(parts));
}

MixedSectionEvaluation mixed_measure_via_sections(const MixedRectSet& set,
                                                  const MeasurableSpace& finite_factor) {
    MixedSectionEvaluation ev{0, 0, 0, Report{"product.mixed-sections"}};

    for (const auto& [iv, fin] : set.columns()) {
        if (!finite_factor.algebra.contains(fin)) {
            throw Error("mixed rectangle fiber is not measurable in the finite factor");
        }
        ev.direct += iv.length() * finite_factor.mu.value(fin);
    }

    // interval-first: integrate the step map x -> mu2(fiber at x) by
    // grouping its level sets into interval unions
    {
        std::vector<char> done(set.columns().size(), 0);
        for (std::size_t i = 0; i < set.columns().size(); ++i) {
            if (done[i]) continue;
            const Rat v = finite_factor.mu.value(set.columns()[i].second);
            std::vector<Interval> level;
            for (std::size_t j = i; j < set.columns().size(); ++j) {
                if (done[j]) continue;
                if (finite_factor.mu.value(set.columns()[j].second) == v) {
                    level.push_back(set.columns()[j].first);
                    done[j] = 1;
                }
            }
            ev.interval_first += IntervalUnion(std::move(level)).length() * v;
        }
    }

    // finite-first: integrate the slice lengths over the finite factor
    const std::size_t n = finite_factor.algebra.carrier().size();
    std::vector<Rat> slice_len(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        slice_len[j] = set.section_at(j).length();
    }
    std::vector<char> done(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i] || !finite_factor.unit.contains(i)) continue;
        Subset level;
        for (std::size_t j = i; j < n; ++j) {
            if (!done[j] && finite_factor.unit.contains(j) && slice_len[j] == slice_len[i]) {
                level.bits |= Mask(1) << j;
                done[j] = 1;
            }
        }
        if (!finite_factor.algebra.contains(level)) {
            throw Error("slice-length map is not measurable in the finite factor");
        }
        ev.finite_first += finite_factor.mu.value(level) * slice_len[i];
    }

    ev.report.add("product.mixed-three-way",
                  ev.direct == ev.interval_first && ev.direct == ev.finite_first,
                  "direct = " + rat_str(ev.direct) + ", interval-first = "
                      + rat_str(ev.interval_first) + ", finite-first = "
                      + rat_str(ev.finite_first));
    return ev;
}

} // namespace mtk
