#include "mtk/lebesgue.hpp"

#include "mtk/error.hpp"

#include <algorithm>
#include <bit>

namespace mtk {

SemiringSpace make_semiring_space(SetSystem semiring, MeasureTable m) {
    if (!is_semiring(semiring)) {
        throw Error("not a semiring");
    }
    const Subset unit = semiring.union_of_members();
    if (!semiring.contains(unit)) {
        throw Error("semiring has no unit: union of members is not a member");
    }
    Report additive = check_measure(semiring, m);
    if (!additive.pass()) {
        throw Error("measure is not additive on the semiring");
    }
    return SemiringSpace{std::move(semiring), std::move(m), unit};
}

OuterTable::OuterTable(const SemiringSpace& space) : unit_(space.unit) {
    const std::size_t total = std::size_t(1) << space.semiring.carrier().size();
    values_.assign(total, Rat(0));
    choice_.assign(total, 0);
    valid_.assign(total, 0);
    valid_[0] = 1;

    std::vector<Mask> order;
    order.reserve(total);
    for (std::size_t m = 0; m < total; ++m) {
        if (Subset{Mask(m)}.subset_of(unit_)) order.push_back(Mask(m));
    }
    std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        return ca != cb ? ca < cb : a < b;
    });

    for (Mask t : order) {
        if (t == 0) continue;
        bool found = false;
        Rat best;
        Mask best_member = 0;
        for (Subset b : space.semiring.members()) {
            if (disjoint(b, Subset{t})) continue;
            const Mask rest = t & ~b.bits;
            if (!valid_[rest]) continue;
            const Rat cost = space.m.value(b) + values_[rest];
            if (!found || cost < best) {
                found = true;
                best = cost;
                best_member = b.bits;
            }
        }
        if (found) {
            valid_[t] = 1;
            values_[t] = std::move(best);
            choice_[t] = best_member;
        }
    }
    if (!valid_[unit_.bits]) {
        throw Error("internal: unit not coverable");
    }
}

const Rat& OuterTable::value(Subset target) const {
    if (!target.subset_of(unit_)) {
        throw Error("target is not a subset of the unit");
    }
    return values_[target.bits];
}

std::vector<Subset> OuterTable::best_cover(Subset target) const {
    (void)value(target);
    std::vector<Subset> cover;
    Mask rest = target.bits;
    while (rest != 0) {
        // among minimizing members the DP stored the tie-break smallest
        const Mask member = choice_[rest];
        cover.push_back(Subset{member});
        rest &= ~member;
    }
    std::sort(cover.begin(), cover.end(), tie_break_less);
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    return cover;
}

OuterMeasureResult outer_measure(const SemiringSpace& space, const OuterTable& outer,
                                 Subset target) {
    (void)space;
    return OuterMeasureResult{target, outer.value(target), outer.best_cover(target), true};
}

Rat symdiff_distance(const OuterTable& outer, Subset a, Subset b) {
    return outer.value(a ^ b);
}

MeasurabilityWitness is_measurable(const OuterTable& outer, const SetSystem& ring,
                                   Subset target) {
    MeasurabilityWitness w{target, {}, Rat(-1), false};
    for (Subset b : ring.members()) {
        const Rat d = outer.value(target ^ b);
        if (w.distance < 0 || d < w.distance) {
            w.distance = d;
            w.best_ring_element = b;
            if (d == 0) break; // members are scanned in tie-break order
        }
    }
    w.measurable = (w.distance == 0);
    return w;
}

MeasurabilityWitness is_measurable_within(const OuterTable& outer, const SetSystem& ring,
                                          Subset target, const Rat& eps) {
    if (eps <= 0) {
        throw Error("epsilon must be positive");
    }
    MeasurabilityWitness w = is_measurable(outer, ring, target);
    w.measurable = (w.distance < eps);
    return w;
}

std::vector<char> measurability_scan(const OuterTable& outer, const SetSystem& ring,
                                     Exec exec) {
    const std::size_t total = std::size_t(1) << std::popcount(outer.unit().bits);
    // maps compact index over unit bits to the actual mask
    std::vector<Mask> expand(total);
    {
        std::vector<int> unit_bits;
        for (int i = 0; i < 32; ++i) {
            if (outer.unit().contains(i)) unit_bits.push_back(i);
        }
        for (std::size_t idx = 0; idx < total; ++idx) {
            Mask m = 0;
            for (std::size_t k = 0; k < unit_bits.size(); ++k) {
                if ((idx >> k) & 1u) m |= Mask(1) << unit_bits[k];
            }
            expand[idx] = m;
        }
    }
    std::vector<char> measurable(total, 0);
    parallel_for(total, exec, [&](std::size_t idx) {
        const Subset target{expand[idx]};
        for (Subset b : ring.members()) {
            if (outer.value(target ^ b) == 0) {
                measurable[idx] = 1;
                return;
            }
        }
    });
    return measurable;
}

LebesgueExtension lebesgue_extension(const SemiringSpace& space, Exec exec) {
    LebesgueExtension ext;
    ext.outer = OuterTable(space);
    ExtendedMeasure extended = extend_measure(space.semiring, space.m);
    ext.generated = std::move(extended.generated);
    ext.ring_table = std::move(extended.table);

    const std::vector<char> flags = measurability_scan(ext.outer, ext.generated.ring, exec);
    std::vector<Subset> members;
    std::map<Mask, Rat> values;
    std::vector<int> unit_bits;
    for (int i = 0; i < 32; ++i) {
        if (space.unit.contains(i)) unit_bits.push_back(i);
    }
    for (std::size_t idx = 0; idx < flags.size(); ++idx) {
        if (!flags[idx]) continue;
        Mask m = 0;
        for (std::size_t k = 0; k < unit_bits.size(); ++k) {
            if ((idx >> k) & 1u) m |= Mask(1) << unit_bits[k];
        }
        members.push_back(Subset{m});
        values.emplace(m, ext.outer.value(Subset{m}));
    }
    SetSystem algebra(space.semiring.carrier(), std::move(members), SystemClass::sigma_algebra);
    MeasureTable mu = make_measure_table(algebra, std::move(values), MeasureLevel::lebesgue);
    ext.space = make_measurable_space(std::move(algebra), std::move(mu));
    return ext;
}

RegularCover regular_cover(const LebesgueExtension& ext, Subset target, int depth) {
    if (depth < 1) {
        throw Error("depth must be >= 1");
    }
    if (!ext.space.algebra.contains(target)) {
        throw Error("target not measurable");
    }
    const Rat target_mu = ext.outer.value(target);

    // Minimal measurable hull: the tie-break smallest ring element containing
    // the target with measure equal to mu*(target).
    Subset hull;
    bool found = false;
    for (Subset b : ext.generated.ring.members()) {
        if (!target.subset_of(b)) continue;
        if (ext.ring_table.value(b) != target_mu) continue;
        hull = b;
        found = true;
        break; // ring members are in tie-break order
    }
    if (!found) {
        throw Error("internal: measurable target has no ring hull of equal measure");
    }

    RegularCover rc{target, {}, hull, Report{"regular_cover"}};
    for (int n = 1; n <= depth; ++n) {
        rc.layers.push_back({hull});
    }

    rc.verification.add("regular.contains-target", target.subset_of(rc.intersection));
    rc.verification.add("regular.measure-equal", ext.outer.value(rc.intersection) == target_mu,
                        "mu*B = " + rat_str(ext.outer.value(rc.intersection)));
    bool chain_ok = true, bound_ok = true;
    Subset prev_outer;
    for (int n = 1; n <= depth; ++n) {
        const auto& chain = rc.layers[n - 1];
        Subset outer_n = chain.back();
        if (n > 1 && !outer_n.subset_of(prev_outer)) chain_ok = false;
        for (std::size_t k = 0; k < chain.size(); ++k) {
            if (!ext.generated.ring.contains(chain[k])) chain_ok = false;
            if (k > 0 && !chain[k - 1].subset_of(chain[k])) chain_ok = false;
            if (ext.ring_table.value(chain[k]) >= target_mu + Rat(1, n)) bound_ok = false;
        }
        prev_outer = outer_n;
    }
    rc.verification.add("regular.outer-chain-decreasing", chain_ok);
    rc.verification.add("regular.layer-bound", bound_ok,
                        "mu(Bnk) < mu*(A) + 1/n for all n <= " + std::to_string(depth));
    return rc;
}

Report countable_subadditivity_check(const OuterTable& outer, Subset target,
                                     const std::vector<std::vector<Subset>>& covers) {
    Report report{"countable_subadditivity"};
    for (const auto& cover : covers) {
        Subset u;
        Rat sum = 0;
        for (Subset a : cover) {
            u = u | a;
            sum += outer.value(a);
        }
        if (!target.subset_of(u)) {
            throw Error("supplied system does not cover the target");
        }
        const bool ok = outer.value(target) <= sum;
        report.add("outer.countable-subadditive", ok,
                   "mu* target = " + rat_str(outer.value(target)) + ", cover sum = "
                       + rat_str(sum));
    }
    return report;
}

IntervalOuterResult interval_outer_measure(const IntervalUnion& target) {
    return IntervalOuterResult{target, target.length(), target.parts(), true};
}

Rat interval_symdiff_distance(const IntervalUnion& a, const IntervalUnion& b) {
    return iu_symdiff(a, b).length();
}

IntervalRegularCover interval_regular_cover(const IntervalUnion& target, int depth) {
    if (depth < 1) {
        throw Error("depth must be >= 1");
    }
    IntervalRegularCover rc{target, {}, target, Report{"regular_cover"}};
    for (int n = 1; n <= depth; ++n) {
        rc.layers.push_back({target});
    }
    rc.verification.add("regular.contains-target", true, "B equals the target");
    bool bound_ok = true;
    for (int n = 1; n <= depth; ++n) {
        if (target.length() >= target.length() + Rat(1, n)) bound_ok = false;
    }
    rc.verification.add("regular.layer-bound", bound_ok);
    return rc;
}

} // namespace mtk
