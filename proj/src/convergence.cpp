#include "mtk/convergence.hpp"

#include <random>

namespace mtk {

bool preimage_measurable(const SetSystem& cx, const SetSystem& cy,
                         const std::vector<std::size_t>& point_map) {
    for (Subset target : cy.members()) {
        Subset preimage;
        for (std::size_t x = 0; x < point_map.size(); ++x) {
            if (target.contains(point_map[x])) preimage.bits |= Mask(1) << x;
        }
        if (!cx.contains(preimage)) return false;
    }
    return true;
}

bool level_sets_measurable(const SetSystem& cx, const std::vector<std::size_t>& point_map,
                           std::size_t range_size) {
    for (std::size_t y = 0; y < range_size; ++y) {
        Subset fiber;
        for (std::size_t x = 0; x < point_map.size(); ++x) {
            if (point_map[x] == y) fiber.bits |= Mask(1) << x;
        }
        if (!cx.contains(fiber)) return false;
    }
    return true;
}

namespace {

SetSystem power_set(const Carrier& carrier) {
    std::vector<Subset> members;
    const std::size_t total = std::size_t(1) << carrier.size();
    members.reserve(total);
    for (std::size_t m = 0; m < total; ++m) members.push_back(Subset{Mask(m)});
    return SetSystem(carrier, std::move(members), SystemClass::sigma_algebra);
}

} // namespace

Report measurability_closure_checks(const SetSystem& cx, unsigned seed, int samples) {
    Report report{"measurable_maps"};
    const std::size_t n = cx.carrier().size();
    std::mt19937_64 rng(seed);

    // identity is (cx, cx)-measurable
    std::vector<std::size_t> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = i;
    report.add("measurable.identity", preimage_measurable(cx, cx, identity));

    // constant maps pull every target back to the whole carrier or nothing
    std::vector<std::size_t> constant(n, 0);
    std::vector<std::string> two{"u", "v"};
    const SetSystem target = power_set(Carrier(two));
    const Subset full{cx.carrier().full_mask()};
    if (cx.contains(full)) {
        report.add("measurable.constant", preimage_measurable(cx, target, constant));
    } else {
        report.add("measurable.constant", true, "carrier itself not a member, skipped", true);
    }

    // criterion agreement: against a power-set target, the preimage test and
    // the level-set criterion decide alike (needs union closure, i.e. at
    // least a ring on the domain side)
    std::vector<std::string> range_names{"a", "b", "c"};
    const SetSystem range_ps = power_set(Carrier(range_names));
    std::uniform_int_distribution<std::size_t> pick_y(0, 2);
    if (classify(cx).strongest >= SystemClass::ring) {
        bool agree = true;
        for (int s = 0; s < samples; ++s) {
            std::vector<std::size_t> f(n);
            for (auto& y : f) y = pick_y(rng);
            if (preimage_measurable(cx, range_ps, f) != level_sets_measurable(cx, f, 3)) {
                agree = false;
            }
        }
        report.add("measurable.criterion-agreement", agree,
                   std::to_string(samples) + " random maps");
    } else {
        report.add("measurable.criterion-agreement", true,
                   "domain system below ring, criterion not applicable", true);
    }

    // composition: measurable f then measurable g compose measurably
    bool comp_ok = true;
    for (int s = 0; s < samples; ++s) {
        std::vector<std::size_t> f(n), g(3);
        for (auto& y : f) y = pick_y(rng);
        for (auto& z : g) z = pick_y(rng);
        if (!preimage_measurable(cx, range_ps, f)) continue;
        // any g is (power set, power set)-measurable
        std::vector<std::size_t> gf(n);
        for (std::size_t i = 0; i < n; ++i) gf[i] = g[f[i]];
        if (!preimage_measurable(cx, range_ps, gf)) comp_ok = false;
    }
    report.add("measurable.composition", comp_ok);
    return report;
}

SequenceFamily<IntervalSpace, RatScalar> dyadic_indicator_family() {
    SequenceFamily<IntervalSpace, RatScalar> fam;
    const IntervalSpace space;
    fam.domain = space.whole();
    fam.limit = SimpleMap<IntervalSpace, RatScalar>{
        {{IntervalUnion::unit(), Rat(0)}}, true};
    fam.at = [](int n) {
        const Rat cut = dyadic(unsigned(n));
        return SimpleMap<IntervalSpace, RatScalar>{
            {{IntervalUnion({Interval(Rat(0), cut)}), Rat(1)},
             {IntervalUnion({Interval(cut, Rat(1))}), Rat(0)}},
            false};
    };
    fam.tail_below = [](int n, const Rat& eps) -> IntervalUnion {
        if (eps > 1) return IntervalUnion::unit();
        return IntervalUnion({Interval(dyadic(unsigned(n)), Rat(1))});
    };
    return fam;
}

SequenceFamily<IntervalSpace, RatScalar> staircase_family() {
    SequenceFamily<IntervalSpace, RatScalar> fam;
    const IntervalSpace space;
    fam.domain = space.whole();
    fam.limit = SimpleMap<IntervalSpace, RatScalar>{
        {{IntervalUnion::unit(), Rat(1)}}, true};
    fam.at = [](int n) {
        const Rat cut = dyadic(unsigned(n));
        return SimpleMap<IntervalSpace, RatScalar>{
            {{IntervalUnion({Interval(Rat(0), cut)}), Rat(0)},
             {IntervalUnion({Interval(cut, Rat(1))}), Rat(1)}},
            false};
    };
    // the declared limit is the constant 1 on [0,1); the pointwise exception
    // {0} carries measure zero and is below the representable resolution
    fam.tail_below = [](int n, const Rat& eps) -> IntervalUnion {
        if (eps > 1) return IntervalUnion::unit();
        return IntervalUnion({Interval(dyadic(unsigned(n)), Rat(1))});
    };
    return fam;
}

SequenceFamily<FiniteSpace, RatScalar> geometric_rates_family(const FiniteSpace& space,
                                                              std::vector<Rat> coef,
                                                              std::vector<Rat> rate) {
    const std::size_t n_atoms = space.ms.algebra.carrier().size();
    if (coef.size() != n_atoms || rate.size() != n_atoms) {
        throw Error("coefficient and rate lists must match the carrier");
    }
    for (const Rat& r : rate) {
        if (r < 0 || r >= 1) throw Error("rates must lie in [0,1)");
    }

    SequenceFamily<FiniteSpace, RatScalar> fam;
    fam.domain = space.whole();
    {
        std::vector<SimpleMap<FiniteSpace, RatScalar>::Piece> zero_pieces{
            {space.whole(), Rat(0)}};
        fam.limit = SimpleMap<FiniteSpace, RatScalar>{std::move(zero_pieces), true};
    }
    fam.at = [coef, rate, n_atoms, whole = space.whole()](int n) {
        std::vector<SimpleMap<FiniteSpace, RatScalar>::Piece> pieces;
        for (std::size_t k = 0; k < n_atoms; ++k) {
            if (!whole.contains(k)) continue;
            Rat value = coef[k];
            for (int i = 0; i < n; ++i) value *= rate[k];
            pieces.push_back({Subset{Mask(1) << k}, value});
        }
        return SimpleMap<FiniteSpace, RatScalar>{std::move(pieces), false};
    };
    fam.tail_below = [coef, rate, n_atoms, whole = space.whole()](int n, const Rat& eps) {
        Subset good;
        for (std::size_t k = 0; k < n_atoms; ++k) {
            if (!whole.contains(k)) continue;
            Rat tail = rat_abs(coef[k]);
            for (int i = 0; i < n; ++i) tail *= rate[k];
            if (tail < eps) good.bits |= Mask(1) << k;
        }
        return good;
    };
    return fam;
}

} // namespace mtk
