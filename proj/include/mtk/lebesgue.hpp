#pragma once

#include "mtk/interval.hpp"
#include "mtk/measure.hpp"
#include "mtk/parallel.hpp"
#include "mtk/report.hpp"
#include "mtk/set_system.hpp"

#include <vector>

namespace mtk {

/// A sigma-additive measure on a semiring with unit E: the input of the
/// Lebesgue extension machinery.
struct SemiringSpace {
    SetSystem semiring;
    MeasureTable m;
    Subset unit;
};

/// Validates: semiring classification, unit membership (the union of all
/// members must itself be a member), measure additivity.
SemiringSpace make_semiring_space(SetSystem semiring, MeasureTable m);

/// Outer measure of every subset of the unit, computed as the minimum of
/// member-cover costs (finite covers attain the infimum on finite carriers).
class OuterTable {
public:
    OuterTable() = default;
    OuterTable(const SemiringSpace& space); // exact min-cost-cover DP over all masks

    const Rat& value(Subset target) const; // throws when target outside unit
    /// Canonical optimal cover: minimizing member chosen in tie-break order
    /// at every step of the reconstruction.
    std::vector<Subset> best_cover(Subset target) const;
    Subset unit() const { return unit_; }

private:
    Subset unit_ = {};
    std::vector<Rat> values_;
    std::vector<Mask> choice_; // minimizing member per mask, 0 detects "none"
    std::vector<char> valid_;
};

struct OuterMeasureResult {
    Subset target;
    Rat value;
    std::vector<Subset> best_cover;
    bool attained = true; // finite carriers: the reported cover attains the infimum
};

OuterMeasureResult outer_measure(const SemiringSpace& space, const OuterTable& outer,
                                 Subset target);

/// mu*(A delta B).
Rat symdiff_distance(const OuterTable& outer, Subset a, Subset b);

struct MeasurabilityWitness {
    Subset target;
    Subset best_ring_element;
    Rat distance;           // min over ring elements B of mu*(target delta B)
    bool measurable = false;
};

/// Exact decision on finite carriers: measurable iff the minimal distance to
/// the generated ring is zero. The complement E \ A always yields the
/// complement witness E \ B at the same distance.
MeasurabilityWitness is_measurable(const OuterTable& outer, const SetSystem& ring,
                                   Subset target);

/// Same decision against a positive tolerance: witness with distance < eps,
/// or a negative verdict. Throws on eps <= 0.
MeasurabilityWitness is_measurable_within(const OuterTable& outer, const SetSystem& ring,
                                          Subset target, const Rat& eps);

/// Data-parallel kernel: for every subset of the unit decide measurability.
/// Deterministic result regardless of schedule.
std::vector<char> measurability_scan(const OuterTable& outer, const SetSystem& ring,
                                     Exec exec = Exec::serial);

struct LebesgueExtension {
    MeasurableSpace space;   // C_mu with mu = mu* restricted
    GeneratedRing generated; // R(S) with witness expansions
    MeasureTable ring_table; // extension of m to R(S)
    OuterTable outer;
};

/// The full pipeline: outer table, generated ring, measurability scan,
/// validation of the resulting algebra.
LebesgueExtension lebesgue_extension(const SemiringSpace& space, Exec exec = Exec::serial);

/// Nested-chain approximation of a measurable set from above by ring
/// elements: B contains the target, mu(B) equals mu*(target), and every
/// chain element obeys mu < mu*(target) + 1/n. On finite carriers the
/// minimal measurable hull repeats along the chain.
struct RegularCover {
    Subset target;
    std::vector<std::vector<Subset>> layers; // layers[n-1]: increasing ring chain B_n1 .. B_nk
    Subset intersection;                     // meet of the outer chain elements
    Report verification;
};

RegularCover regular_cover(const LebesgueExtension& ext, Subset target, int depth);

/// mu*(target) <= sum of mu*(A_n) for each supplied cover of the target.
Report countable_subadditivity_check(const OuterTable& outer, Subset target,
                                     const std::vector<std::vector<Subset>>& covers);

// --- Interval-space counterparts -----------------------------------------
//
// Interval-union targets are exactly the representable sets; their canonical
// cover (their own parts) attains the covering infimum, so outer measure is
// the length and every target is measurable with itself as ring witness.

struct IntervalOuterResult {
    IntervalUnion target;
    Rat value;
    std::vector<Interval> best_cover;
    bool attained = true;
};

IntervalOuterResult interval_outer_measure(const IntervalUnion& target);
Rat interval_symdiff_distance(const IntervalUnion& a, const IntervalUnion& b);

struct IntervalRegularCover {
    IntervalUnion target;
    std::vector<std::vector<IntervalUnion>> layers;
    IntervalUnion intersection;
    Report verification;
};

IntervalRegularCover interval_regular_cover(const IntervalUnion& target, int depth);

} // namespace mtk
