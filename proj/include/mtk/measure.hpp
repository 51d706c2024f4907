#pragma once

#include "mtk/interval.hpp"
#include "mtk/rat.hpp"
#include "mtk/report.hpp"
#include "mtk/set_system.hpp"

#include <functional>
#include <map>

namespace mtk {

enum class MeasureLevel { semiring, ring, lebesgue };

/// Nonnegative rational value per member of a base system. Tables are total:
/// looking up a set without a value is an error, nothing is inferred.
struct MeasureTable {
    SetSystem base;
    std::map<Mask, Rat> values;
    MeasureLevel level = MeasureLevel::semiring;

    bool has(Subset s) const { return values.count(s.bits) != 0; }
    const Rat& value(Subset s) const; // throws Error naming the member
};

MeasureTable make_measure_table(SetSystem base, std::map<Mask, Rat> values,
                                MeasureLevel level = MeasureLevel::semiring);

/// Verifies nonnegativity, m({})=0 and additivity of the table across every
/// finite expansion (all exact covers) of every member.
Report check_measure(const SetSystem& semiring, const MeasureTable& table);

struct ExtendedMeasure {
    GeneratedRing generated;
    MeasureTable table; // on the generated ring, level = ring
    /// Cross-check records: value recomputed over a second, independently
    /// chosen expansion; flagged when only one expansion exists.
    Report cross_check;
};

/// Unique extension of a semiring measure to the generated ring:
/// mu(A) = sum of m over the witness expansion of A.
ExtendedMeasure extend_measure(const SetSystem& semiring, const MeasureTable& table);

/// An algebra with unit carrying a measure that is additive over all finite
/// expansions (sigma-additivity at the finite level).
struct MeasurableSpace {
    SetSystem algebra;
    MeasureTable mu;
    Subset unit;
};

/// Validates classification (>= algebra), totality and finite
/// sigma-additivity of the measure.
MeasurableSpace make_measurable_space(SetSystem algebra, MeasureTable mu);

/// mu(A) <= mu(B) for every member pair A inside B, exhaustively.
Report monotonicity_check(const MeasurableSpace& space);

/// mu(A) <= sum mu(B_i) for sampled covers of arity <= max_arity; the
/// contained A runs exhaustively over members inside the cover union.
Report subadditivity_check(const MeasurableSpace& space, int max_arity = 4,
                           int samples = 64, unsigned seed = 1);

/// Nested family with a declared limit and a declared closed-form bound on
/// |mu(A_n) - mu(limit)|.
struct FiniteNestedFamily {
    std::function<Subset(int)> at; // n >= 1
    Subset limit;
    std::function<Rat(int)> rate;
};

Report continuity_check(const MeasurableSpace& space, const FiniteNestedFamily& family,
                        bool decreasing, int horizon);

/// Interval-space counterpart; the limit enters through its measure (the
/// limit set itself need not be representable, e.g. a countable increasing
/// union reaching full measure).
struct IntervalNestedFamily {
    std::function<IntervalUnion(int)> at; // n >= 1
    Rat limit_measure;
    std::function<Rat(int)> rate;
};

Report continuity_check(const IntervalNestedFamily& family, bool decreasing, int horizon);

} // namespace mtk
