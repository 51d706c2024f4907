#pragma once

#include "mtk/lebesgue.hpp"
#include "mtk/measure.hpp"
#include "mtk/set_system.hpp"

#include <utility>
#include <vector>

namespace mtk {

enum class Side { left, right };
enum class IterationOrder { left_first, right_first };

/// Carrier of ordered pairs "(a,b)"; bit index of (i,j) is i*|right|+j.
Carrier pair_carrier(const Carrier& left, const Carrier& right);

/// Rectangle a x b as a subset of the pair carrier.
Subset rectangle(std::size_t n_right, Subset a, Subset b);

/// The system of all rectangles A x B over member pairs.
SetSystem product_system(const SetSystem& s1, const SetSystem& s2);

/// mu(A x B) = mu1(A) * mu2(B) on the rectangle system.
MeasureTable product_measure_table(const SetSystem& rects, std::size_t n_right,
                                   const MeasureTable& m1, const MeasureTable& m2);

/// Two finite measurable spaces paired: rectangle semiring with the product
/// measure, its generated ring with the extended measure, and the Lebesgue
/// extension of the product.
struct ProductSpace {
    MeasurableSpace left;
    MeasurableSpace right;
    std::size_t n_right = 0;
    SemiringSpace rect_space;
    LebesgueExtension product;
};

ProductSpace make_product_space(const MeasurableSpace& left, const MeasurableSpace& right);

/// Slice of a pair-carrier set at a fixed point of one factor.
Subset section(const ProductSpace& space, Subset a, Side fixed_side, std::size_t point);

struct SectionEvaluation {
    Rat direct;   // extended product measure of the set
    Rat iterated; // integral of the section measures in the requested order
    Report report;
};

/// Evaluates mu(A) by integrating section measures; asserts equality with
/// the direct extended measure.
SectionEvaluation measure_via_sections(const ProductSpace& space, Subset a,
                                       IterationOrder order);

// --- Mixed rectangles: interval left factor, finite right factor -----------

/// Finite union of rectangles I x F in canonical form: consecutive elementary
/// intervals, each carrying the finite fiber that sits above it; adjacent
/// columns with equal fibers merged, empty columns dropped.
class MixedRectSet {
public:
    MixedRectSet() = default;
    explicit MixedRectSet(std::vector<std::pair<Interval, Subset>> rects);

    const std::vector<std::pair<Interval, Subset>>& columns() const { return columns_; }
    bool empty() const { return columns_.empty(); }

    /// Fiber above a fixed interval point.
    Subset section_at(const Rat& x) const;
    /// Slice at a fixed finite point.
    IntervalUnion section_at(std::size_t point) const;

    bool operator==(const MixedRectSet&) const = default;

private:
    std::vector<std::pair<Interval, Subset>> columns_;
};

struct MixedSectionEvaluation {
    Rat direct;
    Rat interval_first;
    Rat finite_first;
    Report report;
};

/// Product measure of a mixed set evaluated three ways: directly on the
/// column decomposition and by iterated integration in both orders. The
/// finite-first order requires the level sets of the slice lengths to be
/// measurable in the finite factor.
MixedSectionEvaluation mixed_measure_via_sections(const MixedRectSet& set,
                                                  const MeasurableSpace& finite_factor);

} // namespace mtk
