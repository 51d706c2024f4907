#pragma once

#include "mtk/error.hpp"
#include "mtk/omega.hpp"
#include "mtk/rat.hpp"
#include "mtk/report.hpp"
#include "mtk/spaces.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace mtk {

/// A map with finitely many values, given as a measurable partition of the
/// whole space with one group value per piece.
template <class Space, class G>
struct SimpleMap {
    struct Piece {
        typename Space::Set set;
        typename G::Value value;
    };
    std::vector<Piece> pieces;
    bool canonical = false;
};

/// Validates the partition: measurable pieces, pairwise disjoint, union
/// equal to the whole space.
template <class Space, class G>
SimpleMap<Space, G> make_simple_map(const Space& space,
                                    std::vector<typename SimpleMap<Space, G>::Piece> pieces) {
    typename Space::Set seen{};
    for (const auto& p : pieces) {
        if (!space.is_measurable(p.set)) {
            throw Error("piece is not measurable");
        }
        if (!Space::is_empty(Space::intersect(seen, p.set))) {
            throw Error("pieces overlap");
        }
        seen = Space::unite(seen, p.set);
    }
    if (!(seen == space.whole())) {
        throw Error("pieces leave a gap");
    }
    return SimpleMap<Space, G>{std::move(pieces), false};
}

/// Merges pieces with equal values and drops empty ones; the result has
/// pairwise distinct values and is sorted canonically.
template <class Space, class G>
SimpleMap<Space, G> canonicalize(const Space& space, const SimpleMap<Space, G>& f) {
    SimpleMap<Space, G> out;
    for (const auto& p : f.pieces) {
        if (Space::is_empty(p.set)) continue;
        bool merged = false;
        for (auto& q : out.pieces) {
            if (q.value == p.value) {
                q.set = Space::unite(q.set, p.set);
                merged = true;
                break;
            }
        }
        if (!merged) out.pieces.push_back(p);
    }
    std::sort(out.pieces.begin(), out.pieces.end(),
              [](const auto& a, const auto& b) { return Space::set_less(a.set, b.set); });
    if (out.pieces.empty()) {
        // the whole space is empty-measure free but a partition needs a piece
        out.pieces.push_back({space.whole(), G::zero()});
    }
    out.canonical = true;
    return out;
}

template <class Space, class G>
typename G::Value value_at_piece(const SimpleMap<Space, G>& f, std::size_t i) {
    return f.pieces[i].value;
}

template <class G>
struct IntegralValue {
    typename G::Value value = G::zero();
    Rat norm_integral = 0; // integral of norm(f)
};

/// Integral over a measurable subset Y: sum of scalar(mu(F_n meet Y), f_n).
/// Finite partitions make the defining series a finite sum, so normal
/// convergence holds by construction.
template <class Space, class G>
IntegralValue<G> integrate(const Space& space, const SimpleMap<Space, G>& f,
                           const typename Space::Set& over) {
    if (!space.is_measurable(over)) {
        throw Error("integration domain is not measurable");
    }
    IntegralValue<G> out;
    for (const auto& p : f.pieces) {
        const Rat mu = space.measure(Space::intersect(p.set, over));
        out.value = G::add(out.value, G::scalar(mu, p.value));
        out.norm_integral += mu * G::norm(p.value);
    }
    return out;
}

template <class Space, class G>
IntegralValue<G> integrate(const Space& space, const SimpleMap<Space, G>& f) {
    return integrate(space, f, space.whole());
}

/// Pointwise combination on the common refinement of two partitions.
template <class Space, class G, class Combine>
SimpleMap<Space, G> combine(const Space& space, const SimpleMap<Space, G>& f,
                            const SimpleMap<Space, G>& g, Combine&& op) {
    SimpleMap<Space, G> out;
    for (const auto& pf : f.pieces) {
        for (const auto& pg : g.pieces) {
            auto cell = Space::intersect(pf.set, pg.set);
            if (Space::is_empty(cell)) continue;
            out.pieces.push_back({std::move(cell), op(pf.value, pg.value)});
        }
    }
    return canonicalize(space, out);
}

template <class Space, class G>
SimpleMap<Space, G> map_values(const Space& space, const SimpleMap<Space, G>& f,
                               const std::function<typename G::Value(const typename G::Value&)>& op) {
    SimpleMap<Space, G> out = f;
    for (auto& p : out.pieces) p.value = op(p.value);
    return canonicalize(space, out);
}

/// integral(f+g) = integral(f) + integral(g), exactly.
template <class Space, class G>
Report check_additivity(const Space& space, const SimpleMap<Space, G>& f,
                        const SimpleMap<Space, G>& g) {
    Report report{"integral.additivity"};
    const auto sum = combine(space, f, g, [](const auto& a, const auto& b) { return G::add(a, b); });
    const auto lhs = integrate(space, sum).value;
    const auto rhs = G::add(integrate(space, f).value, integrate(space, g).value);
    report.add("integral.additivity", lhs == rhs,
               "int(f+g) = " + G::str(lhs) + ", int f + int g = " + G::str(rhs));
    return report;
}

/// norm(integral(omega(f1..fn))) <= |omega| * integral(norm f1 * ... * norm fn).
template <class Space, class G>
Report check_omega_bound(const Space& space, const OmegaOp<typename G::Value>& op,
                         const std::vector<SimpleMap<Space, G>>& maps) {
    if (static_cast<int>(maps.size()) != op.arity) {
        throw Error("operation arity mismatch");
    }
    Report report{"integral.omega-bound"};

    // refine all partitions jointly; cells carry the argument tuple
    struct Cell {
        typename Space::Set set;
        std::vector<typename G::Value> args;
    };
    std::vector<Cell> cells{{space.whole(), {}}};
    for (const auto& f : maps) {
        std::vector<Cell> next;
        for (const auto& c : cells) {
            for (const auto& p : f.pieces) {
                auto inter = Space::intersect(c.set, p.set);
                if (Space::is_empty(inter)) continue;
                Cell nc{std::move(inter), c.args};
                nc.args.push_back(p.value);
                next.push_back(std::move(nc));
            }
        }
        cells = std::move(next);
    }

    typename G::Value lhs = G::zero();
    Rat rhs = 0;
    for (const auto& c : cells) {
        const Rat mu = space.measure(c.set);
        lhs = G::add(lhs, G::scalar(mu, op.eval(c.args)));
        Rat nprod = op.norm_bound;
        for (const auto& a : c.args) nprod *= G::norm(a);
        rhs += mu * nprod;
    }
    report.add("integral.omega-bound", G::norm(lhs) <= rhs,
               "norm int " + op.name + " = " + rat_str(G::norm(lhs)) + " <= " + rat_str(rhs));
    return report;
}

enum class MorphismSide { left, right };

/// integral of a*g equals a*integral(g) (and symmetrically on the right)
/// whenever the acting transformation commutes with the rational scalar
/// action, which holds for all bundled instances.
template <class Space, class G>
Report check_scalar_morphism(const Space& space, const typename G::Value& a,
                             const SimpleMap<Space, G>& g,
                             const OmegaOp<typename G::Value>& op, MorphismSide side) {
    if (op.arity != 2) {
        throw Error("morphism check needs a binary operation");
    }
    Report report{"integral.scalar-morphism"};
    auto act = [&](const typename G::Value& v) {
        return side == MorphismSide::left ? op.eval({a, v}) : op.eval({v, a});
    };
    SimpleMap<Space, G> h = g;
    for (auto& p : h.pieces) p.value = act(p.value);
    const auto lhs = integrate(space, h).value;
    const auto rhs = act(integrate(space, g).value);
    const char* label = side == MorphismSide::left ? "integral.morphism-left"
                                                   : "integral.morphism-right";
    report.add(label, lhs == rhs, "int = " + G::str(lhs) + " vs " + G::str(rhs));
    return report;
}

/// integral over X = sum of integrals over the blocks of a measurable
/// partition, both for the map and for its norm.
template <class Space, class G>
Report sigma_additivity(const Space& space, const SimpleMap<Space, G>& f,
                        const std::vector<typename Space::Set>& partition) {
    Report report{"integral.sigma-additivity"};
    typename Space::Set seen{};
    for (const auto& block : partition) {
        if (!space.is_measurable(block)) throw Error("partition block not measurable");
        if (!Space::is_empty(Space::intersect(seen, block))) throw Error("partition blocks overlap");
        seen = Space::unite(seen, block);
    }
    if (!(seen == space.whole())) throw Error("partition does not exhaust the space");

    const auto whole = integrate(space, f);
    typename G::Value sum = G::zero();
    Rat norm_sum = 0;
    for (const auto& block : partition) {
        const auto part = integrate(space, f, block);
        sum = G::add(sum, part.value);
        norm_sum += part.norm_integral;
    }
    report.add("integral.sigma-additive", whole.value == sum,
               "int_X f = " + G::str(whole.value) + ", block sum = " + G::str(sum));
    report.add("integral.sigma-additive-norm", whole.norm_integral == norm_sum,
               "int_X |f| = " + rat_str(whole.norm_integral) + ", block sum = "
                   + rat_str(norm_sum));
    return report;
}

/// mu{norm f >= c} <= (1/c) * integral(norm f); the level set is a union of
/// pieces and therefore measurable.
template <class Space, class G>
Report chebyshev(const Space& space, const SimpleMap<Space, G>& f, const Rat& c) {
    if (c <= 0) throw Error("chebyshev level must be positive");
    Report report{"integral.chebyshev"};
    typename Space::Set level{};
    for (const auto& p : f.pieces) {
        if (G::norm(p.value) >= c) level = Space::unite(level, p.set);
    }
    const Rat lhs = space.measure(level);
    const Rat rhs = integrate(space, f).norm_integral / c;
    report.add("integral.chebyshev", lhs <= rhs,
               "mu{|f| >= " + rat_str(c) + "} = " + rat_str(lhs) + " <= " + rat_str(rhs));
    return report;
}

/// integral of norm(f) vanishes only when f vanishes outside a null set.
template <class Space, class G>
Report zero_integral_null(const Space& space, const SimpleMap<Space, G>& f) {
    Report report{"integral.zero-implies-null-support"};
    const Rat norm_int = integrate(space, f).norm_integral;
    typename Space::Set support{};
    for (const auto& p : f.pieces) {
        if (!(p.value == G::zero())) support = Space::unite(support, p.set);
    }
    if (norm_int == 0) {
        report.add("integral.zero-implies-null-support", space.measure(support) == 0,
                   "mu(support) = " + rat_str(space.measure(support)));
    } else {
        report.add("integral.zero-implies-null-support", true,
                   "int |f| = " + rat_str(norm_int) + " > 0, nothing to check", true);
    }
    return report;
}

/// f = g outside a null set implies equal integrals.
template <class Space, class G>
Report ae_equal_integral(const Space& space, const SimpleMap<Space, G>& f,
                         const SimpleMap<Space, G>& g) {
    Report report{"integral.ae-equal"};
    typename Space::Set differ{};
    for (const auto& pf : f.pieces) {
        for (const auto& pg : g.pieces) {
            if (pf.value == pg.value) continue;
            auto cell = Space::intersect(pf.set, pg.set);
            if (!Space::is_empty(cell)) differ = Space::unite(differ, cell);
        }
    }
    if (space.measure(differ) == 0) {
        const bool ok = integrate(space, f).value == integrate(space, g).value;
        report.add("integral.ae-equal", ok, "maps agree almost everywhere");
    } else {
        report.add("integral.ae-equal", true,
                   "maps differ on measure " + rat_str(space.measure(differ))
                       + ", nothing to check", true);
    }
    return report;
}

struct ContinuityModulus {
    Rat delta;
    Report report;
};

/// Deterministic modulus delta = eps / (2 * max(1, max norm(f_n))): every
/// measurable E with mu(E) < delta has norm(int_E f) < eps, checked
/// exhaustively over the algebra. Flagged when only null sets fall below
/// delta (the statement then holds vacuously for positive-measure sets).
template <class G>
ContinuityModulus continuity_modulus(const FiniteSpace& space, const SimpleMap<FiniteSpace, G>& f,
                                     const Rat& eps) {
    if (eps <= 0) throw Error("epsilon must be positive");
    Rat max_norm = 1;
    for (const auto& p : f.pieces) max_norm = std::max(max_norm, G::norm(p.value));
    ContinuityModulus out{eps / (2 * max_norm), Report{"integral.normal-continuity"}};

    bool ok = true;
    bool nonvacuous = false;
    for (Subset e : space.ms.algebra.members()) {
        const Rat mu = space.measure(e);
        if (mu >= out.delta) continue;
        if (mu > 0) nonvacuous = true;
        if (!(G::norm(integrate(space, f, e).value) < eps)) ok = false;
    }
    out.report.add("integral.normal-continuity", ok,
                   "delta = " + rat_str(out.delta)
                       + (nonvacuous ? "" : " (only null sets below delta)"),
                   /*flag=*/!nonvacuous);
    return out;
}

/// norm(integral f) <= M * mu(X) for the exact bound M = max norm(f_n).
template <class Space, class G>
Report boundedness(const Space& space, const SimpleMap<Space, G>& f) {
    Report report{"integral.bounded"};
    Rat max_norm = 0;
    for (const auto& p : f.pieces) {
        if (!Space::is_empty(p.set)) max_norm = std::max(max_norm, G::norm(p.value));
    }
    const Rat bound = max_norm * space.measure(space.whole());
    const Rat got = G::norm(integrate(space, f).value);
    report.add("integral.bounded", got <= bound,
               "norm int f = " + rat_str(got) + " <= M*mu(X) = " + rat_str(bound));
    return report;
}

} // namespace mtk
