#pragma once

#include "mtk/product.hpp"
#include "mtk/simple_map.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mtk {

/// A sequence of simple maps with a declared limit and a closed-form tail
/// bound. The engine never claims limits it cannot certify: tail_below(n,
/// eps) must return the measurable set {x : sup over i>=n of
/// norm(f_i(x)-f(x)) < eps}, and the contract is spot-verified at sampled
/// indices. Convergence may fail on exceptional_set (null when almost
/// everywhere convergence is claimed).
template <class Space, class G>
struct SequenceFamily {
    std::function<SimpleMap<Space, G>(int)> at; // n >= 1
    SimpleMap<Space, G> limit;
    std::function<typename Space::Set(int, const Rat&)> tail_below;
    typename Space::Set domain;
    typename Space::Set exceptional_set{};
};

template <class Space, class G>
struct EgorovResult {
    Rat delta;
    typename Space::Set e_delta;
    std::vector<int> schedule; // n0(m), m = 1..depth
    Report report;
};

namespace detail {

/// max over cells meeting `within` of norm(f(x) - g(x)).
template <class Space, class G>
Rat sup_deviation(const SimpleMap<Space, G>& f, const SimpleMap<Space, G>& g,
                  const typename Space::Set& within) {
    Rat sup = 0;
    for (const auto& pf : f.pieces) {
        for (const auto& pg : g.pieces) {
            auto cell = Space::intersect(pf.set, pg.set);
            cell = Space::intersect(cell, within);
            if (Space::is_empty(cell)) continue;
            sup = std::max(sup, G::norm(G::add(pf.value, G::neg(pg.value))));
        }
    }
    return sup;
}

} // namespace detail

/// The uniform-convergence set construction: E_n^m from the tail bounds,
/// n0(m) minimal with mu(E \ E_n^m) < delta*2^-m, E_delta the meet of the
/// chosen sets. Verifies mu(E_delta) >= mu(E) - delta exactly and the 1/m
/// deviation bound on E_delta at sampled indices.
template <class Space, class G>
EgorovResult<Space, G> egorov(const Space& space, const SequenceFamily<Space, G>& family,
                              const Rat& delta, int depth) {
    if (delta <= 0) throw Error("delta must be positive");
    if (!family.tail_below) throw Error("tail bound absent");

    EgorovResult<Space, G> out{delta, family.domain, {}, Report{"egorov"}};
    const Rat mu_e = space.measure(family.domain);

    for (int m = 1; m <= depth; ++m) {
        const Rat eps = Rat(1, m);
        const Rat budget = delta * dyadic(unsigned(m));
        int n0 = -1;
        for (int n = 1; n <= 256; ++n) {
            auto good = Space::intersect(family.tail_below(n, eps), family.domain);
            if (space.measure(Space::subtract(family.domain, good)) < budget) {
                n0 = n;
                break;
            }
        }
        if (n0 < 0) throw Error("tail bound does not reach the required rate");
        out.schedule.push_back(n0);
        out.e_delta = Space::intersect(
            out.e_delta, Space::intersect(family.tail_below(n0, eps), family.domain));
    }

    const Rat mu_ed = space.measure(out.e_delta);
    out.report.add("egorov.measure", mu_ed >= mu_e - delta,
                   "mu(E_delta) = " + rat_str(mu_ed) + " >= mu(E) - delta = "
                       + rat_str(mu_e - delta));

    bool uniform_ok = true;
    for (int m = 1; m <= depth; ++m) {
        const Rat eps = Rat(1, m);
        for (int bump : {0, 1, 3, 7}) {
            const int i = out.schedule[m - 1] + bump;
            const Rat sup = detail::sup_deviation(family.at(i), family.limit, out.e_delta);
            if (!(sup < eps)) uniform_ok = false;
        }
    }
    out.report.add("egorov.uniform-on-E_delta", uniform_ok,
                   "deviation below 1/m for sampled indices past n0(m)");

    // Spot-check of the declared tail bound itself.
    bool tail_ok = true;
    for (int n : {1, 2, 4}) {
        for (int m : {1, 2}) {
            const Rat eps = Rat(1, m);
            auto region = Space::intersect(family.tail_below(n, eps), family.domain);
            for (int bump : {0, 2}) {
                const Rat sup = detail::sup_deviation(family.at(n + bump), family.limit, region);
                if (!(sup < eps)) tail_ok = false;
            }
        }
    }
    out.report.add("egorov.tail-bound-contract", tail_ok, "sampled indices respect the bound");
    return out;
}

struct ConvergenceCertificate {
    std::vector<Rat> residuals; // residuals[n-1] = norm(int f_n - int f)
    Report report;
};

/// Truncation certificate for the dominated convergence theorem: domination
/// is verified pointwise at sampled indices and the residual norm(int f_n -
/// int f) is checked against tol from the horizon on.
template <class Space, class G>
ConvergenceCertificate dominated_convergence(const Space& space,
                                             const SequenceFamily<Space, G>& family,
                                             const SimpleMap<Space, RatScalar>& dominator,
                                             int horizon, const Rat& tol) {
    ConvergenceCertificate cert{{}, Report{"dominated_convergence"}};

    bool dominated = true;
    std::string witness;
    for (int n : {1, 2, horizon / 2 + 1, horizon}) {
        const auto fn = family.at(n);
        for (const auto& pf : fn.pieces) {
            for (const auto& pg : dominator.pieces) {
                auto cell = Space::intersect(pf.set, pg.set);
                if (Space::is_empty(cell)) continue;
                if (G::norm(pf.value) > pg.value) {
                    dominated = false;
                    witness = "n=" + std::to_string(n) + ": |f_n| = "
                              + rat_str(G::norm(pf.value)) + " > g = " + rat_str(pg.value);
                }
            }
        }
    }
    cert.report.add("dominated.pointwise-bound", dominated, witness);

    const auto lim = integrate(space, family.limit, family.domain).value;
    bool tail_ok = true;
    for (int n = 1; n <= horizon + 5; ++n) {
        const auto in = integrate(space, family.at(n), family.domain).value;
        const Rat gap = G::norm(G::add(in, G::neg(lim)));
        cert.residuals.push_back(gap);
        if (n >= horizon && gap > tol) tail_ok = false;
    }
    cert.report.add("dominated.residual", tail_ok,
                    "residual at horizon " + std::to_string(horizon) + " is "
                        + rat_str(cert.residuals[horizon - 1]) + " <= " + rat_str(tol));
    return cert;
}

/// Truncation certificate for monotone convergence of scalar maps with
/// uniformly bounded integrals.
template <class Space>
ConvergenceCertificate beppo_levi(const Space& space,
                                  const SequenceFamily<Space, RatScalar>& family,
                                  const Rat& integral_bound, int horizon, const Rat& tol) {
    ConvergenceCertificate cert{{}, Report{"beppo_levi"}};

    bool monotone = true;
    for (int n : {1, 2, horizon / 2 + 1, horizon}) {
        const auto fn = family.at(n);
        const auto fn1 = family.at(n + 1);
        for (const auto& pa : fn.pieces) {
            for (const auto& pb : fn1.pieces) {
                auto cell = Space::intersect(pa.set, pb.set);
                if (Space::is_empty(cell)) continue;
                if (pa.value > pb.value) monotone = false;
            }
        }
    }
    cert.report.add("beppo-levi.monotone", monotone, "sampled indices");

    const Rat lim = integrate(space, family.limit, family.domain).value;
    bool bounded = true;
    Rat prev;
    bool have_prev = false;
    bool nondecreasing = true;
    for (int n = 1; n <= horizon; ++n) {
        const Rat in = integrate(space, family.at(n), family.domain).value;
        if (in > integral_bound) bounded = false;
        if (have_prev && in < prev) nondecreasing = false;
        prev = in;
        have_prev = true;
        cert.residuals.push_back(rat_abs(lim - in));
    }
    cert.report.add("beppo-levi.integrals-bounded", bounded,
                    "all sampled integrals <= " + rat_str(integral_bound));
    cert.report.add("beppo-levi.integrals-nondecreasing", nondecreasing);
    cert.report.add("beppo-levi.residual", cert.residuals.back() <= tol,
                    "residual at horizon = " + rat_str(cert.residuals.back()) + " <= "
                        + rat_str(tol));
    return cert;
}

/// int_B f = iterated integral in both orders, all three values exactly
/// equal. Sections of the pieces must be measurable in the factors.
template <class G>
Report fubini_simple(const ProductSpace& ps, const SimpleMap<FiniteSpace, G>& f, Subset b) {
    Report report{"fubini"};
    const FiniteSpace prod{ps.product.space};
    if (!prod.is_measurable(b)) throw Error("domain is not measurable in the product");

    const auto direct = integrate(prod, f, b).value;

    auto iterate = [&](Side fixed) -> typename G::Value {
        const MeasurableSpace& outer_factor = fixed == Side::left ? ps.left : ps.right;
        const std::size_t n_outer = outer_factor.algebra.carrier().size();
        const MeasurableSpace& inner_factor = fixed == Side::left ? ps.right : ps.left;

        std::vector<typename G::Value> inner(n_outer, G::zero());
        for (std::size_t p = 0; p < n_outer; ++p) {
            if (!outer_factor.unit.contains(p)) continue;
            const Subset b_slice = section(ps, b, fixed, p);
            typename G::Value acc = G::zero();
            for (const auto& piece : f.pieces) {
                const Subset f_slice = section(ps, piece.set, fixed, p);
                const Subset cell = f_slice & b_slice;
                if (!inner_factor.algebra.contains(cell)) {
                    throw Error("section is not measurable in the factor");
                }
                acc = G::add(acc, G::scalar(inner_factor.mu.value(cell), piece.value));
            }
            inner[p] = acc;
        }

        // outer integral by level sets of the inner values
        typename G::Value total = G::zero();
        std::vector<char> done(n_outer, 0);
        for (std::size_t p = 0; p < n_outer; ++p) {
            if (done[p] || !outer_factor.unit.contains(p)) continue;
            Subset level;
            for (std::size_t q = p; q < n_outer; ++q) {
                if (!done[q] && outer_factor.unit.contains(q) && inner[q] == inner[p]) {
                    level.bits |= Mask(1) << q;
                    done[q] = 1;
                }
            }
            if (!outer_factor.algebra.contains(level)) {
                throw Error("inner-integral map is not measurable in the factor");
            }
            total = G::add(total, G::scalar(outer_factor.mu.value(level), inner[p]));
        }
        return total;
    };

    const auto left_first = iterate(Side::left);
    const auto right_first = iterate(Side::right);
    report.add("fubini.three-way",
               direct == left_first && direct == right_first,
               "direct = " + G::str(direct) + ", left-first = " + G::str(left_first)
                   + ", right-first = " + G::str(right_first));
    return report;
}

// --- Measurability of point maps between finite systems --------------------

/// Preimage test: the map (given pointwise) pulls every member of cy back
/// into cx.
bool preimage_measurable(const SetSystem& cx, const SetSystem& cy,
                         const std::vector<std::size_t>& point_map);

/// Level-set criterion for maps with finite range: all fibers measurable.
bool level_sets_measurable(const SetSystem& cx, const std::vector<std::size_t>& point_map,
                           std::size_t range_size);

/// Exhaustive closure checks on a finite space: identity and constant maps,
/// agreement of the preimage test with the level-set criterion against the
/// full power set of the target, and closure of measurable maps under
/// composition. Randomized maps, deterministic seed.
Report measurability_closure_checks(const SetSystem& cx, unsigned seed, int samples = 50);

// --- Bundled sequence families ---------------------------------------------

/// f_n = indicator of [0, 2^-n) converging to 0; the classic shrinking tail.
SequenceFamily<IntervalSpace, RatScalar> dyadic_indicator_family();

/// f_n = indicator of [2^-n, 1) increasing to the constant 1 (the limit is
/// declared on [0,1); the pointwise exception at 0 has measure zero).
SequenceFamily<IntervalSpace, RatScalar> staircase_family();

/// f_n = f for n >= n0, f_1 = other before that.
template <class Space, class G>
SequenceFamily<Space, G> eventually_constant_family(const Space& space,
                                                    SimpleMap<Space, G> before,
                                                    SimpleMap<Space, G> after, int n0) {
    SequenceFamily<Space, G> fam;
    fam.domain = space.whole();
    fam.limit = after;
    fam.at = [before, after, n0](int n) { return n >= n0 ? after : before; };
    const Rat dev = [&] {
        Rat d = 0;
        for (const auto& pa : before.pieces)
            for (const auto& pb : after.pieces)
                if (!Space::is_empty(Space::intersect(pa.set, pb.set)))
                    d = std::max(d, G::norm(G::add(pa.value, G::neg(pb.value))));
        return d;
    }();
    auto whole = space.whole();
    fam.tail_below = [whole, before, after, n0, dev](int n, const Rat& eps) ->
        typename Space::Set {
        if (n >= n0 || dev < eps) return whole;
        // before stage: keep the points where the two maps already agree within eps
        typename Space::Set good{};
        for (const auto& pa : before.pieces) {
            for (const auto& pb : after.pieces) {
                auto cell = Space::intersect(pa.set, pb.set);
                if (Space::is_empty(cell)) continue;
                if (G::norm(G::add(pa.value, G::neg(pb.value))) < eps)
                    good = Space::unite(good, cell);
            }
        }
        return good;
    };
    return fam;
}

/// Scalar maps on a finite space whose value at each atom decays
/// geometrically: f_n(atom k) = coef[k] * rate[k]^n.
SequenceFamily<FiniteSpace, RatScalar> geometric_rates_family(const FiniteSpace& space,
                                                              std::vector<Rat> coef,
                                                              std::vector<Rat> rate);

} // namespace mtk
