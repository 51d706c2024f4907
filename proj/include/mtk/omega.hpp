#pragma once

#include "mtk/rat.hpp"
#include "mtk/report.hpp"

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace mtk {

/// A named n-ary operation of an Omega-group together with its declared norm
/// constant: norm(omega(a1..an)) <= norm_bound * norm(a1) * ... * norm(an).
/// The bound is declared per instance and verified by the law suite, not
/// inferred.
template <class Value>
struct OmegaOp {
    std::string name;
    int arity;
    Rat norm_bound;
    std::function<Value(const std::vector<Value>&)> eval;
};

/// The rationals with multiplication as the extra operation; norm is the
/// absolute value, scalar action is plain multiplication.
struct RatScalar {
    using Value = Rat;
    static std::string name() { return "ratscalar"; }
    static Value zero() { return 0; }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value neg(const Value& a) { return -a; }
    static Rat norm(const Value& a) { return rat_abs(a); }
    static Value scalar(const Rat& q, const Value& a) { return q * a; }
    static std::string str(const Value& a) { return rat_str(a); }
    static const std::vector<OmegaOp<Value>>& ops();
    static Value random(std::mt19937_64& rng);
};

/// Rational triples with componentwise sum and product; norm is max-abs.
struct RatVec3 {
    using Value = std::array<Rat, 3>;
    static std::string name() { return "ratvec3"; }
    static Value zero() { return {Rat(0), Rat(0), Rat(0)}; }
    static Value add(const Value& a, const Value& b);
    static Value neg(const Value& a);
    static Rat norm(const Value& a);
    static Value scalar(const Rat& q, const Value& a);
    static std::string str(const Value& a);
    static const std::vector<OmegaOp<Value>>& ops();
    static Value random(std::mt19937_64& rng);
};

/// 2x2 rational matrices with matrix product; norm is max-abs-entry, whose
/// product bound constant is 2 (and 2 is tight).
struct RatMat2 {
    using Value = std::array<Rat, 4>; // row major
    static std::string name() { return "ratmat2"; }
    static Value zero() { return {Rat(0), Rat(0), Rat(0), Rat(0)}; }
    static Value add(const Value& a, const Value& b);
    static Value neg(const Value& a);
    static Rat norm(const Value& a);
    static Value scalar(const Rat& q, const Value& a);
    static std::string str(const Value& a);
    static const std::vector<OmegaOp<Value>>& ops();
    static Value random(std::mt19937_64& rng);
};

Rat random_small_rat(std::mt19937_64& rng);

/// Executes the whole contract on randomized samples: Abelian group laws,
/// norm laws, the declared bound of every operation, and the scalar action
/// laws. Failures carry the witnessing values.
template <class G>
Report law_suite(int samples, unsigned seed) {
    Report report{std::string("laws.") + G::name()};
    std::mt19937_64 rng(seed);
    using V = typename G::Value;

    bool group_ok = true, norm_ok = true, op_ok = true, scalar_ok = true;
    std::string group_why, norm_why, op_why, scalar_why;
    auto fail = [](bool& ok, std::string& why, const std::string& detail) {
        if (ok) why = detail;
        ok = false;
    };

    for (int s = 0; s < samples; ++s) {
        const V a = G::random(rng);
        const V b = G::random(rng);
        const V c = G::random(rng);
        const Rat p = random_small_rat(rng);
        const Rat q = random_small_rat(rng);

        if (G::add(a, b) != G::add(b, a))
            fail(group_ok, group_why, "commutativity: a=" + G::str(a) + " b=" + G::str(b));
        if (G::add(G::add(a, b), c) != G::add(a, G::add(b, c)))
            fail(group_ok, group_why, "associativity: a=" + G::str(a));
        if (G::add(a, G::zero()) != a)
            fail(group_ok, group_why, "identity: a=" + G::str(a));
        if (G::add(a, G::neg(a)) != G::zero())
            fail(group_ok, group_why, "inverse: a=" + G::str(a));

        if (G::norm(a) < 0) fail(norm_ok, norm_why, "norm < 0 at " + G::str(a));
        if ((G::norm(a) == 0) != (a == G::zero()))
            fail(norm_ok, norm_why, "norm zero iff zero at " + G::str(a));
        if (G::norm(G::add(a, b)) > G::norm(a) + G::norm(b))
            fail(norm_ok, norm_why, "triangle: a=" + G::str(a) + " b=" + G::str(b));
        if (G::norm(G::neg(a)) != G::norm(a))
            fail(norm_ok, norm_why, "norm(neg a) != norm(a) at " + G::str(a));

        for (const auto& op : G::ops()) {
            std::vector<V> args;
            Rat bound = op.norm_bound;
            for (int i = 0; i < op.arity; ++i) {
                args.push_back(G::random(rng));
                bound *= G::norm(args.back());
            }
            if (G::norm(op.eval(args)) > bound)
                fail(op_ok, op_why,
                     op.name + " bound violated at " + G::str(args[0]));
        }

        if (G::scalar(q, G::add(a, b)) != G::add(G::scalar(q, a), G::scalar(q, b)))
            fail(scalar_ok, scalar_why, "scalar over add: q=" + rat_str(q));
        if (G::scalar(p + q, a) != G::add(G::scalar(p, a), G::scalar(q, a)))
            fail(scalar_ok, scalar_why, "add over scalar: p=" + rat_str(p));
        if (G::scalar(Rat(1), a) != a)
            fail(scalar_ok, scalar_why, "unit scalar at " + G::str(a));
        if (G::scalar(p * q, a) != G::scalar(p, G::scalar(q, a)))
            fail(scalar_ok, scalar_why, "scalar composition: p=" + rat_str(p));
        if (G::norm(G::scalar(q, a)) != rat_abs(q) * G::norm(a))
            fail(scalar_ok, scalar_why, "norm homogeneity: q=" + rat_str(q));
    }

    report.add("omega.abelian-group", group_ok, group_why);
    report.add("omega.norm", norm_ok, norm_why);
    report.add("omega.operation-bound", op_ok, op_why);
    report.add("omega.scalar-action", scalar_ok, scalar_why);
    return report;
}

} // namespace mtk
