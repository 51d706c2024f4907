#include "mtk/set_system.hpp"

#include "mtk/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace mtk {

std::string to_string(SystemClass c) {
    switch (c) {
        case SystemClass::none: return "none";
        case SystemClass::semiring: return "semiring";
        case SystemClass::ring: return "ring";
        case SystemClass::algebra: return "algebra";
        case SystemClass::sigma_algebra: return "sigma_algebra";
    }
    return "?";
}

SetSystem::SetSystem(Carrier carrier, std::vector<Subset> members,
                     std::optional<SystemClass> kind_cache)
    : carrier_(std::move(carrier)), members_(std::move(members)), kind_cache_(kind_cache) {
    const Mask full = carrier_.full_mask();
    for (Subset s : members_) {
        if ((s.bits & ~full) != 0) {
            throw Error("member outside carrier");
        }
    }
    std::sort(members_.begin(), members_.end(), tie_break_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetSystem::contains(Subset s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s, tie_break_less);
    return it != members_.end() && *it == s;
}

Subset SetSystem::union_of_members() const {
    Subset u;
    for (Subset s : members_) u = u | s;
    return u;
}

Subset Expansion::union_of_pieces() const {
    Subset u;
    for (Subset p : pieces) u = u | p;
    return u;
}

bool Expansion::pieces_disjoint() const {
    Subset seen;
    for (Subset p : pieces) {
        if (!disjoint(seen, p)) return false;
        seen = seen | p;
    }
    return true;
}

namespace {

// Depth-first exact-cover search over members sorted in tie-break order.
// Pieces are emitted strictly increasing, so the first solution found is the
// lexicographically smallest one (or largest when the direction is flipped).
struct CoverSearch {
    const std::vector<Subset>& members; // sorted by tie_break_less
    bool largest_first;
    std::unordered_set<std::uint64_t> dead; // (region, next index) states with no solution

    bool run(Subset region, std::size_t next, std::vector<Subset>& out) {
        if (region.empty()) return true;
        const std::uint64_t key = (std::uint64_t(region.bits) << 16) | next;
        if (dead.count(key)) return false;
        for (std::size_t i = next; i < members.size(); ++i) {
            const Subset cand = pick(i);
            if (cand.empty() || !cand.subset_of(region)) continue;
            out.push_back(cand);
            if (run(region - cand, i + 1, out)) return true;
            out.pop_back();
        }
        dead.insert(key);
        return false;
    }

    Subset pick(std::size_t i) const {
        return largest_first ? members[members.size() - 1 - i] : members[i];
    }
};

} // namespace

std::optional<std::vector<Subset>> exact_cover(const SetSystem& system, Subset region,
                                               bool largest_first) {
    CoverSearch search{system.members(), largest_first, {}};
    std::vector<Subset> out;
    if (!search.run(region, 0, out)) return std::nullopt;
    return out;
}

std::vector<std::vector<Subset>> all_exact_covers(const SetSystem& system, Subset region,
                                                  std::size_t limit) {
    std::vector<std::vector<Subset>> found;
    std::vector<Subset> cur;
    const auto& members = system.members();

    auto rec = [&](auto&& self, Subset rest, std::size_t next) -> void {
        if (found.size() >= limit) return;
        if (rest.empty()) {
            found.push_back(cur);
            return;
        }
        for (std::size_t i = next; i < members.size(); ++i) {
            if (members[i].empty() || !members[i].subset_of(rest)) continue;
            cur.push_back(members[i]);
            self(self, rest - members[i], i + 1);
            cur.pop_back();
        }
    };
    rec(rec, region, 0);
    return found;
}

namespace {

bool check_semiring(const SetSystem& sys, std::optional<AxiomFailure>& why_not) {
    const Subset empty_set;
    if (!sys.contains(empty_set)) {
        why_not = AxiomFailure{"empty set is not a member", {}};
        return false;
    }
    const auto& m = sys.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i; j < m.size(); ++j) {
            if (!sys.contains(m[i] & m[j])) {
                why_not = AxiomFailure{"intersection not a member", {m[i], m[j]}};
                return false;
            }
        }
    }
    // Expansion axiom: every member contained in another member starts a
    // finite disjoint expansion of it.
    for (Subset whole : m) {
        for (Subset part : m) {
            if (!part.subset_of(whole) || part == whole) continue;
            if (!exact_cover(sys, whole - part)) {
                why_not = AxiomFailure{"no finite expansion", {whole, part}};
                return false;
            }
        }
    }
    return true;
}

bool check_ring(const SetSystem& sys, std::optional<AxiomFailure>& why_not) {
    if (!sys.contains(Subset{})) {
        why_not = AxiomFailure{"empty set is not a member", {}};
        return false;
    }
    const auto& m = sys.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i; j < m.size(); ++j) {
            if (!sys.contains(m[i] & m[j])) {
                why_not = AxiomFailure{"intersection not a member", {m[i], m[j]}};
                return false;
            }
            if (!sys.contains(m[i] ^ m[j])) {
                why_not = AxiomFailure{"symmetric difference not a member", {m[i], m[j]}};
                return false;
            }
        }
    }
    return true;
}

bool check_unit(const SetSystem& sys, std::optional<AxiomFailure>& why_not) {
    const Subset unit = sys.union_of_members();
    if (!sys.contains(unit)) {
        why_not = AxiomFailure{"union of members is not a member (no unit)", {unit}};
        return false;
    }
    return true;
}

} // namespace

Classification classify(const SetSystem& system) {
    if (system.size() == 0) {
        throw Error("empty system");
    }
    Classification result;
    std::optional<AxiomFailure> ring_fail, unit_fail, semiring_fail;
    const bool ring_ok = check_ring(system, ring_fail);
    if (ring_ok) {
        if (check_unit(system, unit_fail)) {
            // Finite carrier: countable unions of members collapse to finite
            // unions, so every algebra is already a sigma-algebra.
            result.strongest = SystemClass::sigma_algebra;
        } else {
            result.strongest = SystemClass::ring;
            result.blocker = unit_fail;
        }
        return result;
    }
    if (check_semiring(system, semiring_fail)) {
        result.strongest = SystemClass::semiring;
        result.blocker = ring_fail;
        return result;
    }
    result.strongest = SystemClass::none;
    result.blocker = semiring_fail;
    return result;
}

bool is_semiring(const SetSystem& system) {
    std::optional<AxiomFailure> ignored;
    return system.size() > 0 && check_semiring(system, ignored);
}

Expansion subtract_expansion(const SetSystem& system, Subset whole, Subset part) {
    if (!system.contains(whole) || !system.contains(part)) {
        throw Error("expansion endpoints must be members of the system");
    }
    if (!part.subset_of(whole)) {
        throw Error("part is not a subset of whole");
    }
    Expansion e{whole, {part}, 1};
    const Subset rest = whole - part;
    if (rest.empty()) {
        return e; // includes whole == part == {} with pieces [{}]
    }
    auto cover = exact_cover(system, rest);
    if (!cover) {
        throw Error("not a semiring: no expansion of " + subset_str(system.carrier(), whole)
                    + " starting at " + subset_str(system.carrier(), part));
    }
    e.pieces.insert(e.pieces.end(), cover->begin(), cover->end());
    return e;
}

Expansion complete_expansion(const SetSystem& system, Subset whole,
                             const std::vector<Subset>& given) {
    if (!system.contains(whole)) {
        throw Error("whole must be a member of the system");
    }
    Subset seen;
    for (Subset g : given) {
        if (!system.contains(g)) throw Error("given piece is not a member of the system");
        if (!g.subset_of(whole)) throw Error("given piece is not a subset of whole");
        if (!disjoint(seen, g)) throw Error("given pieces overlap");
        seen = seen | g;
    }
    if (given.empty()) {
        return Expansion{whole, {whole}, 0};
    }

    // Induction over the given pieces: start from the expansion around the
    // first piece, then for each further piece g intersect it with every
    // pending tail piece and re-expand the split tails.
    Expansion base = subtract_expansion(system, whole, given[0]);
    std::vector<Subset> tail(base.pieces.begin() + 1, base.pieces.end());
    for (std::size_t k = 1; k < given.size(); ++k) {
        const Subset g = given[k];
        std::vector<Subset> next_tail;
        for (Subset b : tail) {
            const Subset inner = g & b;
            if (inner.empty()) {
                next_tail.push_back(b);
            } else if (inner == b) {
                // b is absorbed into g
            } else {
                Expansion split = subtract_expansion(system, b, inner);
                next_tail.insert(next_tail.end(), split.pieces.begin() + 1, split.pieces.end());
            }
        }
        tail = std::move(next_tail);
    }
    std::sort(tail.begin(), tail.end(), tie_break_less);

    Expansion out{whole, given, given.size()};
    out.pieces.insert(out.pieces.end(), tail.begin(), tail.end());
    return out;
}

CommonRefinement common_refinement(const SetSystem& system, const std::vector<Subset>& sets) {
    for (Subset s : sets) {
        if (!system.contains(s)) throw Error("input set is not a member of the system");
    }
    CommonRefinement result;
    std::vector<std::vector<std::size_t>> owners; // per piece: indices of inputs containing it

    for (std::size_t k = 0; k < sets.size(); ++k) {
        const Subset a = sets[k];
        std::vector<Subset> pieces;
        std::vector<std::vector<std::size_t>> new_owners;
        std::vector<Subset> inner_parts; // pieces of a already carved out
        for (std::size_t p = 0; p < result.pieces.size(); ++p) {
            const Subset b = result.pieces[p];
            const Subset inner = a & b;
            if (inner.empty()) {
                pieces.push_back(b);
                new_owners.push_back(owners[p]);
            } else if (inner == b) {
                pieces.push_back(b);
                auto own = owners[p];
                own.push_back(k);
                new_owners.push_back(own);
                inner_parts.push_back(b);
            } else {
                Expansion split = subtract_expansion(system, b, inner);
                pieces.push_back(inner);
                auto own = owners[p];
                own.push_back(k);
                new_owners.push_back(own);
                inner_parts.push_back(inner);
                for (std::size_t i = 1; i < split.pieces.size(); ++i) {
                    pieces.push_back(split.pieces[i]);
                    new_owners.push_back(owners[p]);
                }
            }
        }
        // Part of a outside all existing pieces, via the completion lemma.
        if (!a.empty()) {
            Expansion comp = complete_expansion(system, a, inner_parts);
            for (std::size_t i = comp.prefix_len; i < comp.pieces.size(); ++i) {
                pieces.push_back(comp.pieces[i]);
                new_owners.push_back({k});
            }
        }
        result.pieces = std::move(pieces);
        owners = std::move(new_owners);
    }

    // Canonical order with membership remap.
    std::vector<std::size_t> order(result.pieces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return tie_break_less(result.pieces[a], result.pieces[b]);
    });
    std::vector<Subset> sorted;
    std::vector<std::vector<std::size_t>> sorted_owners;
    sorted.reserve(order.size());
    for (std::size_t i : order) {
        sorted.push_back(result.pieces[i]);
        sorted_owners.push_back(owners[i]);
    }
    result.pieces = std::move(sorted);
    result.membership.assign(sets.size(), {});
    for (std::size_t p = 0; p < result.pieces.size(); ++p) {
        for (std::size_t k : sorted_owners[p]) {
            result.membership[k].push_back(p);
        }
    }
    return result;
}

GeneratedRing generate_ring_from_semiring(const SetSystem& semiring) {
    if (!is_semiring(semiring)) {
        throw Error("not a semiring");
    }
    const std::size_t n = semiring.carrier().size();
    const std::size_t total = std::size_t(1) << n;
    std::vector<char> reachable(total, 0);
    reachable[0] = 1;

    // Masks ordered by popcount so every disjoint union is seen after its parts.
    std::vector<Mask> order(total);
    for (std::size_t m = 0; m < total; ++m) order[m] = Mask(m);
    std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        return ca != cb ? ca < cb : a < b;
    });
    for (Mask m : order) {
        if (m == 0 || reachable[m]) continue;
        for (Subset p : semiring.members()) {
            if (!p.empty() && p.subset_of(Subset{m}) && reachable[m & ~p.bits]) {
                reachable[m] = 1;
                break;
            }
        }
    }

    std::vector<Subset> members;
    for (std::size_t m = 0; m < total; ++m) {
        if (reachable[m]) members.push_back(Subset{Mask(m)});
    }
    GeneratedRing out{SetSystem(semiring.carrier(), members, SystemClass::ring), {}};
    for (Subset s : out.ring.members()) {
        if (s.empty()) {
            out.witness.emplace(s.bits, Expansion{s, {Subset{}}, 0});
            continue;
        }
        auto cover = exact_cover(semiring, s);
        // reachable[] and the cover search agree by construction
        out.witness.emplace(s.bits, Expansion{s, *cover, 0});
    }
    return out;
}

SetSystem generate_ring(const SetSystem& system) {
    if (system.size() == 0) {
        throw Error("empty system");
    }
    std::unordered_set<Mask> seen;
    std::vector<Subset> work(system.members());
    for (Subset s : work) seen.insert(s.bits);

    // Fixpoint closure under pairwise intersection and symmetric difference.
    std::vector<Subset> frontier = work;
    while (!frontier.empty()) {
        std::vector<Subset> next;
        for (Subset a : frontier) {
            for (Subset b : work) {
                for (Subset c : {a & b, a ^ b}) {
                    if (seen.insert(c.bits).second) next.push_back(c);
                }
            }
            // pairs within the frontier itself
            for (Subset b : frontier) {
                for (Subset c : {a & b, a ^ b}) {
                    if (seen.insert(c.bits).second) next.push_back(c);
                }
            }
        }
        work.insert(work.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return SetSystem(system.carrier(), work, SystemClass::ring);
}

SetSystem generate_algebra(const SetSystem& system) {
    if (system.size() == 0) {
        throw Error("empty system");
    }
    std::vector<Subset> seeded(system.members());
    seeded.push_back(system.union_of_members());
    SetSystem ring = generate_ring(SetSystem(system.carrier(), seeded));
    return SetSystem(ring.carrier(), ring.members(), SystemClass::algebra);
}

std::vector<Subset> disjointify(const std::vector<Subset>& sets) {
    std::vector<Subset> out;
    out.reserve(sets.size());
    Subset seen;
    for (Subset s : sets) {
        out.push_back(s - seen);
        seen = seen | s;
    }
    return out;
}

} // namespace mtk
