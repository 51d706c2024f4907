#pragma once

#include "mtk/subset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mtk {

enum class SystemClass { none, semiring, ring, algebra, sigma_algebra };

std::string to_string(SystemClass c);

/// Names the axiom that failed and the sets it failed on.
struct AxiomFailure {
    std::string axiom;
    std::vector<Subset> offenders;
};

struct Classification {
    SystemClass strongest = SystemClass::none;
    /// Why the system is not of the next stronger class. Empty for
    /// sigma_algebra (nothing above it). On finite carriers sigma-closure
    /// collapses to finite closure, so algebra implies sigma_algebra and
    /// the classifier never answers "algebra".
    std::optional<AxiomFailure> blocker;
};

/// A finite system of subsets of a common carrier. Members are kept
/// deduplicated and sorted in tie-break order.
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(Carrier carrier, std::vector<Subset> members,
              std::optional<SystemClass> kind_cache = std::nullopt);

    const Carrier& carrier() const { return carrier_; }
    const std::vector<Subset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(Subset s) const;
    Subset union_of_members() const;
    const std::optional<SystemClass>& kind_cache() const { return kind_cache_; }

    bool operator==(const SetSystem& other) const {
        return carrier_ == other.carrier_ && members_ == other.members_;
    }

private:
    Carrier carrier_;
    std::vector<Subset> members_;
    std::optional<SystemClass> kind_cache_;
};

/// An ordered disjoint decomposition whole = pieces[0] + ... + pieces[n-1].
/// The first prefix_len pieces were supplied by the caller and are kept
/// verbatim; the rest were found by the expansion search.
struct Expansion {
    Subset whole;
    std::vector<Subset> pieces;
    std::size_t prefix_len = 0;

    Subset union_of_pieces() const;
    bool pieces_disjoint() const;
};

/// Strongest class the system satisfies, with a witness for the axiom that
/// blocks the next stronger class. Throws Error("empty system") when there
/// are no members.
Classification classify(const SetSystem& system);

/// Convenience: true when the system satisfies at least the semiring axioms.
bool is_semiring(const SetSystem& system);

/// whole = part + rest with every piece a member, rest chosen
/// deterministically (tie-break order, lexicographically smallest).
/// Throws when part is not a subset of whole or either set is not a member;
/// throws "not a semiring" when no expansion exists.
Expansion subtract_expansion(const SetSystem& system, Subset whole, Subset part);

/// Extends the given pairwise disjoint members to a full expansion of
/// whole, keeping the given pieces as a verbatim prefix. Implements the
/// intersect-then-expand induction over the given list.
Expansion complete_expansion(const SetSystem& system, Subset whole,
                             const std::vector<Subset>& given);

struct CommonRefinement {
    std::vector<Subset> pieces;                       // pairwise disjoint, all members
    std::vector<std::vector<std::size_t>> membership; // sets[i] = union of pieces[j], j in membership[i]
};

/// Disjoint refinement of a finite family of members: every input set is an
/// exact union of refinement pieces.
CommonRefinement common_refinement(const SetSystem& system, const std::vector<Subset>& sets);

struct GeneratedRing {
    SetSystem ring;
    /// Per ring member, one witnessing expansion into semiring members.
    std::map<Mask, Expansion> witness;
};

/// All finite disjoint unions of semiring members, each with an expansion
/// witness. Throws when the input is not a semiring.
GeneratedRing generate_ring_from_semiring(const SetSystem& semiring);

/// Minimal ring containing the system: closure under pairwise intersection
/// and symmetric difference (union and difference are then derivable).
SetSystem generate_ring(const SetSystem& system);

/// Minimal algebra containing the system: the ring generated by the system
/// together with its total union, which becomes the unit.
SetSystem generate_algebra(const SetSystem& system);

/// A'n = An \ (A1 + ... + A(n-1)). Preserves the union, output pairwise
/// disjoint, A'n a subset of An. Keeps list length (empty pieces stay).
std::vector<Subset> disjointify(const std::vector<Subset>& sets);

/// Lexicographically smallest (tie-break order) list of pairwise disjoint
/// nonempty members whose union is exactly region; nullopt when none exists.
/// With largest_first=true the search direction is reversed, which yields an
/// independently chosen expansion whenever more than one exists.
std::optional<std::vector<Subset>> exact_cover(const SetSystem& system, Subset region,
                                               bool largest_first = false);

/// All exact disjoint covers of region by nonempty members (each sorted in
/// tie-break order). Intended for oracle-style exhaustive checks on small
/// carriers.
std::vector<std::vector<Subset>> all_exact_covers(const SetSystem& system, Subset region,
                                                  std::size_t limit = 1u << 20);

} // namespace mtk
