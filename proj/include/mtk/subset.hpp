#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtk {

using Mask = std::uint32_t;

/// Finite universe of named points. The order of the points is fixed at
/// construction and defines the bit positions of every Subset over it.
class Carrier {
public:
    static constexpr std::size_t max_points = 16;

    Carrier() = default;
    explicit Carrier(std::vector<std::string> points);

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& point(std::size_t i) const { return points_[i]; }
    std::size_t index_of(std::string_view name) const; // throws Error if absent
    Mask full_mask() const { return points_.empty() ? 0u : (Mask(1) << points_.size()) - 1u; }

    bool operator==(const Carrier&) const = default;

private:
    std::vector<std::string> points_;
};

/// A subset of a Carrier as a bitmask. Value type, cheap to copy.
struct Subset {
    Mask bits = 0;

    constexpr Subset() = default;
    constexpr explicit Subset(Mask m) : bits(m) {}

    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool contains(std::size_t point) const { return (bits >> point) & 1u; }
    constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }

    friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits & b.bits); }
    friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits | b.bits); }
    friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits ^ b.bits); }
    /// Set difference a \ b.
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits & ~b.bits); }

    constexpr auto operator<=>(const Subset&) const = default;
};

constexpr bool disjoint(Subset a, Subset b) { return (a.bits & b.bits) == 0; }

/// The canonical order used everywhere pieces have to be chosen
/// deterministically: cardinality first, then bitmask value.
constexpr bool tie_break_less(Subset a, Subset b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
}

/// "{a,c}" in carrier point order; "{}" for the empty set.
std::string subset_str(const Carrier& carrier, Subset s);

/// Parses a comma separated list of point names ("a,c"); "" and "{}" denote
/// the empty set. Braces are optional.
Subset parse_subset(const Carrier& carrier, std::string_view text);

Subset subset_of_points(const Carrier& carrier, const std::vector<std::string>& names);

} // namespace mtk
