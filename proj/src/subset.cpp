#include "mtk/subset.hpp"

#include "mtk/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace mtk {

Carrier::Carrier(std::vector<std::string> points) : points_(std::move(points)) {
    if (points_.size() > max_points) {
        throw Error("carrier too large: " + std::to_string(points_.size())
                    + " points (limit " + std::to_string(max_points) + ")");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& p : points_) {
        if (p.empty()) {
            throw Error("empty point name in carrier");
        }
        if (!seen.insert(p).second) {
            throw Error("duplicate point name in carrier: '" + p + "'");
        }
    }
}

std::size_t Carrier::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i] == name) return i;
    }
    throw Error("point '" + std::string(name) + "' not in carrier");
}

std::string subset_str(const Carrier& carrier, Subset s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        if (!s.contains(i)) continue;
        if (!first) out += ",";
        out += carrier.point(i);
        first = false;
    }
    out += "}";
    return out;
}

Subset parse_subset(const Carrier& carrier, std::string_view text) {
    if (!text.empty() && text.front() == '{' && text.back() == '}') {
        text = text.substr(1, text.size() - 2);
    }
    Subset s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view name = text.substr(pos, comma - pos);
        if (!name.empty()) {
            s.bits |= Mask(1) << carrier.index_of(name);
        }
        pos = comma + 1;
    }
    return s;
}

Subset subset_of_points(const Carrier& carrier, const std::vector<std::string>& names) {
    Subset s;
    for (const auto& n : names) {
        s.bits |= Mask(1) << carrier.index_of(n);
    }
    return s;
}

} // namespace mtk
