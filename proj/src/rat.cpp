#include "mtk/rat.hpp"

#include "mtk/error.hpp"

namespace mtk {

std::string rat_str(const Rat& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rat parse_rat(std::string_view text) {
    if (text.empty()) {
        throw Error("empty rational literal");
    }
    const auto slash = text.find('/');
    const auto check_int = [](std::string_view part) {
        if (part.empty()) {
            throw Error("malformed rational literal");
        }
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) {
            throw Error("malformed rational literal");
        }
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw Error("malformed rational literal: '" + std::string(part)
                            + "' (only integers and n/d are accepted)");
            }
        }
    };
    if (slash == std::string_view::npos) {
        check_int(text);
        return Rat(BigInt(std::string(text)));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    const BigInt d{std::string(den)};
    if (d == 0) {
        throw Error("zero denominator in rational literal");
    }
    return Rat(BigInt(std::string(num)), d);
}

Rat dyadic(unsigned n) {
    BigInt den = 1;
    den <<= n;
    return Rat(1, den);
}

} // namespace mtk
