#include "mtk/omega.hpp"

namespace mtk {

Rat random_small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rat(num(rng), den(rng));
}

const std::vector<OmegaOp<RatScalar::Value>>& RatScalar::ops() {
    static const std::vector<OmegaOp<Value>> table{
        {"mul", 2, Rat(1),
         [](const std::vector<Value>& a) { return a[0] * a[1]; }},
    };
    return table;
}

RatScalar::Value RatScalar::random(std::mt19937_64& rng) { return random_small_rat(rng); }

RatVec3::Value RatVec3::add(const Value& a, const Value& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

RatVec3::Value RatVec3::neg(const Value& a) { return {-a[0], -a[1], -a[2]}; }

Rat RatVec3::norm(const Value& a) {
    Rat n = rat_abs(a[0]);
    n = std::max(n, rat_abs(a[1]));
    n = std::max(n, rat_abs(a[2]));
    return n;
}

RatVec3::Value RatVec3::scalar(const Rat& q, const Value& a) {
    return {q * a[0], q * a[1], q * a[2]};
}

std::string RatVec3::str(const Value& a) {
    return "(" + rat_str(a[0]) + "," + rat_str(a[1]) + "," + rat_str(a[2]) + ")";
}

const std::vector<OmegaOp<RatVec3::Value>>& RatVec3::ops() {
    static const std::vector<OmegaOp<Value>> table{
        {"hadamard", 2, Rat(1),
         [](const std::vector<Value>& a) {
             return Value{a[0][0] * a[1][0], a[0][1] * a[1][1], a[0][2] * a[1][2]};
         }},
    };
    return table;
}

RatVec3::Value RatVec3::random(std::mt19937_64& rng) {
    return {random_small_rat(rng), random_small_rat(rng), random_small_rat(rng)};
}

RatMat2::Value RatMat2::add(const Value& a, const Value& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

RatMat2::Value RatMat2::neg(const Value& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

Rat RatMat2::norm(const Value& a) {
    Rat n = rat_abs(a[0]);
    n = std::max(n, rat_abs(a[1]));
    n = std::max(n, rat_abs(a[2]));
    n = std::max(n, rat_abs(a[3]));
    return n;
}

RatMat2::Value RatMat2::scalar(const Rat& q, const Value& a) {
    return {q * a[0], q * a[1], q * a[2], q * a[3]};
}

std::string RatMat2::str(const Value& a) {
    return "[" + rat_str(a[0]) + "," + rat_str(a[1]) + ";" + rat_str(a[2]) + ","
         + rat_str(a[3]) + "]";
}

const std::vector<OmegaOp<RatMat2::Value>>& RatMat2::ops() {
    static const std::vector<OmegaOp<Value>> table{
        {"matmul", 2, Rat(2),
         [](const std::vector<Value>& m) {
             const Value& a = m[0];
             const Value& b = m[1];
             return Value{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
         }},
    };
    return table;
}

RatMat2::Value RatMat2::random(std::mt19937_64& rng) {
    return {random_small_rat(rng), random_small_rat(rng), random_small_rat(rng),
            random_small_rat(rng)};
}

} // namespace mtk
