#include "rkts/numeric.hpp"

#include <charconv>
#include <cmath>

namespace rkts {

double rational_to_double(const BigRational& r) {
    return r.convert_to<double>();
}

std::string rational_to_string(const BigRational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string inexact_to_string(double d) {
    if (std::isnan(d)) return "+nan.0";
    if (std::isinf(d)) return d > 0 ? "+inf.0" : "-inf.0";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
    std::string s(buf, end);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

std::optional<BigRational> exact_sqrt(const BigRational& r) {
    if (r < 0) return std::nullopt;
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    // num/den is in lowest terms, so both parts must be perfect squares.
    BigInt sn = sqrt(num);
    BigInt sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return BigRational(sn, sd);
}

}  // namespace rkts
