#ifndef SPARSEZEROS_RATIONAL_HPP
#define SPARSEZEROS_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "sparsezeros/errors.hpp"

namespace sparsezeros {

/// Exact rational with 64-bit numerator/denominator.  Valuations, Newton
/// polygon slopes and disk radii are always stored this way; the library
/// never touches floating point.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1; // > 0, gcd(num, den) = 1

    constexpr Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num == 0) throw domain_error("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    friend Rat operator-(Rat a) { return Rat(-a.num, a.den); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace sparsezeros

#endif
