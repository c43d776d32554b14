#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zetalab {

// Exact rational arithmetic for the case dispatch in asym1d/verify.
// The theorem clauses are discontinuous in the parameters (is b/a an odd
// integer, is (A+1)/p an integer, p vs b/a-1), so comparisons must not go
// through floating point when the inputs are rational.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }
    bool is_odd_integer() const { return den == 1 && (num % 2 != 0) && (num % 2 != -0); }

    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
    friend bool operator>(Rational a, Rational b) { return b < a; }
    friend bool operator<=(Rational a, Rational b) { return !(b < a); }
    friend bool operator>=(Rational a, Rational b) { return !(a < b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "3/4", "2", "0.25" (decimals parse exactly via powers of ten).
    static Rational parse(const std::string& s);
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Rational{n, d};
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational{std::stoll(s), 1};
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("Rational::parse: too many decimal digits");
    bool neg = !whole.empty() && whole[0] == '-';
    long long w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    long long f = frac.empty() ? 0 : std::stoll(frac);
    long long scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    long long n = (neg ? -1 : 1) * ((neg ? -w : w) * scale + f);
    return Rational{n, scale};
}

} // namespace zetalab
