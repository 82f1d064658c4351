#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "ayb/errors.hpp"

namespace ayb {

// Arbitrary-precision integers and normalized rationals (gcd-reduced,
// positive denominator). cpp_rational maintains both invariants.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

std::string render(const Rational& r);

// Gaussian rational a + b*i. The coefficient field for everything symbolic.
struct GaussScalar {
    Rational re;
    Rational im;

    GaussScalar() = default;
    GaussScalar(Rational r) : re(std::move(r)) {}
    GaussScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussScalar(long long n) : re(n) {}

    static GaussScalar zero() { return GaussScalar(); }
    static GaussScalar one() { return GaussScalar(Rational(1)); }
    static GaussScalar imag_unit() { return GaussScalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussScalar operator-() const { return {-re, -im}; }
    GaussScalar operator+(const GaussScalar& o) const { return {re + o.re, im + o.im}; }
    GaussScalar operator-(const GaussScalar& o) const { return {re - o.re, im - o.im}; }
    GaussScalar operator*(const GaussScalar& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussScalar& operator+=(const GaussScalar& o) { *this = *this + o; return *this; }
    GaussScalar& operator-=(const GaussScalar& o) { *this = *this - o; return *this; }
    GaussScalar& operator*=(const GaussScalar& o) { *this = *this * o; return *this; }

    GaussScalar inverse() const {
        Rational n = re * re + im * im;
        if (n == 0) throw DivisionByZero();
        return {re / n, -im / n};
    }
    GaussScalar operator/(const GaussScalar& o) const { return *this * o.inverse(); }

    bool operator==(const GaussScalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussScalar& o) const { return !(*this == o); }
};

// Deterministic total order, used only for canonical sorting of output.
int compare(const Rational& a, const Rational& b);
int compare(const GaussScalar& a, const GaussScalar& b);

std::string render(const GaussScalar& s);

// Prime-field element. The modulus rides along with the value so plain
// operator arithmetic works; mixing moduli is a programming error.
struct FFScalar {
    uint32_t value = 0;
    uint32_t p = 2;

    FFScalar() = default;
    FFScalar(uint32_t v, uint32_t prime) : value(v % prime), p(prime) {}

    bool is_zero() const { return value == 0; }
    bool is_one() const { return value == 1; }

    FFScalar operator-() const { return {(p - value) % p, p}; }
    FFScalar operator+(const FFScalar& o) const { check(o); return {(value + o.value) % p, p}; }
    FFScalar operator-(const FFScalar& o) const { check(o); return {(value + p - o.value) % p, p}; }
    FFScalar operator*(const FFScalar& o) const {
        check(o);
        return {static_cast<uint32_t>((uint64_t(value) * o.value) % p), p};
    }
    FFScalar& operator+=(const FFScalar& o) { *this = *this + o; return *this; }
    FFScalar& operator-=(const FFScalar& o) { *this = *this - o; return *this; }
    FFScalar& operator*=(const FFScalar& o) { *this = *this * o; return *this; }

    FFScalar inverse() const {
        if (value == 0) throw DivisionByZero();
        // p is tiny; scan beats carrying an extended-euclid around
        for (uint32_t x = 1; x < p; ++x)
            if ((uint64_t(value) * x) % p == 1) return {x, p};
        throw DivisionByZero("modulus is not prime");
    }
    FFScalar operator/(const FFScalar& o) const { return *this * o.inverse(); }

    bool operator==(const FFScalar& o) const { return value == o.value && p == o.p; }
    bool operator!=(const FFScalar& o) const { return !(*this == o); }

private:
    void check(const FFScalar& o) const {
        if (p != o.p) throw DimensionMismatch("mixed prime-field moduli");
    }
};

inline int compare(const FFScalar& a, const FFScalar& b) {
    return a.value < b.value ? -1 : a.value > b.value ? 1 : 0;
}

std::string render(const FFScalar& s);

// Reduce an exact rational mod p; the denominator must be a unit mod p and
// the imaginary part must vanish.
FFScalar to_ff(const GaussScalar& g, uint32_t p);

} // namespace ayb
