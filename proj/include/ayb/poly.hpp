#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ayb/errors.hpp"
#include "ayb/scalars.hpp"

namespace ayb {

// Power product of named indeterminates, stored sorted by name with all
// exponents >= 1. Self-contained so monomials from different expressions
// compare without a shared ring context.
struct Monomial {
    std::vector<std::pair<std::string, unsigned>> factors;

    static Monomial one() { return {}; }
    static Monomial var(const std::string& name, unsigned exp = 1) {
        Monomial m;
        if (exp > 0) m.factors.emplace_back(name, exp);
        return m;
    }

    bool is_one() const { return factors.empty(); }
    unsigned degree() const {
        unsigned d = 0;
        for (auto& [_, e] : factors) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = factors.begin(), b = o.factors.begin();
        while (a != factors.end() || b != o.factors.end()) {
            if (b == o.factors.end() || (a != factors.end() && a->first < b->first))
                r.factors.push_back(*a++);
            else if (a == factors.end() || b->first < a->first)
                r.factors.push_back(*b++);
            else {
                r.factors.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return factors == o.factors; }

    // Graded lexicographic by name: higher total degree first, ties broken by
    // the earlier name carrying the higher exponent.
    static int compare(const Monomial& a, const Monomial& b) {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        auto x = a.factors.begin(), y = b.factors.begin();
        while (x != a.factors.end() && y != b.factors.end()) {
            if (x->first != y->first) return x->first < y->first ? 1 : -1;
            if (x->second != y->second) return x->second > y->second ? 1 : -1;
            ++x, ++y;
        }
        return 0; // same degree and same factors
    }
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

// Multivariate polynomial over Gaussian rationals, terms kept in canonical
// descending graded-lex order with no zero coefficients, so equality is
// structural.
struct PolyScalar {
    std::vector<std::pair<Monomial, GaussScalar>> terms;

    PolyScalar() = default;
    explicit PolyScalar(const GaussScalar& c) {
        if (!c.is_zero()) terms.emplace_back(Monomial::one(), c);
    }
    explicit PolyScalar(long long n) : PolyScalar(GaussScalar(n)) {}

    static PolyScalar zero() { return PolyScalar(); }
    static PolyScalar one() { return PolyScalar(GaussScalar::one()); }
    static PolyScalar var(const std::string& name) {
        PolyScalar p;
        p.terms.emplace_back(Monomial::var(name), GaussScalar::one());
        return p;
    }
    static PolyScalar from_terms(std::map<Monomial, GaussScalar, MonomialGreater>&& acc) {
        PolyScalar p;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.terms.emplace_back(m, c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_one() const {
        return terms.size() == 1 && terms[0].first.is_one() && terms[0].second.is_one();
    }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms[0].first.is_one());
    }
    GaussScalar constant_value() const {
        return terms.empty() ? GaussScalar::zero() : terms[0].second;
    }
    unsigned degree() const { return terms.empty() ? 0 : terms[0].first.degree(); }

    PolyScalar operator-() const {
        PolyScalar r = *this;
        for (auto& [_, c] : r.terms) c = -c;
        return r;
    }

    PolyScalar operator+(const PolyScalar& o) const {
        std::map<Monomial, GaussScalar, MonomialGreater> acc;
        for (auto& [m, c] : terms) acc[m] += c;
        for (auto& [m, c] : o.terms) acc[m] += c;
        return from_terms(std::move(acc));
    }
    PolyScalar operator-(const PolyScalar& o) const { return *this + (-o); }

    PolyScalar operator*(const PolyScalar& o) const {
        std::map<Monomial, GaussScalar, MonomialGreater> acc;
        for (auto& [ma, ca] : terms)
            for (auto& [mb, cb] : o.terms) acc[ma * mb] += ca * cb;
        return from_terms(std::move(acc));
    }

    PolyScalar& operator+=(const PolyScalar& o) { *this = *this + o; return *this; }
    PolyScalar& operator-=(const PolyScalar& o) { *this = *this - o; return *this; }
    PolyScalar& operator*=(const PolyScalar& o) { *this = *this * o; return *this; }

    PolyScalar scaled(const GaussScalar& c) const {
        if (c.is_zero()) return zero();
        PolyScalar r = *this;
        for (auto& [_, coef] : r.terms) coef = coef * c;
        return r;
    }

    // Multiplicative inverse exists only for nonzero constants.
    PolyScalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (!is_constant())
            throw NotInvertible("polynomial '" + leading_monomial_name() + "...' is not a unit");
        return PolyScalar(constant_value().inverse());
    }
    PolyScalar operator/(const PolyScalar& o) const { return *this * o.inverse(); }

    bool operator==(const PolyScalar& o) const { return terms == o.terms; }
    bool operator!=(const PolyScalar& o) const { return !(*this == o); }

    // Divides through by the leading coefficient; two polynomials are equal up
    // to a nonzero constant multiple iff their monic forms coincide.
    PolyScalar monic() const {
        if (terms.empty()) return *this;
        return scaled(terms[0].second.inverse());
    }

    // All indeterminate names occurring in the polynomial.
    std::vector<std::string> indeterminates() const {
        std::vector<std::string> out;
        for (auto& [m, _] : terms)
            for (auto& [n, e] : m.factors) {
                (void)e;
                if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
            }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::string leading_monomial_name() const {
        return terms.empty() || terms[0].first.factors.empty() ? std::string("1")
                                                               : terms[0].first.factors[0].first;
    }
};

int compare(const PolyScalar& a, const PolyScalar& b);

std::string render(const Monomial& m);
std::string render(const PolyScalar& p);

// Exact substitution. Every indeterminate occurring in p must be bound.
GaussScalar poly_eval(const PolyScalar& p, const std::map<std::string, GaussScalar>& binding);
FFScalar poly_eval_ff(const PolyScalar& p, const std::map<std::string, FFScalar>& binding,
                      uint32_t prime);

} // namespace ayb
