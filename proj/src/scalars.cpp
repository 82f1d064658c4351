#include "ayb/poly.hpp"
#include "ayb/scalars.hpp"

namespace ayb {

std::string render(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

int compare(const Rational& a, const Rational& b) { return a < b ? -1 : a > b ? 1 : 0; }

int compare(const GaussScalar& a, const GaussScalar& b) {
    if (int c = compare(a.re, b.re)) return c;
    return compare(a.im, b.im);
}

namespace {

// b*i with b > 0
std::string render_imag_part(const Rational& b) {
    if (b == 1) return "i";
    return render(b) + "*i";
}

} // namespace

std::string render(const GaussScalar& s) {
    if (s.is_zero()) return "0";
    if (s.im == 0) return render(s.re);
    if (s.re == 0) {
        if (s.im < 0) return "-" + render_imag_part(-s.im);
        return render_imag_part(s.im);
    }
    std::string out = render(s.re);
    if (s.im < 0)
        out += " - " + render_imag_part(-s.im);
    else
        out += " + " + render_imag_part(s.im);
    return out;
}

std::string render(const FFScalar& s) { return std::to_string(s.value); }

FFScalar to_ff(const GaussScalar& g, uint32_t p) {
    if (g.im != 0) throw NotInvertible("cannot reduce imaginary value mod " + std::to_string(p));
    BigInt num = rat_num(g.re) % p;
    if (num < 0) num += p;
    BigInt den = rat_den(g.re) % p;
    FFScalar n{num.convert_to<uint32_t>(), p};
    if (den == 0) throw NotInvertible("denominator vanishes mod " + std::to_string(p));
    FFScalar d{den.convert_to<uint32_t>(), p};
    return n * d.inverse();
}

int compare(const PolyScalar& a, const PolyScalar& b) {
    size_t n = std::min(a.terms.size(), b.terms.size());
    for (size_t k = 0; k < n; ++k) {
        if (int c = Monomial::compare(a.terms[k].first, b.terms[k].first)) return c;
        if (int c = compare(a.terms[k].second, b.terms[k].second)) return c;
    }
    if (a.terms.size() != b.terms.size()) return a.terms.size() > b.terms.size() ? 1 : -1;
    return 0;
}

std::string render(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (auto& [name, exp] : m.factors) {
        if (!out.empty()) out += "*";
        out += name;
        if (exp >= 2) out += "^" + std::to_string(exp);
    }
    return out;
}

namespace {

bool display_negative(const GaussScalar& c) {
    if (c.re != 0) return c.re < 0;
    return c.im < 0;
}

// One term, sign already stripped by the caller.
std::string render_term(const Monomial& m, const GaussScalar& c) {
    if (m.is_one()) {
        if (c.re != 0 && c.im != 0) return "(" + render(c) + ")";
        return render(c);
    }
    std::string mono = render(m);
    if (c.is_one()) return mono;
    if (c.im == 0) return render(c.re) + "*" + mono;
    if (c.re == 0) return render_imag_part(c.im) + "*" + mono;
    return "(" + render(c) + ")*" + mono;
}

} // namespace

std::string render(const PolyScalar& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p.terms) {
        bool neg = display_negative(c);
        GaussScalar a = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += render_term(m, a);
    }
    return out;
}

GaussScalar poly_eval(const PolyScalar& p, const std::map<std::string, GaussScalar>& binding) {
    GaussScalar total = GaussScalar::zero();
    for (auto& [m, c] : p.terms) {
        GaussScalar t = c;
        for (auto& [name, exp] : m.factors) {
            auto it = binding.find(name);
            if (it == binding.end()) throw MissingBinding(name);
            for (unsigned k = 0; k < exp; ++k) t = t * it->second;
        }
        total += t;
    }
    return total;
}

FFScalar poly_eval_ff(const PolyScalar& p, const std::map<std::string, FFScalar>& binding,
                      uint32_t prime) {
    FFScalar total{0, prime};
    for (auto& [m, c] : p.terms) {
        FFScalar t = to_ff(c, prime);
        for (auto& [name, exp] : m.factors) {
            auto it = binding.find(name);
            if (it == binding.end()) throw MissingBinding(name);
            for (unsigned k = 0; k < exp; ++k) t = t * it->second;
        }
        total += t;
    }
    return total;
}

} // namespace ayb
