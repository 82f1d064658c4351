#pragma once

#include <string>
#include <vector>

#include "ayb/parse.hpp"
#include "ayb/poly.hpp"
#include "ayb/scalars.hpp"

namespace ayb {

// Display helpers for basis-indexed linear combinations such as
// "e1* - (alpha + 1)*a12*e2". Purely cosmetic; comparisons are structural.

inline bool display_negative(const GaussScalar& c) {
    if (c.re != 0) return c.re < 0;
    return c.im < 0;
}
inline bool display_negative(const FFScalar&) { return false; }
inline bool display_negative(const PolyScalar& p) {
    return !p.is_zero() && display_negative(p.terms[0].second);
}

inline bool needs_parens(const GaussScalar& c) { return c.re != 0 && c.im != 0; }
inline bool needs_parens(const FFScalar&) { return false; }
inline bool needs_parens(const PolyScalar& p) {
    if (p.terms.size() > 1) return true;
    return p.terms.size() == 1 && needs_parens(p.terms[0].second);
}

template <typename S>
std::string render_coeff_times(const S& c, const std::string& atom) {
    if (c.is_one()) return atom;
    std::string cs = render_scalar(c);
    if (needs_parens(c)) cs = "(" + cs + ")";
    return cs + "*" + atom;
}

// Σ coeffs[i] · names[i]
template <typename S>
std::string render_combo(const std::vector<S>& coeffs, const std::vector<std::string>& names) {
    std::string out;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        bool neg = display_negative(coeffs[k]);
        S a = neg ? -coeffs[k] : coeffs[k];
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += render_coeff_times(a, names[k]);
    }
    return out.empty() ? "0" : out;
}

} // namespace ayb
