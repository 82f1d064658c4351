#include "ayb/parse.hpp"

#include <cctype>

namespace ayb {

namespace {

template <typename Ring>
struct Parser {
    using Scalar = typename Ring::Scalar;

    const Ring& ring;
    const std::string& text;
    size_t pos = 0;

    Parser(const Ring& r, const std::string& t) : ring(r), text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& expected) {
        std::string got = pos < text.size() ? std::string(1, text[pos]) : std::string("end of input");
        throw SyntaxError(pos, expected, "'" + got + "'");
    }

    BigInt integer() {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("integer");
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return BigInt(text.substr(start, pos - start));
    }

    unsigned positive_int() {
        BigInt n = integer();
        if (n <= 0 || n > 1000000) fail("positive integer");
        return n.convert_to<unsigned>();
    }

    Scalar from_bigint(const BigInt& n) {
        // build by halving so huge literals stay exact in any ring
        if (n == 0) return ring.zero();
        if (n < 0) {
            Scalar s = from_bigint(-n);
            return ring.zero() - s;
        }
        if (n <= 1000000000) return ring.from_int(n.convert_to<long long>());
        Scalar half = from_bigint(n / 2);
        Scalar s = half + half;
        if (n % 2 == 1) s = s + ring.one();
        return s;
    }

    Scalar imag_unit();
    Scalar indeterminate(const std::string& name);

    Scalar primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Scalar v = expr();
            if (!eat(')')) fail("')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return from_bigint(integer());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "i") return imag_unit();
            return indeterminate(name);
        }
        fail("integer, identifier, 'i' or '('");
    }

    Scalar factor() {
        Scalar base = primary();
        if (eat('^')) {
            unsigned e = positive_int();
            Scalar r = ring.one();
            for (unsigned k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                skip_space();
                size_t at = pos;
                BigInt d = integer();
                if (d == 0) throw DivisionByZero();
                Scalar div = from_bigint(d);
                (void)at;
                v = v * div.inverse();
            } else {
                return v;
            }
        }
    }

    Scalar expr() {
        bool neg = eat('-');
        Scalar v = term();
        if (neg) v = ring.zero() - v;
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    Scalar parse() {
        Scalar v = expr();
        skip_space();
        if (pos != text.size()) fail("end of input");
        return v;
    }
};

template <>
GaussScalar Parser<GaussRing>::imag_unit() {
    return GaussScalar::imag_unit();
}
template <>
GaussScalar Parser<GaussRing>::indeterminate(const std::string& name) {
    throw UnknownIndeterminate(name);
}

template <>
PolyScalar Parser<PolyRing>::imag_unit() {
    return PolyScalar(GaussScalar::imag_unit());
}
template <>
PolyScalar Parser<PolyRing>::indeterminate(const std::string& name) {
    if (!ring.declares(name)) throw UnknownIndeterminate(name);
    return PolyScalar::var(name);
}

template <>
FFScalar Parser<FFRing>::imag_unit() {
    throw UnknownIndeterminate("i");
}
template <>
FFScalar Parser<FFRing>::indeterminate(const std::string& name) {
    throw UnknownIndeterminate(name);
}

} // namespace

GaussScalar parse_scalar(const std::string& text, const GaussRing& ring) {
    return Parser<GaussRing>(ring, text).parse();
}
PolyScalar parse_scalar(const std::string& text, const PolyRing& ring) {
    return Parser<PolyRing>(ring, text).parse();
}
FFScalar parse_scalar(const std::string& text, const FFRing& ring) {
    return Parser<FFRing>(ring, text).parse();
}

std::string render_scalar(const GaussScalar& s) { return render(s); }
std::string render_scalar(const PolyScalar& s) { return render(s); }
std::string render_scalar(const FFScalar& s) { return render(s); }

} // namespace ayb
