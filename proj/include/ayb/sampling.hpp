#pragma once

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ayb/binding.hpp"

namespace ayb {

// Substitute only the bound names; the rest stay symbolic.
inline PolyScalar partial_eval(const PolyScalar& p, const Binding& b) {
    PolyScalar out = PolyScalar::zero();
    for (auto& [m, c] : p.terms) {
        GaussScalar coeff = c;
        Monomial rest;
        for (auto& [name, exp] : m.factors) {
            auto it = b.find(name);
            if (it == b.end()) {
                rest.factors.emplace_back(name, exp);
            } else {
                for (unsigned k = 0; k < exp; ++k) coeff = coeff * it->second;
            }
        }
        PolyScalar t;
        if (!coeff.is_zero()) t.terms.emplace_back(rest, coeff);
        out += t;
    }
    return out;
}

// Draw rational points satisfying polynomial equality constraints and
// nonvanishing conditions. Free variables get integers in [-9, 9]; a
// constraint that reduces to a single variable of degree one is solved by
// substitution, everything else goes through rejection.
class ConstraintSampler {
public:
    ConstraintSampler(std::vector<std::string> variables, std::vector<PolyScalar> constraints,
                      std::vector<PolyScalar> nonzero, uint64_t seed)
        : vars_(std::move(variables)), constraints_(std::move(constraints)),
          nonzero_(std::move(nonzero)), rng_(seed) {}

    // nullopt when the draw was rejected
    std::optional<Binding> try_draw() {
        Binding b;
        std::vector<PolyScalar> pending = constraints_;
        std::set<std::string> unbound(vars_.begin(), vars_.end());

        auto bind = [&](const std::string& name, GaussScalar v) {
            b[name] = std::move(v);
            unbound.erase(name);
        };

        while (true) {
            bool progress = false;
            std::vector<PolyScalar> next;
            for (auto& con : pending) {
                PolyScalar q = partial_eval(con, b);
                if (q.is_zero()) {
                    progress = true;
                    continue;
                }
                if (q.is_constant()) return std::nullopt; // contradiction at this draw
                auto names = q.indeterminates();
                if (names.size() == 1 && degree_in(q, names[0]) == 1) {
                    auto [a, c0] = split_linear(q, names[0]);
                    if (a.is_zero()) return std::nullopt;
                    bind(names[0], -(c0 * a.inverse()));
                    progress = true;
                    continue;
                }
                next.push_back(std::move(q));
            }
            pending = std::move(next);
            if (pending.empty()) break;
            if (!progress) {
                // pin one variable appearing in a stuck constraint and retry
                auto names = pending.front().indeterminates();
                bind(names.front(), random_value());
            }
        }

        for (auto& v : vars_)
            if (unbound.count(v)) b[v] = random_value();

        for (auto& con : constraints_)
            if (!poly_eval(con, b).is_zero()) return std::nullopt;
        for (auto& nz : nonzero_)
            if (poly_eval(nz, b).is_zero()) return std::nullopt;
        return b;
    }

    Binding draw(int max_attempts = 400) {
        for (int k = 0; k < max_attempts; ++k)
            if (auto b = try_draw()) return *b;
        throw UnsatisfiableConstraints("no satisfying sample after " +
                                       std::to_string(max_attempts) + " attempts");
    }

private:
    GaussScalar random_value() {
        std::uniform_int_distribution<int> d(-9, 9);
        return GaussScalar(d(rng_));
    }

    static unsigned degree_in(const PolyScalar& p, const std::string& name) {
        unsigned deg = 0;
        for (auto& [m, _] : p.terms)
            for (auto& [n, e] : m.factors)
                if (n == name) deg = std::max(deg, e);
        return deg;
    }

    // p = a*x + c with x absent from a and c; valid when degree_in(p, x) == 1
    static std::pair<GaussScalar, GaussScalar> split_linear(const PolyScalar& p,
                                                            const std::string& x) {
        GaussScalar a = GaussScalar::zero(), c = GaussScalar::zero();
        for (auto& [m, coeff] : p.terms) {
            bool has = false;
            for (auto& [n, e] : m.factors) {
                (void)e;
                if (n == x) has = true;
            }
            if (has)
                a += coeff;
            else
                c += coeff;
        }
        return {a, c};
    }

    std::vector<std::string> vars_;
    std::vector<PolyScalar> constraints_;
    std::vector<PolyScalar> nonzero_;
    std::mt19937_64 rng_;
};

} // namespace ayb
