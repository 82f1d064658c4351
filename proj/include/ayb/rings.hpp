#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ayb/poly.hpp"
#include "ayb/scalars.hpp"

namespace ayb {

// Ring descriptors. Generic code is templated on one of these; each knows how
// to mint constants of its scalar type and which literals the parser accepts.

struct GaussRing {
    using Scalar = GaussScalar;
    Scalar zero() const { return GaussScalar::zero(); }
    Scalar one() const { return GaussScalar::one(); }
    Scalar from_int(long long n) const { return GaussScalar(n); }
    bool has_imag_unit() const { return true; }
    bool declares(const std::string&) const { return false; }
    bool operator==(const GaussRing&) const { return true; }
};

struct PolyRing {
    std::vector<std::string> indeterminates; // sorted, unique

    using Scalar = PolyScalar;

    PolyRing() = default;
    explicit PolyRing(std::vector<std::string> names) : indeterminates(std::move(names)) {
        std::sort(indeterminates.begin(), indeterminates.end());
        indeterminates.erase(std::unique(indeterminates.begin(), indeterminates.end()),
                             indeterminates.end());
    }

    Scalar zero() const { return PolyScalar::zero(); }
    Scalar one() const { return PolyScalar::one(); }
    Scalar from_int(long long n) const { return PolyScalar(n); }
    bool has_imag_unit() const { return true; }
    bool declares(const std::string& name) const {
        return std::binary_search(indeterminates.begin(), indeterminates.end(), name);
    }
    bool operator==(const PolyRing& o) const { return indeterminates == o.indeterminates; }

    PolyRing extended(const std::vector<std::string>& extra) const {
        std::vector<std::string> all = indeterminates;
        all.insert(all.end(), extra.begin(), extra.end());
        return PolyRing(std::move(all));
    }
};

struct FFRing {
    uint32_t p = 2;

    using Scalar = FFScalar;

    FFRing() = default;
    explicit FFRing(uint32_t prime) : p(prime) {}

    Scalar zero() const { return {0, p}; }
    Scalar one() const { return {1, p}; }
    Scalar from_int(long long n) const {
        long long m = n % static_cast<long long>(p);
        if (m < 0) m += p;
        return {static_cast<uint32_t>(m), p};
    }
    bool has_imag_unit() const { return false; }
    bool declares(const std::string&) const { return false; }
    bool operator==(const FFRing& o) const { return p == o.p; }
};

} // namespace ayb
