#pragma once

#include <json.hpp>

#include <variant>

#include "ayb/doubles.hpp"

namespace ayb {

using Json = nlohmann::ordered_json;

// Runtime ring descriptor, as it appears in fixture files.
struct RingDesc {
    enum class Kind { Gauss, Poly, FF };
    Kind kind = Kind::Gauss;
    std::vector<std::string> indeterminates;
    uint32_t p = 2;
};

Json to_json(const RingDesc& rd);
RingDesc ring_from_json(const Json& j);

using AnyAlgebra = std::variant<Algebra<GaussRing>, Algebra<PolyRing>, Algebra<FFRing>>;
using AnyDendriform = std::variant<DendriformAlgebra<GaussRing>, DendriformAlgebra<PolyRing>>;
using AnyTensor =
    std::variant<TensorElement<GaussRing>, TensorElement<PolyRing>, TensorElement<FFRing>>;
using AnyDouble = std::variant<DoubleAlgebra<GaussRing>, DoubleAlgebra<PolyRing>>;

// Algebra files: {"dim", "ring", "basis", "products":[{"left","right","result":{name:coeff}}]}
// with unlisted products zero.
AnyAlgebra algebra_from_json(const Json& j);
Json to_json(const AnyAlgebra& a);

// Dendriform files mirror the algebra format with prec_products/succ_products.
AnyDendriform dendriform_from_json(const Json& j);
Json to_json(const AnyDendriform& d);

// Tensor files: {"ring", "grid": [[...],[...],...]}.
AnyTensor tensor_from_json(const Json& j);
Json to_json(const AnyTensor& t);

// Family files add constraints/nonzero (and catalog annotations) to the grid.
SolutionFamily family_from_json(const Json& j, const std::string& id);
Json to_json(const SolutionFamily& f);

Json to_json(const CheckReport& rep);

// Double output files: algebra + form + provenance.
Json to_json(const AnyDouble& d);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// Convenience accessors over the variants.
int any_dim(const AnyAlgebra& a);
RingDesc any_ring(const AnyAlgebra& a);
CheckReport any_check_associativity(const AnyAlgebra& a);
CheckReport any_check_dendriform(const AnyDendriform& d);

// Promote an algebra fixture to a polynomial ring containing `extra`
// indeterminates (constants lift; an existing poly ring extends).
Algebra<PolyRing> to_poly_algebra(const AnyAlgebra& a, const std::vector<std::string>& extra);
DendriformAlgebra<PolyRing> to_poly_dendriform(const AnyDendriform& d,
                                               const std::vector<std::string>& extra);

CheckReport verify_family_any(const AnyAlgebra& host, const SolutionFamily& fam, int samples,
                              uint64_t seed);
CheckReport verify_d_family_any(const AnyDendriform& host, const SolutionFamily& fam, int samples,
                                uint64_t seed);

} // namespace ayb
