#include "ayb/io.hpp"

#include <fstream>

namespace ayb {

Json to_json(const RingDesc& rd) {
    Json j;
    switch (rd.kind) {
    case RingDesc::Kind::Gauss:
        j["kind"] = "gauss";
        break;
    case RingDesc::Kind::Poly:
        j["kind"] = "poly";
        j["indeterminates"] = rd.indeterminates;
        break;
    case RingDesc::Kind::FF:
        j["kind"] = "gf";
        j["p"] = rd.p;
        break;
    }
    return j;
}

RingDesc ring_from_json(const Json& j) {
    RingDesc rd;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "gauss") {
        rd.kind = RingDesc::Kind::Gauss;
    } else if (kind == "poly") {
        rd.kind = RingDesc::Kind::Poly;
        for (auto& n : j.at("indeterminates")) rd.indeterminates.push_back(n.get<std::string>());
    } else if (kind == "gf") {
        rd.kind = RingDesc::Kind::FF;
        rd.p = j.at("p").get<uint32_t>();
    } else {
        throw IOError("unknown ring kind '" + kind + "'");
    }
    return rd;
}

namespace {

template <typename R>
Algebra<R> algebra_from_json_typed(const Json& j, const R& ring) {
    std::vector<std::string> basis;
    for (auto& b : j.at("basis")) basis.push_back(b.get<std::string>());
    if (j.at("dim").get<int>() != static_cast<int>(basis.size()))
        throw IOError("algebra file: dim != |basis|");
    auto A = Algebra<R>::zeros(ring, basis);
    if (j.contains("products"))
        for (auto& p : j.at("products")) {
            int i = A.basis_index(p.at("left").get<std::string>());
            int jj = A.basis_index(p.at("right").get<std::string>());
            for (auto& [name, text] : p.at("result").items()) {
                int k = A.basis_index(name);
                A.cc(i, jj, k) = parse_scalar(text.template get<std::string>(), ring);
            }
        }
    return A;
}

template <typename R>
Json products_to_json(const Algebra<R>& A) {
    Json out = Json::array();
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            Json result;
            for (int k = 0; k < A.dim; ++k)
                if (!A.cc(i, j, k).is_zero()) result[A.basis[k]] = render_scalar(A.cc(i, j, k));
            if (!result.empty())
                out.push_back({{"left", A.basis[i]}, {"right", A.basis[j]}, {"result", result}});
        }
    return out;
}

RingDesc ring_of(const GaussRing&) { return RingDesc{}; }
RingDesc ring_of(const PolyRing& r) {
    RingDesc rd;
    rd.kind = RingDesc::Kind::Poly;
    rd.indeterminates = r.indeterminates;
    return rd;
}
RingDesc ring_of(const FFRing& r) {
    RingDesc rd;
    rd.kind = RingDesc::Kind::FF;
    rd.p = r.p;
    return rd;
}

template <typename R>
DendriformAlgebra<R> dendriform_from_json_typed(const Json& j, const R& ring) {
    std::vector<std::string> basis;
    for (auto& b : j.at("basis")) basis.push_back(b.get<std::string>());
    auto D = DendriformAlgebra<R>::zeros(ring, basis);
    auto fill = [&](const char* key, std::vector<typename R::Scalar>& table) {
        if (!j.contains(key)) return;
        for (auto& p : j.at(key)) {
            int i = 0, jj = 0;
            for (int b = 0; b < D.dim; ++b) {
                if (D.basis[b] == p.at("left").get<std::string>()) i = b;
                if (D.basis[b] == p.at("right").get<std::string>()) jj = b;
            }
            for (auto& [name, text] : p.at("result").items()) {
                int k = 0;
                for (int b = 0; b < D.dim; ++b)
                    if (D.basis[b] == name) k = b;
                table[(static_cast<size_t>(i) * D.dim + jj) * D.dim + k] =
                    parse_scalar(text.template get<std::string>(), ring);
            }
        }
    };
    fill("prec_products", D.prec);
    fill("succ_products", D.succ);
    return D;
}

template <typename R>
TensorElement<R> tensor_from_json_typed(const Json& j, const R& ring) {
    auto& grid = j.at("grid");
    int dim = static_cast<int>(grid.size());
    auto t = TensorElement<R>::zeros(ring, dim);
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(grid[i].size()) != dim) throw IOError("tensor grid is not square");
        for (int jj = 0; jj < dim; ++jj)
            t.at(i, jj) = parse_scalar(grid[i][jj].template get<std::string>(), ring);
    }
    return t;
}

template <typename R>
Json grid_to_json(const TensorElement<R>& t) {
    Json grid = Json::array();
    for (int i = 0; i < t.dim; ++i) {
        Json row = Json::array();
        for (int j = 0; j < t.dim; ++j) row.push_back(render_scalar(t.at(i, j)));
        grid.push_back(row);
    }
    return grid;
}

} // namespace

AnyAlgebra algebra_from_json(const Json& j) {
    RingDesc rd = ring_from_json(j.at("ring"));
    switch (rd.kind) {
    case RingDesc::Kind::Gauss:
        return algebra_from_json_typed(j, GaussRing{});
    case RingDesc::Kind::Poly:
        return algebra_from_json_typed(j, PolyRing(rd.indeterminates));
    case RingDesc::Kind::FF:
        return algebra_from_json_typed(j, FFRing{rd.p});
    }
    throw IOError("unreachable");
}

Json to_json(const AnyAlgebra& a) {
    return std::visit(
        [](const auto& A) {
            Json j;
            j["dim"] = A.dim;
            j["ring"] = to_json(ring_of(A.ring));
            j["basis"] = A.basis;
            j["products"] = products_to_json(A);
            return j;
        },
        a);
}

AnyDendriform dendriform_from_json(const Json& j) {
    RingDesc rd = ring_from_json(j.at("ring"));
    switch (rd.kind) {
    case RingDesc::Kind::Gauss:
        return dendriform_from_json_typed(j, GaussRing{});
    case RingDesc::Kind::Poly:
        return dendriform_from_json_typed(j, PolyRing(rd.indeterminates));
    default:
        throw IOError("dendriform fixtures use gauss or poly rings");
    }
}

Json to_json(const AnyDendriform& d) {
    return std::visit(
        [](const auto& D) {
            Json j;
            j["dim"] = D.dim;
            j["ring"] = to_json(ring_of(D.ring));
            j["basis"] = D.basis;
            Json prec = Json::array(), succ = Json::array();
            for (int i = 0; i < D.dim; ++i)
                for (int jj = 0; jj < D.dim; ++jj) {
                    Json rp, rs;
                    for (int k = 0; k < D.dim; ++k) {
                        if (!D.pc(i, jj, k).is_zero())
                            rp[D.basis[k]] = render_scalar(D.pc(i, jj, k));
                        if (!D.sc(i, jj, k).is_zero())
                            rs[D.basis[k]] = render_scalar(D.sc(i, jj, k));
                    }
                    if (!rp.empty())
                        prec.push_back(
                            {{"left", D.basis[i]}, {"right", D.basis[jj]}, {"result", rp}});
                    if (!rs.empty())
                        succ.push_back(
                            {{"left", D.basis[i]}, {"right", D.basis[jj]}, {"result", rs}});
                }
            j["prec_products"] = prec;
            j["succ_products"] = succ;
            return j;
        },
        d);
}

AnyTensor tensor_from_json(const Json& j) {
    RingDesc rd = ring_from_json(j.at("ring"));
    switch (rd.kind) {
    case RingDesc::Kind::Gauss:
        return tensor_from_json_typed(j, GaussRing{});
    case RingDesc::Kind::Poly:
        return tensor_from_json_typed(j, PolyRing(rd.indeterminates));
    case RingDesc::Kind::FF:
        return tensor_from_json_typed(j, FFRing{rd.p});
    }
    throw IOError("unreachable");
}

Json to_json(const AnyTensor& t) {
    // tensors do not carry a ring object; reconstruct a descriptor from the
    // entries themselves
    Json j;
    if (std::holds_alternative<TensorElement<GaussRing>>(t)) {
        j["ring"] = to_json(RingDesc{});
        j["grid"] = grid_to_json(std::get<TensorElement<GaussRing>>(t));
    } else if (std::holds_alternative<TensorElement<PolyRing>>(t)) {
        const auto& r = std::get<TensorElement<PolyRing>>(t);
        std::vector<std::string> names;
        for (auto& p : r.a)
            for (auto& n : p.indeterminates())
                if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
        std::sort(names.begin(), names.end());
        RingDesc rd;
        rd.kind = RingDesc::Kind::Poly;
        rd.indeterminates = names;
        j["ring"] = to_json(rd);
        j["grid"] = grid_to_json(r);
    } else {
        const auto& r = std::get<TensorElement<FFRing>>(t);
        RingDesc rd;
        rd.kind = RingDesc::Kind::FF;
        rd.p = r.a.empty() ? 2 : r.a[0].p;
        j["ring"] = to_json(rd);
        j["grid"] = grid_to_json(r);
    }
    return j;
}

SolutionFamily family_from_json(const Json& j, const std::string& id) {
    SolutionFamily f;
    f.id = id;
    if (j.contains("algebra")) f.algebra = j.at("algebra").get<std::string>();
    if (j.contains("dendriform")) f.algebra = j.at("dendriform").get<std::string>();
    RingDesc rd = ring_from_json(j.at("ring"));
    if (rd.kind != RingDesc::Kind::Poly) throw IOError("family fixtures use poly rings");
    f.ring = PolyRing(rd.indeterminates);
    auto& grid = j.at("grid");
    f.dim = static_cast<int>(grid.size());
    for (auto& row : grid)
        for (auto& cell : row) f.pattern.push_back(parse_scalar(cell.get<std::string>(), f.ring));
    if (j.contains("constraints"))
        for (auto& c : j.at("constraints"))
            f.constraints.push_back(parse_scalar(c.get<std::string>(), f.ring));
    if (j.contains("nonzero"))
        for (auto& c : j.at("nonzero"))
            f.nonzero.push_back(parse_scalar(c.get<std::string>(), f.ring));
    if (j.contains("verbatim")) f.verbatim = j.at("verbatim").get<std::string>();
    if (j.contains("note")) f.note = j.at("note").get<std::string>();
    if (j.contains("corrects")) f.corrects = j.at("corrects").get<std::string>();
    if (j.contains("expect_pass")) f.expect_pass = j.at("expect_pass").get<bool>();
    return f;
}

Json to_json(const SolutionFamily& f) {
    Json j;
    j["algebra"] = f.algebra;
    RingDesc rd;
    rd.kind = RingDesc::Kind::Poly;
    rd.indeterminates = f.ring.indeterminates;
    j["ring"] = to_json(rd);
    Json grid = Json::array();
    for (int i = 0; i < f.dim; ++i) {
        Json row = Json::array();
        for (int k = 0; k < f.dim; ++k) row.push_back(render_scalar(f.at(i, k)));
        grid.push_back(row);
    }
    j["grid"] = grid;
    Json cons = Json::array(), nz = Json::array();
    for (auto& c : f.constraints) cons.push_back(render_scalar(c));
    for (auto& c : f.nonzero) nz.push_back(render_scalar(c));
    j["constraints"] = cons;
    j["nonzero"] = nz;
    if (!f.verbatim.empty()) j["verbatim"] = f.verbatim;
    if (!f.note.empty()) j["note"] = f.note;
    if (!f.corrects.empty()) j["corrects"] = f.corrects;
    j["expect_pass"] = f.expect_pass;
    return j;
}

Json to_json(const CheckReport& rep) {
    Json j;
    j["check"] = rep.check;
    if (!rep.subject.empty()) j["subject"] = rep.subject;
    j["status"] = rep.pass() ? "pass" : "fail";
    j["checked"] = rep.checked;
    Json fails = Json::array();
    for (auto& f : rep.failures)
        fails.push_back({{"law", f.law}, {"witness", f.witness}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    j["failures"] = fails;
    return j;
}

Json to_json(const AnyDouble& d) {
    return std::visit(
        [](const auto& dd) {
            AnyAlgebra alg = dd.algebra;
            Json j = to_json(alg);
            Json form;
            using Form = std::decay_t<decltype(dd.form)>;
            form["kind"] = dd.form.kind == Form::Kind::Symmetric ? "B" : "omega";
            Json gram = Json::array();
            for (int i = 0; i < dd.form.dim; ++i) {
                Json row = Json::array();
                for (int k = 0; k < dd.form.dim; ++k)
                    row.push_back(render_scalar(dd.form.at(i, k)));
                gram.push_back(row);
            }
            form["gram"] = gram;
            j["form"] = form;
            j["provenance"] = {{"construction", dd.construction},
                               {"base", dd.base_id},
                               {"solution", dd.solution_id}};
            return j;
        },
        d);
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IOError("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

int any_dim(const AnyAlgebra& a) {
    return std::visit([](const auto& A) { return A.dim; }, a);
}

RingDesc any_ring(const AnyAlgebra& a) {
    return std::visit([](const auto& A) { return ring_of(A.ring); }, a);
}

CheckReport any_check_associativity(const AnyAlgebra& a) {
    return std::visit([](const auto& A) { return check_associativity(A); }, a);
}

CheckReport any_check_dendriform(const AnyDendriform& d) {
    return std::visit([](const auto& D) { return check_dendriform(D); }, d);
}

Algebra<PolyRing> to_poly_algebra(const AnyAlgebra& a, const std::vector<std::string>& extra) {
    if (std::holds_alternative<Algebra<GaussRing>>(a))
        return lift(std::get<Algebra<GaussRing>>(a), PolyRing(extra));
    if (std::holds_alternative<Algebra<PolyRing>>(a)) {
        const auto& A = std::get<Algebra<PolyRing>>(a);
        return lift(A, A.ring.extended(extra));
    }
    throw IOError("cannot lift a prime-field algebra to a polynomial ring");
}

CheckReport verify_family_any(const AnyAlgebra& host, const SolutionFamily& fam, int samples,
                              uint64_t seed) {
    if (std::holds_alternative<Algebra<GaussRing>>(host))
        return verify_family(std::get<Algebra<GaussRing>>(host), fam, samples, seed);
    if (std::holds_alternative<Algebra<PolyRing>>(host))
        return verify_family(std::get<Algebra<PolyRing>>(host), fam, samples, seed);
    throw IOError("verify_family needs an exact-arithmetic host");
}

CheckReport verify_d_family_any(const AnyDendriform& host, const SolutionFamily& fam, int samples,
                                uint64_t seed) {
    if (std::holds_alternative<DendriformAlgebra<GaussRing>>(host))
        return verify_d_family(std::get<DendriformAlgebra<GaussRing>>(host), fam, samples, seed);
    return verify_d_family(std::get<DendriformAlgebra<PolyRing>>(host), fam, samples, seed);
}

DendriformAlgebra<PolyRing> to_poly_dendriform(const AnyDendriform& d,
                                               const std::vector<std::string>& extra) {
    if (std::holds_alternative<DendriformAlgebra<GaussRing>>(d)) {
        const auto& D = std::get<DendriformAlgebra<GaussRing>>(d);
        auto out = DendriformAlgebra<PolyRing>::zeros(PolyRing(extra), D.basis);
        for (size_t k = 0; k < D.prec.size(); ++k) {
            out.prec[k] = PolyScalar(D.prec[k]);
            out.succ[k] = PolyScalar(D.succ[k]);
        }
        return out;
    }
    const auto& D = std::get<DendriformAlgebra<PolyRing>>(d);
    auto out = DendriformAlgebra<PolyRing>::zeros(D.ring.extended(extra), D.basis);
    out.prec = D.prec;
    out.succ = D.succ;
    return out;
}

} // namespace ayb
