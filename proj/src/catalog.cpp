#include "ayb/catalog.hpp"

#include <algorithm>

#include "ayb/sampling.hpp"

namespace ayb {

std::string Catalog::default_data_dir() { return AYB_DATA_DIR; }

Catalog::Catalog(std::string data_dir) : dir_(std::move(data_dir)) {
    Json idx = load_json_file(dir_ + "/index.json");
    for (auto& e : idx.at("fixtures")) {
        IndexEntry entry;
        entry.id = e.at("id").get<std::string>();
        entry.kind = e.at("kind").get<std::string>();
        if (e.contains("path")) entry.path = e.at("path").get<std::string>();
        if (e.contains("alias")) entry.alias = e.at("alias").get<std::string>();
        entries_.push_back(std::move(entry));
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const IndexEntry& a, const IndexEntry& b) { return a.id < b.id; });
}

std::vector<std::string> Catalog::list(const std::string& kind) const {
    std::vector<std::string> out;
    for (auto& e : entries_)
        if (e.kind == kind) out.push_back(e.id);
    return out; // entries_ sorted at load
}

std::vector<std::string> Catalog::list(const std::string& kind,
                                       const std::string& filter) const {
    std::vector<std::string> out;
    for (auto& e : entries_) {
        if (e.kind != kind) continue;
        if (e.id.find(filter) != std::string::npos) {
            out.push_back(e.id);
            continue;
        }
        if (!e.path.empty()) {
            Json j = load_json_file(dir_ + "/" + e.path);
            std::string host;
            if (j.contains("algebra")) host = j.at("algebra").get<std::string>();
            if (j.contains("dendriform")) host = j.at("dendriform").get<std::string>();
            if (host == filter) out.push_back(e.id);
        }
    }
    return out;
}

bool Catalog::has(const std::string& id) const {
    for (auto& e : entries_)
        if (e.id == id) return true;
    return false;
}

const IndexEntry& Catalog::find(const std::string& id) const {
    for (auto& e : entries_)
        if (e.id == id) return e;
    throw UnknownFixture(id);
}

const IndexEntry& Catalog::resolve(const std::string& id) const {
    const IndexEntry* e = &find(id);
    int hops = 0;
    while (!e->alias.empty()) {
        e = &find(e->alias);
        if (++hops > 4) throw IOError("alias cycle at fixture '" + id + "'");
    }
    return *e;
}

std::string Catalog::kind_of(const std::string& id) const { return find(id).kind; }

Json Catalog::raw(const std::string& id) const {
    const IndexEntry& e = resolve(id);
    return load_json_file(dir_ + "/" + e.path);
}

AnyAlgebra Catalog::algebra(const std::string& id) const {
    const IndexEntry& e = resolve(id);
    if (e.kind != "algebra") throw UnknownFixture(id + " (not an algebra fixture)");
    auto a = algebra_from_json(load_json_file(dir_ + "/" + e.path));
    auto rep = any_check_associativity(a);
    if (!rep.pass())
        throw ValidationFailed("algebra fixture '" + id + "': " + rep.summary());
    return a;
}

AnyDendriform Catalog::dendriform(const std::string& id) const {
    const IndexEntry& e = resolve(id);
    if (e.kind != "dendriform") throw UnknownFixture(id + " (not a dendriform fixture)");
    Json j = load_json_file(dir_ + "/" + e.path);
    auto d = dendriform_from_json(j);

    if (!j.contains("valid_when")) {
        auto rep = any_check_dendriform(d);
        if (!rep.pass())
            throw ValidationFailed("dendriform fixture '" + id + "': " + rep.summary());
        return d;
    }

    // The printed structure only satisfies the laws on a parameter stratum;
    // validate there at sampled points.
    if (!std::holds_alternative<DendriformAlgebra<PolyRing>>(d))
        throw ValidationFailed("valid_when needs a parametric fixture: " + id);
    const auto& D = std::get<DendriformAlgebra<PolyRing>>(d);
    std::vector<PolyScalar> when, when_nonzero;
    for (auto& c : j.at("valid_when"))
        when.push_back(parse_scalar(c.get<std::string>(), D.ring));
    if (j.contains("valid_nonzero"))
        for (auto& c : j.at("valid_nonzero"))
            when_nonzero.push_back(parse_scalar(c.get<std::string>(), D.ring));
    ConstraintSampler sampler(D.ring.indeterminates, when, when_nonzero, 20240601);
    for (int s = 0; s < 3; ++s) {
        auto b = sampler.draw();
        auto rep = check_dendriform(detail::host_at(D, b));
        if (!rep.pass())
            throw ValidationFailed("dendriform fixture '" + id + "' fails on its stratum: " +
                                   rep.summary());
    }
    return d;
}

namespace {

SolutionFamily load_family(const Catalog& cat, const std::string& dir, const IndexEntry& e) {
    auto f = family_from_json(load_json_file(dir + "/" + e.path), e.id);
    (void)cat;
    return f;
}

} // namespace

SolutionFamily Catalog::aybe_family(const std::string& id) const {
    const IndexEntry& e = resolve(id);
    if (e.kind != "aybe_family") throw UnknownFixture(id + " (not an AYBE family fixture)");
    return load_family(*this, dir_, e);
}

SolutionFamily Catalog::d_family(const std::string& id) const {
    const IndexEntry& e = resolve(id);
    if (e.kind != "d_family") throw UnknownFixture(id + " (not a D-family fixture)");
    return load_family(*this, dir_, e);
}

TableSpec Catalog::table(const std::string& id) const {
    const IndexEntry& e = resolve(id);
    if (e.kind != "table") throw UnknownFixture(id + " (not a table fixture)");
    Json j = load_json_file(dir_ + "/" + e.path);

    TableSpec spec;
    spec.id = e.id;
    spec.table = j.at("table").get<std::string>();
    spec.kind = j.at("kind").get<std::string>();
    if (j.contains("target")) spec.target = j.at("target").get<std::string>();
    if (j.contains("best_effort")) spec.best_effort = j.at("best_effort").get<bool>();

    if (spec.kind == "equation_system") {
        RingDesc rd = ring_from_json(j.at("ring"));
        spec.ring = PolyRing(rd.indeterminates);
        for (auto& eq : j.at("equations")) {
            EquationSpec es;
            es.id = eq.at("id").get<std::string>();
            es.poly = parse_scalar(eq.at("poly").get<std::string>(), spec.ring);
            if (eq.contains("verbatim")) es.verbatim = eq.at("verbatim").get<std::string>();
            spec.equations.push_back(std::move(es));
        }
        return spec;
    }

    if (spec.kind != "double_table") throw IOError("unknown table kind in fixture '" + id + "'");
    for (auto& rj : j.at("rows")) {
        TableRow row;
        row.id = rj.at("id").get<std::string>();
        row.construction = rj.at("construction").get<std::string>();
        row.host = rj.at("host").get<std::string>();
        row.mode = rj.at("mode").get<std::string>();
        RingDesc rd = ring_from_json(rj.at("ring"));
        row.ring = PolyRing(rd.indeterminates);
        auto& grid = rj.at("grid");
        row.dim = static_cast<int>(grid.size());
        for (auto& r : grid)
            for (auto& cell : r)
                row.grid.push_back(parse_scalar(cell.get<std::string>(), row.ring));
        if (rj.contains("constraints"))
            for (auto& c : rj.at("constraints"))
                row.constraints.push_back(parse_scalar(c.get<std::string>(), row.ring));
        if (rj.contains("nonzero"))
            for (auto& c : rj.at("nonzero"))
                row.nonzero.push_back(parse_scalar(c.get<std::string>(), row.ring));
        if (rj.contains("verbatim")) row.verbatim = rj.at("verbatim").get<std::string>();
        if (rj.contains("note")) row.note = rj.at("note").get<std::string>();
        if (rj.contains("expect_construction"))
            row.expect_construction = rj.at("expect_construction").get<bool>();
        for (auto& cj : rj.at("cells")) {
            TableCell cell;
            cell.left = cj.at("left").get<std::string>();
            cell.right = cj.at("right").get<std::string>();
            for (auto& [name, text] : cj.at("expected").items())
                cell.expected[name] = text.get<std::string>();
            if (cj.contains("verbatim")) cell.verbatim = cj.at("verbatim").get<std::string>();
            if (cj.contains("status")) cell.status = cj.at("status").get<std::string>();
            row.cells.push_back(std::move(cell));
        }
        spec.rows.push_back(std::move(row));
    }
    return spec;
}

} // namespace ayb
