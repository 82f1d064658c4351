#pragma once

#include <map>

#include "ayb/io.hpp"

namespace ayb {

struct IndexEntry {
    std::string id;
    std::string path;  // relative to the data directory; empty for aliases
    std::string kind;  // algebra | dendriform | aybe_family | d_family | table
    std::string alias; // resolves to another fixture id
};

// One expected product cell of a printed table, kept with its verbatim text.
struct TableCell {
    std::string left, right;
    std::map<std::string, std::string> expected; // basis name -> coefficient text
    std::string verbatim;
    std::string status; // "" | "garbled"
};

// A printed table row: a solution pattern feeding a double construction, plus
// the product cells the paper lists for it.
struct TableRow {
    std::string id;
    std::string construction; // frobenius_from_r | connes_from_r
    std::string host;         // fixture id of the base algebra / dendriform
    std::string mode;         // symbolic | sampled
    int dim = 3;
    PolyRing ring;
    std::vector<PolyScalar> grid;
    std::vector<PolyScalar> constraints;
    std::vector<PolyScalar> nonzero;
    std::vector<TableCell> cells;
    std::string verbatim;
    std::string note;
    bool expect_construction = true; // recorded: does the printed r solve its equation?

    const PolyScalar& at(int i, int j) const { return grid[static_cast<size_t>(i) * dim + j]; }
};

struct EquationSpec {
    std::string id;
    PolyScalar poly;
    std::string verbatim;
};

struct TableSpec {
    std::string id;
    std::string table;  // "1".."8"
    std::string kind;   // equation_system | double_table
    std::string target; // for equation systems: which generator it pins
    PolyRing ring;
    std::vector<EquationSpec> equations;
    std::vector<TableRow> rows;
    bool best_effort = false;
};

// Machine-readable fixtures for the paper's algebras, solution families and
// printed tables. Loads lazily from one file per fixture; fixtures validate
// on access.
class Catalog {
public:
    explicit Catalog(std::string data_dir = default_data_dir());

    static std::string default_data_dir();

    const std::vector<IndexEntry>& entries() const { return entries_; }
    std::vector<std::string> list(const std::string& kind) const;
    std::vector<std::string> list(const std::string& kind, const std::string& filter) const;

    bool has(const std::string& id) const;
    std::string kind_of(const std::string& id) const;
    Json raw(const std::string& id) const;

    AnyAlgebra algebra(const std::string& id) const;
    AnyDendriform dendriform(const std::string& id) const;
    SolutionFamily aybe_family(const std::string& id) const;
    SolutionFamily d_family(const std::string& id) const;
    TableSpec table(const std::string& id) const;

    const std::string& dir() const { return dir_; }

private:
    const IndexEntry& find(const std::string& id) const;
    const IndexEntry& resolve(const std::string& id) const;

    std::string dir_;
    std::vector<IndexEntry> entries_;
};

} // namespace ayb
