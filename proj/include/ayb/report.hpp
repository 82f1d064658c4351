#pragma once

#include "ayb/catalog.hpp"

namespace ayb {

struct ReportOptions {
    int samples = 5;
    uint64_t seed = 20240811;
};

// Runs every catalog fixture through its checks, compares the printed tables
// cell by cell against the constructions, and returns one structured
// document. Identical options give byte-identical output.
Json run_full_report(const Catalog& cat, const ReportOptions& opts);

// report.json + summary.md + one diff file per compared table.
void write_report_files(const Json& report, const std::string& out_dir);

// True when every mathematical check in the report passed; table-cell
// mismatches against printed values are reported, not failures.
bool report_checks_pass(const Json& report);

// Comparison of a generated polynomial system against a printed equation
// list, as sets up to nonzero constant multiples.
Json compare_equation_system(const std::vector<PolyScalar>& generated, const TableSpec& spec);

// One printed double-construction table row against the oracle construction.
Json compare_table_row(const Catalog& cat, const TableRow& row, const ReportOptions& opts);

} // namespace ayb
