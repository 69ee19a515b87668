#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "drg/analysis.hpp"
#include "drg/cayley.hpp"
#include "drg/cayleyness.hpp"
#include "drg/graph.hpp"

namespace drg {

// Asset directory: explicit value, else $DRG_DATA, else ./data if present,
// else the source tree's data directory.
std::string resolve_data_dir(const std::string& explicit_dir = {});

enum class Expected { yes, no, cited };
std::string expected_name(Expected e);

struct BuiltGraph {
    Graph graph;
    // Set when the construction is itself a Cayley graph.
    std::optional<ConnectionSet> witness;
};

struct CatalogGraph {
    std::string id;
    std::string source;  // "recipe: ..." or "asset: file"
    std::function<BuiltGraph(const std::string& data_dir)> build;
};

struct FeasibilityOnly {
    Verdict verdict;
    std::string reason;
};

struct CatalogRow {
    int table = 0;  // 1..4
    std::string name;
    IntersectionArray array;
    std::size_t n = 0, d = 0, g = 0;
    Expected cayley = Expected::no;
    std::string reference;
    // Several graphs share a row when the array does not determine the graph.
    std::vector<CatalogGraph> graphs;
    // Rows without a construction; decided by the feasibility route.
    std::function<FeasibilityOnly(const std::string& data_dir)> feasibility;
    // Parameter-level feasibility test that must also reject this row.
    std::function<FeasibilityVerdict()> cross_feasibility;
    // Graphs the row's graph must be isomorphic to.
    std::vector<CatalogGraph> isomorphic_to;
    bool buildable() const { return !graphs.empty(); }
};

std::string table_title(int table);
const std::vector<CatalogRow>& catalog_rows();
// Graphs outside the tables that can still be built by id.
const std::vector<CatalogGraph>& catalog_extras();
std::vector<std::string> catalog_ids();

// Builds a graph by id; asset graphs and row graphs are checked against the
// row's parameters before they are returned.
BuiltGraph build_catalog_graph(const std::string& id, const std::string& data_dir);
// Loads an asset and validates it against its documented array.
Graph load_asset(const std::string& file, const std::string& data_dir);

struct CensusGraphResult {
    std::string id;
    std::size_t n = 0, d = 0, g = 0;
    std::optional<IntersectionArray> array;
    Verdict computed = Verdict::unknown;
    std::vector<std::string> certificates;
    std::string group;  // witness group summary for "yes"
};

struct CensusRow {
    const CatalogRow* row = nullptr;
    std::vector<CensusGraphResult> graphs;
    Verdict computed = Verdict::unknown;
    std::string status;                 // "OK", "FAIL", "feasibility-only"
    std::vector<std::string> failures;  // each names the failed assertion
    std::string detail;
    bool ok() const { return failures.empty(); }
};

struct CensusOptions {
    std::string data_dir;
    double budget_seconds = kDefaultSearchBudget;
};

// table 0 means all tables.
std::vector<CensusRow> census(int table, const CensusOptions& options = {});

std::string census_tsv(const std::vector<CensusRow>& rows);
std::string census_markdown(const std::vector<CensusRow>& rows);

}  // namespace drg
