#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "drg/cayley.hpp"
#include "drg/graph.hpp"
#include "drg/groups.hpp"
#include "drg/permutation.hpp"

namespace drg {

inline constexpr double kDefaultAutBudget = 60.0;
inline constexpr double kDefaultSearchBudget = 300.0;

// Full automorphism group by individualization-refinement; the base of the
// returned group is the first path of the search tree.  Throws
// BudgetExceeded when the budget runs out.
PermutationGroup automorphism_group(const Graph& g, double budget_seconds = kDefaultAutBudget);

// sigma[v] maps the base vertex to v; together they form a regular group.
struct RegularWitness {
    Vertex base = 0;
    std::vector<Permutation> sigma;
};

struct RegularSearchResult {
    std::optional<RegularWitness> witness;
    std::size_t nodes = 0;
    bool exhausted() const { return !witness; }
};

struct RegularSearchOptions {
    double budget_seconds = kDefaultSearchBudget;
    // Largest point stabilizer whose elements are listed explicitly.
    std::size_t max_stabilizer = std::size_t(1) << 22;
    // Witnesses rejected here are skipped and the search continues.
    std::function<bool(const RegularWitness&)> accept;
};

// Throws BudgetExceeded, or Error when the stabilizer exceeds max_stabilizer.
RegularSearchResult regular_subgroup_search(const PermutationGroup& aut, const Graph& g,
                                            const RegularSearchOptions& options = {});

// Element v is sigma[v]; the identity is the base vertex.
Group witness_group(const RegularWitness& w);
// S = {sigma_v : v adjacent to the base}.
ConnectionSet witness_connection_set(const Group& group, const Graph& g, const RegularWitness& w);

enum class Verdict { yes, no, unknown };
std::string verdict_name(Verdict v);

struct CayleyOptions {
    double aut_budget = kDefaultAutBudget;
    double search_budget = kDefaultSearchBudget;
    // Run the regular-subgroup search even when a cheaper certificate exists.
    bool exhaustive = true;
    std::function<bool(const Group&)> accept_group;
};

struct CayleyVerdict {
    Verdict verdict = Verdict::unknown;
    std::optional<Group> group;
    std::optional<ConnectionSet> connection_set;
    // Every route that produced a certificate, e.g. "exhaustive", "halving".
    std::vector<std::string> certificates;
    std::string detail;
    BigInt aut_order = 0;
    std::size_t search_nodes = 0;
};

CayleyVerdict is_cayley(const Graph& g, const CayleyOptions& options = {});

struct CanonicalForm {
    // labeling[v] is the new index of vertex v.
    std::vector<Vertex> labeling;
    std::string certificate;
};
CanonicalForm canonical_form(const Graph& g, double budget_seconds = kDefaultAutBudget);
bool isomorphic(const Graph& a, const Graph& b, double budget_seconds = kDefaultAutBudget);

}  // namespace drg
