#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drg/analysis.hpp"
#include "drg/budget.hpp"
#include "drg/graph.hpp"
#include "drg/groups.hpp"

namespace drg {

// Identity-free, inverse-closed subset S of a group.
class ConnectionSet {
  public:
    // Throws if S contains the identity or is not inverse-closed.
    ConnectionSet(Group group, std::vector<Element> elements);
    // Comma-separated element labels (or indices).
    static ConnectionSet parse(const Group& group, std::string_view text);

    const Group& group() const { return group_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(Element x) const;
    // <S> = G
    bool generates() const;
    std::string str() const;

  private:
    Group group_;
    std::vector<Element> elements_;
};

// Vertex i is group element i; a ~ b iff a b^-1 in S.
Graph cayley_graph(const ConnectionSet& s);

struct DistanceSets {
    std::vector<std::vector<Element>> sets;  // S_0 .. S_d
    std::vector<Element> antipodal;          // N_d = S_d ∪ {e}, sorted
    bool antipodal_is_subgroup = false;
};
// Throws if Cay(G,S) is disconnected or the recursion disagrees with BFS.
DistanceSets distance_sets(const ConnectionSet& s);

struct QuotientMatrix {
    std::vector<std::vector<Element>> parts;
    std::vector<std::vector<int>> entries;
    std::vector<double> eigenvalues;  // real eigenvalues of entries
    bool eigenvalues_in_spectrum = false;
};
// Throws unless H is normal in G.
QuotientMatrix coset_quotient(const ConnectionSet& s, const SubgroupHandle& h);

// Quotient matrix of `parts` if the partition is equitable.
std::optional<std::vector<std::vector<int>>> equitable_quotient(const Graph& g,
                                                                const std::vector<std::vector<Vertex>>& parts);

struct CyclePartition {
    Element generator;
    std::size_t m;
    std::vector<std::vector<Element>> cosets;
    bool induced_cycles;
};
struct GirthLemmaReport {
    std::size_t girth;  // computed girth of Cay(G,S)
    std::size_t assumed_girth;
    bool abelian_forces_4cycle;
    // Lemma outcome is inconsistent with the actual girth.
    bool contradiction;
    std::vector<CyclePartition> order_m_cycle_partitions;
};
// `assumed_girth` replaces the computed girth when testing a hypothetical.
GirthLemmaReport girth_lemma_predicates(const ConnectionSet& s, std::optional<std::size_t> assumed_girth = {});

struct HkDecomposition {
    bool found = false;
    std::vector<Element> h, k;
    bool closure_condition_holds = false;
};
// S = (H ∪ K) \ {e} with |H| = |K| = q+1, H ∩ K = {e}; the closure condition
// is evaluated for the polygon parameter d.
HkDecomposition hk_decomposition(const ConnectionSet& s, std::size_t q, std::size_t d);

struct SearchLimits {
    double budget_seconds = 0.0;
    std::size_t max_valency = 12;
    std::size_t max_results = 0;  // 0: all
};
// Every inverse-closed identity-free S with Cay(G,S) distance-regular with
// array `target`, sorted lexicographically.  Throws BudgetExceeded.
std::vector<ConnectionSet> connection_set_search(const Group& g, const IntersectionArray& target,
                                                 SearchLimits limits = {});

}  // namespace drg
