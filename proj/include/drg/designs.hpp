#pragma once

#include <optional>
#include <span>
#include <vector>

#include "drg/cayley.hpp"
#include "drg/graph.hpp"
#include "drg/groups.hpp"

namespace drg {

struct DesignParams {
    std::size_t n, k, lambda;
    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

struct DifferenceSet {
    Group group;
    std::vector<Element> elements;
    DesignParams params;
};

struct DifferenceCheck {
    std::optional<DesignParams> params;
    // An element whose count of differences d1 d2^-1 differs from the first one seen.
    std::optional<Element> witness;
    std::size_t expected = 0, found = 0;
};
DifferenceCheck verify_difference_set(const Group& g, std::span<const Element> d);

// Lexicographically least (n,k,λ) difference set of G, or nothing after
// exhausting all k-subsets.  |G| <= 64.
std::optional<DifferenceSet> find_difference_set(const Group& g, std::size_t k, std::size_t lambda);

struct RelativeDifferenceSet {
    Group group;
    SubgroupHandle forbidden;
    std::vector<Element> elements;
    std::size_t m, n, k, lambda;
};
// (m, n, k, λ) if D is a relative difference set relative to N.
std::optional<RelativeDifferenceSet> verify_relative_difference_set(const Group& g, const SubgroupHandle& n,
                                                                    std::span<const Element> d);

// S = Dc in the generalized dihedral extension of the abelian group of D.
ConnectionSet development_connection_set(const Group& abelian, std::span<const Element> d);
Graph incidence_graph_of_development(const DifferenceSet& d);

// {(x, x^2)} relative to N = {(0, y)}: in GF(q)^2 for odd q, in the
// semifield plane group for even q.
RelativeDifferenceSet quadratic_rds(unsigned q);
ConnectionSet affine_plane_minus_pc_connection_set(unsigned q);
Graph affine_plane_minus_pc_graph(unsigned q);

// Points then totally isotropic lines of W(q), q in {2,3,4}.
Graph symplectic_gq_incidence(unsigned q);

// Vertices GF(q), x ~ y iff x - y is a nonzero square; q ≡ 1 mod 4.
Graph paley_graph(unsigned q);
// Additive group of GF(q), element i is field element i.
Group field_additive_group(unsigned q);

}  // namespace drg
