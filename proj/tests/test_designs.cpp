#include <doctest.h>

#include <algorithm>
#include <map>

#include "drg/analysis.hpp"
#include "drg/designs.hpp"
#include "drg/error.hpp"
#include "drg/field.hpp"
#include "drg/groups.hpp"

using namespace drg;

namespace {

// Counts of d1 d2^-1 over ordered pairs of distinct members.
std::map<Element, std::size_t> differences(const Group& g, const std::vector<Element>& d) {
    std::map<Element, std::size_t> count;
    for (Element a : d)
        for (Element b : d)
            if (a != b) ++count[g.mul(a, g.inverse(b))];
    return count;
}

bool is_difference_set(const Group& g, const std::vector<Element>& d, std::size_t lambda) {
    const auto c = differences(g, d);
    for (Element x = 0; x < g.order(); ++x)
        if (x != g.identity() && (c.count(x) ? c.at(x) : 0) != lambda) return false;
    return true;
}

std::optional<std::vector<Element>> least_difference_set(const Group& g, std::size_t k, std::size_t lambda) {
    std::vector<bool> pick(g.order(), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<Element> d;
        for (Element x = 0; x < g.order(); ++x)
            if (pick[x]) d.push_back(x);
        if (is_difference_set(g, d, lambda)) return d;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return std::nullopt;
}

}  // namespace

TEST_CASE("difference set verification") {
    const Group z7 = cyclic_group(7);
    const std::vector<Element> d{1, 2, 4};
    const auto r = verify_difference_set(z7, d);
    CHECK(r.params == DesignParams{7, 3, 1});
    const Group z11 = cyclic_group(11);
    const std::vector<Element> sq{1, 3, 4, 5, 9};
    CHECK(verify_difference_set(z11, sq).params == DesignParams{11, 5, 2});
    std::vector<Element> all;
    for (Element x = 1; x < 11; ++x) all.push_back(x);
    CHECK(verify_difference_set(z11, all).params == DesignParams{11, 10, 9});
    const std::vector<Element> bad{0, 1, 2};
    const auto b = verify_difference_set(z7, bad);
    CHECK(!b.params);
    REQUIRE(b.witness);
    CHECK(b.expected != b.found);
}

TEST_CASE("complements of difference sets are difference sets") {
    for (auto [n, k, l] : {std::tuple{7u, 3u, 1u}, {11u, 5u, 2u}, {13u, 4u, 1u}, {21u, 5u, 1u}}) {
        const Group g = cyclic_group(n);
        const auto d = find_difference_set(g, k, l);
        REQUIRE(d);
        std::vector<Element> rest;
        for (Element x = 0; x < n; ++x)
            if (!std::binary_search(d->elements.begin(), d->elements.end(), x)) rest.push_back(x);
        const auto c = verify_difference_set(g, rest);
        REQUIRE(c.params);
        CHECK(c.params->k == n - k);
        CHECK(c.params->lambda == n - 2 * k + l);
    }
}

TEST_CASE("difference set search returns the least set") {
    for (auto [n, k, l] : {std::tuple{7u, 3u, 1u}, {13u, 4u, 1u}, {11u, 5u, 2u}, {21u, 5u, 1u}, {8u, 3u, 1u}}) {
        CAPTURE(n);
        const Group g = cyclic_group(n);
        const auto want = least_difference_set(g, k, l);
        const auto got = find_difference_set(g, k, l);
        REQUIRE(want.has_value() == got.has_value());
        if (got) {
            CHECK(got->elements == *want);
            CHECK(got->params == DesignParams{n, k, l});
        }
    }
    CHECK(find_difference_set(cyclic_group(7), 3, 1)->elements == std::vector<Element>{0, 1, 3});
}

TEST_CASE("incidence graphs of developments") {
    struct Case {
        unsigned n, k, l;
        IntersectionArray array;
    };
    for (const auto& c : {Case{7, 3, 1, IntersectionArray({3, 2, 2}, {1, 1, 3})},
                          Case{11, 5, 2, IntersectionArray({5, 4, 3}, {1, 2, 5})},
                          Case{7, 4, 2, IntersectionArray({4, 3, 2}, {1, 2, 4})},
                          Case{13, 4, 1, IntersectionArray({4, 3, 3}, {1, 1, 4})}}) {
        const auto d = find_difference_set(cyclic_group(c.n), c.k, c.l);
        REQUIRE(d);
        const Graph g = incidence_graph_of_development(*d);
        CHECK(g.order() == 2 * c.n);
        const auto m = graph_metrics(g);
        CHECK(m.bipartite);
        CHECK(m.diameter == 3);
        const auto r = check_distance_regular(g);
        REQUIRE(r.array);
        CHECK(*r.array == c.array);
        const auto s = development_connection_set(cyclic_group(c.n), d->elements);
        CHECK(s.size() == c.k);
        CHECK(check_distance_regular(cayley_graph(s)).array == c.array);
    }
}

TEST_CASE("quadratic relative difference sets") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        CAPTURE(q);
        const auto r = quadratic_rds(q);
        CHECK(r.group.order() == q * q);
        CHECK(r.forbidden.order() == q);
        CHECK(r.elements.size() == q);
        CHECK(r.m == q);
        CHECK(r.n == q);
        CHECK(r.k == q);
        CHECK(r.lambda == 1);
        // every element outside N is a difference exactly once, none inside
        const auto c = differences(r.group, r.elements);
        for (Element x = 0; x < r.group.order(); ++x) {
            if (x == r.group.identity()) continue;
            const std::size_t got = c.count(x) ? c.at(x) : 0;
            CHECK(got == (r.forbidden.contains(x) ? 0u : 1u));
        }
    }
}

TEST_CASE("affine planes minus a parallel class") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
        CAPTURE(q);
        const Graph g = affine_plane_minus_pc_graph(q);
        CHECK(g.order() == 2 * q * q);
        const auto m = graph_metrics(g);
        CHECK(m.bipartite);
        CHECK(m.diameter == 4);
        const auto r = check_distance_regular(g);
        REQUIRE(r.array);
        const int k = int(q);
        CHECK(*r.array == IntersectionArray({k, k - 1, k - 1, 1}, {1, 1, k - 1, k}));
    }
}

TEST_CASE("symplectic quadrangles") {
    for (unsigned q : {2u, 3u, 4u}) {
        const Graph g = symplectic_gq_incidence(q);
        const std::size_t pts = (q * q * q * q - 1) / (q - 1);
        CHECK(g.order() == 2 * pts);
        const int k = int(q) + 1;
        CHECK(check_distance_regular(g).array == IntersectionArray({k, k - 1, k - 1, k - 1}, {1, 1, 1, k}));
    }
    const Graph g4 = symplectic_gq_incidence(4);
    for (int part : {0, 1}) {
        const auto r = check_distance_regular(halved_graph(g4, part));
        REQUIRE(r.array);
        CHECK(srg_parameters(*r.array) == SrgParameters{85, 20, 3, 5});
    }
    CHECK_THROWS_AS(symplectic_gq_incidence(5), Error);
}

TEST_CASE("Paley graphs") {
    for (unsigned q : {5u, 9u, 13u}) {
        const Graph g = paley_graph(q);
        const GaloisField f(q);
        for (Vertex x = 0; x < q; ++x)
            for (Vertex y = 0; y < q; ++y)
                if (x != y) REQUIRE(g.has_edge(x, y) == f.is_square(f.sub(x, y)));
        const auto r = check_distance_regular(g);
        REQUIRE(r.array);
        const int k = int(q - 1) / 2;
        CHECK(srg_parameters(*r.array) == SrgParameters{q, k, (int(q) - 5) / 4, (int(q) - 1) / 4});
    }
    CHECK_THROWS_AS(paley_graph(7), Error);
    CHECK(field_additive_group(9).order() == 9);
}
