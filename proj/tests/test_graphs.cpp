#include <doctest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "drg/error.hpp"
#include "drg/graph.hpp"

using namespace drg;

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix matrix(const Graph& g) {
    Matrix m(g.order(), std::vector<int>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) m[u][v] = g.has_edge(u, v);
    return m;
}

std::vector<std::vector<std::size_t>> bfs_all(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, n));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<std::size_t> q;
        q.push(s);
        d[s][s] = 0;
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (m[u][v] && d[s][v] == n) d[s][v] = d[s][u] + 1, q.push(v);
        }
    }
    return d;
}

// Shortest closed walk without immediate backtracking that is a cycle, by
// exhaustive path extension; fine for small graphs.
void cycles_from(const Matrix& m, std::size_t start, std::vector<std::size_t>& path, std::vector<bool>& used,
                 std::set<std::size_t>& lengths, std::size_t cap) {
    const auto u = path.back();
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (!m[u][v]) continue;
        if (v == start && path.size() >= 3) lengths.insert(path.size());
        if (v <= start || used[v] || path.size() >= cap) continue;
        used[v] = true;
        path.push_back(v);
        cycles_from(m, start, path, used, lengths, cap);
        path.pop_back();
        used[v] = false;
    }
}

std::set<std::size_t> cycle_lengths(const Graph& g, std::size_t cap) {
    const auto m = matrix(g);
    std::set<std::size_t> lengths;
    for (std::size_t s = 0; s < m.size(); ++s) {
        std::vector<std::size_t> path{s};
        std::vector<bool> used(m.size());
        used[s] = true;
        cycles_from(m, s, path, used, lengths, cap);
    }
    return lengths;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("adjacency bit rows") {
    Graph g(130);
    g.add_edge(0, 129);
    g.add_edge(64, 65);
    CHECK(g.has_edge(129, 0));
    CHECK(g.degree(0) == 1);
    CHECK(g.edge_count() == 2);
    g.remove_edge(0, 129);
    CHECK(!g.has_edge(0, 129));
    CHECK_THROWS_AS(g.add_edge(3, 3), Error);
    CHECK_THROWS_AS(g.add_edge(0, 130), Error);
}

TEST_CASE("distances agree with breadth-first search") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(rng, 5 + rng() % 40, 0.08 + 0.02 * (t % 5));
        const auto ref = bfs_all(matrix(g));
        const DistanceTable d(g);
        bool connected = true;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v) {
                REQUIRE(d(u, v) == ref[u][v]);
                connected = connected && ref[u][v] < g.order();
            }
        CHECK(is_connected(g) == connected);
    }
}

TEST_CASE("girths agree with cycle enumeration") {
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(rng, 5 + rng() % 8, 0.3);
        const auto lengths = cycle_lengths(g, g.order());
        std::size_t odd = kInfiniteGirth, even = kInfiniteGirth;
        for (auto l : lengths) (l % 2 ? odd : even) = std::min(l % 2 ? odd : even, l);
        const auto m = graph_metrics(g);
        CHECK(m.girth == (lengths.empty() ? kInfiniteGirth : *lengths.begin()));
        CHECK(girth(g) == m.girth);
        CHECK(m.odd_girth == odd);
        CHECK(m.even_girth == even);
        CHECK(m.bipartite == (odd == kInfiniteGirth));
    }
}

TEST_CASE("metrics of standard graphs") {
    const auto pet = graph_metrics(odd_graph(3));
    CHECK(pet.diameter == 2);
    CHECK(pet.girth == 5);
    CHECK(pet.odd_girth == 5);
    CHECK(pet.even_girth == 6);
    CHECK(!pet.bipartite);
    const auto cube = graph_metrics(hamming_graph(3, 2));
    CHECK(cube.bipartite);
    CHECK(cube.girth == 4);
    CHECK(cube.odd_girth == kInfiniteGirth);
    CHECK(graph_metrics(cycle_graph(9)).girth == 9);
    CHECK(graph_metrics(complete_graph(5)).diameter == 1);
    const Graph tree = from_edge_list("0 1\n1 2\n1 3\n");
    CHECK(graph_metrics(tree).girth == kInfiniteGirth);
}

TEST_CASE("families have their textbook sizes") {
    CHECK(kneser_graph(5, 2).edge_count() == 15);
    CHECK(odd_graph(4).order() == 35);
    CHECK(hamming_graph(2, 4).regular_degree() == 6u);
    CHECK(crown_graph(4).edge_count() == 12);
    CHECK(complete_multipartite(3, 2).regular_degree() == 4u);
    const Graph k = kneser_graph(5, 2);
    CHECK(k.has_edge(0, 7));  // {1,2} and {3,4}
    CHECK(!k.has_edge(0, 1));
}

TEST_CASE("graph6 round trips") {
    std::mt19937 rng(11);
    for (std::size_t n : {0u, 1u, 2u, 7u, 62u, 63u, 64u, 130u}) {
        const Graph g = random_graph(rng, n, 0.3);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK(to_graph6(odd_graph(3)).size() == 1 + (45 + 5) / 6);
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK_THROWS_AS(from_graph6("C~~"), Error);
}

TEST_CASE("edge lists") {
    const Graph g = from_edge_list("# comment\n0 1\n1 2 # tail\n\n2 0\n", 5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 3);
    CHECK_THROWS_AS(from_edge_list("0 x\n"), Error);
    CHECK_THROWS_AS(from_edge_list("1 1\n"), Error);
}

TEST_CASE("derived graphs") {
    const Graph pet = odd_graph(3);
    SUBCASE("complement twice is the identity") { CHECK(complement(complement(pet)) == pet); }
    SUBCASE("line graph of the Petersen graph") {
        const Graph l = line_graph(pet);
        CHECK(l.order() == 15);
        CHECK(l.regular_degree() == 4u);
        const auto e = pet.edges();
        for (Vertex i = 0; i < e.size(); ++i)
            for (Vertex j = 0; j < e.size(); ++j) {
                const bool share = i != j && (e[i].first == e[j].first || e[i].first == e[j].second ||
                                              e[i].second == e[j].first || e[i].second == e[j].second);
                REQUIRE(l.has_edge(i, j) == share);
            }
    }
    SUBCASE("bipartite double") {
        const Graph b = bipartite_double(pet);
        CHECK(b.order() == 20);
        CHECK(graph_metrics(b).bipartite);
        for (Vertex u = 0; u < 10; ++u)
            for (Vertex v = 0; v < 10; ++v) REQUIRE(b.has_edge(u, v + 10) == pet.has_edge(u, v));
    }
    SUBCASE("distance graphs") {
        const Graph d2 = distance_graph(pet, 2);
        CHECK(d2 == complement(pet));
        CHECK(distance_graph(hamming_graph(3, 2), 3).edge_count() == 4);
        CHECK(derived_graph(pet, DerivedKind::distance_i, 1) == pet);
    }
    SUBCASE("halved cube") {
        const Graph h = halved_graph(hamming_graph(4, 2), 0);
        CHECK(h.order() == 8);
        CHECK(h.regular_degree() == 6u);
        CHECK_THROWS_AS(halved_graph(pet, 0), Error);
    }
    SUBCASE("antipodal quotient of the 4-cube is K_4,4") {
        const Graph q = antipodal_quotient(hamming_graph(4, 2));
        CHECK(q.order() == 8);
        CHECK(q.regular_degree() == 4u);
        CHECK(graph_metrics(q).bipartite);
        CHECK_THROWS_AS(antipodal_quotient(pet), Error);
    }
    SUBCASE("induced subgraph") {
        const Vertex keep[] = {0, 7, 8, 9};
        const Graph s = induced_subgraph(pet, keep);
        CHECK(s.order() == 4);
        CHECK(s.has_edge(0, 1));
    }
}

TEST_CASE("bipartition") {
    const auto c = bipartition(cycle_graph(6));
    REQUIRE(c);
    for (Vertex v = 0; v < 6; ++v) CHECK((*c)[v] == int(v % 2));
    CHECK(!bipartition(cycle_graph(5)));
}
