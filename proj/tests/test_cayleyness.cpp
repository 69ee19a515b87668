#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "drg/catalog.hpp"
#include "drg/cayley.hpp"
#include "drg/cayleyness.hpp"
#include "drg/designs.hpp"
#include "drg/error.hpp"
#include "drg/groups.hpp"

using namespace drg;

namespace {

using Perm = std::vector<Vertex>;

bool preserves(const Graph& g, const Perm& p) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v) != g.has_edge(p[u], p[v])) return false;
    return true;
}

std::vector<Perm> brute_automorphisms(const Graph& g) {
    Perm p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do
        if (preserves(g, p)) out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Least upper-triangle bit string over all relabellings.
std::uint64_t brute_canonical(const Graph& g) {
    Perm p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t code = 0;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) code = code << 1 | g.has_edge(p[u], p[v]);
        best = std::min(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Exhaustive regular-subgroup test over an explicit automorphism list.
bool brute_has_regular_subgroup(const std::vector<Perm>& aut, std::size_t n) {
    std::vector<Perm> to(n);
    std::vector<std::vector<const Perm*>> choices(n);
    for (const auto& a : aut) {
        bool free = true;
        for (Vertex x = 0; x < n && free; ++x) free = a[x] != x || a[0] == 0;
        bool identity = true;
        for (Vertex x = 0; x < n; ++x) identity = identity && a[x] == x;
        if (free || identity) choices[a[0]].push_back(&a);
    }
    std::vector<const Perm*> pick(n);
    auto compose = [&](const Perm& a, const Perm& b) {
        Perm c(n);
        for (Vertex x = 0; x < n; ++x) c[x] = b[a[x]];
        return c;
    };
    std::function<bool(Vertex)> rec = [&](Vertex v) -> bool {
        if (v == n) {
            std::set<Perm> set;
            for (auto* p : pick) set.insert(*p);
            for (auto* a : pick)
                for (auto* b : pick)
                    if (!set.count(compose(*a, *b))) return false;
            return true;
        }
        for (auto* c : choices[v]) {
            pick[v] = c;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

Graph relabel(const Graph& g, const Perm& p) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(p[u], p[v]);
    return h;
}

Group quaternion_group() {
    // elements ±1, ±i, ±j, ±k as sign*4 + unit index
    const int mul[4][4][2] = {{{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                              {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
                              {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
                              {{3, 0}, {2, 0}, {1, 1}, {0, 1}}};
    std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const auto& r = mul[a % 4][b % 4];
            t[a][b] = Element(r[0] + 4 * ((r[1] + a / 4 + b / 4) % 2));
        }
    return Group::from_table(t, {}, "Q8");
}

std::vector<Group> small_groups() {
    return {cyclic_group(5), cyclic_group(6), dihedral_group(6), cyclic_group(7), cyclic_group(8),
            direct_product(cyclic_group(4), cyclic_group(2)), elementary_abelian_group(2, 3), dihedral_group(8),
            quaternion_group()};
}

std::vector<std::vector<Element>> connection_sets(const Group& g) {
    std::vector<std::vector<Element>> classes;
    std::vector<bool> seen(g.order());
    for (Element x = 1; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::vector<Element> c{x};
        seen[x] = true;
        if (!seen[g.inverse(x)]) c.push_back(g.inverse(x)), seen[g.inverse(x)] = true;
        classes.push_back(c);
    }
    std::vector<std::vector<Element>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << classes.size()); ++mask) {
        std::vector<Element> s;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (mask >> i & 1) s.insert(s.end(), classes[i].begin(), classes[i].end());
        out.push_back(s);
    }
    return out;
}

Graph asset(const char* file) { return load_asset(file, resolve_data_dir()); }

}  // namespace

TEST_CASE("quaternion table is a group") {
    const Group q = quaternion_group();
    CHECK(group_queries(q).involutions.size() == 1);
    CHECK(!q.is_abelian());
}

TEST_CASE("automorphism group order matches enumeration") {
    std::mt19937 rng(4);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 3 + rng() % 6;
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        const auto brute = brute_automorphisms(g);
        const auto aut = automorphism_group(g);
        CHECK(aut.order() == BigInt(brute.size()));
        for (const auto& p : aut.generators()) CHECK(is_automorphism(g, p));
    }
    CHECK(automorphism_group(complete_graph(7)).order() == 5040);
    CHECK(automorphism_group(Graph(6)).order() == 720);
    CHECK(automorphism_group(cycle_graph(8)).order() == 16);
}

TEST_CASE("automorphism groups of named graphs") {
    CHECK(automorphism_group(odd_graph(3)).order() == 120);
    CHECK(automorphism_group(asset("coxeter.g6")).order() == 336);
    CHECK(automorphism_group(asset("sylvester.g6")).order() == 1440);
    CHECK(automorphism_group(hamming_graph(3, 2)).order() == 48);
    CHECK(automorphism_group(asset("foster.g6")).order() == 4320);
}

TEST_CASE("Cayley recognition agrees with exhaustive search on small graphs") {
    std::set<std::uint64_t> cayley_codes;
    for (const Group& g : small_groups())
        for (const auto& s : connection_sets(g)) {
            const Graph graph = cayley_graph(ConnectionSet(g, s));
            cayley_codes.insert(brute_canonical(graph));
            const auto v = is_cayley(graph);
            REQUIRE(v.verdict == Verdict::yes);
            REQUIRE(v.group);
            REQUIRE(v.connection_set);
            CHECK(cayley_graph(*v.connection_set) == graph);
        }
    std::mt19937 rng(8);
    std::size_t yes = 0, no = 0;
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 5 + rng() % 4;
        Graph g(n);
        // circulant-like seeds give many vertex-transitive cases
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() % 5 == 0 || (t % 2 == 0 && (v - u) % n == 1)) g.add_edge(u, v);
        const auto aut = brute_automorphisms(g);
        const bool want = brute_has_regular_subgroup(aut, n);
        const auto v = is_cayley(g);
        CHECK(v.verdict == (want ? Verdict::yes : Verdict::no));
        if (want) CHECK(cayley_codes.count(brute_canonical(g)) == 1u);
        (want ? yes : no)++;
    }
    CHECK(yes > 0);
    CHECK(no > 0);
}

TEST_CASE("regular subgroups of named graphs") {
    SUBCASE("Klein graph") {
        const Graph g = build_catalog_graph("klein", resolve_data_dir()).graph;
        const auto r = regular_subgroup_search(automorphism_group(g), g);
        REQUIRE(r.witness);
        const Group w = witness_group(*r.witness);
        CHECK(w.order() == 24);
        CHECK(cayley_graph(witness_connection_set(w, g, *r.witness)) == g);
    }
    for (const char* file : {"petersen.g6", "dodecahedron.g6"}) {
        const Graph g = asset(file);
        CHECK(regular_subgroup_search(automorphism_group(g), g).exhausted());
    }
}

TEST_CASE("Cayley verdicts for named graphs") {
    const auto shr = is_cayley(asset("shrikhande.g6"));
    CHECK(shr.verdict == Verdict::yes);
    CayleyOptions abelian;
    abelian.accept_group = [](const Group& g) { return g.is_abelian(); };
    const auto ab = is_cayley(asset("shrikhande.g6"), abelian);
    REQUIRE(ab.verdict == Verdict::yes);
    CHECK(ab.group->is_abelian());
    CHECK(ab.group->order() == 16);
    for (const char* file : {"coxeter.g6", "sylvester.g6", "petersen.g6"}) {
        const auto v = is_cayley(asset(file));
        CHECK(v.verdict == Verdict::no);
        CHECK(std::count(v.certificates.begin(), v.certificates.end(), "exhaustive") == 1);
    }
    const auto bs = is_cayley(asset("biggs-smith.g6"));
    CHECK(bs.verdict == Verdict::no);
    CHECK(std::count(bs.certificates.begin(), bs.certificates.end(), "halving") == 1);
    CHECK(is_cayley(asset("tutte-12-cage.g6")).verdict == Verdict::no);
    CHECK(verdict_name(Verdict::unknown) == "unknown");
}

TEST_CASE("search budgets surface as unknown") {
    CayleyOptions o;
    o.search_budget = 1e-9;
    o.aut_budget = 1e-9;
    const auto v = is_cayley(Graph(400), o);
    CHECK(v.verdict == Verdict::unknown);
}

TEST_CASE("canonical forms") {
    std::mt19937 rng(12);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 4 + rng() % 5;
        Graph a(n), b(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng() % 2) a.add_edge(u, v);
                if (rng() % 2) b.add_edge(u, v);
            }
        CHECK(isomorphic(a, b) == (brute_canonical(a) == brute_canonical(b)));
        Perm p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        const Graph c = relabel(a, p);
        CHECK(canonical_form(a).certificate == canonical_form(c).certificate);
        const auto cf = canonical_form(a);
        Perm lab(cf.labeling.begin(), cf.labeling.end());
        CHECK(to_graph6(relabel(a, lab)) == cf.certificate);
    }
    SUBCASE("large relabelled graphs") {
        for (const char* file : {"petersen.g6", "foster.g6", "gh22-points-a.g6"}) {
            const Graph g = asset(file);
            Perm p(g.order());
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            CHECK(isomorphic(g, relabel(g, p)));
        }
    }
    CHECK(!isomorphic(asset("shrikhande.g6"), hamming_graph(2, 4)));
    CHECK(!isomorphic(asset("gh22-points-a.g6"), asset("gh22-points-b.g6")));
}
