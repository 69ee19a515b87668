#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "drg/analysis.hpp"
#include "drg/catalog.hpp"
#include "drg/cayley.hpp"
#include "drg/error.hpp"
#include "drg/groups.hpp"

using namespace drg;

namespace {

std::vector<std::vector<Element>> bfs_classes(const Graph& g, Vertex root) {
    const DistanceTable d(g);
    std::vector<std::vector<Element>> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (d(root, v) >= out.size()) out.resize(d(root, v) + 1);
        out[d(root, v)].push_back(v);
    }
    return out;
}

bool translation_is_automorphism(const Graph& g, const Group& grp, Element x) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.has_edge(u, v) != g.has_edge(grp.mul(u, x), grp.mul(v, x))) return false;
    return true;
}

// All inverse-closed identity-free subsets, by bitmask.
std::vector<std::vector<Element>> all_connection_sets(const Group& g) {
    std::vector<std::vector<Element>> classes;
    std::vector<bool> seen(g.order());
    for (Element x = 0; x < g.order(); ++x) {
        if (x == g.identity() || seen[x]) continue;
        std::vector<Element> c{x};
        seen[x] = true;
        if (!seen[g.inverse(x)]) c.push_back(g.inverse(x)), seen[g.inverse(x)] = true;
        classes.push_back(c);
    }
    std::vector<std::vector<Element>> out;
    for (std::size_t mask = 1; mask < (std::size_t(1) << classes.size()); ++mask) {
        std::vector<Element> s;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (mask >> i & 1) s.insert(s.end(), classes[i].begin(), classes[i].end());
        std::sort(s.begin(), s.end());
        out.push_back(s);
    }
    return out;
}

ConnectionSet aw_set() {
    const auto built = build_catalog_graph("armanios-wells", resolve_data_dir());
    REQUIRE(built.witness);
    return *built.witness;
}

}  // namespace

TEST_CASE("connection sets") {
    const Group z = cyclic_group(6);
    CHECK_THROWS_AS(ConnectionSet(z, {1}), Error);
    CHECK_THROWS_AS(ConnectionSet(z, {0, 3}), Error);
    const ConnectionSet s(z, {5, 1});
    CHECK(s.elements() == std::vector<Element>{1, 5});
    CHECK(s.generates());
    CHECK(!ConnectionSet(z, {2, 4}).generates());
    CHECK(s.str() == "1,5");
}

TEST_CASE("constructions from the literature") {
    SUBCASE("icosahedron over Alt(4)") {
        const Group a4 = alternating_group(4);
        const auto s = ConnectionSet::parse(a4, "(123),(132),(12)(34),(134),(143)");
        const auto r = check_distance_regular(cayley_graph(s));
        REQUIRE(r.array);
        CHECK(*r.array == IntersectionArray({5, 2, 1}, {1, 2, 5}));
    }
    SUBCASE("Klein graph over Sym(4)") {
        const Group s4 = symmetric_group(4);
        const auto s = ConnectionSet::parse(s4, "(123),(132),(12)(34),(13),(14),(1234),(1432)");
        const auto r = check_distance_regular(cayley_graph(s));
        REQUIRE(r.array);
        CHECK(*r.array == IntersectionArray({7, 4, 1}, {1, 2, 7}));
        const auto ds = distance_sets(s);
        REQUIRE(ds.sets.size() == 4);
        std::set<std::string> s3;
        for (Element x : ds.sets[3]) s3.insert(s4.label(x));
        CHECK(s3 == std::set<std::string>{"(124)", "(142)"});
    }
    SUBCASE("crown graphs over dihedral groups") {
        for (std::size_t n = 3; n <= 8; ++n) {
            std::vector<Element> s;
            for (Element i = 1; i < n; ++i) s.push_back(Element(n) + i);
            CHECK(cayley_graph(ConnectionSet(dihedral_group(2 * n), s)) == crown_graph(n));
        }
    }
    SUBCASE("4-cycle") {
        const auto ds = distance_sets(ConnectionSet(cyclic_group(4), {1, 3}));
        CHECK(ds.sets[2] == std::vector<Element>{2});
        CHECK(ds.antipodal_is_subgroup);
    }
}

TEST_CASE("distance sets equal breadth-first classes") {
    std::mt19937 rng(9);
    for (const Group& g : {cyclic_group(12), dihedral_group(16), symmetric_group(4), metacyclic_group(7, 3, 2),
                           armanios_wells_group(), semifield_plane_group(4)}) {
        const auto sets = all_connection_sets(g);
        for (int t = 0; t < 25; ++t) {
            const auto& el = sets[rng() % sets.size()];
            const ConnectionSet s(g, el);
            const Graph graph = cayley_graph(s);
            if (!is_connected(graph)) {
                CHECK_THROWS_AS(distance_sets(s), Error);
                continue;
            }
            CHECK(distance_sets(s).sets == bfs_classes(graph, g.identity()));
            for (Element x = 0; x < g.order(); x += 3) REQUIRE(translation_is_automorphism(graph, g, x));
        }
    }
}

TEST_CASE("coset quotients") {
    SUBCASE("6-cycle over its bipartition") {
        const Group z = cyclic_group(6);
        const Element two[] = {2};
        const auto q = coset_quotient(ConnectionSet(z, {1, 5}), subgroup_closure(z, two));
        CHECK(q.entries == std::vector<std::vector<int>>{{0, 2}, {2, 0}});
        CHECK(q.eigenvalues_in_spectrum);
    }
    const ConnectionSet s = aw_set();
    const Group& g = s.group();
    const auto gen = armanios_wells_generators();
    const Graph graph = cayley_graph(s);
    const auto spec = spectrum_numeric(graph);
    auto in_spectrum = [&](double x) {
        return std::any_of(spec.begin(), spec.end(), [&](const SpectrumEntry& e) { return std::abs(e.value - x) < 1e-6; });
    };
    SUBCASE("four cocliques") {
        const Element x[] = {g.mul(gen[0], gen[1]), g.mul(gen[1], gen[2]), g.mul(gen[2], gen[0])};
        const auto h = subgroup_closure(g, x);
        CHECK(h.order() == 8);
        const auto q = coset_quotient(s, h);
        REQUIRE(q.parts.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) CHECK(q.entries[i][i] == 0);
        CHECK(q.eigenvalues_in_spectrum);
        for (double e : q.eigenvalues) CHECK(in_spectrum(e));
        std::vector<std::vector<Vertex>> parts(q.parts.begin(), q.parts.end());
        CHECK(equitable_quotient(graph, parts) == q.entries);
    }
    SUBCASE("two 1-regular halves") {
        const Element x[] = {g.mul(gen[0], gen[1]), g.mul(gen[1], gen[2]), g.mul(gen[2], gen[0]), gen[3]};
        const auto h = subgroup_closure(g, x);
        const auto q = coset_quotient(s, h);
        REQUIRE(q.parts.size() == 2);
        CHECK(q.entries[0][0] == 1);
        CHECK(q.entries[1][1] == 1);
        for (double e : q.eigenvalues) CHECK(in_spectrum(e));
        SUBCASE("removing the matching leaves the affine plane of order 4 minus a parallel class") {
            Graph rest = graph;
            for (const auto& part : q.parts)
                for (Element u : part)
                    for (Element v : part)
                        if (u < v && rest.has_edge(u, v)) rest.remove_edge(u, v);
            const auto r = check_distance_regular(rest);
            REQUIRE(r.array);
            CHECK(*r.array == IntersectionArray({4, 3, 3, 1}, {1, 1, 3, 4}));
        }
    }
    SUBCASE("non-normal subgroups are refused") {
        const Group s3 = symmetric_group(3);
        const Element x[] = {s3.parse_element("(12)")};
        CHECK_THROWS_AS(coset_quotient(ConnectionSet::parse(s3, "(12),(13),(23)"), subgroup_closure(s3, x)), Error);
    }
    CHECK(!equitable_quotient(odd_graph(3), {{0, 1}, {2, 3, 4, 5, 6, 7, 8, 9}}));
}

TEST_CASE("girth lemma predicates") {
    SUBCASE("abelian groups with three generators and girth five") {
        for (const Group& g : {cyclic_group(10), elementary_abelian_group(2, 3), cyclic_group(16)}) {
            for (const auto& el : all_connection_sets(g)) {
                if (el.size() != 3) continue;
                const auto r = girth_lemma_predicates(ConnectionSet(g, el), 5);
                CHECK(r.abelian_forces_4cycle);
                CHECK(r.contradiction);
            }
        }
    }
    SUBCASE("5-cycle") {
        const auto r = girth_lemma_predicates(ConnectionSet(cyclic_group(5), {1, 4}));
        CHECK(r.girth == 5);
        CHECK(!r.contradiction);
        REQUIRE(!r.order_m_cycle_partitions.empty());
        const auto& p = r.order_m_cycle_partitions.front();
        CHECK(p.m == 5);
        CHECK(p.cosets.size() == 1);
        CHECK(p.induced_cycles);
    }
}

TEST_CASE("H and K decompositions") {
    SUBCASE("two involutions") {
        const Group v = elementary_abelian_group(2, 2);
        const auto r = hk_decomposition(ConnectionSet(v, {1, 2}), 1, 2);
        CHECK(r.found);
        CHECK(r.h == std::vector<Element>{0, 1});
        CHECK(r.k == std::vector<Element>{0, 2});
    }
    SUBCASE("an element of order 2d whose square leaves S") {
        const auto r = hk_decomposition(ConnectionSet(cyclic_group(6), {1, 5}), 1, 3);
        CHECK(!r.closure_condition_holds);
        CHECK(!r.found);
    }
    SUBCASE("line graph of the Heawood graph") {
        const Group g = metacyclic_group(7, 3, 2);
        const auto sets = connection_set_search(g, IntersectionArray({4, 2, 2}, {1, 1, 2}));
        REQUIRE(!sets.empty());
        bool any = false;
        for (const auto& s : sets) {
            const auto r = hk_decomposition(s, 2, 3);
            if (!r.found) continue;
            any = true;
            CHECK(r.h.size() == 3);
            CHECK(r.k.size() == 3);
        }
        CHECK(any);
    }
}

TEST_CASE("connection set search matches exhaustion") {
    struct Case {
        Group g;
        IntersectionArray target;
    };
    const std::vector<Case> cases{
        {cyclic_group(8), IntersectionArray({2, 1, 1, 1}, {1, 1, 1, 2})},
        {dihedral_group(12), IntersectionArray({5, 4, 1}, {1, 4, 5})},
        {dihedral_group(8), IntersectionArray({3, 2, 1}, {1, 2, 3})},
        {elementary_abelian_group(2, 3), IntersectionArray({3, 2, 1}, {1, 2, 3})},
        {cyclic_group(10), IntersectionArray({3, 2}, {1, 1})},
        {alternating_group(4), IntersectionArray({5, 2, 1}, {1, 2, 5})},
        {cyclic_group(9), IntersectionArray({4, 2}, {1, 2})},
    };
    std::size_t nonempty = 0;
    for (const auto& c : cases) {
        CAPTURE(c.g.name());
        CAPTURE(c.target.str());
        std::vector<std::vector<Element>> want;
        for (const auto& el : all_connection_sets(c.g)) {
            if (int(el.size()) != c.target.valency()) continue;
            const Graph graph = cayley_graph(ConnectionSet(c.g, el));
            if (!is_connected(graph)) continue;
            const auto r = check_distance_regular(graph);
            if (r.array && *r.array == c.target) want.push_back(el);
        }
        std::sort(want.begin(), want.end());
        std::vector<std::vector<Element>> got;
        for (const auto& s : connection_set_search(c.g, c.target)) got.push_back(s.elements());
        CHECK(got == want);
        nonempty += !want.empty();
    }
    CHECK(nonempty >= 5);
    SUBCASE("Shrikhande") {
        const Group z = parse_group_spec("cyclic:4*cyclic:4");
        const auto want = ConnectionSet::parse(z, "(0,1),(0,3),(1,0),(3,0),(1,1),(3,3)").elements();
        const auto sets = connection_set_search(z, IntersectionArray({6, 3}, {1, 2}));
        CHECK(std::any_of(sets.begin(), sets.end(), [&](const ConnectionSet& s) { return s.elements() == want; }));
    }
    SUBCASE("groups of order 45 and the halved Foster array") {
        for (const char* spec : {"cyclic:45", "cyclic:3*cyclic:15"})
            CHECK(connection_set_search(parse_group_spec(spec), IntersectionArray({6, 4, 2, 1}, {1, 1, 4, 6})).empty());
    }
}
