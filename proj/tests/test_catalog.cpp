#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "drg/analysis.hpp"
#include "drg/catalog.hpp"
#include "drg/error.hpp"

using namespace drg;

namespace {

const std::string& data() {
    static const std::string dir = resolve_data_dir();
    return dir;
}

struct Built {
    const CatalogRow* row;
    std::string id;
    BuiltGraph built;
};

const std::vector<Built>& all_built() {
    static const std::vector<Built> out = [] {
        std::vector<Built> v;
        for (const auto& r : catalog_rows())
            for (const auto& g : r.graphs) v.push_back({&r, g.id, g.build(data())});
        return v;
    }();
    return out;
}

}  // namespace

TEST_CASE("table shapes") {
    std::map<int, int> rows;
    for (const auto& r : catalog_rows()) ++rows[r.table];
    CHECK(rows[1] == 13);
    CHECK(rows[2] == 17);
    CHECK(rows[3] == 15);
    CHECK(rows[4] == 15);
    for (const auto& r : catalog_rows()) {
        CAPTURE(r.name);
        CHECK((r.buildable() || r.feasibility));
        CHECK(r.array.diameter() == r.d);
        if (r.n <= 4096) CHECK(std::size_t(r.array.order()) == r.n);
        CHECK(r.array.girth() == r.g);
        CHECK_NOTHROW(validate(r.array));
    }
}

TEST_CASE("every catalog graph has its row's parameters") {
    for (const auto& b : all_built()) {
        CAPTURE(b.id);
        const Graph& g = b.built.graph;
        REQUIRE(g.order() == b.row->n);
        const auto m = graph_metrics(g);
        CHECK(m.connected);
        CHECK(m.diameter == b.row->d);
        CHECK(m.girth == b.row->g);
        const auto r = check_distance_regular(g, m.distances);
        REQUIRE(r.array);
        CHECK(*r.array == b.row->array);
        CHECK(m.odd_girth == r.array->odd_girth());
        if (r.array->bipartite()) CHECK(m.even_girth == r.array->even_girth_formula());
        CHECK(m.bipartite == r.array->bipartite());
        if (b.built.witness) CHECK(cayley_graph(*b.built.witness) == g);
    }
}

TEST_CASE("numeric spectra of catalog graphs match their arrays") {
    for (const auto& b : all_built()) {
        if (b.built.graph.order() > 200) continue;
        CAPTURE(b.id);
        const auto numeric = spectrum_numeric(b.built.graph);
        const auto exact = spectrum_of_array(b.row->array);
        REQUIRE(numeric.size() == exact.size());
        for (std::size_t i = 0; i < exact.size(); ++i) {
            CHECK(std::abs(numeric[i].value - exact[i].value) < 1e-6);
            CHECK(std::abs(double(numeric[i].multiplicity) - exact[i].multiplicity) < 1e-6);
        }
    }
}

TEST_CASE("antipodal quotients") {
    for (const auto& b : all_built()) {
        const auto& a = b.row->array;
        if (!a.antipodal_candidate()) continue;
        const Graph d = distance_graph(b.built.graph, a.diameter());
        // antipodal iff being at distance d is an equivalence relation
        bool antipodal = true;
        for (Vertex x = 0; x < d.order() && antipodal; ++x)
            for (Vertex y : d.neighbors(x))
                for (Vertex z : d.neighbors(y))
                    if (z != x && !d.has_edge(x, z)) antipodal = false;
        CAPTURE(b.id);
        if (antipodal)
            CHECK_NOTHROW(antipodal_quotient(b.built.graph));
        else
            CHECK_THROWS_AS(antipodal_quotient(b.built.graph), Error);
    }
    const Graph aw = build_catalog_graph("armanios-wells", data()).graph;
    const Graph q = antipodal_quotient(aw);
    CHECK(check_distance_regular(q).array == IntersectionArray({5, 4}, {1, 2}));
}

TEST_CASE("quadrangle and hexagon rows agree with the parameter tests") {
    for (const auto& r : catalog_rows()) {
        if (!r.cross_feasibility) continue;
        CAPTURE(r.name);
        CHECK(!r.cross_feasibility().feasible);
        CHECK(r.cayley != Expected::yes);
    }
}

TEST_CASE("asset loading") {
    CHECK(load_asset("petersen.g6", data()).order() == 10);
    CHECK_THROWS_AS(load_asset("missing.g6", data()), Error);
    CHECK_THROWS_AS(build_catalog_graph("no-such-graph", data()), Error);
    const auto ids = catalog_ids();
    CHECK(std::count(ids.begin(), ids.end(), "truncated-tetrahedron") == 1);
    const auto tt = build_catalog_graph("truncated-tetrahedron", data());
    CHECK(tt.graph.order() == 12);
    CHECK(tt.graph.regular_degree() == 3u);
    CHECK(tt.witness);
    // every vertex lies in exactly one triangle
    for (Vertex v = 0; v < 12; ++v) {
        std::size_t triangles = 0;
        for (Vertex u : tt.graph.neighbors(v))
            for (Vertex w : tt.graph.neighbors(v))
                triangles += u < w && tt.graph.has_edge(u, w);
        CHECK(triangles == 1);
    }
    // drop (134),(143) from the icosahedron's connection set
    const Graph ico = build_catalog_graph("icosahedron", data()).graph;
    CHECK(tt.graph.edge_count() == 18);
    for (auto [u, v] : tt.graph.edges()) CHECK(ico.has_edge(u, v));
    const auto hw = build_catalog_graph("heawood", data());
    CHECK(check_distance_regular(hw.graph).array == IntersectionArray({3, 2, 2}, {1, 1, 3}));
}

TEST_CASE("census") {
    CensusOptions o;
    o.data_dir = data();
    const auto t1 = census(1, o);
    REQUIRE(t1.size() == 13);
    std::size_t yes = 0;
    for (const auto& r : t1) {
        CAPTURE(r.row->name);
        CHECK(r.ok());
        CHECK(r.status == "OK");
        yes += r.computed == Verdict::yes;
    }
    CHECK(yes == 5);
    const auto t3 = census(3, o);
    const auto gh = std::find_if(t3.begin(), t3.end(), [](const CensusRow& r) { return r.row->name == "IG(GH(4,4))"; });
    REQUIRE(gh != t3.end());
    CHECK(gh->status == "feasibility-only");
    CHECK(gh->computed == Verdict::no);
    CHECK(gh->ok());
    const auto t4 = census(4, o);
    const auto klein = std::find_if(t4.begin(), t4.end(), [](const CensusRow& r) { return r.row->name == "Klein"; });
    REQUIRE(klein != t4.end());
    CHECK(klein->computed == Verdict::yes);
    REQUIRE(!klein->graphs.empty());
    CHECK(klein->graphs[0].group.find("Sym4") != std::string::npos);
    const auto md = census_markdown(t1);
    CHECK(std::count(md.begin(), md.end(), '\n') >= 15);
    CHECK(md.find("Petersen") != std::string::npos);
    const auto tsv = census_tsv(t1);
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 14);
}
