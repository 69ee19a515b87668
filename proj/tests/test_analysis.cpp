#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "drg/analysis.hpp"
#include "drg/catalog.hpp"
#include "drg/cayley.hpp"
#include "drg/error.hpp"
#include "drg/graph.hpp"
#include "drg/groups.hpp"

using namespace drg;

namespace {

// Intersection numbers read straight off a distance table; nullopt when some
// count varies.
std::optional<IntersectionArray> naive_array(const Graph& g) {
    const DistanceTable d(g);
    const std::size_t n = g.order();
    std::map<std::uint32_t, std::pair<int, int>> bc;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            const auto i = d(x, y);
            int b = 0, c = 0;
            for (Vertex z = 0; z < n; ++z) {
                if (!g.has_edge(y, z)) continue;
                b += d(x, z) == i + 1;
                c += d(x, z) + 1 == i;
            }
            auto [it, fresh] = bc.emplace(i, std::pair{b, c});
            if (!fresh && it->second != std::pair{b, c}) return std::nullopt;
        }
    std::vector<int> b, c;
    for (auto& [i, p] : bc) {
        if (i + 1 < bc.size()) b.push_back(p.first);
        if (i > 0) c.push_back(p.second);
    }
    return IntersectionArray(b, c);
}

// det(xI - L) for the tridiagonal intersection matrix, by the three-term
// recurrence in exact integers.
long long char_poly_at(const IntersectionArray& a, long long x) {
    long long prev = 1, cur = x - a.a_at(0);
    for (std::size_t i = 1; i <= a.diameter(); ++i) {
        const long long next = (x - a.a_at(i)) * cur - (long long)a.b_at(i - 1) * a.c_at(i) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<std::int64_t> integer_roots(const IntersectionArray& a) {
    std::vector<std::int64_t> out;
    for (long long x = a.valency(); x >= -a.valency(); --x)
        if (char_poly_at(a, x) == 0) out.push_back(x);
    return out;
}

const IntersectionArray kPetersen({3, 2}, {1, 1});
const IntersectionArray kBiggsSmith({3, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 3});

}  // namespace

TEST_CASE("intersection array arithmetic") {
    const IntersectionArray a = IntersectionArray::parse("{3,2,1;1,2,3}");
    CHECK(a.valency() == 3);
    CHECK(a.diameter() == 3);
    CHECK(a.order() == 8);
    CHECK(a.bipartite());
    CHECK(a.vertex_counts() == std::vector<std::int64_t>{1, 3, 3, 1});
    CHECK(a.str() == "{3,2,1;1,2,3}");
    CHECK(a.odd_girth() == kInfiniteGirth);
    CHECK(a.even_girth_formula() == 4);
    CHECK(kPetersen.odd_girth() == 5);
    CHECK(kPetersen.girth() == 5);
    CHECK(kBiggsSmith.order() == 102);
    CHECK(IntersectionArray::parse(" { 6 , 3 ; 1 , 2 } ") == IntersectionArray({6, 3}, {1, 2}));
    CHECK_THROWS_AS(IntersectionArray::parse("{3,2;1}"), Error);
    CHECK_THROWS_AS(validate(IntersectionArray({3, 2}, {2, 1})), Error);
    CHECK_THROWS_AS(validate(IntersectionArray({3, 3}, {1, 1})), Error);
    CHECK_THROWS_AS(IntersectionArray({3, 2}, {1, 4}).vertex_counts(), Error);
}

TEST_CASE("distance-regularity check agrees with direct counting") {
    SUBCASE("Petersen") {
        const auto r = check_distance_regular(odd_graph(3));
        REQUIRE(r.array);
        CHECK(*r.array == kPetersen);
    }
    SUBCASE("Shrikhande construction") {
        const Group z = parse_group_spec("cyclic:4*cyclic:4");
        const auto s = ConnectionSet::parse(z, "(0,1),(0,3),(1,0),(3,0),(1,1),(3,3)");
        const auto r = check_distance_regular(cayley_graph(s));
        REQUIRE(r.array);
        CHECK(*r.array == IntersectionArray({6, 3}, {1, 2}));
    }
    SUBCASE("Petersen minus an edge") {
        Graph g = odd_graph(3);
        g.remove_edge(0, 7);
        const auto r = check_distance_regular(g);
        CHECK(!r.array);
        REQUIRE(r.witness);
        CHECK(!r.witness->describe().empty());
    }
    SUBCASE("families") {
        for (const Graph& g : {hamming_graph(3, 3), kneser_graph(7, 3), crown_graph(5), cycle_graph(7),
                               complete_multipartite(3, 3), complement(hamming_graph(2, 3)),
                               line_graph(odd_graph(3)), bipartite_double(odd_graph(3))}) {
            const auto want = naive_array(g);
            const auto got = check_distance_regular(g);
            REQUIRE(want.has_value() == got.array.has_value());
            if (want) CHECK(*want == *got.array);
        }
    }
    SUBCASE("random regular-ish graphs are refused") {
        std::mt19937 rng(2);
        for (int t = 0; t < 10; ++t) {
            Graph g = cycle_graph(12);
            g.add_edge(0, 6 + rng() % 3);
            CHECK(!check_distance_regular(g).array);
        }
    }
    CHECK_THROWS_AS(check_distance_regular(Graph(3)), Error);
}

TEST_CASE("strongly regular parameters") {
    CHECK(srg_parameters(IntersectionArray({20, 16}, {1, 5})) == SrgParameters{85, 20, 3, 5});
    CHECK(srg_parameters(IntersectionArray({5, 4}, {1, 2})) == SrgParameters{16, 5, 0, 2});
    CHECK(srg_parameters(kPetersen) == SrgParameters{10, 3, 0, 1});
    CHECK(!srg_parameters(IntersectionArray({3, 2, 1}, {1, 2, 3})));
}

TEST_CASE("array spectrum") {
    SUBCASE("rational values are the integer roots of the characteristic polynomial") {
        for (const auto& a : {kPetersen, kBiggsSmith, IntersectionArray({4, 2, 1}, {1, 1, 4}),
                              IntersectionArray({5, 4, 2}, {1, 1, 4}), IntersectionArray({3, 2, 2, 1}, {1, 1, 2, 3}),
                              IntersectionArray({7, 4, 1}, {1, 2, 7}), IntersectionArray({3, 2, 2, 2, 2, 1, 1, 1},
                                                                                         {1, 1, 1, 1, 2, 2, 2, 3})}) {
            CAPTURE(a.str());
            CHECK(rational_eigenvalues(a) == integer_roots(a));
        }
    }
    SUBCASE("known values") {
        CHECK(rational_eigenvalues(kBiggsSmith) == std::vector<std::int64_t>{3, 2, 0});
        CHECK(rational_eigenvalues(IntersectionArray({5, 4, 2}, {1, 1, 4})) == std::vector<std::int64_t>{5, 2, -1, -3});
        const auto lp = rational_eigenvalues(IntersectionArray({4, 2, 1}, {1, 1, 4}));
        for (std::int64_t v : {4, 2, -1, -2}) CHECK(std::count(lp.begin(), lp.end(), v) == 1);
    }
    SUBCASE("values are decreasing and multiplicities sum to n") {
        const auto s = spectrum_of_array(kBiggsSmith);
        CHECK(s.size() == 8);
        double total = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) CHECK(s[i].value < s[i - 1].value);
            total += s[i].multiplicity;
        }
        CHECK(total == doctest::Approx(102).epsilon(1e-9));
        CHECK(s.front().value == doctest::Approx(3));
    }
}

TEST_CASE("numeric spectrum") {
    const auto k4 = spectrum_numeric(complete_graph(4));
    REQUIRE(k4.size() == 2);
    CHECK(k4[0].value == 3);
    CHECK(k4[0].multiplicity == 1);
    CHECK(k4[1].value == -1);
    CHECK(k4[1].multiplicity == 3);
    const auto c5 = spectrum_numeric(cycle_graph(5));
    REQUIRE(c5.size() == 3);
    CHECK(c5[1].value == doctest::Approx(2 * std::cos(2 * std::numbers::pi / 5)));
    CHECK(c5[2].value == doctest::Approx(2 * std::cos(4 * std::numbers::pi / 5)));
    CHECK(c5[1].multiplicity == 2);
    CHECK(!c5[1].integral);
    SUBCASE("graph spectrum equals array spectrum for distance-regular graphs") {
        for (const Graph& g : {odd_graph(3), odd_graph(4), hamming_graph(4, 2), line_graph(odd_graph(3)),
                               bipartite_double(odd_graph(3)), kneser_graph(6, 2)}) {
            const auto array = check_distance_regular(g).array;
            REQUIRE(array);
            const auto numeric = spectrum_numeric(g);
            const auto exact = spectrum_of_array(*array);
            REQUIRE(numeric.size() == exact.size());
            for (std::size_t i = 0; i < exact.size(); ++i) {
                CHECK(numeric[i].value == doctest::Approx(exact[i].value).epsilon(1e-6));
                CHECK(double(numeric[i].multiplicity) == doctest::Approx(exact[i].multiplicity).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("general eigenvalue helpers") {
    CHECK(symmetric_eigenvalues({2, 1, 1, 2}, 2).size() == 2);
    const auto r = real_eigenvalues({0, -1, 1, 0}, 2);
    CHECK(r.empty());
    const auto q = real_eigenvalues({0, 2, 3, 1}, 2);
    REQUIRE(q.size() == 2);
    std::vector<double> sorted = q;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted[0] == doctest::Approx(-2));
    CHECK(sorted[1] == doctest::Approx(3));
    CHECK(format_eigenvalue(-2.0) == "-2");
}

TEST_CASE("generalized quadrangle and hexagon parameter tests") {
    for (std::int64_t s = 1; s <= 60; ++s) {
        CHECK(gq_cayley_feasible(s).feasible == ((s + 1) % 2 != 0 && (s + 1) % 3 != 0));
        CHECK(gh_cayley_feasible(s).feasible == (s % 6 == 0 && (s + 1) % 5 != 0));
    }
    CHECK(gq_cayley_feasible(2).reason.find("3") != std::string::npos);
    CHECK(gh_cayley_feasible(4).reason == "s not multiple of 6; 5 divides s+1");
    CHECK(gh_cayley_feasible(6).feasible);
}

TEST_CASE("halving obstruction") {
    const auto bs = halving_obstruction(kBiggsSmith);
    CHECK(bs.obstructed);
    CHECK(bs.admissible_m.empty());
    const auto k4 = halving_obstruction(IntersectionArray({3}, {1}));
    CHECK(!k4.obstructed);
    CHECK(std::find(k4.admissible_m.begin(), k4.admissible_m.end(), 1) != k4.admissible_m.end());
    const auto q3 = halving_obstruction(IntersectionArray({3, 2, 1}, {1, 2, 3}));
    CHECK(std::find(q3.admissible_m.begin(), q3.admissible_m.end(), 0) != q3.admissible_m.end());
    SUBCASE("admissible m are exactly those with 2m-k in the spectrum") {
        for (const auto& a : {kPetersen, kBiggsSmith, IntersectionArray({5, 4, 2}, {1, 1, 4}),
                              IntersectionArray({6, 3}, {1, 2})}) {
            const auto ev = rational_eigenvalues(a);
            std::vector<int> want;
            for (int m = 0; m < a.valency(); ++m)
                if (std::count(ev.begin(), ev.end(), 2 * m - a.valency()) && (m > 0 || a.bipartite()))
                    want.push_back(m);
            CHECK(halving_obstruction(a).admissible_m == want);
        }
    }
}

TEST_CASE("trace of automorphisms on a generalized hexagon point graph") {
    const Graph g = load_asset("gh22-points-a.g6", resolve_data_dir());
    REQUIRE(g.order() == 63);
    const auto id = benson_trace(g, 2, Permutation(63));
    CHECK(id.trace == 63);
    CHECK(id.congruent_mod_s);
    std::vector<Vertex> swap(63);
    for (Vertex v = 0; v < 63; ++v) swap[v] = v;
    std::swap(swap[0], swap[1]);
    CHECK_THROWS_AS(benson_trace(g, 2, Permutation(swap)), Error);
}
