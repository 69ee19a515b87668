#include <doctest.h>

#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

#include "drg/graph.hpp"
#include "drg/kernels/bitops.hpp"

using namespace drg::kernels;

namespace {

std::vector<Isa> available() {
    std::vector<Isa> out;
    for (Isa i : {Isa::scalar, Isa::avx2, Isa::neon})
        if (isa_available(i)) out.push_back(i);
    return out;
}

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
    std::vector<Word> w(n);
    for (auto& x : w) {
        x = rng();
        for (int k = 0; k < density; ++k) x &= rng();
    }
    return w;
}

}  // namespace

TEST_CASE("scalar kernels match a per-word reference") {
    std::mt19937_64 rng(1);
    const BitOps& s = ops_for(Isa::scalar);
    for (std::size_t words : {0u, 1u, 3u, 4u, 7u, 64u}) {
        const auto a = random_words(rng, words, 1), b = random_words(rng, words, 0);
        std::size_t pc = 0, apc = 0;
        bool hit = false;
        for (std::size_t i = 0; i < words; ++i) {
            pc += std::popcount(a[i]);
            apc += std::popcount(a[i] & b[i]);
            hit = hit || (a[i] & b[i]);
        }
        CHECK(s.popcount(a.data(), words) == pc);
        CHECK(s.and_popcount(a.data(), b.data(), words) == apc);
        CHECK(s.intersects(a.data(), b.data(), words) == hit);
    }
}

TEST_CASE("every available variant agrees with scalar") {
    std::mt19937_64 rng(7);
    const BitOps& ref = ops_for(Isa::scalar);
    for (Isa isa : available()) {
        CAPTURE(isa_name(isa));
        const BitOps& t = ops_for(isa);
        for (int trial = 0; trial < 400; ++trial) {
            const std::size_t words = rng() % 70;
            const int density = int(rng() % 6);
            const auto a = random_words(rng, words, density), b = random_words(rng, words, density);
            REQUIRE(t.popcount(a.data(), words) == ref.popcount(a.data(), words));
            REQUIRE(t.and_popcount(a.data(), b.data(), words) == ref.and_popcount(a.data(), b.data(), words));
            REQUIRE(t.intersects(a.data(), b.data(), words) == ref.intersects(a.data(), b.data(), words));
            auto x = a, y = a;
            t.or_into(x.data(), b.data(), words);
            ref.or_into(y.data(), b.data(), words);
            REQUIRE(x == y);
            x = a, y = a;
            t.andnot_into(x.data(), b.data(), words);
            ref.andnot_into(y.data(), b.data(), words);
            REQUIRE(x == y);
        }
    }
}

TEST_CASE("forcing an ISA changes graph results nowhere") {
    const drg::Graph g = drg::kneser_graph(7, 3);
    std::vector<std::size_t> reference;
    force_isa(Isa::scalar);
    for (drg::Vertex u = 0; u < g.order(); ++u)
        for (drg::Vertex v = 0; v < g.order(); ++v) reference.push_back(g.common_neighbors(u, v));
    const auto edges = g.edge_count();
    for (Isa isa : available()) {
        force_isa(isa);
        CHECK(active_isa() == isa);
        std::size_t k = 0;
        for (drg::Vertex u = 0; u < g.order(); ++u)
            for (drg::Vertex v = 0; v < g.order(); ++v) REQUIRE(g.common_neighbors(u, v) == reference[k++]);
        CHECK(g.edge_count() == edges);
    }
    force_isa(Isa::scalar);
    CHECK_THROWS_AS(force_isa(isa_available(Isa::neon) ? Isa::avx2 : Isa::neon), std::invalid_argument);
}
