#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drg/kernels/bitops.hpp"

namespace drg {

using Vertex = std::uint32_t;
using kernels::Word;

// Largest vertex count the bit-row representation is sized for.
inline constexpr std::size_t kMaxVertices = 4096;

// Simple undirected graph on vertices 0..n-1, adjacency stored as one bit
// row per vertex.  Symmetric, loop-free.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t order() const { return n_; }
    std::size_t words() const { return words_; }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }

    std::span<const Word> row(Vertex v) const { return {bits_.data() + v * words_, words_}; }

    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::size_t common_neighbors(Vertex u, Vertex v) const;
    std::size_t edge_count() const;
    // Edges as (min, max) pairs in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    // Valency if every vertex has the same degree.
    std::optional<std::size_t> regular_degree() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // Adjacency only; labels are annotations.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

  private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
    std::vector<std::string> labels_;
};

// Hop distances; disconnected pairs hold the sentinel n.
class DistanceTable {
  public:
    DistanceTable() = default;
    explicit DistanceTable(const Graph& g);

    std::size_t order() const { return n_; }
    std::uint32_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
    std::uint32_t unreachable() const { return static_cast<std::uint32_t>(n_); }
    std::span<const std::uint32_t> row(Vertex u) const { return {d_.data() + u * n_, n_}; }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> d_;
};

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

struct GraphMetrics {
    DistanceTable distances;
    std::size_t diameter = 0;        // over connected pairs
    std::size_t girth = kInfiniteGirth;
    std::size_t odd_girth = kInfiniteGirth;
    std::size_t even_girth = kInfiniteGirth;
    bool connected = false;
    bool bipartite = false;
};

GraphMetrics graph_metrics(const Graph& g);

// Shortest cycle overall / of odd length / of even length, by direct search.
std::size_t girth(const Graph& g);
std::size_t odd_girth(const Graph& g);
std::size_t even_girth(const Graph& g, const DistanceTable& dist);

bool is_connected(const Graph& g);
// Proper 2-colouring (colour of each vertex) if one exists; each component's
// smallest vertex gets colour 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

// Derived graphs.
enum class DerivedKind { complement, line_graph, bipartite_double, distance_i, halved, antipodal_quotient };

Graph complement(const Graph& g);
// Vertices are the edges of g in lexicographic (min, max) order.
Graph line_graph(const Graph& g);
// Vertex (v, side) has index v + side * n.
Graph bipartite_double(const Graph& g);
Graph distance_graph(const Graph& g, std::size_t i);
// Distance-2 graph restricted to colour class `part`; vertices renumbered in
// increasing order of their original index.
Graph halved_graph(const Graph& g, int part);
// Contracts each clique of the distance-diameter graph; throws if that graph
// is not a disjoint union of cliques.  Quotient vertices are numbered by the
// smallest original vertex of their clique.
Graph antipodal_quotient(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph derived_graph(const Graph& g, DerivedKind kind, std::size_t param = 0);

// Standard families.
Graph complete_graph(std::size_t n);
Graph complete_multipartite(std::size_t parts, std::size_t part_size);
Graph cycle_graph(std::size_t n);
Graph hamming_graph(std::size_t d, std::size_t q);
// k-subsets of {1..m}, adjacent when disjoint; subsets in lexicographic order.
Graph kneser_graph(std::size_t m, std::size_t k);
inline Graph odd_graph(std::size_t n) { return kneser_graph(2 * n - 1, n - 1); }
// Bipartite K_{n,n} minus a perfect matching: i ~ n+j iff i != j.
Graph crown_graph(std::size_t n);

// graph6 text (no ">>graph6<<" header).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// "u v" per line, 0-based; '#' starts a comment.  The vertex count is one more
// than the largest index unless `n` is given.
Graph from_edge_list(std::string_view text, std::optional<std::size_t> n = std::nullopt);
// Reads a file holding either one graph6 line or an edge list.
Graph read_graph_file(const std::string& path);

}  // namespace drg
