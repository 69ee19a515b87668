#include "drg/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "drg/error.hpp"
#include "drg/parallel.hpp"

namespace drg {

namespace {

std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

void check_vertex(const Graph& g, Vertex v) {
    if (v >= g.order()) throw Error("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
    if (n > kMaxVertices) throw Error("graph too large: " + std::to_string(n) + " vertices");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    bits_[u * words_ + v / 64] |= Word{1} << (v % 64);
    bits_[v * words_ + u / 64] |= Word{1} << (u % 64);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    bits_[u * words_ + v / 64] &= ~(Word{1} << (v % 64));
    bits_[v * words_ + u / 64] &= ~(Word{1} << (u % 64));
}

std::size_t Graph::degree(Vertex v) const { return kernels::active().popcount(row(v).data(), words_); }

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    const auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
        Word bits = r[w];
        while (bits) {
            out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t Graph::common_neighbors(Vertex u, Vertex v) const {
    return kernels::active().and_popcount(row(u).data(), row(v).data(), words_);
}

std::size_t Graph::edge_count() const {
    return kernels::active().popcount(bits_.data(), bits_.size()) / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<std::size_t> Graph::regular_degree() const {
    if (n_ == 0) return 0;
    const std::size_t k = degree(0);
    for (Vertex v = 1; v < n_; ++v)
        if (degree(v) != k) return std::nullopt;
    return k;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_) throw Error("label count does not match vertex count");
    labels_ = std::move(labels);
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.order()), d_(g.order() * g.order(), static_cast<std::uint32_t>(g.order())) {
    const auto& ops = kernels::active();
    const std::size_t words = g.words();
    parallel_for(n_, [&](std::size_t src) {
        std::vector<Word> visited(words, 0), frontier(words, 0), next(words, 0);
        visited[src / 64] |= Word{1} << (src % 64);
        frontier = visited;
        std::uint32_t* out = d_.data() + src * n_;
        out[src] = 0;
        for (std::uint32_t dist = 1;; ++dist) {
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t w = 0; w < words; ++w) {
                Word bits = frontier[w];
                while (bits) {
                    const std::size_t v = w * 64 + std::countr_zero(bits);
                    ops.or_into(next.data(), g.row(static_cast<Vertex>(v)).data(), words);
                    bits &= bits - 1;
                }
            }
            ops.andnot_into(next.data(), visited.data(), words);
            if (ops.popcount(next.data(), words) == 0) break;
            ops.or_into(visited.data(), next.data(), words);
            for (std::size_t w = 0; w < words; ++w) {
                Word bits = next[w];
                while (bits) {
                    out[w * 64 + std::countr_zero(bits)] = dist;
                    bits &= bits - 1;
                }
            }
            frontier.swap(next);
        }
    });
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.order();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> colour(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return colour;
}

std::size_t girth(const Graph& g) {
    const auto adj = adjacency_lists(g);
    std::size_t best = kInfiniteGirth;
    std::vector<std::uint32_t> dist(g.order());
    std::vector<Vertex> parent(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        dist[s] = 0;
        parent[s] = s;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            if (2 * static_cast<std::size_t>(dist[v]) + 1 >= best) break;
            for (Vertex w : adj[v]) {
                if (dist[w] == UINT32_MAX) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    best = std::min<std::size_t>(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

std::size_t odd_girth(const Graph& g) {
    const auto adj = adjacency_lists(g);
    std::size_t best = kInfiniteGirth;
    std::vector<std::uint32_t> dist(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        dist[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : adj[v]) {
                if (dist[w] == UINT32_MAX) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                } else if (dist[w] == dist[v]) {
                    best = std::min<std::size_t>(best, 2 * static_cast<std::size_t>(dist[v]) + 1);
                }
            }
        }
    }
    return best;
}

namespace {

// Is there a simple cycle of exactly `length` vertices whose smallest vertex
// is `start`?  Paths only extend through vertices > start, and a vertex is
// abandoned when it is too far from `start` to close the cycle in time.
class EvenCycleSearch {
  public:
    EvenCycleSearch(const std::vector<std::vector<Vertex>>& adj, const DistanceTable& dist)
        : adj_(adj), dist_(dist), on_path_(adj.size(), 0) {}

    bool through(Vertex start, std::size_t length) {
        start_ = start;
        length_ = length;
        on_path_[start] = 1;
        const bool found = extend(start, 1);
        on_path_[start] = 0;
        return found;
    }

  private:
    bool extend(Vertex v, std::size_t used) {
        if (used == length_) {
            return std::find(adj_[v].begin(), adj_[v].end(), start_) != adj_[v].end();
        }
        const std::size_t remaining = length_ - used;  // edges still to walk after this step, +1
        for (Vertex w : adj_[v]) {
            if (w <= start_ || on_path_[w]) continue;
            if (dist_(w, start_) > remaining) continue;
            on_path_[w] = 1;
            const bool found = extend(w, used + 1);
            on_path_[w] = 0;
            if (found) return true;
        }
        return false;
    }

    const std::vector<std::vector<Vertex>>& adj_;
    const DistanceTable& dist_;
    std::vector<char> on_path_;
    Vertex start_ = 0;
    std::size_t length_ = 0;
};

}  // namespace

std::size_t even_girth(const Graph& g, const DistanceTable& dist) {
    if (bipartition(g)) return girth(g);
    const auto adj = adjacency_lists(g);
    EvenCycleSearch search(adj, dist);
    for (std::size_t length = 4; length <= g.order(); length += 2)
        for (Vertex s = 0; s < g.order(); ++s)
            if (search.through(s, length)) return length;
    return kInfiniteGirth;
}

GraphMetrics graph_metrics(const Graph& g) {
    if (g.order() == 0) throw Error("graph_metrics needs at least one vertex");
    GraphMetrics m;
    m.distances = DistanceTable(g);
    m.connected = true;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) {
            const auto d = m.distances(u, v);
            if (d == m.distances.unreachable())
                m.connected = false;
            else
                m.diameter = std::max<std::size_t>(m.diameter, d);
        }
    m.bipartite = bipartition(g).has_value();
    m.girth = girth(g);
    m.odd_girth = m.bipartite ? kInfiniteGirth : odd_girth(g);
    m.even_girth = even_girth(g, m.distances);
    return m;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    out.set_labels(g.labels());
    return out;
}

Graph line_graph(const Graph& g) {
    const auto edges = g.edges();
    Graph out(edges.size());
    std::vector<std::vector<Vertex>> incident(g.order());
    for (Vertex e = 0; e < edges.size(); ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    for (const auto& list : incident)
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) out.add_edge(list[i], list[j]);
    return out;
}

Graph bipartite_double(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    Graph out(2 * g.order());
    for (const auto& [u, v] : g.edges()) {
        out.add_edge(u, v + n);
        out.add_edge(v, u + n);
    }
    return out;
}

Graph distance_graph(const Graph& g, std::size_t i) {
    const DistanceTable dist(g);
    std::size_t diameter = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
            if (dist(u, v) != dist.unreachable()) diameter = std::max<std::size_t>(diameter, dist(u, v));
    if (i == 0 || i > diameter)
        throw Error("distance_i needs 1 <= i <= diameter (" + std::to_string(diameter) + "), got " + std::to_string(i));
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (dist(u, v) == i) out.add_edge(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    Graph out(vertices.size());
    for (Vertex i = 0; i < vertices.size(); ++i)
        for (Vertex j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (Vertex v : vertices) labels.push_back(g.labels()[v]);
        out.set_labels(std::move(labels));
    }
    return out;
}

Graph halved_graph(const Graph& g, int part) {
    if (part != 0 && part != 1) throw Error("halved graph part must be 0 or 1");
    const auto colour = bipartition(g);
    if (!colour) throw Error("halved graph needs a bipartite graph");
    std::vector<Vertex> side;
    for (Vertex v = 0; v < g.order(); ++v)
        if ((*colour)[v] == part) side.push_back(v);
    const DistanceTable dist(g);
    Graph out(side.size());
    for (Vertex i = 0; i < side.size(); ++i)
        for (Vertex j = i + 1; j < side.size(); ++j)
            if (dist(side[i], side[j]) == 2) out.add_edge(i, j);
    return out;
}

Graph antipodal_quotient(const Graph& g) {
    const DistanceTable dist(g);
    if (!is_connected(g)) throw Error("antipodal quotient needs a connected graph");
    std::size_t d = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) d = std::max<std::size_t>(d, dist(u, v));
    const std::size_t n = g.order();
    std::vector<Vertex> cls(n, static_cast<Vertex>(n));
    std::vector<Vertex> reps;
    for (Vertex v = 0; v < n; ++v) {
        if (cls[v] != n) continue;
        std::vector<Vertex> members{v};
        for (Vertex u = v + 1; u < n; ++u)
            if (dist(u, v) == d) members.push_back(u);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (dist(members[i], members[j]) != d)
                    throw Error("distance-" + std::to_string(d) + " graph is not a disjoint union of cliques (vertices " +
                                std::to_string(members[i]) + ", " + std::to_string(members[j]) + ")");
        for (Vertex u : members) {
            if (cls[u] != n) throw Error("distance-" + std::to_string(d) + " graph is not a disjoint union of cliques");
            cls[u] = static_cast<Vertex>(reps.size());
        }
        reps.push_back(v);
    }
    Graph out(reps.size());
    for (const auto& [u, v] : g.edges())
        if (cls[u] != cls[v]) out.add_edge(cls[u], cls[v]);
    return out;
}

Graph derived_graph(const Graph& g, DerivedKind kind, std::size_t param) {
    switch (kind) {
        case DerivedKind::complement: return complement(g);
        case DerivedKind::line_graph: return line_graph(g);
        case DerivedKind::bipartite_double: return bipartite_double(g);
        case DerivedKind::distance_i: return distance_graph(g, param);
        case DerivedKind::halved: return halved_graph(g, static_cast<int>(param));
        case DerivedKind::antipodal_quotient: return antipodal_quotient(g);
    }
    throw Error("unknown derived graph kind");
}

Graph complete_graph(std::size_t n) {
    Graph out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.add_edge(u, v);
    return out;
}

Graph complete_multipartite(std::size_t parts, std::size_t part_size) {
    Graph out(parts * part_size);
    for (Vertex u = 0; u < out.order(); ++u)
        for (Vertex v = u + 1; v < out.order(); ++v)
            if (u / part_size != v / part_size) out.add_edge(u, v);
    return out;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    Graph out(n);
    for (Vertex v = 0; v < n; ++v) out.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return out;
}

Graph hamming_graph(std::size_t d, std::size_t q) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        n *= q;
        if (n > kMaxVertices) throw Error("Hamming graph too large");
    }
    Graph out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            std::size_t diff = 0;
            for (std::size_t a = u, b = v, i = 0; i < d; ++i, a /= q, b /= q) diff += (a % q) != (b % q);
            if (diff == 1) out.add_edge(u, v);
        }
    return out;
}

Graph kneser_graph(std::size_t m, std::size_t k) {
    // C(m, k) with an overflow guard.
    std::size_t count = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        count = count * (m - k + i) / i;
        if (count > 100000) throw Error("Kneser graph K(" + std::to_string(m) + "," + std::to_string(k) + ") exceeds 1e5 vertices");
    }
    std::vector<std::uint64_t> masks;
    std::vector<std::string> labels;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::uint64_t mask = 0;
        std::string label = "{";
        for (std::size_t i = 0; i < k; ++i) {
            mask |= std::uint64_t{1} << pick[i];
            label += (i ? "," : "") + std::to_string(pick[i] + 1);
        }
        masks.push_back(mask);
        labels.push_back(label + "}");
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    Graph out(masks.size());
    for (Vertex u = 0; u < masks.size(); ++u)
        for (Vertex v = u + 1; v < masks.size(); ++v)
            if ((masks[u] & masks[v]) == 0) out.add_edge(u, v);
    out.set_labels(std::move(labels));
    return out;
}

Graph crown_graph(std::size_t n) {
    Graph out(2 * n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j) out.add_edge(i, static_cast<Vertex>(n + j));
    return out;
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, nbits = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw Error("graph6: empty line");
    for (char ch : line)
        if (ch < 63 || ch > 126) throw Error("graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(ch))) + " out of range");
    std::size_t pos = 0, n = 0;
    auto chunk = [&](std::size_t count) {
        if (pos + count > line.size()) throw Error("graph6: malformed header");
        std::size_t value = 0;
        for (std::size_t i = 0; i < count; ++i) value = (value << 6) | static_cast<std::size_t>(line[pos++] - 63);
        return value;
    };
    if (line[0] != 126) {
        n = chunk(1);
    } else if (line.size() > 1 && line[1] != 126) {
        ++pos;
        n = chunk(3);
    } else {
        pos += 2;
        n = chunk(6);
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (line.size() - pos < need) throw Error("graph6: truncated bit stream (" + std::to_string(line.size() - pos) + " of " + std::to_string(need) + " bytes)");
    if (line.size() - pos > need) throw Error("graph6: trailing bytes after bit stream");
    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = line[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    return g;
}

Graph from_edge_list(std::string_view text, std::optional<std::size_t> n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t max_vertex = 0;
    bool any = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        long long u = 0, v = 0;
        if (!(fields >> u)) continue;
        if (!(fields >> v) || u < 0 || v < 0) throw Error("edge list line " + std::to_string(lineno) + ": expected two non-negative indices");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        max_vertex = std::max<std::size_t>(max_vertex, static_cast<std::size_t>(std::max(u, v)));
        any = true;
    }
    Graph g(n.value_or(any ? max_vertex + 1 : 0));
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error("graph file " + path + " is empty");
    // graph6 bytes lie in 63..126, so a leading digit or '#' means an edge list.
    if (std::isdigit(static_cast<unsigned char>(text[first])) || text[first] == '#') return from_edge_list(text);
    const auto eol = text.find('\n', first);
    return from_graph6(std::string_view(text).substr(first, eol == std::string::npos ? std::string::npos : eol - first));
}

}  // namespace drg
