#include "drg/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

#include "drg/error.hpp"

namespace drg {

ConnectionSet::ConnectionSet(Group group, std::vector<Element> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (Element x : elements_) {
        if (x >= group_.order()) throw Error("connection set element out of range");
        if (x == group_.identity()) throw Error("connection set contains the identity");
        if (!contains(group_.inverse(x)))
            throw Error("connection set is not inverse-closed: missing inverse of " + group_.label(x));
    }
}

ConnectionSet ConnectionSet::parse(const Group& group, std::string_view text) {
    std::vector<Element> xs;
    std::size_t start = 0;
    while (start <= text.size()) {
        // commas inside parentheses belong to cycle notation or tuples
        std::size_t i = start;
        int depth = 0;
        while (i < text.size() && !(text[i] == ',' && depth == 0)) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            ++i;
        }
        std::string_view token = text.substr(start, i - start);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
        if (!token.empty()) xs.push_back(group.parse_element(token));
        start = i + 1;
    }
    return ConnectionSet(group, std::move(xs));
}

bool ConnectionSet::contains(Element x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool ConnectionSet::generates() const { return subgroup_closure(group_, elements_).order() == group_.order(); }

std::string ConnectionSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < elements_.size(); ++i) out += (i ? "," : "") + group_.label(elements_[i]);
    return out;
}

Graph cayley_graph(const ConnectionSet& s) {
    const Group& g = s.group();
    const std::size_t n = g.order();
    if (n > kMaxVertices) throw Error("Cayley graph too large");
    Graph out(n);
    // b ~ s b
    for (Element b = 0; b < n; ++b)
        for (Element x : s.elements()) {
            const Element a = g.mul(x, b);
            if (a > b) out.add_edge(a, b);
        }
    out.set_labels(g.labels());
    return out;
}

DistanceSets distance_sets(const ConnectionSet& s) {
    const Group& g = s.group();
    const std::size_t n = g.order();
    DistanceSets out;
    std::vector<char> seen(n, 0);
    out.sets.push_back({g.identity()});
    seen[g.identity()] = 1;
    if (!s.elements().empty()) {
        out.sets.push_back(s.elements());
        for (Element x : s.elements()) seen[x] = 1;
    }
    while (true) {
        const auto& cur = out.sets.back();
        std::vector<Element> next;
        for (Element x : s.elements())
            for (Element y : cur) {
                const Element z = g.mul(x, y);
                if (!seen[z]) {
                    seen[z] = 1;
                    next.push_back(z);
                }
            }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        out.sets.push_back(std::move(next));
    }
    std::size_t covered = 0;
    for (const auto& layer : out.sets) covered += layer.size();
    if (covered != n) throw Error("distance sets: Cayley graph is disconnected");

    const DistanceTable dist(cayley_graph(s));
    for (std::size_t i = 0; i < out.sets.size(); ++i)
        for (Element x : out.sets[i])
            if (dist(g.identity(), x) != i) throw Error("distance sets disagree with BFS at element " + g.label(x));

    out.antipodal = out.sets.back();
    out.antipodal.push_back(g.identity());
    std::sort(out.antipodal.begin(), out.antipodal.end());
    out.antipodal_is_subgroup = subgroup_closure(g, out.antipodal).order() == out.antipodal.size();
    return out;
}

std::optional<std::vector<std::vector<int>>> equitable_quotient(const Graph& g,
                                                                const std::vector<std::vector<Vertex>>& parts) {
    const std::size_t m = parts.size();
    std::vector<std::size_t> part_of(g.order(), m);
    for (std::size_t i = 0; i < m; ++i)
        for (Vertex v : parts[i]) {
            if (v >= g.order() || part_of[v] != m) throw Error("equitable_quotient: parts do not partition the vertices");
            part_of[v] = i;
        }
    for (std::size_t p : part_of)
        if (p == m) throw Error("equitable_quotient: parts do not cover the vertices");
    std::vector<std::vector<int>> q(m, std::vector<int>(m, -1));
    for (std::size_t i = 0; i < m; ++i)
        for (Vertex v : parts[i]) {
            std::vector<int> row(m, 0);
            for (Vertex w : g.neighbors(v)) ++row[part_of[w]];
            if (q[i][0] < 0) q[i] = row;
            else if (q[i] != row) return std::nullopt;
        }
    return q;
}

QuotientMatrix coset_quotient(const ConnectionSet& s, const SubgroupHandle& h) {
    const Group& g = s.group();
    if (!same_group(g, h.parent())) throw Error("coset_quotient: subgroup of a different group");
    if (!is_normal(h)) throw Error("coset_quotient: subgroup is not normal");
    QuotientMatrix q;
    q.parts = right_cosets(h);
    const std::size_t m = q.parts.size();
    q.entries.assign(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            // |S ∩ H c b^-1|
            const Element cb = g.mul(q.parts[i][0], g.inverse(q.parts[j][0]));
            int count = 0;
            for (Element x : h.elements()) count += s.contains(g.mul(x, cb));
            q.entries[i][j] = count;
        }
    const Graph graph = cayley_graph(s);
    std::vector<std::vector<Vertex>> parts(q.parts.begin(), q.parts.end());
    const auto direct = equitable_quotient(graph, parts);
    if (!direct || *direct != q.entries) throw Error("coset_quotient: formula disagrees with neighbour counts");
    std::vector<double> flat;
    for (const auto& row : q.entries)
        for (int v : row) flat.push_back(v);
    q.eigenvalues = real_eigenvalues(flat, m);
    const Spectrum spec = spectrum_numeric(graph);
    q.eigenvalues_in_spectrum = std::all_of(q.eigenvalues.begin(), q.eigenvalues.end(), [&](double ev) {
        return std::any_of(spec.begin(), spec.end(), [&](const SpectrumEntry& e) { return std::abs(e.value - ev) < 1e-6; });
    });
    return q;
}

GirthLemmaReport girth_lemma_predicates(const ConnectionSet& s, std::optional<std::size_t> assumed_girth) {
    const Group& g = s.group();
    const Graph graph = cayley_graph(s);
    GirthLemmaReport r;
    r.girth = girth(graph);
    r.assumed_girth = assumed_girth.value_or(r.girth);
    r.abelian_forces_4cycle = g.is_abelian() && s.size() > 2;
    r.contradiction = r.abelian_forces_4cycle && r.assumed_girth > 4;
    if (r.assumed_girth > 4) {
        for (Element x : s.elements()) {
            const std::size_t m = g.element_order(x);
            if (m <= 2 || x > g.inverse(x)) continue;
            if (r.assumed_girth > m) r.contradiction = true;
            CyclePartition p{x, m, right_cosets(subgroup_closure(g, std::vector<Element>{x})), true};
            for (const auto& coset : p.cosets) {
                std::vector<Vertex> vs(coset.begin(), coset.end());
                const Graph sub = induced_subgraph(graph, vs);
                p.induced_cycles = p.induced_cycles && sub.regular_degree() == std::size_t(2) && is_connected(sub);
            }
            if (!p.induced_cycles) r.contradiction = true;
            r.order_m_cycle_partitions.push_back(std::move(p));
        }
    }
    return r;
}

HkDecomposition hk_decomposition(const ConnectionSet& s, std::size_t q, std::size_t d) {
    const Group& g = s.group();
    const auto& el = s.elements();
    HkDecomposition out;
    if (el.size() != 2 * q) throw Error("hk_decomposition needs |S| = 2q");
    std::vector<char> in_s_e(g.order(), 0);
    in_s_e[g.identity()] = 1;
    for (Element x : el) in_s_e[x] = 1;

    out.closure_condition_holds = true;
    for (Element a : el) {
        const std::size_t m = g.element_order(a);
        if (m % 2 != 0 || m / 2 < d) continue;
        for (Element p = a; p != g.identity(); p = g.mul(p, a))
            if (!in_s_e[p]) out.closure_condition_holds = false;
    }

    auto closed = [&](const std::vector<Element>& xs) {
        std::vector<char> in(g.order(), 0);
        for (Element x : xs) in[x] = 1;
        for (Element x : xs)
            for (Element y : xs)
                if (!in[g.mul(x, y)]) return false;
        return true;
    };
    if (q == 0) return out;
    // H contains el[0]; choose its other q-1 members from el[1..]
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
        if (pick.size() == q - 1) {
            std::vector<Element> h{g.identity(), el[0]}, k{g.identity()};
            std::vector<char> used(el.size(), 0);
            used[0] = 1;
            for (std::size_t i : pick) {
                h.push_back(el[i]);
                used[i] = 1;
            }
            for (std::size_t i = 0; i < el.size(); ++i)
                if (!used[i]) k.push_back(el[i]);
            if (closed(h) && closed(k)) {
                std::sort(h.begin(), h.end());
                std::sort(k.begin(), k.end());
                out.h = std::move(h);
                out.k = std::move(k);
                return true;
            }
            return false;
        }
        for (std::size_t i = from; i < el.size(); ++i) {
            pick.push_back(i);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    out.found = rec(1);
    return out;
}

namespace {

// Array of Cay(G,S) read from the identity vertex, or nothing if some
// distance class has non-constant parameters or the graph is disconnected.
std::optional<IntersectionArray> cayley_array(const Group& g, const std::vector<Element>& s) {
    const std::size_t n = g.order();
    constexpr std::uint32_t unseen = UINT32_MAX;
    std::vector<std::uint32_t> dist(n, unseen);
    std::vector<Element> order{g.identity()};
    dist[g.identity()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Element x : s) {
            const Element z = g.mul(x, order[i]);
            if (dist[z] == unseen) {
                dist[z] = dist[order[i]] + 1;
                order.push_back(z);
            }
        }
    if (order.size() != n) return std::nullopt;
    const std::uint32_t diam = dist[order.back()];
    std::vector<int> a(diam + 1, -1), b(diam + 1, -1), c(diam + 1, -1);
    for (Element y : order) {
        const std::uint32_t i = dist[y];
        int ca = 0, cb = 0, cc = 0;
        for (Element x : s) {
            const std::uint32_t dz = dist[g.mul(x, y)];
            if (dz + 1 == i) ++cc;
            else if (dz == i) ++ca;
            else ++cb;
        }
        if (a[i] < 0) {
            a[i] = ca;
            b[i] = cb;
            c[i] = cc;
        } else if (a[i] != ca || b[i] != cb || c[i] != cc) {
            return std::nullopt;
        }
    }
    IntersectionArray arr;
    for (std::uint32_t i = 0; i < diam; ++i) arr.b.push_back(b[i]);
    for (std::uint32_t i = 1; i <= diam; ++i) arr.c.push_back(c[i]);
    return arr;
}

}  // namespace

std::vector<ConnectionSet> connection_set_search(const Group& g, const IntersectionArray& target, SearchLimits limits) {
    validate(target);
    const std::size_t n = g.order();
    const std::size_t k = std::size_t(target.valency());
    if (std::int64_t(n) != target.order())
        throw Error("connection_set_search: |G| = " + std::to_string(n) + " but the array needs " +
                    std::to_string(target.order()) + " vertices");
    if (k > limits.max_valency) throw Error("connection_set_search: valency exceeds the size guard");
    const std::size_t gir = target.girth();
    const int a1 = target.a_at(1);
    const int c2 = target.diameter() >= 2 ? target.c_at(2) : 0;
    std::vector<ConnectionSet> results;
    if (g.is_abelian() && gir > 4 && k > 2) return results;

    // inverse-pair classes, skipping elements whose order m satisfies 2 < m < girth
    std::vector<std::vector<Element>> classes;
    std::vector<std::size_t> class_of(n, SIZE_MAX);
    for (Element x = 0; x < n; ++x) {
        if (x == g.identity() || g.inverse(x) < x) continue;
        const std::size_t m = g.element_order(x);
        if (m > 2 && m < gir) continue;
        class_of[x] = class_of[g.inverse(x)] = classes.size();
        classes.push_back(x == g.inverse(x) ? std::vector<Element>{x} : std::vector<Element>{x, g.inverse(x)});
    }
    std::vector<std::size_t> suffix(classes.size() + 1, 0);
    for (std::size_t i = classes.size(); i-- > 0;) suffix[i] = suffix[i + 1] + classes[i].size();

    Deadline deadline(limits.budget_seconds);
    std::vector<Element> chosen;
    std::vector<char> in_s(n, 0);
    // pairs (s, t) in S with s^-1 t = x, s != t
    std::vector<int> count(n, 0);
    const int open_bound = std::max(a1, c2);

    auto bound = [&](Element x, std::size_t pos) {
        if (in_s[x]) return a1;
        if (class_of[x] == SIZE_MAX || class_of[x] < pos) return c2;
        return open_bound;
    };
    // Adds x to S, updating counts; returns false on a violated bound.
    auto add = [&](Element x, std::size_t pos) {
        bool ok = true;
        in_s[x] = 1;
        for (Element y : chosen) {
            const Element u = g.mul(g.inverse(x), y), v = g.mul(g.inverse(y), x);
            ++count[u];
            ++count[v];
        }
        chosen.push_back(x);
        for (Element y : chosen) {
            if (y == x) continue;
            const Element u = g.mul(g.inverse(x), y), v = g.mul(g.inverse(y), x);
            if (count[u] > bound(u, pos) || count[v] > bound(v, pos)) ok = false;
        }
        // membership of x itself tightens its own bound
        if (count[x] > a1) ok = false;
        return ok;
    };
    auto remove = [&](Element x) {
        chosen.pop_back();
        in_s[x] = 0;
        for (Element y : chosen) {
            --count[g.mul(g.inverse(x), y)];
            --count[g.mul(g.inverse(y), x)];
        }
    };

    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t remaining) {
        deadline.check("connection_set_search");
        if (limits.max_results && results.size() >= limits.max_results) return;
        if (remaining == 0) {
            std::vector<Element> s = chosen;
            std::sort(s.begin(), s.end());
            const auto arr = cayley_array(g, s);
            if (arr && *arr == target) results.emplace_back(g, std::move(s));
            return;
        }
        if (pos == classes.size() || suffix[pos] < remaining) return;
        const auto& cls = classes[pos];
        if (cls.size() <= remaining) {
            bool ok = true;
            std::size_t added = 0;
            for (Element x : cls) {
                ++added;
                if (!add(x, pos + 1)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(pos + 1, remaining - cls.size());
            for (std::size_t i = added; i-- > 0;) remove(cls[i]);
        }
        // excluding the class caps its members at c2
        for (Element x : cls)
            if (count[x] > c2) return;
        rec(pos + 1, remaining);
    };
    rec(0, k);
    std::sort(results.begin(), results.end(),
              [](const ConnectionSet& x, const ConnectionSet& y) { return x.elements() < y.elements(); });
    return results;
}

}  // namespace drg
