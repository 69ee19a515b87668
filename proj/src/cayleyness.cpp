#include "drg/cayleyness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "drg/analysis.hpp"
#include "drg/budget.hpp"
#include "drg/error.hpp"

namespace drg {
namespace {

struct Partition {
    std::vector<std::uint32_t> color;  // ranks 0..cells-1
    std::uint32_t cells = 0;
    std::uint64_t trace = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return h * 0xFF51AFD7ED558CCDull;
}

// Colour refinement seeded by distance multisets.  Every step depends only on
// colours, so the result is invariant under automorphisms.
class Refiner {
  public:
    explicit Refiner(const Graph& g) : g_(g), adj_(g.order()) {
        for (Vertex v = 0; v < g.order(); ++v) adj_[v] = g.neighbors(v);
    }

    Partition root() const {
        const std::size_t n = g_.order();
        const DistanceTable dist(g_);
        std::vector<std::vector<std::uint32_t>> profile(n, std::vector<std::uint32_t>(n + 1, 0));
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u = 0; u < n; ++u) ++profile[v][dist(v, u)];
        Partition p;
        p.color = rank(profile, p.cells, p.trace);
        refine(p);
        return p;
    }

    Partition individualize(const Partition& p, Vertex v) const {
        Partition q;
        q.color.resize(p.color.size());
        for (Vertex u = 0; u < p.color.size(); ++u) q.color[u] = 2 * p.color[u] + (u == v ? 0 : 1);
        q.cells = p.cells + 1;
        q.trace = mix(p.trace, p.color[v]);
        refine(q);
        return q;
    }

    // First non-singleton cell of least size, ascending; empty when discrete.
    std::vector<Vertex> target_cell(const Partition& p) const {
        std::vector<std::uint32_t> size(p.cells, 0);
        for (std::uint32_t c : p.color) ++size[c];
        std::uint32_t best = UINT32_MAX, best_size = UINT32_MAX;
        for (std::uint32_t c = 0; c < p.cells; ++c)
            if (size[c] > 1 && size[c] < best_size) {
                best = c;
                best_size = size[c];
            }
        std::vector<Vertex> cell;
        if (best == UINT32_MAX) return cell;
        for (Vertex v = 0; v < p.color.size(); ++v)
            if (p.color[v] == best) cell.push_back(v);
        return cell;
    }

  private:
    template <class Sig>
    static std::vector<std::uint32_t> rank(const std::vector<Sig>& sig, std::uint32_t& cells, std::uint64_t& trace) {
        const std::size_t n = sig.size();
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), Vertex(0));
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
        std::vector<std::uint32_t> color(n);
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i - 1]] < sig[order[i]]) {
                ++c;
                trace = mix(trace, i);
            }
            color[order[i]] = c;
        }
        for (std::size_t i = 0; i < n; i += std::max<std::size_t>(1, n / 8))
            for (auto x : sig[order[i]]) trace = mix(trace, x);
        cells = n ? c + 1 : 0;
        return color;
    }

    void refine(Partition& p) const {
        const std::size_t n = g_.order();
        std::vector<std::vector<std::uint32_t>> sig(n);
        while (true) {
            for (Vertex v = 0; v < n; ++v) {
                auto& s = sig[v];
                s.clear();
                s.push_back(p.color[v]);
                for (Vertex u : adj_[v]) s.push_back(p.color[u]);
                std::sort(s.begin() + 1, s.end());
            }
            std::uint32_t cells = 0;
            auto color = rank(sig, cells, p.trace);
            const bool stable = cells == p.cells;
            p.color = std::move(color);
            p.cells = cells;
            if (stable) break;
        }
        p.trace = mix(p.trace, p.cells);
    }

    const Graph& g_;
    std::vector<std::vector<Vertex>> adj_;
};

class AutomorphismSearch {
  public:
    AutomorphismSearch(const Graph& g, double budget) : g_(g), refiner_(g), deadline_(budget) {}

    PermutationGroup run() {
        const std::size_t n = g_.order();
        if (n == 0) return PermutationGroup(0, {});
        first_.push_back(refiner_.root());
        while (true) {
            auto cell = refiner_.target_cell(first_.back());
            if (cell.empty()) break;
            base_.push_back(cell[0]);
            cells_.push_back(std::move(cell));
            first_.push_back(refiner_.individualize(first_[first_.size() - 1], base_.back()));
        }
        leaf_ = first_.back().color;
        for (std::size_t l = base_.size(); l-- > 0;) {
            for (Vertex w : cells_[l]) {
                if (w == base_[l] || in_orbit(l, w)) continue;
                const Partition p = refiner_.individualize(first_[l], w);
                if (p.trace != first_[l + 1].trace) continue;
                dfs(p, l + 1);
            }
        }
        BigInt product = 1;
        for (std::size_t l = 0; l < base_.size(); ++l) product *= orbit(l).size();
        PermutationGroup group(n, gens_, base_);
        if (group.order() != product) throw Error("automorphism search: orbit product disagrees with Schreier-Sims");
        return group;
    }

  private:
    std::vector<Permutation> stabilizer_gens(std::size_t l) const {
        std::vector<Permutation> out;
        for (const auto& p : gens_) {
            bool fixes = true;
            for (std::size_t j = 0; j < l && fixes; ++j) fixes = p(base_[j]) == base_[j];
            if (fixes) out.push_back(p);
        }
        return out;
    }

    std::vector<Vertex> orbit(std::size_t l) const {
        const auto gens = stabilizer_gens(l);
        std::vector<char> seen(g_.order(), 0);
        std::vector<Vertex> orb{base_[l]};
        seen[base_[l]] = 1;
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const auto& p : gens)
                if (!seen[p(orb[i])]) {
                    seen[p(orb[i])] = 1;
                    orb.push_back(p(orb[i]));
                }
        return orb;
    }

    bool in_orbit(std::size_t l, Vertex w) const {
        const auto orb = orbit(l);
        return std::find(orb.begin(), orb.end(), w) != orb.end();
    }

    bool dfs(const Partition& p, std::size_t level) {
        deadline_.check("automorphism_group");
        const auto cell = refiner_.target_cell(p);
        if (cell.empty()) {
            const std::size_t n = g_.order();
            std::vector<Vertex> at(n);
            for (Vertex v = 0; v < n; ++v) at[p.color[v]] = v;
            std::vector<Vertex> image(n);
            for (Vertex u = 0; u < n; ++u) image[u] = at[leaf_[u]];
            Permutation pi(std::move(image));
            if (!is_automorphism(g_, pi)) return false;
            gens_.push_back(std::move(pi));
            return true;
        }
        for (Vertex w : cell) {
            const Partition q = refiner_.individualize(p, w);
            if (q.trace != first_[level + 1].trace) continue;
            if (dfs(q, level + 1)) return true;
        }
        return false;
    }

    const Graph& g_;
    Refiner refiner_;
    Deadline deadline_;
    std::vector<Partition> first_;
    std::vector<Vertex> base_;
    std::vector<std::vector<Vertex>> cells_;
    std::vector<std::uint32_t> leaf_;
    std::vector<Permutation> gens_;
};

}  // namespace

PermutationGroup automorphism_group(const Graph& g, double budget_seconds) {
    AutomorphismSearch search(g, budget_seconds);
    PermutationGroup group = search.run();
    for (const auto& p : group.generators())
        if (!is_automorphism(g, p)) throw Error("automorphism search returned a non-automorphism");
    return group;
}

namespace {

class RegularSearch {
  public:
    RegularSearch(const PermutationGroup& aut, const Graph& g, const RegularSearchOptions& opt)
        : g_(g), opt_(opt), deadline_(opt.budget_seconds), n_(g.order()) {
        chain_ = PermutationGroup(n_, aut.generators(), {0});
        const BigInt stab = chain_.order() / n_;
        if (stab > BigInt(opt.max_stabilizer))
            throw Error("regular subgroup search: point stabilizer of order " + stab.str() + " exceeds the size guard");
        stabilizer_.push_back(Permutation(n_));
        for (std::size_t l = chain_.levels(); l-- > 1;) {
            // g = h * u with h in the deeper stabilizer and u a level-l coset representative
            std::vector<Permutation> next;
            next.reserve(stabilizer_.size() * chain_.fundamental_orbit(l).size());
            for (Vertex beta : chain_.fundamental_orbit(l))
                for (const auto& h : stabilizer_) next.push_back(h * *chain_.transversal(l, beta));
            stabilizer_ = std::move(next);
        }
        std::vector<char> seen(n_, 0);
        order_.push_back(0);
        seen[0] = 1;
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (Vertex w : g.neighbors(order_[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    order_.push_back(w);
                }
        for (Vertex v = 0; v < n_; ++v)
            if (!seen[v]) order_.push_back(v);
        candidates_.resize(n_);
        computed_.assign(n_, 0);
    }

    RegularSearchResult run() {
        RegularSearchResult result;
        State st;
        st.at.assign(n_, -1);
        st.elems.push_back(Permutation(n_));
        st.at[0] = 0;
        if (n_ == 1) {
            result.witness = RegularWitness{0, st.elems};
            return result;
        }
        const Vertex v1 = order_[1];
        const auto& cands = candidates(v1);
        std::vector<Permutation> fix_v1;
        for (const auto& h : stabilizer_)
            if (h(v1) == v1) fix_v1.push_back(h);
        std::map<std::vector<Vertex>, std::size_t> index;
        for (std::size_t i = 0; i < cands.size(); ++i) index[cands[i].images()] = i;
        std::vector<char> covered(cands.size(), 0);
        for (std::size_t i = 0; i < cands.size() && !found_; ++i) {
            if (covered[i]) continue;
            for (const auto& h : fix_v1) {
                const Permutation c = h.inverse() * cands[i] * h;
                const auto it = index.find(c.images());
                if (it != index.end()) covered[it->second] = 1;
            }
            State next = st;
            if (extend(next, cands[i])) search(next);
        }
        result.nodes = nodes_;
        if (found_) result.witness = std::move(witness_);
        return result;
    }

  private:
    struct State {
        std::vector<Permutation> elems, gens;
        std::vector<int> at;  // vertex -> element mapping 0 there
    };

    const std::vector<Permutation>& candidates(Vertex v) {
        if (!computed_[v]) {
            const Permutation& u = *chain_.transversal(0, v);
            for (const auto& h : stabilizer_) {
                Permutation c = h * u;
                if (c.is_semiregular()) candidates_[v].push_back(std::move(c));
            }
            std::sort(candidates_[v].begin(), candidates_[v].end());
            computed_[v] = 1;
        }
        return candidates_[v];
    }

    bool extend(State& st, const Permutation& x) {
        st.gens.push_back(x);
        for (std::size_t i = 0; i < st.elems.size(); ++i)
            for (const auto& gen : st.gens) {
                Permutation p = st.elems[i] * gen;
                const Vertex v = p(0);
                if (st.at[v] < 0) {
                    if (!p.is_semiregular() || st.elems.size() == n_) return false;
                    st.at[v] = static_cast<int>(st.elems.size());
                    st.elems.push_back(std::move(p));
                } else if (!(st.elems[st.at[v]] == p)) {
                    return false;
                }
            }
        return n_ % st.elems.size() == 0;
    }

    void search(const State& st) {
        ++nodes_;
        deadline_.check("regular_subgroup_search");
        if (st.elems.size() == n_) {
            RegularWitness w{0, std::vector<Permutation>(n_)};
            for (Vertex v = 0; v < n_; ++v) w.sigma[v] = st.elems[st.at[v]];
            if (!opt_.accept || opt_.accept(w)) {
                witness_ = std::move(w);
                found_ = true;
            }
            return;
        }
        Vertex v = 0;
        for (Vertex u : order_)
            if (st.at[u] < 0) {
                v = u;
                break;
            }
        for (const auto& c : candidates(v)) {
            if (found_) return;
            State next = st;
            if (extend(next, c)) search(next);
        }
    }

    const Graph& g_;
    const RegularSearchOptions& opt_;
    Deadline deadline_;
    std::size_t n_;
    PermutationGroup chain_;
    std::vector<Permutation> stabilizer_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Permutation>> candidates_;
    std::vector<char> computed_;
    std::size_t nodes_ = 0;
    bool found_ = false;
    RegularWitness witness_;
};

void verify_witness(const Graph& g, const RegularWitness& w) {
    const std::size_t n = g.order();
    if (w.sigma.size() != n) throw Error("regular witness has the wrong size");
    for (Vertex v = 0; v < n; ++v) {
        if (w.sigma[v](w.base) != v) throw Error("regular witness element does not map the base correctly");
        if (!is_automorphism(g, w.sigma[v])) throw Error("regular witness element is not an automorphism");
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            const Permutation p = w.sigma[u] * w.sigma[v];
            if (!(p == w.sigma[p(w.base)])) throw Error("regular witness is not closed under composition");
        }
}

}  // namespace

RegularSearchResult regular_subgroup_search(const PermutationGroup& aut, const Graph& g,
                                            const RegularSearchOptions& options) {
    if (aut.degree() != g.order()) throw Error("regular subgroup search: group degree does not match the graph");
    if (g.order() > 1 && !aut.is_transitive()) return {};
    RegularSearch search(aut, g, options);
    RegularSearchResult r = search.run();
    if (r.witness) verify_witness(g, *r.witness);
    return r;
}

Group witness_group(const RegularWitness& w) {
    const std::size_t n = w.sigma.size();
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) t[u][v] = w.sigma[v](u);
    return Group::from_table(std::move(t), {}, "regular subgroup of order " + std::to_string(n));
}

ConnectionSet witness_connection_set(const Group& group, const Graph& g, const RegularWitness& w) {
    const auto nb = g.neighbors(w.base);
    return ConnectionSet(group, std::vector<Element>(nb.begin(), nb.end()));
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

CayleyVerdict is_cayley(const Graph& g, const CayleyOptions& options) {
    CayleyVerdict out;
    const std::size_t n = g.order();
    if (n == 0) throw Error("is_cayley on an empty graph");
    try {
        const PermutationGroup aut = automorphism_group(g, options.aut_budget);
        out.aut_order = aut.order();
        if (!aut.is_transitive()) {
            out.verdict = Verdict::no;
            out.certificates.push_back("not-vertex-transitive");
            out.detail = "automorphism group has " + std::to_string(aut.orbits().size()) + " orbits";
            return out;
        }
        if (n % 4 == 2 && is_connected(g)) {
            const DrgCheck drg = check_distance_regular(g);
            if (drg.array && halving_obstruction(*drg.array).obstructed) {
                out.verdict = Verdict::no;
                out.certificates.push_back("halving");
                out.detail = "every group of order " + std::to_string(n) +
                             " has an index-2 subgroup, and no quotient eigenvalue 2m-k is available";
                if (!options.exhaustive) return out;
            }
        }
        RegularSearchOptions ro;
        ro.budget_seconds = options.search_budget;
        if (options.accept_group) ro.accept = [&](const RegularWitness& w) { return options.accept_group(witness_group(w)); };
        const auto r = regular_subgroup_search(aut, g, ro);
        out.search_nodes = r.nodes;
        if (r.witness) {
            if (out.verdict == Verdict::no) throw Error("is_cayley: halving obstruction contradicts a regular witness");
            Group group = witness_group(*r.witness);
            ConnectionSet s = witness_connection_set(group, g, *r.witness);
            if (!(cayley_graph(s) == g)) throw Error("is_cayley: reconstructed Cayley graph differs from the input");
            out.verdict = Verdict::yes;
            out.certificates.push_back("regular-subgroup");
            out.group = std::move(group);
            out.connection_set = std::move(s);
        } else {
            out.verdict = Verdict::no;
            out.certificates.push_back("exhaustive");
        }
    } catch (const BudgetExceeded& e) {
        if (out.verdict != Verdict::no) out.verdict = Verdict::unknown;
        out.detail += (out.detail.empty() ? "" : "; ") + std::string(e.what());
    }
    return out;
}

CanonicalForm canonical_form(const Graph& g, double budget_seconds) {
    const std::size_t n = g.order();
    const PermutationGroup aut = automorphism_group(g, budget_seconds);
    Refiner refiner(g);
    Deadline deadline(budget_seconds);
    CanonicalForm best;
    bool have = false;
    std::vector<Vertex> seq;
    std::function<void(const Partition&)> explore = [&](const Partition& p) {
        deadline.check("canonical_form");
        const auto cell = refiner.target_cell(p);
        if (cell.empty()) {
            Graph h(n);
            for (auto [u, v] : g.edges()) h.add_edge(p.color[u], p.color[v]);
            std::string cert = to_graph6(h);
            if (!have || cert < best.certificate) {
                best.certificate = std::move(cert);
                best.labeling.assign(p.color.begin(), p.color.end());
                have = true;
            }
            return;
        }
        const PermutationGroup stab(n, aut.generators(), seq);
        const std::vector<Permutation> none;
        const auto& gens = seq.size() < stab.levels() ? stab.strong_generators(seq.size()) : none;
        const auto ids = orbit_ids(n, gens);
        std::vector<char> done(n, 0);
        for (Vertex w : cell) {
            if (done[ids[w]]) continue;
            done[ids[w]] = 1;
            seq.push_back(w);
            explore(refiner.individualize(p, w));
            seq.pop_back();
        }
    };
    if (n == 0) return {{}, to_graph6(g)};
    explore(refiner.root());
    return best;
}

bool isomorphic(const Graph& a, const Graph& b, double budget_seconds) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, budget_seconds).certificate == canonical_form(b, budget_seconds).certificate;
}

}  // namespace drg
