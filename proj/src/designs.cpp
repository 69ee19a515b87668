#include "drg/designs.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "drg/error.hpp"
#include "drg/field.hpp"

namespace drg {

DifferenceCheck verify_difference_set(const Group& g, std::span<const Element> d) {
    const std::size_t n = g.order();
    std::vector<std::size_t> count(n, 0);
    for (Element x : d)
        for (Element y : d)
            if (x != y) ++count[g.mul(x, g.inverse(y))];
    DifferenceCheck out;
    std::optional<std::size_t> lambda;
    for (Element x = 0; x < n; ++x) {
        if (x == g.identity()) continue;
        if (!lambda) {
            lambda = count[x];
        } else if (count[x] != *lambda) {
            out.witness = x;
            out.expected = *lambda;
            out.found = count[x];
            return out;
        }
    }
    std::vector<Element> sorted(d.begin(), d.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("difference set has repeated elements");
    out.params = DesignParams{n, d.size(), lambda.value_or(0)};
    return out;
}

std::optional<DifferenceSet> find_difference_set(const Group& g, std::size_t k, std::size_t lambda) {
    const std::size_t n = g.order();
    if (n > 64) throw Error("find_difference_set limited to groups of order <= 64");
    if (k == 0 || k > n) return std::nullopt;
    if (k * (k - 1) != lambda * (n - 1)) return std::nullopt;
    std::vector<Element> chosen;
    std::vector<std::size_t> count(n, 0);
    std::function<bool(Element)> rec = [&](Element from) -> bool {
        if (chosen.size() == k) return true;
        for (Element x = from; x < n; ++x) {
            if (n - x < k - chosen.size()) break;
            bool ok = true;
            std::size_t done = 0;
            for (Element y : chosen) {
                const Element a = g.mul(x, g.inverse(y)), b = g.mul(y, g.inverse(x));
                ++count[a];
                ++count[b];
                ++done;
                if (count[a] > lambda || count[b] > lambda) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen.push_back(x);
                if (rec(x + 1)) return true;
                chosen.pop_back();
            }
            for (std::size_t i = 0; i < done; ++i) {
                --count[g.mul(x, g.inverse(chosen[i]))];
                --count[g.mul(chosen[i], g.inverse(x))];
            }
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    const auto check = verify_difference_set(g, chosen);
    if (!check.params || check.params->lambda != lambda) throw Error("find_difference_set produced an invalid set");
    return DifferenceSet{g, chosen, *check.params};
}

std::optional<RelativeDifferenceSet> verify_relative_difference_set(const Group& g, const SubgroupHandle& n,
                                                                    std::span<const Element> d) {
    if (g.order() > 512) throw Error("relative difference set check limited to |G| <= 512");
    std::vector<std::size_t> count(g.order(), 0);
    for (Element x : d)
        for (Element y : d)
            if (x != y) ++count[g.mul(x, g.inverse(y))];
    std::optional<std::size_t> lambda;
    for (Element x = 0; x < g.order(); ++x) {
        if (n.contains(x)) {
            if (x != g.identity() && count[x] != 0) return std::nullopt;
            continue;
        }
        if (!lambda) lambda = count[x];
        else if (count[x] != *lambda) return std::nullopt;
    }
    return RelativeDifferenceSet{g, n, std::vector<Element>(d.begin(), d.end()), g.order() / n.order(), n.order(),
                                 d.size(), lambda.value_or(0)};
}

ConnectionSet development_connection_set(const Group& abelian, std::span<const Element> d) {
    const Group ext = generalized_dihedral_extension(abelian);
    std::vector<Element> s;
    for (Element x : d) s.push_back(Element(abelian.order() + x));
    return ConnectionSet(ext, std::move(s));
}

Graph incidence_graph_of_development(const DifferenceSet& d) {
    return cayley_graph(development_connection_set(d.group, d.elements));
}

Group field_additive_group(unsigned q) {
    const GaloisField f(q);
    std::vector<std::vector<Element>> t(q, std::vector<Element>(q));
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) t[a][b] = f.add(a, b);
    return Group::from_table(std::move(t), {}, "GF(" + std::to_string(q) + ")+");
}

RelativeDifferenceSet quadratic_rds(unsigned q) {
    unsigned p = 0, m = 0;
    if (!prime_power(q, p, m)) throw Error("quadratic_rds needs a prime power");
    const GaloisField f(q);
    // both groups index (x1, x2) as x1*q + x2
    const Group g = p == 2 ? semifield_plane_group(q) : direct_product(field_additive_group(q), field_additive_group(q));
    std::vector<Element> r, n;
    for (unsigned x = 0; x < q; ++x) {
        r.push_back(Element(x * q + f.mul(x, x)));
        n.push_back(Element(x));
    }
    const SubgroupHandle nh(g, n);
    auto rds = verify_relative_difference_set(g, nh, r);
    if (!rds || rds->lambda != 1) throw Error("quadratic_rds: construction failed verification");
    return *rds;
}

ConnectionSet affine_plane_minus_pc_connection_set(unsigned q) {
    if (q < 2 || q > 8) throw Error("affine plane construction supported for q <= 8");
    const auto rds = quadratic_rds(q);
    return development_connection_set(rds.group, rds.elements);
}

Graph affine_plane_minus_pc_graph(unsigned q) { return cayley_graph(affine_plane_minus_pc_connection_set(q)); }

Graph symplectic_gq_incidence(unsigned q) {
    if (q < 2 || q > 4) throw Error("symplectic GQ supported for q in {2,3,4}");
    const GaloisField f(q);
    using Vec = std::array<unsigned, 4>;
    std::vector<Vec> points;
    for (unsigned idx = 0; idx < q * q * q * q; ++idx) {
        Vec v;
        unsigned x = idx;
        for (int i = 3; i >= 0; --i, x /= q) v[i] = x % q;
        const auto lead = std::find_if(v.begin(), v.end(), [](unsigned c) { return c != 0; });
        if (lead != v.end() && *lead == 1) points.push_back(v);
    }
    std::sort(points.begin(), points.end());
    std::map<Vec, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = i;
    auto normalize = [&](Vec v) {
        const auto lead = std::find_if(v.begin(), v.end(), [](unsigned c) { return c != 0; });
        const unsigned inv = f.inv(*lead);
        for (auto& c : v) c = f.mul(c, inv);
        return v;
    };
    auto form = [&](const Vec& x, const Vec& y) {
        const unsigned t1 = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
        const unsigned t2 = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
        return f.add(t1, t2);
    };
    std::vector<std::vector<std::size_t>> lines;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (form(points[i], points[j]) != 0) continue;
            std::vector<std::size_t> line;
            for (unsigned a = 0; a < q; ++a)
                for (unsigned b = 0; b < q; ++b) {
                    if (a == 0 && b == 0) continue;
                    Vec v;
                    for (int c = 0; c < 4; ++c) v[c] = f.add(f.mul(a, points[i][c]), f.mul(b, points[j][c]));
                    line.push_back(index.at(normalize(v)));
                }
            std::sort(line.begin(), line.end());
            line.erase(std::unique(line.begin(), line.end()), line.end());
            if (line[0] == i && line[1] == j) lines.push_back(std::move(line));
        }
    std::sort(lines.begin(), lines.end());
    if (lines.size() != points.size()) throw Error("symplectic GQ: point and line counts differ");
    Graph g(points.size() + lines.size());
    for (std::size_t l = 0; l < lines.size(); ++l)
        for (std::size_t p : lines[l]) g.add_edge(Vertex(p), Vertex(points.size() + l));
    return g;
}

Graph paley_graph(unsigned q) {
    if (q % 4 != 1) throw Error("Paley graph needs q = 1 mod 4");
    const GaloisField f(q);
    Graph g(q);
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = x + 1; y < q; ++y)
            if (f.is_square(f.sub(x, y))) g.add_edge(x, y);
    return g;
}

}  // namespace drg
