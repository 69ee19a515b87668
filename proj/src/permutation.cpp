#include "drg/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "drg/error.hpp"

namespace drg {

Permutation::Permutation(std::size_t n) : image_(n) { std::iota(image_.begin(), image_.end(), Vertex(0)); }

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (Vertex x : image_) {
        if (x >= image_.size() || seen[x]) throw Error("permutation image is not a bijection");
        seen[x] = 1;
    }
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) r.image_[image_[i]] = Vertex(i);
    return r;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
    std::vector<std::size_t> lengths;
    std::vector<char> seen(image_.size(), 0);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (Vertex j = Vertex(i); !seen[j]; j = image_[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

std::uint64_t Permutation::order() const {
    std::uint64_t r = 1;
    for (std::size_t len : cycle_lengths()) {
        const std::uint64_t g = std::gcd(r, std::uint64_t(len));
        if (r / g > UINT64_MAX / len) throw Error("permutation order overflows 64 bits");
        r = r / g * len;
    }
    return r;
}

bool Permutation::is_semiregular() const {
    const auto lengths = cycle_lengths();
    return std::all_of(lengths.begin(), lengths.end(), [&](std::size_t l) { return l == lengths.front(); });
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<char> seen(image_.size(), 0);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i] || image_[i] == i) continue;
        out += '(';
        bool first = true;
        for (Vertex j = Vertex(i); !seen[j]; j = image_[j]) {
            seen[j] = 1;
            out += (first ? "" : ",") + std::to_string(j);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw Error("permutation degree mismatch");
    Permutation r;
    r.image_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) r.image_[i] = b.image_[a.image_[i]];
    return r;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.degree() != g.order()) return false;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.degree(u) != g.degree(p(u))) return false;
        for (Vertex v : g.neighbors(u))
            if (!g.has_edge(p(u), p(v))) return false;
    }
    return true;
}

std::vector<std::size_t> orbit_ids(std::size_t n, const std::vector<Permutation>& gens) {
    constexpr std::size_t none = std::size_t(-1);
    std::vector<std::size_t> id(n, none);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (id[s] != none) continue;
        id[s] = next;
        stack.assign(1, s);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                const Vertex y = g(x);
                if (id[y] == none) {
                    id[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return id;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::vector<Vertex> base_prefix)
    : degree_(degree), base_(std::move(base_prefix)) {
    for (auto& g : generators) {
        if (g.degree() != degree) throw Error("generator degree mismatch");
        if (!g.is_identity()) generators_.push_back(std::move(g));
    }
    for (Vertex b : base_)
        if (b >= degree) throw Error("base point out of range");
    for (const auto& g : generators_) {
        const bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](Vertex b) { return g(b) == b; });
        if (fixes_base) {
            Vertex x = 0;
            while (g(x) == x) ++x;
            base_.push_back(x);
        }
    }
    levels_.resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) {
        for (const auto& g : generators_) {
            bool fixes = true;
            for (std::size_t j = 0; j < i && fixes; ++j) fixes = g(base_[j]) == base_[j];
            if (fixes) levels_[i].gens.push_back(g);
        }
        rebuild_level(i);
    }
    std::size_t i = base_.size();
    while (i-- > 0) {
        bool restarted = false;
        const Level& lv = levels_[i];
        for (std::size_t oi = 0; !restarted && oi < lv.orbit.size(); ++oi) {
            const Vertex beta = lv.orbit[oi];
            for (std::size_t gi = 0; !restarted && gi < lv.gens.size(); ++gi) {
                const Permutation& s = lv.gens[gi];
                const Permutation& u_beta = lv.transversal[lv.slot[beta]];
                const Permutation& u_img = lv.transversal[lv.slot[s(beta)]];
                Permutation h = u_beta * s * u_img.inverse();
                if (h.is_identity()) continue;
                auto [residue, j] = strip(std::move(h), i + 1);
                if (j == base_.size() && residue.is_identity()) continue;
                if (j == base_.size()) {
                    Vertex x = 0;
                    while (residue(x) == x) ++x;
                    base_.push_back(x);
                    levels_.emplace_back();
                }
                for (std::size_t l = i + 1; l <= j; ++l) {
                    levels_[l].gens.push_back(residue);
                    rebuild_level(l);
                }
                i = j + 1;
                restarted = true;
            }
        }
    }
}

void PermutationGroup::rebuild_level(std::size_t i) {
    Level& lv = levels_[i];
    const Vertex b = base_[i];
    lv.slot.assign(degree_, -1);
    lv.orbit.assign(1, b);
    lv.transversal.assign(1, Permutation(degree_));
    lv.slot[b] = 0;
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
        const Vertex x = lv.orbit[k];
        for (const auto& g : lv.gens) {
            const Vertex y = g(x);
            if (lv.slot[y] >= 0) continue;
            lv.slot[y] = static_cast<int>(lv.orbit.size());
            lv.orbit.push_back(y);
            lv.transversal.push_back(lv.transversal[k] * g);
        }
    }
}

std::pair<Permutation, std::size_t> PermutationGroup::strip(Permutation h, std::size_t from) const {
    for (std::size_t l = from; l < base_.size(); ++l) {
        const Vertex beta = h(base_[l]);
        const int s = levels_[l].slot[beta];
        if (s < 0) return {std::move(h), l};
        h = h * levels_[l].transversal[s].inverse();
    }
    return {std::move(h), base_.size()};
}

const Permutation* PermutationGroup::transversal(std::size_t level, Vertex point) const {
    const int s = levels_[level].slot[point];
    return s < 0 ? nullptr : &levels_[level].transversal[s];
}

BigInt PermutationGroup::order() const {
    BigInt r = 1;
    for (const auto& lv : levels_) r *= lv.orbit.size();
    return r;
}

bool PermutationGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, j] = strip(p, 0);
    return j == base_.size() && residue.is_identity();
}

std::vector<std::vector<Vertex>> PermutationGroup::orbits() const {
    const auto id = orbit_ids(degree_, generators_);
    std::vector<std::vector<Vertex>> out;
    for (Vertex x = 0; x < degree_; ++x) {
        if (id[x] >= out.size()) out.resize(id[x] + 1);
        out[id[x]].push_back(x);
    }
    return out;
}

bool PermutationGroup::is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

}  // namespace drg
