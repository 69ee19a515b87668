#include "drg/groups.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "drg/error.hpp"
#include "drg/field.hpp"

namespace drg {
namespace {

constexpr std::size_t kMaxOrder = 65536;

[[noreturn]] void axiom_failure(const std::string& name, const std::string& axiom, const std::string& detail) {
    throw Error("group" + (name.empty() ? std::string() : " '" + name + "'") + " fails " + axiom + ": " + detail);
}

std::string index_label(std::size_t i) { return std::to_string(i); }

unsigned parse_uint(std::string_view s, const char* what) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw Error(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return v;
}

}  // namespace

Group Group::from_table(std::vector<std::vector<Element>> table, std::vector<std::string> labels, std::string name) {
    const std::size_t n = table.size();
    if (n == 0) axiom_failure(name, "closure", "empty table");
    if (n > kMaxOrder) throw Error("group order " + std::to_string(n) + " exceeds limit");
    auto d = std::make_shared<Data>();
    d->n = n;
    d->name = std::move(name);
    d->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) axiom_failure(d->name, "closure", "row " + std::to_string(a) + " has wrong length");
        for (std::size_t b = 0; b < n; ++b) {
            if (table[a][b] >= n)
                axiom_failure(d->name, "closure", "product " + std::to_string(a) + "*" + std::to_string(b) + " out of range");
            d->table[a * n + b] = table[a][b];
        }
    }
    auto at = [&](std::size_t a, std::size_t b) { return d->table[a * n + b]; };
    std::optional<Element> e;
    for (std::size_t x = 0; x < n && !e; ++x) {
        bool ok = true;
        for (std::size_t y = 0; y < n && ok; ++y) ok = at(x, y) == y && at(y, x) == y;
        if (ok) e = Element(x);
    }
    if (!e) axiom_failure(d->name, "identity", "no two-sided identity element");
    d->identity = *e;
    d->inverse.assign(n, Element(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y)
            if (at(x, y) == *e && at(y, x) == *e) {
                d->inverse[x] = Element(y);
                break;
            }
        if (d->inverse[x] == n) axiom_failure(d->name, "inverse", "element " + std::to_string(x) + " has no inverse");
    }
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (at(at(a, b), c) != at(a, at(b, c)))
            axiom_failure(d->name, "associativity",
                          "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c));
    };
    if (n <= 256) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::uint64_t s = 0x9E3779B97F4A7C15ull;
        for (int i = 0; i < 200000; ++i) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            check((s >> 11) % n, (s >> 27) % n, (s >> 43) % n);
        }
    }
    d->orders.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t k = 1;
        Element y = Element(x);
        while (y != *e) {
            y = at(y, x);
            ++k;
            if (k > n) axiom_failure(d->name, "inverse", "element " + std::to_string(x) + " has infinite order");
        }
        d->orders[x] = k;
    }
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = index_label(i);
    }
    if (labels.size() != n) throw Error("label count does not match group order");
    d->labels = std::move(labels);
    return Group(std::move(d));
}

Element Group::power(Element a, long long k) const {
    if (k < 0) {
        a = inverse(a);
        k = -k;
    }
    k %= static_cast<long long>(element_order(a));
    Element r = identity();
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Element Group::commutator(Element a, Element b) const { return mul(mul(inverse(a), inverse(b)), mul(a, b)); }

Element Group::conjugate(Element x, Element g) const { return mul(mul(inverse(g), x), g); }

std::optional<Element> Group::find(std::string_view label) const {
    for (std::size_t i = 0; i < order(); ++i)
        if (data_->labels[i] == label) return Element(i);
    return std::nullopt;
}

Element Group::parse_element(std::string_view token) const {
    if (auto e = find(token)) return *e;
    unsigned v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc() && p == token.data() + token.size() && v < order()) return Element(v);
    throw Error("unknown group element '" + std::string(token) + "'");
}

bool Group::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (mul(Element(a), Element(b)) != mul(Element(b), Element(a))) return false;
    return true;
}

bool same_group(const Group& a, const Group& b) { return a.data_ == b.data_; }

SubgroupHandle::SubgroupHandle(Group parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool SubgroupHandle::contains(Element x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

Group cyclic_group(std::size_t n) {
    if (n == 0 || n > kMaxOrder) throw Error("cyclic group order out of range");
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = Element((a + b) % n);
    return Group::from_table(std::move(t), {}, "Z" + std::to_string(n));
}

Group dihedral_group(std::size_t order) {
    if (order < 2 || order % 2 != 0 || order > kMaxOrder) throw Error("dihedral group needs an even order >= 2");
    const std::size_t n = order / 2;
    std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
    std::vector<std::string> labels(order);
    // b^s a^i * b^t a^j = b^(s+t) a^((-1)^t i + j)
    for (std::size_t x = 0; x < order; ++x) {
        const std::size_t s = x / n, i = x % n;
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t u = y / n, j = y % n;
            const std::size_t k = (u ? (n - i) % n : i) + j;
            t[x][y] = Element(((s + u) % 2) * n + k % n);
        }
        std::string a = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
        labels[x] = s ? "b" + a : (a.empty() ? "e" : a);
    }
    return Group::from_table(std::move(t), std::move(labels), "D" + std::to_string(order));
}

Group elementary_abelian_group(unsigned p, unsigned k) {
    unsigned pp = 0, m = 0;
    if (!prime_power(p, pp, m) || m != 1) throw Error("elementary abelian group needs a prime p");
    std::size_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
        n *= p;
        if (n > kMaxOrder) throw Error("elementary abelian group too large");
    }
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t r = 0, w = 1, x = a, y = b;
            for (unsigned i = 0; i < k; ++i, x /= p, y /= p, w *= p) r += ((x % p + y % p) % p) * w;
            t[a][b] = Element(r);
        }
        std::string s = "(";
        std::size_t x = a;
        for (unsigned i = 0; i < k; ++i, x /= p) s += (i ? "," : "") + std::to_string(x % p);
        labels[a] = s + ")";
    }
    return Group::from_table(std::move(t), std::move(labels), "Z" + std::to_string(p) + "^" + std::to_string(k));
}

Group direct_product(const Group& g, const Group& h) {
    const std::size_t m = g.order(), n = h.order();
    if (m * n > kMaxOrder) throw Error("direct product too large");
    std::vector<std::vector<Element>> t(m * n, std::vector<Element>(m * n));
    std::vector<std::string> labels(m * n);
    for (std::size_t a = 0; a < m * n; ++a) {
        for (std::size_t b = 0; b < m * n; ++b)
            t[a][b] = Element(g.mul(Element(a / n), Element(b / n)) * n + h.mul(Element(a % n), Element(b % n)));
        labels[a] = "(" + g.label(Element(a / n)) + "," + h.label(Element(a % n)) + ")";
    }
    return Group::from_table(std::move(t), std::move(labels), g.name() + "x" + h.name());
}

namespace {

std::string cycle_label(const std::vector<unsigned>& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (unsigned i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i) continue;
        out += '(';
        for (unsigned j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            out += std::to_string(j + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

bool even_permutation(const std::vector<unsigned>& perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    return inversions % 2 == 0;
}

Group permutation_group_table(unsigned n, bool even_only, std::string name) {
    if (n < 1 || n > 5) throw Error("symmetric/alternating groups supported for 1 <= n <= 5");
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
        if (!even_only || even_permutation(p)) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t m = perms.size();
    auto index = [&](const std::vector<unsigned>& q) {
        return Element(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
    std::vector<std::string> labels(m);
    std::vector<unsigned> r(n);
    for (std::size_t a = 0; a < m; ++a) {
        // apply a, then b
        for (std::size_t b = 0; b < m; ++b) {
            for (unsigned x = 0; x < n; ++x) r[x] = perms[b][perms[a][x]];
            t[a][b] = index(r);
        }
        labels[a] = cycle_label(perms[a]);
    }
    return Group::from_table(std::move(t), std::move(labels), std::move(name));
}

}  // namespace

Group symmetric_group(unsigned n) { return permutation_group_table(n, false, "Sym" + std::to_string(n)); }

Group alternating_group(unsigned n) { return permutation_group_table(n, true, "Alt" + std::to_string(n)); }

Group generalized_dihedral_extension(const Group& g) {
    if (!g.is_abelian()) throw Error("generalized dihedral extension needs an abelian group");
    const std::size_t n = g.order();
    if (2 * n > kMaxOrder) throw Error("generalized dihedral extension too large");
    std::vector<std::vector<Element>> t(2 * n, std::vector<Element>(2 * n));
    std::vector<std::string> labels(2 * n);
    // (x c^s)(y c^t) = x y^((-1)^s) c^(s+t)
    for (std::size_t a = 0; a < 2 * n; ++a) {
        const std::size_t s = a / n;
        const Element x = Element(a % n);
        for (std::size_t b = 0; b < 2 * n; ++b) {
            const std::size_t u = b / n;
            const Element y = Element(b % n);
            t[a][b] = Element(((s + u) % 2) * n + g.mul(x, s ? g.inverse(y) : y));
        }
        labels[a] = s ? g.label(x) + "c" : g.label(x);
    }
    return Group::from_table(std::move(t), std::move(labels), "Dih(" + g.name() + ")");
}

Group semifield_plane_group(unsigned q) {
    const GaloisField f(q);
    const std::size_t n = std::size_t(q) * q;
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (unsigned x1 = 0; x1 < q; ++x1)
        for (unsigned x2 = 0; x2 < q; ++x2) {
            const std::size_t a = x1 * q + x2;
            for (unsigned y1 = 0; y1 < q; ++y1)
                for (unsigned y2 = 0; y2 < q; ++y2)
                    t[a][y1 * q + y2] = Element(f.add(x1, y1) * q + f.add(f.add(x2, y2), f.mul(x1, y1)));
            labels[a] = "(" + std::to_string(x1) + "," + std::to_string(x2) + ")";
        }
    return Group::from_table(std::move(t), std::move(labels), "SF(" + std::to_string(q) + ")");
}

Group metacyclic_group(std::size_t n, std::size_t m, std::size_t r) {
    if (n == 0 || m == 0 || n * m > kMaxOrder) throw Error("metacyclic group order out of range");
    std::size_t rm = 1 % n;
    for (std::size_t j = 0; j < m; ++j) rm = rm * r % n;
    if (rm != 1 % n) throw Error("metacyclic group needs r^m = 1 mod n");
    std::vector<std::size_t> rpow(m);
    rpow[0] = 1 % n;
    for (std::size_t j = 1; j < m; ++j) rpow[j] = rpow[j - 1] * r % n;
    // (a^i c^j)(a^k c^l) = a^(i + r^j k) c^(j+l)
    std::vector<std::vector<Element>> t(n * m, std::vector<Element>(n * m));
    std::vector<std::string> labels(n * m);
    for (std::size_t x = 0; x < n * m; ++x) {
        const std::size_t i = x % n, j = x / n;
        for (std::size_t y = 0; y < n * m; ++y) {
            const std::size_t k = y % n, l = y / n;
            t[x][y] = Element(((j + l) % m) * n + (i + rpow[j] * k) % n);
        }
        std::string s;
        if (i) s += i == 1 ? "a" : "a^" + std::to_string(i);
        if (j) s += j == 1 ? "c" : "c^" + std::to_string(j);
        labels[x] = s.empty() ? "e" : s;
    }
    return Group::from_table(std::move(t), std::move(labels),
                             "Z" + std::to_string(n) + ":Z" + std::to_string(m));
}

namespace {

unsigned aw_beta(unsigned u, unsigned v) {
    unsigned s = 0;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < i; ++j) s ^= ((u >> i) & 1u) & ((v >> j) & 1u);
    return s;
}

}  // namespace

Group armanios_wells_group() {
    std::vector<std::vector<Element>> t(32, std::vector<Element>(32));
    std::vector<std::string> labels(32);
    for (unsigned a = 0; a < 32; ++a) {
        const unsigned u = a >> 1, x = a & 1u;
        for (unsigned b = 0; b < 32; ++b) {
            const unsigned v = b >> 1, y = b & 1u;
            t[a][b] = Element(((u ^ v) << 1) | (x ^ y ^ aw_beta(u, v)));
        }
        std::string s;
        for (unsigned i = 0; i < 4; ++i)
            if ((u >> i) & 1u) s += "g" + std::to_string(i + 1);
        if (x) s += "a";
        labels[a] = s.empty() ? "e" : s;
    }
    Group g = Group::from_table(std::move(t), std::move(labels), "AW32");
    const auto gens = armanios_wells_generators();
    const Element a = armanios_wells_central();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (g.element_order(gens[i]) != 2) throw Error("Armanios-Wells generator is not an involution");
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && g.commutator(gens[i], gens[j]) != a) throw Error("Armanios-Wells commutator relation fails");
    }
    for (Element x = 0; x < 32; ++x)
        if (g.mul(a, x) != g.mul(x, a)) throw Error("Armanios-Wells element a is not central");
    return g;
}

std::vector<Element> armanios_wells_generators() { return {1u << 1, 2u << 1, 4u << 1, 8u << 1}; }

Element armanios_wells_central() { return 1; }

Group read_group_table(std::istream& in, std::string name) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw Error("group table: missing order line");
    std::size_t n = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> n) || n == 0) throw Error("group table: bad order line '" + line + "'");
        if (n > kMaxOrder) throw Error("group table: order too large");
    }
    std::vector<std::vector<Element>> t(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!next_line()) throw Error("group table: expected " + std::to_string(n) + " rows, got " + std::to_string(r));
        std::istringstream ss(line);
        long long v;
        while (ss >> v) {
            if (v < 0 || std::size_t(v) >= n)
                throw Error("group fails closure: entry " + std::to_string(v) + " in row " + std::to_string(r));
            t[r].push_back(Element(v));
        }
        if (!ss.eof()) throw Error("group table: non-numeric entry in row " + std::to_string(r));
        if (t[r].size() != n) throw Error("group table: row " + std::to_string(r) + " has wrong length");
    }
    std::vector<std::string> labels;
    while (labels.size() < n && next_line()) {
        const auto b = line.find_first_not_of(" \t");
        const auto e = line.find_last_not_of(" \t");
        labels.push_back(line.substr(b, e - b + 1));
    }
    if (!labels.empty() && labels.size() != n) throw Error("group table: expected " + std::to_string(n) + " labels");
    return Group::from_table(std::move(t), std::move(labels), std::move(name));
}

Group load_group_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group table '" + path + "'");
    return read_group_table(in, path);
}

void write_group_table(std::ostream& out, const Group& g) {
    const std::size_t n = g.order();
    out << n << '\n';
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(Element(a), Element(b));
        out << '\n';
    }
    for (std::size_t a = 0; a < n; ++a) out << g.label(Element(a)) << '\n';
}

GroupQueries group_queries(const Group& g) {
    const std::size_t n = g.order();
    std::vector<Element> center, involutions;
    std::vector<std::size_t> orders(n);
    for (Element z = 0; z < n; ++z) {
        bool central = true;
        for (Element x = 0; x < n && central; ++x) central = g.mul(z, x) == g.mul(x, z);
        if (central) center.push_back(z);
        orders[z] = g.element_order(z);
        if (orders[z] == 2) involutions.push_back(z);
    }
    const bool abelian = center.size() == n;
    return {SubgroupHandle(g, std::move(center)), abelian, std::move(involutions), std::move(orders)};
}

std::vector<std::size_t> order_profile(const Group& g) {
    std::vector<std::size_t> profile(g.order() + 1, 0);
    for (Element x = 0; x < g.order(); ++x) ++profile[g.element_order(x)];
    return profile;
}

SubgroupHandle subgroup_closure(const Group& g, std::span<const Element> gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<Element> elems{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (Element s : gens) {
            if (s >= g.order()) throw Error("generator out of range");
            const Element y = g.mul(elems[i], s);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    return SubgroupHandle(g, std::move(elems));
}

bool is_normal(const SubgroupHandle& h) {
    const Group& g = h.parent();
    for (Element x : h.elements())
        for (Element y = 0; y < g.order(); ++y)
            if (!h.contains(g.conjugate(x, y))) return false;
    return true;
}

std::vector<std::vector<Element>> right_cosets(const SubgroupHandle& h) {
    const Group& g = h.parent();
    std::vector<char> seen(g.order(), 0);
    std::vector<std::vector<Element>> cosets;
    for (Element x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::vector<Element> c;
        for (Element y : h.elements()) c.push_back(g.mul(y, x));
        std::sort(c.begin(), c.end());
        for (Element y : c) seen[y] = 1;
        cosets.push_back(std::move(c));
    }
    return cosets;
}

Group quotient_group(const SubgroupHandle& h) {
    if (!is_normal(h)) throw Error("quotient by a non-normal subgroup");
    const Group& g = h.parent();
    const auto cosets = right_cosets(h);
    std::vector<std::size_t> which(g.order());
    for (std::size_t i = 0; i < cosets.size(); ++i)
        for (Element x : cosets[i]) which[x] = i;
    const std::size_t m = cosets.size();
    std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) t[i][j] = Element(which[g.mul(cosets[i][0], cosets[j][0])]);
        labels[i] = "[" + g.label(cosets[i][0]) + "]";
    }
    return Group::from_table(std::move(t), std::move(labels), g.name() + "/H");
}

SubgroupOps subgroup_ops(const Group& g, std::span<const Element> x) {
    if (x.empty()) throw Error("subgroup_ops needs a nonempty element set");
    SubgroupHandle h = subgroup_closure(g, x);
    const bool normal = is_normal(h);
    auto cosets = right_cosets(h);
    std::optional<Group> q;
    if (normal) q = quotient_group(h);
    return {std::move(h), normal, std::move(cosets), std::move(q)};
}

namespace {

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == sep && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

Group parse_factor(std::string_view s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return parse_group_spec(s.substr(1, s.size() - 2));
    const auto colon = s.find(':');
    const std::string_view kind = s.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view() : s.substr(colon + 1);
    if (kind == "cyclic") return cyclic_group(parse_uint(arg, "cyclic order"));
    if (kind == "dihedral") return dihedral_group(parse_uint(arg, "dihedral order"));
    if (kind == "elemab") {
        const auto c2 = arg.find(':');
        if (c2 == std::string_view::npos) throw Error("elemab needs p:k");
        return elementary_abelian_group(parse_uint(arg.substr(0, c2), "prime"), parse_uint(arg.substr(c2 + 1), "rank"));
    }
    if (kind == "sym") return symmetric_group(parse_uint(arg, "degree"));
    if (kind == "alt") return alternating_group(parse_uint(arg, "degree"));
    if (kind == "semifield") return semifield_plane_group(parse_uint(arg, "field order"));
    if (kind == "metacyclic") {
        const auto c2 = arg.find(':');
        const auto c3 = c2 == std::string_view::npos ? c2 : arg.find(':', c2 + 1);
        if (c3 == std::string_view::npos) throw Error("metacyclic needs n:m:r");
        return metacyclic_group(parse_uint(arg.substr(0, c2), "n"), parse_uint(arg.substr(c2 + 1, c3 - c2 - 1), "m"),
                                parse_uint(arg.substr(c3 + 1), "r"));
    }
    if (kind == "armanios-wells") return armanios_wells_group();
    if (kind == "gendihedral") return generalized_dihedral_extension(parse_group_spec(arg));
    if (kind == "table") return load_group_table(std::string(arg));
    throw Error("unknown group kind '" + std::string(kind) + "'");
}

}  // namespace

Group parse_group_spec(std::string_view spec) {
    const auto parts = split_top_level(spec, '*');
    Group g = parse_factor(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parse_factor(parts[i]));
    return g;
}

}  // namespace drg
