#include "drg/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "drg/error.hpp"
#include "drg/parallel.hpp"

namespace drg {

IntersectionArray::IntersectionArray(std::vector<int> b_, std::vector<int> c_) : b(std::move(b_)), c(std::move(c_)) {
    if (b.size() != c.size()) throw Error("intersection array needs as many b_i as c_i");
}

std::vector<std::int64_t> IntersectionArray::vertex_counts() const {
    std::vector<std::int64_t> k{1};
    for (std::size_t i = 1; i <= diameter(); ++i) {
        const std::int64_t num = k.back() * b_at(i - 1);
        if (c_at(i) <= 0 || num % c_at(i) != 0) throw Error("array " + str() + " has non-integral k_" + std::to_string(i));
        k.push_back(num / c_at(i));
    }
    return k;
}

std::int64_t IntersectionArray::order() const {
    const auto k = vertex_counts();
    return std::accumulate(k.begin(), k.end(), std::int64_t(0));
}

bool IntersectionArray::bipartite() const {
    for (std::size_t i = 0; i <= diameter(); ++i)
        if (a_at(i) != 0) return false;
    return true;
}

std::size_t IntersectionArray::odd_girth() const {
    for (std::size_t i = 0; i <= diameter(); ++i)
        if (a_at(i) > 0) return 2 * i + 1;
    return kInfiniteGirth;
}

std::size_t IntersectionArray::even_girth_formula() const {
    for (std::size_t i = 1; i <= diameter(); ++i)
        if (c_at(i) > 1) return 2 * i;
    return kInfiniteGirth;
}

std::size_t IntersectionArray::girth() const { return std::min(odd_girth(), even_girth_formula()); }

std::string IntersectionArray::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += ";";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "}";
}

IntersectionArray IntersectionArray::parse(std::string_view text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.size() < 3 || t.front() != '{' || t.back() != '}')
        throw Error("intersection array must look like {b0,...;c1,...}: '" + std::string(text) + "'");
    t = t.substr(1, t.size() - 2);
    const auto semi = t.find(';');
    if (semi == std::string::npos || t.find(';', semi + 1) != std::string::npos)
        throw Error("intersection array needs exactly one ';'");
    auto numbers = [&](const std::string& part) {
        std::vector<int> out;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (item.empty() || used != item.size()) throw Error("bad number '" + item + "' in intersection array");
            out.push_back(v);
        }
        return out;
    };
    IntersectionArray a(numbers(t.substr(0, semi)), numbers(t.substr(semi + 1)));
    validate(a);
    return a;
}

void validate(const IntersectionArray& a) {
    if (a.b.empty()) throw Error("intersection array is empty");
    if (a.c[0] != 1) throw Error("array " + a.str() + ": c_1 must be 1");
    for (std::size_t i = 0; i <= a.diameter(); ++i)
        if (a.a_at(i) < 0) throw Error("array " + a.str() + ": a_" + std::to_string(i) + " is negative");
    for (std::size_t i = 1; i < a.b.size(); ++i)
        if (a.b[i] > a.b[i - 1] || a.b[i] <= 0) throw Error("array " + a.str() + ": b_i must be positive and non-increasing");
    for (std::size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] < a.c[i - 1]) throw Error("array " + a.str() + ": c_i must be non-decreasing");
}

std::string RegularityWitness::describe() const {
    std::ostringstream os;
    os << "pairs (" << x1 << "," << y1 << ") and (" << x2 << "," << y2 << ") at distance " << distance << " have "
       << parameter << " = " << value1 << " vs " << value2;
    return os.str();
}

DrgCheck check_distance_regular(const Graph& g) { return check_distance_regular(g, DistanceTable(g)); }

DrgCheck check_distance_regular(const Graph& g, const DistanceTable& dist) {
    const std::size_t n = g.order();
    if (n == 0) throw Error("distance-regularity check on an empty graph");
    for (Vertex y = 0; y < n; ++y)
        if (dist(0, y) == dist.unreachable()) throw Error("distance-regularity check needs a connected graph");

    struct Counts {
        std::uint32_t a = 0, b = 0, c = 0;
        Vertex y = 0;
        bool seen = false;
    };
    struct PerSource {
        std::vector<Counts> level;
        std::optional<RegularityWitness> witness;
    };
    std::vector<PerSource> per(n);
    parallel_for(n, [&](std::size_t xs) {
        const Vertex x = Vertex(xs);
        const auto row = dist.row(x);
        PerSource& out = per[x];
        for (Vertex y = 0; y < n && !out.witness; ++y) {
            const std::uint32_t i = row[y];
            Counts cnt;
            for (Vertex z : g.neighbors(y)) {
                const std::uint32_t dz = row[z];
                if (dz + 1 == i) ++cnt.c;
                else if (dz == i) ++cnt.a;
                else ++cnt.b;
            }
            cnt.y = y;
            cnt.seen = true;
            if (out.level.size() <= i) out.level.resize(i + 1);
            Counts& ref = out.level[i];
            if (!ref.seen) {
                ref = cnt;
                continue;
            }
            for (char p : {'c', 'a', 'b'}) {
                const auto v1 = p == 'a' ? ref.a : p == 'b' ? ref.b : ref.c;
                const auto v2 = p == 'a' ? cnt.a : p == 'b' ? cnt.b : cnt.c;
                if (v1 != v2) {
                    out.witness = RegularityWitness{i, p, x, ref.y, x, y, v1, v2};
                    break;
                }
            }
        }
    });
    DrgCheck result;
    const auto& base = per[0].level;
    for (Vertex x = 0; x < n; ++x) {
        if (per[x].witness) {
            result.witness = per[x].witness;
            return result;
        }
        const auto& lv = per[x].level;
        const std::size_t depth = std::max(lv.size(), base.size());
        for (std::uint32_t i = 0; i < depth; ++i) {
            const Counts c1 = i < base.size() ? base[i] : Counts{};
            const Counts c2 = i < lv.size() ? lv[i] : Counts{};
            if (!c1.seen || !c2.seen) {
                // one source reaches distance i and the other does not: b differs one level up
                const std::uint32_t j = i - 1;
                result.witness = RegularityWitness{j, 'b', 0, base[j].y, x, lv[j].y, base[j].b, lv[j].b};
                return result;
            }
            for (char p : {'c', 'a', 'b'}) {
                const auto v1 = p == 'a' ? c1.a : p == 'b' ? c1.b : c1.c;
                const auto v2 = p == 'a' ? c2.a : p == 'b' ? c2.b : c2.c;
                if (v1 != v2) {
                    result.witness = RegularityWitness{i, p, 0, c1.y, x, c2.y, v1, v2};
                    return result;
                }
            }
        }
    }
    IntersectionArray a;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) a.b.push_back(int(base[i].b));
    for (std::size_t i = 1; i < base.size(); ++i) a.c.push_back(int(base[i].c));
    result.array = std::move(a);
    return result;
}

std::optional<SrgParameters> srg_parameters(const IntersectionArray& a) {
    if (a.diameter() != 2) return std::nullopt;
    const auto k = a.vertex_counts();
    return SrgParameters{k[0] + k[1] + k[2], a.valency(), a.a_at(1), a.c_at(2)};
}

namespace {

// det(xI - L) for the tridiagonal intersection matrix, at integer x.
__int128 char_poly_at(const IntersectionArray& a, std::int64_t x) {
    __int128 prev = 1, cur = x - a.a_at(0);
    for (std::size_t i = 1; i <= a.diameter(); ++i) {
        const __int128 next = (x - a.a_at(i)) * cur - __int128(a.b_at(i - 1)) * a.c_at(i) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

std::vector<std::int64_t> rational_eigenvalues(const IntersectionArray& a) {
    std::vector<std::int64_t> roots;
    for (std::int64_t x = a.valency(); x >= -a.valency(); --x)
        if (char_poly_at(a, x) == 0) roots.push_back(x);
    return roots;
}

std::vector<double> symmetric_eigenvalues(const std::vector<double>& m, std::size_t n) {
    Eigen::MatrixXd mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mat(i, j) = m[i * n + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver failed");
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<double> real_eigenvalues(const std::vector<double>& m, std::size_t n) {
    Eigen::MatrixXd mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mat(i, j) = m[i * n + j];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(mat, false);
    if (solver.info() != Eigen::Success) throw Error("eigensolver failed");
    std::vector<double> out;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const auto z = solver.eigenvalues()[i];
        if (std::abs(z.imag()) < 1e-9) out.push_back(z.real());
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<ArrayEigenvalue> spectrum_of_array(const IntersectionArray& a) {
    validate(a);
    const std::size_t m = a.diameter() + 1;
    std::vector<double> t(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        t[i * m + i] = a.a_at(i);
        if (i + 1 < m) t[i * m + i + 1] = t[(i + 1) * m + i] = std::sqrt(double(a.b_at(i)) * a.c_at(i + 1));
    }
    const auto values = symmetric_eigenvalues(t, m);
    const auto roots = rational_eigenvalues(a);
    const auto k = a.vertex_counts();
    const double n = double(a.order());
    std::vector<ArrayEigenvalue> out;
    for (double v : values) {
        ArrayEigenvalue e{v, false, 0, 0.0};
        for (std::int64_t r : roots)
            if (std::abs(v - double(r)) < 1e-6) {
                e = {double(r), true, r, 0.0};
                break;
            }
        // standard sequence u_i(θ); multiplicity n / Σ k_i u_i²
        const double th = e.value;
        std::vector<double> u{1.0, th / a.valency()};
        for (std::size_t i = 1; i + 1 < m; ++i)
            u.push_back(((th - a.a_at(i)) * u[i] - a.c_at(i) * u[i - 1]) / a.b_at(i));
        double denom = 0.0;
        for (std::size_t i = 0; i < m; ++i) denom += double(k[i]) * u[i] * u[i];
        e.multiplicity = n / denom;
        out.push_back(e);
    }
    return out;
}

Spectrum spectrum_numeric(const Graph& g, SpectrumTolerances tol) {
    const std::size_t n = g.order();
    if (n > 1024) throw Error("numeric spectrum limited to 1024 vertices");
    std::vector<double> m(n * n, 0.0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) m[u * n + v] = 1.0;
    auto values = symmetric_eigenvalues(m, n);
    Spectrum out;
    for (double v : values) {
        const double r = std::round(v);
        const bool integral = std::abs(v - r) < tol.snap;
        if (integral) v = r == 0.0 ? 0.0 : r;
        if (!out.empty() && std::abs(out.back().value - v) < tol.merge) {
            ++out.back().multiplicity;
            continue;
        }
        out.push_back({v, 1, integral});
    }
    return out;
}

std::string format_eigenvalue(double v) {
    const double r = std::round(v);
    if (std::abs(v - r) < 1e-9) return std::to_string(static_cast<long long>(r));
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

FeasibilityVerdict gq_cayley_feasible(std::int64_t s) {
    if (s < 1) throw Error("generalized quadrangle order must be positive");
    std::vector<std::string> why;
    if ((s + 1) % 2 == 0) why.push_back("2 divides s+1");
    if ((s + 1) % 3 == 0) why.push_back("3 divides s+1");
    if (why.empty()) return {true, "s+1 is coprime to 6"};
    std::string r = why[0];
    for (std::size_t i = 1; i < why.size(); ++i) r += "; " + why[i];
    return {false, r};
}

FeasibilityVerdict gh_cayley_feasible(std::int64_t s) {
    if (s < 1) throw Error("generalized hexagon order must be positive");
    std::vector<std::string> why;
    if (s % 6 != 0) why.push_back("s not multiple of 6");
    if ((s + 1) % 5 == 0) why.push_back("5 divides s+1");
    if (why.empty()) return {true, "s is a multiple of 6 and 5 does not divide s+1"};
    std::string r = why[0];
    for (std::size_t i = 1; i < why.size(); ++i) r += "; " + why[i];
    return {false, r};
}

BensonTrace benson_trace(const Graph& point_graph, std::int64_t s, const Permutation& perm) {
    if (s < 1) throw Error("benson_trace needs s >= 1");
    if (!is_automorphism(point_graph, perm)) throw Error("benson_trace: permutation is not an automorphism");
    BensonTrace t;
    for (Vertex x = 0; x < point_graph.order(); ++x) {
        if (perm(x) == x) ++t.fixed_points;
        else if (point_graph.has_edge(x, perm(x))) ++t.collinear_moves;
    }
    t.trace = t.fixed_points + t.collinear_moves;
    t.congruent_mod_s = (static_cast<std::int64_t>(t.trace) - 1) % s == 0;
    t.order = perm.order();
    t.small_prime_fixed_point_free = (t.order == 2 || t.order == 3 || t.order == 5) && t.trace == 0;
    return t;
}

HalvingObstruction halving_obstruction(const IntersectionArray& a) {
    const auto roots = rational_eigenvalues(a);
    const bool bip = a.bipartite();
    HalvingObstruction h;
    for (int m = 0; m < a.valency(); ++m) {
        if (m == 0 && !bip) continue;
        if (std::find(roots.begin(), roots.end(), 2 * m - a.valency()) != roots.end()) h.admissible_m.push_back(m);
    }
    h.obstructed = h.admissible_m.empty();
    if (h.obstructed)
        h.reason = "no group of order " + std::to_string(a.order()) +
                   " with a subgroup of index 2 admits this graph: no eigenvalue 2m-k for any admissible m";
    else {
        h.reason = "admissible m:";
        for (int m : h.admissible_m) h.reason += " " + std::to_string(m);
    }
    return h;
}

}  // namespace drg
