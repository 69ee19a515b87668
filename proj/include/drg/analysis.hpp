#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drg/graph.hpp"
#include "drg/permutation.hpp"

namespace drg {

// {b_0,...,b_{d-1}; c_1,...,c_d}
struct IntersectionArray {
    std::vector<int> b;
    std::vector<int> c;

    IntersectionArray() = default;
    IntersectionArray(std::vector<int> b_, std::vector<int> c_);

    int valency() const { return b.empty() ? 0 : b[0]; }
    std::size_t diameter() const { return c.size(); }
    // With the conventions b_d = 0 and c_0 = 0.
    int b_at(std::size_t i) const { return i < b.size() ? b[i] : 0; }
    int c_at(std::size_t i) const { return i == 0 ? 0 : c[i - 1]; }
    int a_at(std::size_t i) const { return valency() - b_at(i) - c_at(i); }
    // k_i = b_0...b_{i-1} / (c_1...c_i); throws if some k_i is not integral.
    std::vector<std::int64_t> vertex_counts() const;
    std::int64_t order() const;
    bool bipartite() const;
    bool antipodal_candidate() const { return !b.empty() && b_at(diameter() - 1) == 1 && diameter() >= 2; }
    // 2 min{i : a_i > 0} + 1, or kInfiniteGirth.
    std::size_t odd_girth() const;
    // 2 min{i : c_i > 1}, or kInfiniteGirth.
    std::size_t even_girth_formula() const;
    std::size_t girth() const;

    std::string str() const;
    static IntersectionArray parse(std::string_view text);

    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// Throws drg::Error unless c_1 = 1, a_i >= 0, b non-increasing, c non-decreasing.
void validate(const IntersectionArray& a);

struct RegularityWitness {
    std::uint32_t distance = 0;
    char parameter = 'c';  // which of a, b, c differs
    Vertex x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    std::uint32_t value1 = 0, value2 = 0;
    std::string describe() const;
};

struct DrgCheck {
    std::optional<IntersectionArray> array;
    std::optional<RegularityWitness> witness;
    bool distance_regular() const { return array.has_value(); }
};

// Throws on disconnected input.
DrgCheck check_distance_regular(const Graph& g);
DrgCheck check_distance_regular(const Graph& g, const DistanceTable& dist);

struct SrgParameters {
    std::int64_t n, k, lambda, mu;
    friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};
std::optional<SrgParameters> srg_parameters(const IntersectionArray& a);

struct ArrayEigenvalue {
    double value;
    bool rational;
    std::int64_t exact;  // meaningful when rational
    double multiplicity;
};
// Eigenvalues of the tridiagonal intersection matrix, decreasing.
std::vector<ArrayEigenvalue> spectrum_of_array(const IntersectionArray& a);
std::vector<std::int64_t> rational_eigenvalues(const IntersectionArray& a);

struct SpectrumTolerances {
    double snap = 1e-6;
    double merge = 1e-5;
};

struct SpectrumEntry {
    double value;
    std::size_t multiplicity;
    bool integral;
};
using Spectrum = std::vector<SpectrumEntry>;

Spectrum spectrum_numeric(const Graph& g, SpectrumTolerances tol = {});
// Symmetric real matrix given row-major.
std::vector<double> symmetric_eigenvalues(const std::vector<double>& m, std::size_t n);
// Eigenvalues of a general real square matrix that are real (|imag| < 1e-9).
std::vector<double> real_eigenvalues(const std::vector<double>& m, std::size_t n);
std::string format_eigenvalue(double v);

struct FeasibilityVerdict {
    bool feasible;
    std::string reason;
};
FeasibilityVerdict gq_cayley_feasible(std::int64_t s);
FeasibilityVerdict gh_cayley_feasible(std::int64_t s);

struct BensonTrace {
    std::size_t fixed_points = 0;
    std::size_t collinear_moves = 0;
    std::size_t trace = 0;
    bool congruent_mod_s = false;
    std::uint64_t order = 1;
    // Order 2, 3 or 5 with no fixed point and no collinear move.
    bool small_prime_fixed_point_free = false;
};
BensonTrace benson_trace(const Graph& point_graph, std::int64_t s, const Permutation& perm);

struct HalvingObstruction {
    std::vector<int> admissible_m;
    bool obstructed = false;
    std::string reason;
};
HalvingObstruction halving_obstruction(const IntersectionArray& a);

}  // namespace drg
