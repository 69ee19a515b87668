#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "drg/graph.hpp"

namespace drg {

using BigInt = boost::multiprecision::cpp_int;

// Permutations act on the right: x^(ab) = (x^a)^b, so (a*b)(x) = b(a(x)).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::size_t n);
    // Throws unless `image` is a bijection on 0..n-1.
    explicit Permutation(std::vector<Vertex> image);

    std::size_t degree() const { return image_.size(); }
    Vertex operator()(Vertex x) const { return image_[x]; }
    const std::vector<Vertex>& images() const { return image_; }
    bool is_identity() const;
    Permutation inverse() const;
    std::vector<std::size_t> cycle_lengths() const;
    // Least common multiple of the cycle lengths (throws beyond 64 bits).
    std::uint64_t order() const;
    // All cycles of one length (no fixed points unless identity).
    bool is_semiregular() const;
    std::string cycle_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.image_ < b.image_; }

  private:
    std::vector<Vertex> image_;
};

bool is_automorphism(const Graph& g, const Permutation& p);

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm.
class PermutationGroup {
  public:
    PermutationGroup() = default;
    // `base_prefix` fixes the first base points; more are appended as needed.
    PermutationGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Vertex> base_prefix = {});

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Vertex>& base() const { return base_; }
    std::size_t levels() const { return base_.size(); }
    // Generators of the pointwise stabilizer of base[0..level-1].
    const std::vector<Permutation>& strong_generators(std::size_t level) const { return levels_[level].gens; }
    // Orbit of base[level] under the level's stabilizer, in discovery order.
    const std::vector<Vertex>& fundamental_orbit(std::size_t level) const { return levels_[level].orbit; }
    // u with base[level]^u = point, or nullptr when point is off the orbit.
    const Permutation* transversal(std::size_t level, Vertex point) const;

    BigInt order() const;
    bool contains(const Permutation& p) const;
    // Orbits of the whole group, each sorted, listed by smallest point.
    std::vector<std::vector<Vertex>> orbits() const;
    bool is_transitive() const;

  private:
    struct Level {
        std::vector<Permutation> gens;
        std::vector<Vertex> orbit;
        std::vector<int> slot;  // point -> index into transversal, -1 if absent
        std::vector<Permutation> transversal;
    };
    void rebuild_level(std::size_t i);
    // Returns the residue and the level at which sifting stopped.
    std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const;

    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Vertex> base_;
    std::vector<Level> levels_;
};

// Orbits of the group generated by `gens` on 0..n-1, as a point -> orbit-id map
// with ids assigned in order of the smallest point.
std::vector<std::size_t> orbit_ids(std::size_t n, const std::vector<Permutation>& gens);

}  // namespace drg
