#pragma once

#include <cstdint>
#include <vector>

namespace drg {

// GF(q) for prime powers q <= 16, elements numbered 0..q-1 by their
// coefficient vector over GF(p) read as a base-p integer (constant term
// least significant).  Extension fields use fixed irreducible polynomials:
// x^2+x+1 (q=4), x^3+x+1 (q=8), x^4+x+1 (q=16), x^2+1 (q=9).
class GaloisField {
  public:
    explicit GaloisField(unsigned q);

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    // Throws on zero.
    unsigned inv(unsigned a) const;
    bool is_square(unsigned a) const;

  private:
    unsigned q_, p_, m_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

// (p, m) with q = p^m, or nothing when q is not a prime power.
bool prime_power(unsigned q, unsigned& p, unsigned& m);

}  // namespace drg
