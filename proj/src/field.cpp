#include "drg/field.hpp"

#include <string>

#include "drg/error.hpp"

namespace drg {

bool prime_power(unsigned q, unsigned& p, unsigned& m) {
    if (q < 2) return false;
    unsigned f = 2;
    while (q % f != 0) ++f;
    unsigned rest = q;
    m = 0;
    while (rest % f == 0) {
        rest /= f;
        ++m;
    }
    p = f;
    return rest == 1;
}

namespace {

// Coefficients of the monic irreducible x^m + c_{m-1}x^{m-1} + ... + c_0,
// listed c_0..c_{m-1}.
std::vector<unsigned> modulus(unsigned q) {
    switch (q) {
        case 4: return {1, 1};
        case 8: return {1, 1, 0};
        case 16: return {1, 1, 0, 0};
        case 9: return {1, 0};
        default: throw Error("no irreducible polynomial configured for GF(" + std::to_string(q) + ")");
    }
}

}  // namespace

GaloisField::GaloisField(unsigned q) : q_(q) {
    if (!prime_power(q, p_, m_)) throw Error("GF(q) needs a prime power, got " + std::to_string(q));
    if (q > 16) throw Error("GF(q) supported for q <= 16, got " + std::to_string(q));
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    auto digits = [&](unsigned x) {
        std::vector<unsigned> d(m_);
        for (unsigned i = 0; i < m_; ++i, x /= p_) d[i] = x % p_;
        return d;
    };
    auto number = [&](const std::vector<unsigned>& d) {
        unsigned x = 0;
        for (unsigned i = m_; i-- > 0;) x = x * p_ + d[i];
        return x;
    };
    const std::vector<unsigned> red = m_ > 1 ? modulus(q) : std::vector<unsigned>{};
    for (unsigned a = 0; a < q; ++a) {
        const auto da = digits(a);
        std::vector<unsigned> dn(m_);
        for (unsigned i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<std::uint8_t>(number(dn));
        for (unsigned b = 0; b < q; ++b) {
            const auto db = digits(b);
            std::vector<unsigned> sum(m_);
            for (unsigned i = 0; i < m_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = static_cast<std::uint8_t>(number(sum));
            std::vector<unsigned> prod(2 * m_, 0);
            for (unsigned i = 0; i < m_; ++i)
                for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            // x^k = -(c_0 + ... + c_{m-1} x^{m-1}) x^{k-m}
            for (unsigned k = 2 * m_ - 1; k >= m_ && k < 2 * m_; --k) {
                const unsigned c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                for (unsigned i = 0; i < m_; ++i) prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * red[i]) % p_;
            }
            prod.resize(m_);
            mul_[a * q + b] = static_cast<std::uint8_t>(number(prod));
        }
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (mul(a, b) == 1) inv_[a] = static_cast<std::uint8_t>(b);
    for (unsigned a = 1; a < q; ++a)
        if (inv_[a] == 0) throw Error("GF(" + std::to_string(q) + ") modulus is reducible");
}

unsigned GaloisField::inv(unsigned a) const {
    if (a == 0 || a >= q_) throw Error("GF inverse of zero");
    return inv_[a];
}

bool GaloisField::is_square(unsigned a) const {
    for (unsigned x = 0; x < q_; ++x)
        if (mul(x, x) == a) return true;
    return false;
}

}  // namespace drg
