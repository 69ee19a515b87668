#include "drg/kernels/bitops.hpp"

#include <bit>

namespace drg::kernels::scalar {
namespace {

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::size_t popcount(const Word* a, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
    return total;
}

void or_into(Word* dst, const Word* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void andnot_into(Word* dst, const Word* mask, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] &= ~mask[i];
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

constexpr BitOps kTable{and_popcount, popcount, or_into, andnot_into, intersects};

}  // namespace

const BitOps& table() { return kTable; }

}  // namespace drg::kernels::scalar
