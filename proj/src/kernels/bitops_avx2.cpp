// Built with -mavx2; only called after the dispatcher has confirmed AVX2.

#include "drg/kernels/bitops.hpp"

#include <immintrin.h>

#include <bit>

namespace drg::kernels::avx2 {
namespace {

// Nibble-table popcount: vpshufb looks up the bit count of each 4-bit half,
// vpsadbw folds the 32 byte counts into four 64-bit lanes.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::size_t hsum_epi64(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i cnt = popcount_bytes(_mm256_and_si256(va, vb));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    std::size_t total = hsum_epi64(acc);
    for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::size_t popcount(const Word* a, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(va), _mm256_setzero_si256()));
    }
    std::size_t total = hsum_epi64(acc);
    for (; i < words; ++i) total += std::popcount(a[i]);
    return total;
}

void or_into(Word* dst, const Word* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), s));
    }
    for (; i < words; ++i) dst[i] |= src[i];
}

void andnot_into(Word* dst, const Word* mask, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i));
        // andnot computes ~first & second
        _mm256_storeu_si256(d, _mm256_andnot_si256(m, _mm256_loadu_si256(d)));
    }
    for (; i < words; ++i) dst[i] &= ~mask[i];
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(va, vb)) return true;
    }
    for (; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

constexpr BitOps kTable{and_popcount, popcount, or_into, andnot_into, intersects};

}  // namespace

const BitOps& table() { return kTable; }

}  // namespace drg::kernels::avx2
