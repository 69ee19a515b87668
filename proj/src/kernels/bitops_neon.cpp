#include "drg/kernels/bitops.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>

namespace drg::kernels::neon {
namespace {

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint8x16_t v = vreinterpretq_u8_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
    }
    std::size_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::size_t popcount(const Word* a, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(a + i));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
    }
    std::size_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < words; ++i) total += std::popcount(a[i]);
    return total;
}

void or_into(Word* dst, const Word* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] |= src[i];
}

void andnot_into(Word* dst, const Word* mask, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(mask + i)));
    for (; i < words; ++i) dst[i] &= ~mask[i];
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) return true;
    }
    for (; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

constexpr BitOps kTable{and_popcount, popcount, or_into, andnot_into, intersects};

}  // namespace

const BitOps& table() { return kTable; }

}  // namespace drg::kernels::neon

#endif
