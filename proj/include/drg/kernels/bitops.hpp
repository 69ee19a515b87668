#pragma once

// Word-parallel primitives over adjacency bit rows.
//
// Every kernel exists as a portable scalar reference and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant.  The variant is
// picked once at startup from the running CPU; DRG_KERNELS=scalar in the
// environment forces the reference path.  All variants must agree bit for
// bit, which tests/test_kernels.cpp checks on random inputs.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace drg::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct BitOps {
    // popcount(a & b) over `words` words
    std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
    std::size_t (*popcount)(const Word* a, std::size_t words);
    // dst |= src
    void (*or_into)(Word* dst, const Word* src, std::size_t words);
    // dst &= ~mask
    void (*andnot_into)(Word* dst, const Word* mask, std::size_t words);
    // (a & b) != 0 anywhere
    bool (*intersects)(const Word* a, const Word* b, std::size_t words);
};

bool isa_available(Isa isa);
const BitOps& ops_for(Isa isa);

// The dispatched table.  Stable after the first call unless force_isa is used.
const BitOps& active();
Isa active_isa();

// Test hook; throws std::invalid_argument if `isa` is not available here.
void force_isa(Isa isa);

// Variants, exposed for the equivalence tests.
namespace scalar {
const BitOps& table();
}
#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
const BitOps& table();
}
#endif
#if defined(__aarch64__)
namespace neon {
const BitOps& table();
}
#endif

}  // namespace drg::kernels
