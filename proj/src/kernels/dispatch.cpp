#include "drg/kernels/bitops.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace drg::kernels {
namespace {

Isa detect() {
    if (const char* env = std::getenv("DRG_KERNELS"); env && std::string(env) == "scalar")
        return Isa::scalar;
#if defined(__x86_64__) || defined(_M_X64)
    if (isa_available(Isa::avx2)) return Isa::avx2;
#elif defined(__aarch64__)
    return Isa::neon;
#endif
    return Isa::scalar;
}

struct Selection {
    std::atomic<int> isa;
    std::atomic<const BitOps*> ops;
};

Selection& selected() {
    static Selection sel{static_cast<int>(detect()), &ops_for(detect())};
    return sel;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "?";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const BitOps& ops_for(Isa isa) {
    if (!isa_available(isa)) throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: return avx2::table();
#endif
#if defined(__aarch64__)
        case Isa::neon: return neon::table();
#endif
        default: return scalar::table();
    }
}

Isa active_isa() { return static_cast<Isa>(selected().isa.load(std::memory_order_relaxed)); }

const BitOps& active() { return *selected().ops.load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    const BitOps& ops = ops_for(isa);
    selected().isa.store(static_cast<int>(isa), std::memory_order_relaxed);
    selected().ops.store(&ops, std::memory_order_relaxed);
}

}  // namespace drg::kernels
