#pragma once

#include <cstddef>
#include <cstdint>

namespace covdepth::kernels {

// Hot inner loops shared by the quadrature and exact-enumeration paths, in
// scalar reference form plus an AVX2 variant selected at runtime. Both
// variants perform the identical IEEE operations in the identical order, so
// outputs are bit-for-bit equal; the equivalence suite asserts this.
struct KernelTable {
    const char* name;

    // One factor of the occupancy generating function folded into the
    // coefficient window: coef[j] <- g*coef[j] + (1-g)*coef[j-1] for
    // j = len-1..1 (descending), then coef[0] <- g*coef[0].
    void (*pgf_fold_factor)(double* coef, std::size_t len, double g);

    // One superset-closure pass over a subset-lattice bitset: every subset
    // containing `bit` inherits membership from the subset without it.
    // words spans 2^n bits, nwords = max(1, 2^n / 64).
    void (*superset_or_pass)(std::uint64_t* words, std::size_t nwords, unsigned bit);

    // hist[s] += number of ZERO bits whose global bit index has popcount s
    // (global index = 64*word + position). Caller sizes hist to n+1 and must
    // set padding bits beyond 2^n to one.
    void (*zero_size_histogram)(const std::uint64_t* words, std::size_t nwords,
                                std::uint64_t* hist);
};

const KernelTable& scalar_table();

// nullptr when the CPU lacks AVX2.
const KernelTable* avx2_table();

// AVX2 when available, scalar otherwise. Decided once per process.
const KernelTable& active_table();

// Bit masks of positions j in [0,64) whose popcount is c, c = 0..6.
extern const std::uint64_t kPopcountClassMask[7];

// Positions j in [0,64) with bit b clear, b = 0..5.
extern const std::uint64_t kBitClearMask[6];

}  // namespace covdepth::kernels
