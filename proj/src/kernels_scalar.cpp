#include <bit>
#include <cmath>

#include "covdepth/kernels.hpp"

namespace covdepth::kernels {

namespace {

constexpr std::uint64_t class_mask(int c) {
    std::uint64_t m = 0;
    for (int j = 0; j < 64; ++j)
        if (std::popcount(static_cast<unsigned>(j)) == c) m |= std::uint64_t{1} << j;
    return m;
}

constexpr std::uint64_t bit_clear_mask(int b) {
    std::uint64_t m = 0;
    for (int j = 0; j < 64; ++j)
        if (!(j >> b & 1)) m |= std::uint64_t{1} << j;
    return m;
}

}  // namespace

const std::uint64_t kPopcountClassMask[7] = {
    class_mask(0), class_mask(1), class_mask(2), class_mask(3),
    class_mask(4), class_mask(5), class_mask(6),
};

const std::uint64_t kBitClearMask[6] = {
    bit_clear_mask(0), bit_clear_mask(1), bit_clear_mask(2),
    bit_clear_mask(3), bit_clear_mask(4), bit_clear_mask(5),
};

namespace {

void pgf_fold_factor_scalar(double* coef, std::size_t len, double g) {
    const double h = 1.0 - g;
    for (std::size_t j = len; j-- > 1;) {
        coef[j] = std::fma(g, coef[j], h * coef[j - 1]);
    }
    coef[0] = g * coef[0];
}

void superset_or_pass_scalar(std::uint64_t* words, std::size_t nwords, unsigned bit) {
    if (bit < 6) {
        const std::uint64_t mask = kBitClearMask[bit];
        const unsigned shift = 1u << bit;
        for (std::size_t w = 0; w < nwords; ++w) {
            words[w] |= (words[w] & mask) << shift;
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << (bit - 6);
    for (std::size_t base = 0; base + 2 * stride <= nwords; base += 2 * stride) {
        for (std::size_t i = 0; i < stride; ++i) {
            words[base + stride + i] |= words[base + i];
        }
    }
}

void zero_size_histogram_scalar(const std::uint64_t* words, std::size_t nwords,
                                std::uint64_t* hist) {
    for (std::size_t w = 0; w < nwords; ++w) {
        const std::uint64_t zeros = ~words[w];
        if (!zeros) continue;
        const int base = std::popcount(static_cast<std::uint64_t>(w));
        for (int c = 0; c < 7; ++c) {
            hist[base + c] +=
                static_cast<std::uint64_t>(std::popcount(zeros & kPopcountClassMask[c]));
        }
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{
        "scalar",
        &pgf_fold_factor_scalar,
        &superset_or_pass_scalar,
        &zero_size_histogram_scalar,
    };
    return table;
}

}  // namespace covdepth::kernels
