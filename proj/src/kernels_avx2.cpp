// AVX2 variants of the inner-loop kernels. Compiled with -mavx2 -mfma and
// only reachable through the runtime dispatch in kernels.cpp. Each loop
// performs the same IEEE operations as its scalar reference (FMA where the
// scalar uses std::fma, plain or/and elsewhere), so results are bit-identical.

#include <immintrin.h>

#include <bit>

#include "covdepth/kernels.hpp"

namespace covdepth::kernels {

namespace {

void pgf_fold_factor_avx2(double* coef, std::size_t len, double g) {
    const double h = 1.0 - g;
    const __m256d vg = _mm256_set1_pd(g);
    const __m256d vh = _mm256_set1_pd(h);

    std::size_t j = len;
    // Descending blocks of four: positions [j-4, j-1] read [j-5, j-2] as the
    // shifted operand, which later (lower) blocks have not yet written.
    while (j >= 5) {
        const __m256d cur = _mm256_loadu_pd(coef + j - 4);
        const __m256d prev = _mm256_loadu_pd(coef + j - 5);
        _mm256_storeu_pd(coef + j - 4, _mm256_fmadd_pd(vg, cur, _mm256_mul_pd(vh, prev)));
        j -= 4;
    }
    while (j-- > 1) {
        coef[j] = __builtin_fma(g, coef[j], h * coef[j - 1]);
    }
    coef[0] = g * coef[0];
}

void superset_or_pass_avx2(std::uint64_t* words, std::size_t nwords, unsigned bit) {
    if (bit < 6) {
        const __m256i mask = _mm256_set1_epi64x(static_cast<long long>(kBitClearMask[bit]));
        const int shift = 1 << bit;
        std::size_t w = 0;
        for (; w + 4 <= nwords; w += 4) {
            const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + w));
            const __m256i shifted = _mm256_slli_epi64(_mm256_and_si256(v, mask), shift);
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(words + w), _mm256_or_si256(v, shifted));
        }
        for (; w < nwords; ++w) {
            words[w] |= (words[w] & kBitClearMask[bit]) << shift;
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << (bit - 6);
    for (std::size_t base = 0; base + 2 * stride <= nwords; base += 2 * stride) {
        std::uint64_t* dst = words + base + stride;
        const std::uint64_t* src = words + base;
        std::size_t i = 0;
        for (; i + 4 <= stride; i += 4) {
            const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
            const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
        }
        for (; i < stride; ++i) dst[i] |= src[i];
    }
}

// 4x64-bit popcount via the nibble shuffle table.
inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

void zero_size_histogram_avx2(const std::uint64_t* words, std::size_t nwords,
                              std::uint64_t* hist) {
    __m256i class_masks[7];
    for (int c = 0; c < 7; ++c)
        class_masks[c] = _mm256_set1_epi64x(static_cast<long long>(kPopcountClassMask[c]));

    std::size_t w = 0;
    alignas(32) std::uint64_t lane[4];
    for (; w + 4 <= nwords; w += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + w));
        const __m256i zeros = _mm256_xor_si256(v, _mm256_set1_epi64x(-1));
        if (_mm256_testz_si256(zeros, zeros)) continue;
        const int base0 = std::popcount(w);
        const int base1 = std::popcount(w + 1);
        const int base2 = std::popcount(w + 2);
        const int base3 = std::popcount(w + 3);
        for (int c = 0; c < 7; ++c) {
            _mm256_store_si256(reinterpret_cast<__m256i*>(lane),
                               popcount_epi64(_mm256_and_si256(zeros, class_masks[c])));
            hist[base0 + c] += lane[0];
            hist[base1 + c] += lane[1];
            hist[base2 + c] += lane[2];
            hist[base3 + c] += lane[3];
        }
    }
    for (; w < nwords; ++w) {
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

const KernelTable* avx2_table_impl() {
    static const KernelTable table{
        "avx2",
        &pgf_fold_factor_avx2,
        &superset_or_pass_avx2,
        &zero_size_histogram_avx2,
    };
    return &table;
}

}  // namespace covdepth::kernels
