#pragma once

#include <cstdint>
#include <vector>

#include "covdepth/codes.hpp"
#include "covdepth/rational.hpp"

namespace covdepth::ra {

enum class SearchMode { exhaustive, random };

struct SearchResult {
    CodeSpec code;
    Rational worst_expected;  // t_max of the code
};

// Discrete search over systematic binary codes [I_k | P] minimizing t_max.
// Parity columns are enumerated as non-decreasing column-value multisets
// (column order does not change t_max), exhaustively in lexicographic order
// or sampled, up to `budget` codes. The uncoded baseline (worst value k) is
// always included. Results ascend by t_max; deterministic for fixed
// (budget, seed). Requires n <= 12.
std::vector<SearchResult> search_codes(int n, int k, std::uint64_t budget,
                                       SearchMode mode = SearchMode::exhaustive,
                                       std::uint64_t seed = 0);

}  // namespace covdepth::ra
