#include "covdepth/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "covdepth/random.hpp"
#include "covdepth/random_access.hpp"

namespace covdepth::ra {

namespace {

CodeSpec systematic_code(int n, int k, const std::vector<std::uint32_t>& parity_cols) {
    std::vector<std::uint64_t> rows(k);
    for (int i = 0; i < k; ++i) {
        std::uint64_t row = std::uint64_t{1} << i;
        for (std::size_t j = 0; j < parity_cols.size(); ++j) {
            if (parity_cols[j] >> i & 1) row |= std::uint64_t{1} << (k + j);
        }
        rows[i] = row;
    }
    return CodeSpec::xor_linear(n, k, std::move(rows));
}

bool next_multiset(std::vector<std::uint32_t>& cols, std::uint32_t max_value) {
    // Non-decreasing sequences over 0..max_value, lexicographic.
    int pos = static_cast<int>(cols.size()) - 1;
    while (pos >= 0 && cols[pos] == max_value) --pos;
    if (pos < 0) return false;
    const std::uint32_t v = cols[pos] + 1;
    for (std::size_t i = pos; i < cols.size(); ++i) cols[i] = v;
    return true;
}

}  // namespace

std::vector<SearchResult> search_codes(int n, int k, std::uint64_t budget, SearchMode mode,
                                       std::uint64_t seed) {
    if (n < 1 || n > 12) throw ExactCapError("search_codes requires n <= 12");
    if (k < 1 || k > n) throw std::invalid_argument("search_codes: need 1 <= k <= n");
    if (budget == 0) throw std::invalid_argument("search_codes: need budget >= 1");

    std::vector<SearchResult> results;
    results.push_back({CodeSpec::uncoded(k), Rational(k)});

    const int parity = n - k;
    if (parity > 0) {
        const std::uint32_t max_col = (1u << k) - 1;
        std::set<std::vector<std::uint32_t>> visited;
        const auto evaluate = [&](const std::vector<std::uint32_t>& cols) {
            if (!visited.insert(cols).second) return;
            CodeSpec code = systematic_code(n, k, cols);
            Rational value = t_max(code);
            results.push_back({std::move(code), std::move(value)});
        };

        if (mode == SearchMode::exhaustive) {
            std::vector<std::uint32_t> cols(parity, 0);
            std::uint64_t evaluated = 0;
            do {
                evaluate(cols);
            } while (++evaluated < budget && next_multiset(cols, max_col));
        } else {
            for (std::uint64_t trial = 0; trial < budget; ++trial) {
                RandomStream stream = derive_stream(seed, trial);
                std::vector<std::uint32_t> cols(parity);
                for (auto& c : cols) c = stream.next_below(max_col + 1);
                std::sort(cols.begin(), cols.end());
                evaluate(cols);
            }
        }
    }

    std::stable_sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
        if (a.worst_expected != b.worst_expected) return a.worst_expected < b.worst_expected;
        if (a.code.kind != b.code.kind) return a.code.kind < b.code.kind;
        return a.code.generator_rows < b.code.generator_rows;
    });
    return results;
}

}  // namespace covdepth::ra
