#include "covdepth/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace covdepth {

namespace {

void check_antichain(int n, const std::vector<StrandSet>& sets) {
    const StrandSet universe = n == 64 ? ~StrandSet{0} : (StrandSet{1} << n) - 1;
    for (StrandSet s : sets) {
        if (s == 0) throw std::invalid_argument("retrieval set must be non-empty");
        if ((s & ~universe) != 0)
            throw std::invalid_argument("retrieval set exceeds strand universe");
    }
    for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = 0; b < sets.size(); ++b) {
            if (a != b && is_subset(sets[a], sets[b]))
                throw std::invalid_argument("retrieval sets are not an antichain");
        }
    }
}

void append_subsets_of_size(int n, int k, StrandSet excluded, std::vector<StrandSet>& out) {
    // All k-subsets of [n] \ excluded, ascending.
    std::vector<int> universe;
    for (int i = 0; i < n; ++i)
        if (!(excluded >> i & 1)) universe.push_back(i);
    const int m = static_cast<int>(universe.size());
    if (k > m || k <= 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        StrandSet s = 0;
        for (int i : idx) s |= StrandSet{1} << universe[i];
        out.push_back(s);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

// GF(2) span basis indexed by leading-bit position.
struct Gf2Basis {
    std::uint32_t by_msb[32] = {};

    void insert(std::uint32_t v) {
        while (v) {
            const int p = 31 - std::countl_zero(v);
            if (!by_msb[p]) {
                by_msb[p] = v;
                return;
            }
            v ^= by_msb[p];
        }
    }
    bool contains(std::uint32_t v) const {
        while (v) {
            const int p = 31 - std::countl_zero(v);
            if (!by_msb[p]) return false;
            v ^= by_msb[p];
        }
        return true;
    }
};

// Columns of the generator as k-bit masks: strand j is the XOR of the
// information strands marked in cols[j].
std::vector<std::uint32_t> generator_columns(const CodeSpec& code) {
    std::vector<std::uint32_t> cols(code.n, 0);
    for (int i = 0; i < code.k; ++i) {
        for (int j = 0; j < code.n; ++j) {
            if (code.generator_rows[i] >> j & 1) cols[j] |= 1u << i;
        }
    }
    return cols;
}

bool subset_decodes(const std::vector<std::uint32_t>& cols, StrandSet s, std::uint32_t target) {
    Gf2Basis basis;
    for (StrandSet rest = s; rest;) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        basis.insert(cols[j]);
    }
    return basis.contains(target);
}

std::vector<StrandSet> xor_minimal_sets(const CodeSpec& code, int info_index) {
    if (code.n > 24)
        throw ExactCapError("XorLinear retrieval enumeration requires n <= 24");
    const auto cols = generator_columns(code);
    const std::uint32_t target = 1u << info_index;
    const std::size_t total = std::size_t{1} << code.n;

    std::vector<std::uint64_t> dec((total + 63) / 64, 0);
    const auto dec_bit = [&](std::size_t s) { return (dec[s >> 6] >> (s & 63)) & 1; };

    std::vector<StrandSet> mins;
    for (std::size_t s = 0; s < total; ++s) {
        bool covered = false;
        for (StrandSet rest = s; rest;) {
            const int j = std::countr_zero(rest);
            rest &= rest - 1;
            if (dec_bit(s & ~(StrandSet{1} << j))) {
                covered = true;
                break;
            }
        }
        if (covered) {
            dec[s >> 6] |= std::uint64_t{1} << (s & 63);
        } else if (subset_decodes(cols, s, target)) {
            dec[s >> 6] |= std::uint64_t{1} << (s & 63);
            mins.push_back(s);
        }
    }
    return mins;
}

}  // namespace

DecodableFamily DecodableFamily::from_minimal_sets(int n, std::vector<StrandSet> sets) {
    if (n < 1 || n > 64) throw std::invalid_argument("DecodableFamily: n must be in 1..64");
    if (sets.empty()) throw std::invalid_argument("DecodableFamily: need at least one set");
    check_antichain(n, sets);
    return DecodableFamily{n, std::move(sets)};
}

DecodableFamily DecodableFamily::threshold(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("DecodableFamily: need 1 <= k <= n");
    DecodableFamily f;
    f.n = n;
    append_subsets_of_size(n, k, 0, f.minimal_sets);
    return f;
}

RetrievalFamily RetrievalFamily::validated(int n, std::vector<std::vector<StrandSet>> sets) {
    if (n < 1 || n > 64) throw std::invalid_argument("RetrievalFamily: n must be in 1..64");
    if (sets.empty()) throw std::invalid_argument("RetrievalFamily: no information indices");
    for (const auto& per_index : sets) {
        if (per_index.empty())
            throw std::invalid_argument("RetrievalFamily: every index needs a retrieval set");
        check_antichain(n, per_index);
    }
    return RetrievalFamily{n, std::move(sets)};
}

const char* to_string(CodeKind kind) {
    switch (kind) {
        case CodeKind::Uncoded: return "uncoded";
        case CodeKind::MdsSystematic: return "mds_systematic";
        case CodeKind::MdsNonSystematic: return "mds_nonsystematic";
        case CodeKind::XorLinear: return "xor";
        case CodeKind::ExplicitRetrieval: return "explicit";
    }
    return "?";
}

namespace {
void check_nk(int n, int k) {
    if (n < 1 || n > 64) throw std::invalid_argument("CodeSpec: n must be in 1..64");
    if (k < 1 || k > n) throw std::invalid_argument("CodeSpec: need 1 <= k <= n");
}
}  // namespace

CodeSpec CodeSpec::uncoded(int n) {
    check_nk(n, n);
    return CodeSpec{n, n, CodeKind::Uncoded, {}, {}};
}

CodeSpec CodeSpec::mds_systematic(int n, int k) {
    check_nk(n, k);
    return CodeSpec{n, k, CodeKind::MdsSystematic, {}, {}};
}

CodeSpec CodeSpec::mds_nonsystematic(int n, int k) {
    check_nk(n, k);
    return CodeSpec{n, k, CodeKind::MdsNonSystematic, {}, {}};
}

CodeSpec CodeSpec::xor_linear(int n, int k, std::vector<std::uint64_t> rows) {
    check_nk(n, k);
    if (k > 32) throw std::invalid_argument("CodeSpec: XorLinear supports k <= 32");
    if (static_cast<int>(rows.size()) != k)
        throw std::invalid_argument("CodeSpec: generator must have k rows");
    const std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t row : rows) {
        if (row & ~universe) throw std::invalid_argument("CodeSpec: generator row exceeds n bits");
    }
    if (gf2_rank(rows) != k)
        throw std::invalid_argument("CodeSpec: generator must have rank k over GF(2)");
    return CodeSpec{n, k, CodeKind::XorLinear, std::move(rows), {}};
}

CodeSpec CodeSpec::explicit_retrieval(int n, int k, RetrievalFamily family) {
    check_nk(n, k);
    if (family.n != n) throw std::invalid_argument("CodeSpec: retrieval family n mismatch");
    if (family.num_indices() != k)
        throw std::invalid_argument("CodeSpec: retrieval family must cover all k indices");
    return CodeSpec{n, k, CodeKind::ExplicitRetrieval, {}, std::move(family)};
}

int gf2_rank(const std::vector<std::uint64_t>& rows) {
    std::uint64_t by_msb[64] = {};
    int rank = 0;
    for (std::uint64_t v : rows) {
        while (v) {
            const int p = 63 - std::countl_zero(v);
            if (!by_msb[p]) {
                by_msb[p] = v;
                ++rank;
                break;
            }
            v ^= by_msb[p];
        }
    }
    return rank;
}

std::vector<StrandSet> minimal_retrieval_sets(const CodeSpec& code, int info_index) {
    if (info_index < 0 || info_index >= code.k)
        throw std::invalid_argument("minimal_retrieval_sets: index out of range");
    switch (code.kind) {
        case CodeKind::Uncoded:
            return {StrandSet{1} << info_index};
        case CodeKind::MdsSystematic: {
            std::vector<StrandSet> sets{StrandSet{1} << info_index};
            append_subsets_of_size(code.n, code.k, StrandSet{1} << info_index, sets);
            return sets;
        }
        case CodeKind::MdsNonSystematic: {
            std::vector<StrandSet> sets;
            append_subsets_of_size(code.n, code.k, 0, sets);
            return sets;
        }
        case CodeKind::XorLinear:
            return xor_minimal_sets(code, info_index);
        case CodeKind::ExplicitRetrieval:
            return code.retrieval.minimal_sets.at(info_index);
    }
    throw std::logic_error("minimal_retrieval_sets: unknown code kind");
}

RetrievalFamily retrieval_family_from_code(const CodeSpec& code) {
    std::vector<std::vector<StrandSet>> sets;
    sets.reserve(code.k);
    for (int i = 0; i < code.k; ++i) sets.push_back(minimal_retrieval_sets(code, i));
    return RetrievalFamily{code.n, std::move(sets)};
}

}  // namespace covdepth
