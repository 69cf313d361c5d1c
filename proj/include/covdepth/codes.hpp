#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace covdepth {

// Subsets of [n] are bitmasks; strand i (0-based) is bit i. n <= 64.
using StrandSet = std::uint64_t;

inline int set_size(StrandSet s) { return __builtin_popcountll(s); }
inline bool is_subset(StrandSet a, StrandSet b) { return (a & ~b) == 0; }

// An upward-closed family of subsets of [n], stored by its minimal sets
// (an antichain). Attainment of any member ends a trial; this unifies
// "k distinct strands" full decoding with per-index retrieval sets.
struct DecodableFamily {
    int n = 0;
    std::vector<StrandSet> minimal_sets;

    // Validates the antichain property and set bounds.
    static DecodableFamily from_minimal_sets(int n, std::vector<StrandSet> sets);
    // {S : |S| >= k}; minimal sets are all k-subsets of [n].
    static DecodableFamily threshold(int n, int k);

    bool decodable(StrandSet s) const {
        for (StrandSet m : minimal_sets)
            if (is_subset(m, s)) return true;
        return false;
    }
};

// Per information index i in [k]: the minimal retrieval sets D(i).
struct RetrievalFamily {
    int n = 0;
    // minimal_sets[i] is D(i) for info index i (0-based), each an antichain.
    std::vector<std::vector<StrandSet>> minimal_sets;

    static RetrievalFamily validated(int n, std::vector<std::vector<StrandSet>> sets);
    int num_indices() const { return static_cast<int>(minimal_sets.size()); }
};

enum class CodeKind {
    Uncoded,
    MdsSystematic,
    MdsNonSystematic,
    XorLinear,
    ExplicitRetrieval,
};

const char* to_string(CodeKind kind);

// A code description: (n, k) plus retrieval semantics. MDS kinds carry no
// matrix (any k distinct strands decode everything; systematic additionally
// decodes u_i from strand i alone). XorLinear carries a k x n binary
// generator of rank k, rows as n-bit masks.
struct CodeSpec {
    int n = 0;
    int k = 0;
    CodeKind kind = CodeKind::Uncoded;
    std::vector<std::uint64_t> generator_rows;  // XorLinear only
    RetrievalFamily retrieval;                  // ExplicitRetrieval only

    static CodeSpec uncoded(int n);
    static CodeSpec mds_systematic(int n, int k);
    static CodeSpec mds_nonsystematic(int n, int k);
    static CodeSpec xor_linear(int n, int k, std::vector<std::uint64_t> rows);
    static CodeSpec explicit_retrieval(int n, int k, RetrievalFamily family);
};

// Rank of a set of GF(2) row vectors (n-bit masks).
int gf2_rank(const std::vector<std::uint64_t>& rows);

// Minimal retrieval sets of one information index. For XorLinear this is an
// exhaustive subset scan (requires n <= 24); MDS/Uncoded families are written
// down analytically.
std::vector<StrandSet> minimal_retrieval_sets(const CodeSpec& code, int info_index);

// All of D(1..k).
RetrievalFamily retrieval_family_from_code(const CodeSpec& code);

// Thrown when an exact path is asked to enumerate beyond its subset cap.
struct ExactCapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace covdepth
