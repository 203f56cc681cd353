#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tracecodes/gf.hpp"

namespace tracecodes {

// Enumeration limits for the brute-force weight distribution.  The defaults
// cover every worked example in seconds.
struct EnumBudget {
    std::uint64_t max_pairs = 1ull << 22;  // p^{m+m2} message pairs
    std::size_t max_length = 4096;
};

// The code over F_{p^m2} generated by the all-ones row together with the
// trace rows Tr_{p^m/p^{m2}}(alpha^t d_i) over the defining set
// D = { x : Tr_{p^m/p^{m1}}(x^2) = 0 }, with d_n = 0 kept in the last
// position.  The tower must outlive the code.
struct LinearCode {
    const FieldTower* tower = nullptr;
    std::vector<Elem> coords;                  // d_1, ..., d_n with d_n = 0
    std::vector<std::vector<Elem>> gen_rows;   // (m/m2 + 1) x n, entries in the m2 subfield

    std::size_t length() const { return coords.size(); }
    std::size_t rows() const { return gen_rows.size(); }
};

// Weight -> number of distinct codewords of that weight.  When the message
// map (b, c) -> codeword fails to be injective the counts are deduplicated,
// and `collapse` reports how many messages share each codeword.
struct WeightDistribution {
    std::map<long long, long long> counts;
    long long collapse = 1;
};

struct CodeParams {
    long long n = 0;
    long long k = 0;
    long long d = 0;
    long long q = 0;          // alphabet size p^{m2}
    bool full_dimension = false;  // k == m/m2 + 1
    long long collapse = 1;
};

// One recovery pair per coordinate: column pos equals
// coef_a * column(a) + coef_b * column(b).
struct RepairGroup {
    std::size_t a = 0;
    std::size_t b = 0;
    Elem coef_a = 0;
    Elem coef_b = 0;
};

struct LocalityResult {
    int r = 0;
    std::vector<RepairGroup> groups;  // one entry per coordinate
};

// The zero locus of Tr_{p^m/p^{m1}}(x^2), in ascending packed order with 0
// moved to the last position.
std::vector<Elem> defining_set(const FieldTower& t);

LinearCode build_code(const FieldTower& t);

// Exact weight distribution by enumerating all (b, c) in
// F_{p^m} x F_{p^m2}, deduplicated as described above.
WeightDistribution weight_distribution_bruteforce(const LinearCode& code, const EnumBudget& budget = {});

CodeParams code_params(const LinearCode& code, const WeightDistribution& wd);

// G * G^T == 0 over F_{p^m2}.
bool is_self_orthogonal(const LinearCode& code);

// Largest power of p dividing every nonzero weight (errc::zero_code when the
// distribution has no nonzero weight).
long long p_divisibility(int p, const WeightDistribution& wd);

// Dual minimum distance when it is at most 3, computed from column tests:
// returns 1, 2 or 3 exactly, or 4 meaning "greater than 3".
int dual_distance_small(const LinearCode& code);

// Recovery pair for one coordinate, following the constructive rule
// d_j = u^{-1} d_i with u in F_{p^m2} \ {0, 1} (the last coordinate repairs
// through any such pair instead).
RepairGroup repair_group(const LinearCode& code, std::size_t pos);

// Locality 2 with witnesses for every coordinate, after confirming that no
// coordinate has locality 1.
LocalityResult locality(const LinearCode& code);

// Restores the erased symbol of `word` at `pos` from its recovery pair.
// Empty entries mark erasures; errc::group_erased when a pair member is
// missing too.
Elem repair_erasure(const LinearCode& code, const std::vector<std::optional<Elem>>& word, std::size_t pos);

}  // namespace tracecodes
