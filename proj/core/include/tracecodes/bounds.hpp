#pragma once

#include <string>
#include <vector>

namespace tracecodes {

// Optimality labels for a locally recoverable [n, k, d] code with locality r.
enum class LrcLabel {
    d_optimal,         // d meets the Singleton-like bound
    almost_d_optimal,  // d meets the bound minus one
    k_optimal,         // k meets the Cadambe-Mazumdar bound
    almost_k_optimal,  // k meets the bound minus one
    griesmer_optimal,  // no [n, k, d+1] code passes the Griesmer bound
};

std::string to_string(LrcLabel label);

enum class DualVerdict { optimal_or_almost, inconclusive };

std::string to_string(DualVerdict v);

struct BoundReport {
    long long n = 0, k = 0, d = 0, q = 0;
    int r = 0;
    long long singleton_like = 0;    // upper bound on d
    long long cm_k = 0;              // upper bound on k
    long long griesmer_at_d = 0;     // minimal length of an [*, k, d] code
    std::vector<LrcLabel> labels;
    DualVerdict dual_verdict = DualVerdict::inconclusive;  // for the [n, n-k, 3] dual

    bool operator==(const BoundReport&) const = default;
};

// Griesmer bound: minimal length of a k-dimensional code of minimum distance
// d over F_q, sum of ceil(d / q^i) for i < k.
long long griesmer_min_length(long long k, long long d, long long q);

// Largest k with griesmer_min_length(k, d, q) <= n; 0 when n < d.  Stands in
// for the (unknowable) true optimum dimension as an upper bound.
long long k_opt_upper(long long n, long long d, long long q);

// Cadambe-Mazumdar bound: min over t >= 1 with n - t(r+1) >= 0 of
// r*t + k_opt_upper(n - t(r+1), d, q).
long long cm_k_bound(long long n, long long d, int r, long long q);

// Singleton-like bound for LRCs: n - k - ceil(k/r) + 2.
long long singleton_like_d(long long n, long long k, int r);

// True when the sphere-packing bound rules out an [n, k, d] code over F_q,
// i.e. q^{n-k} < sum_{i<=floor((d-1)/2)} C(n,i)(q-1)^i.
bool sphere_packing_excludes(long long n, long long k, long long d, long long q);

std::vector<LrcLabel> classify_lrc(long long n, long long k, long long d, long long q, int r);

// optimal_or_almost when no [n, k_dual, 5] code exists by sphere packing
// (the dual has minimum distance 3, so it is then within one of optimal).
DualVerdict classify_dual(long long n, long long k_dual, long long q);

BoundReport analyze_bounds(long long n, long long k, long long d, long long q, int r);

}  // namespace tracecodes
