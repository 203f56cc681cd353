#include "tracecodes/bounds.hpp"

#include <cstdint>
#include <vector>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

// Just enough unsigned bignum for an exact sphere-packing comparison; the
// ball volume and q^{n-k} overflow every native type already at the lengths
// of the worked examples.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v) {
        if (v != 0) limbs_.push_back(v);
    }

    void mul_small(std::uint64_t f) {
        if (f == 0) {
            limbs_.clear();
            return;
        }
        unsigned __int128 carry = 0;
        for (auto& l : limbs_) {
            const unsigned __int128 cur = static_cast<unsigned __int128>(l) * f + carry;
            l = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint64_t>(carry));
            carry >>= 64;
        }
    }

    void div_small_exact(std::uint64_t d) {
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            const unsigned __int128 cur = (rem << 64) | limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        require(rem == 0, errc::internal, "inexact division in a binomial recurrence");
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    void add(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            const unsigned __int128 cur = static_cast<unsigned __int128>(limbs_[i]) +
                                          (i < o.limbs_.size() ? o.limbs_[i] : 0) + carry;
            limbs_[i] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    }

    bool less_than(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
        return false;
    }

private:
    std::vector<std::uint64_t> limbs_;  // little-endian base 2^64
};

}  // namespace

std::string to_string(LrcLabel label) {
    switch (label) {
        case LrcLabel::d_optimal: return "d-optimal";
        case LrcLabel::almost_d_optimal: return "almost-d-optimal";
        case LrcLabel::k_optimal: return "k-optimal";
        case LrcLabel::almost_k_optimal: return "almost-k-optimal";
        case LrcLabel::griesmer_optimal: return "griesmer-optimal";
    }
    return "?";
}

std::string to_string(DualVerdict v) {
    return v == DualVerdict::optimal_or_almost ? "optimal-or-almost" : "inconclusive";
}

long long griesmer_min_length(long long k, long long d, long long q) {
    require(k >= 1 && d >= 1 && q >= 2, errc::internal, "griesmer arguments out of range");
    long long sum = 0;
    long long qi = 1;
    for (long long i = 0; i < k; ++i) {
        sum += (d + qi - 1) / qi;
        if (qi <= d) qi *= q;  // once q^i > d every summand is 1; avoid overflow
    }
    return sum;
}

long long k_opt_upper(long long n, long long d, long long q) {
    if (n < d) return 0;
    long long k = 1;
    while (griesmer_min_length(k + 1, d, q) <= n) ++k;
    return k;
}

long long cm_k_bound(long long n, long long d, int r, long long q) {
    require(r >= 1, errc::internal, "locality must be positive");
    long long best = -1;
    for (long long t = 1; n - t * (r + 1) >= 0; ++t) {
        const long long v = r * t + k_opt_upper(n - t * (r + 1), d, q);
        if (best < 0 || v < best) best = v;
    }
    require(best >= 0, errc::internal, "empty t-range in the dimension bound");
    return best;
}

long long singleton_like_d(long long n, long long k, int r) {
    require(r >= 1 && k >= 1 && k <= n, errc::internal, "bound arguments out of range");
    return n - k - (k + r - 1) / r + 2;
}

bool sphere_packing_excludes(long long n, long long k, long long d, long long q) {
    require(d >= 1, errc::internal, "distance must be positive");
    // ball volume of radius floor((d-1)/2)
    BigUint vol(0);
    BigUint term(1);  // C(n, i) (q-1)^i
    for (long long i = 0; i <= (d - 1) / 2; ++i) {
        vol.add(term);
        term.mul_small(static_cast<std::uint64_t>((n - i) * (q - 1)));
        term.div_small_exact(static_cast<std::uint64_t>(i + 1));
    }
    BigUint power(1);
    for (long long i = 0; i < n - k; ++i) power.mul_small(static_cast<std::uint64_t>(q));
    return power.less_than(vol);
}

std::vector<LrcLabel> classify_lrc(long long n, long long k, long long d, long long q, int r) {
    std::vector<LrcLabel> labels;
    const long long sl = singleton_like_d(n, k, r);
    if (d == sl) labels.push_back(LrcLabel::d_optimal);
    if (d == sl - 1) labels.push_back(LrcLabel::almost_d_optimal);
    const long long cm = cm_k_bound(n, d, r, q);
    if (k == cm) labels.push_back(LrcLabel::k_optimal);
    if (k == cm - 1) labels.push_back(LrcLabel::almost_k_optimal);
    if (griesmer_min_length(k, d, q) <= n && griesmer_min_length(k, d + 1, q) > n)
        labels.push_back(LrcLabel::griesmer_optimal);
    return labels;
}

DualVerdict classify_dual(long long n, long long k_dual, long long q) {
    return sphere_packing_excludes(n, k_dual, 5, q) ? DualVerdict::optimal_or_almost
                                                    : DualVerdict::inconclusive;
}

BoundReport analyze_bounds(long long n, long long k, long long d, long long q, int r) {
    BoundReport b;
    b.n = n;
    b.k = k;
    b.d = d;
    b.q = q;
    b.r = r;
    b.singleton_like = singleton_like_d(n, k, r);
    b.cm_k = cm_k_bound(n, d, r, q);
    b.griesmer_at_d = griesmer_min_length(k, d, q);
    b.labels = classify_lrc(n, k, d, q, r);
    b.dual_verdict = classify_dual(n, n - k, q);
    return b;
}

}  // namespace tracecodes
