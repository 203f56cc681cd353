#include "tracecodes/cyclo.hpp"

#include <cmath>
#include <numbers>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

void check_odd_prime(int p) {
    require(p >= 3 && p % 2 == 1, errc::not_odd_prime, "p must be an odd prime");
    for (int d = 3; d * d <= p; d += 2)
        require(p % d != 0, errc::not_odd_prime, "p must be an odd prime");
}

}  // namespace

CycInt::CycInt(int p) : p_(p), c_(static_cast<std::size_t>(p - 1), 0) { check_odd_prime(p); }

CycInt CycInt::root(int p, std::int64_t k) {
    CycInt r(p);
    std::int64_t e = k % p;
    if (e < 0) e += p;
    if (e <= p - 2) {
        r.c_[static_cast<std::size_t>(e)] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& a : r.c_) a = -1;
    }
    return r;
}

CycInt CycInt::integer(int p, std::int64_t n) {
    CycInt r(p);
    r.c_[0] = n;
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    require(p_ == o.p_, errc::mixed_primes, "cyclotomic operands over different primes");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    require(p_ == o.p_, errc::mixed_primes, "cyclotomic operands over different primes");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
    require(p_ == o.p_, errc::mixed_primes, "cyclotomic operands over different primes");
    const int p = p_;
    // Accumulate on exponents 0..p-1, then fold zeta^{p-1} back onto the basis.
    std::vector<std::int64_t> acc(static_cast<std::size_t>(p), 0);
    for (int i = 0; i < p - 1; ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        const std::int64_t ci = c_[static_cast<std::size_t>(i)];
        for (int j = 0; j < p - 1; ++j) {
            int e = i + j;
            if (e >= p) e -= p;
            acc[static_cast<std::size_t>(e)] += ci * o.c_[static_cast<std::size_t>(j)];
        }
    }
    const std::int64_t top = acc[static_cast<std::size_t>(p - 1)];
    for (int i = 0; i < p - 1; ++i) c_[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(i)] - top;
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

bool CycInt::is_zero() const {
    for (auto a : c_)
        if (a != 0) return false;
    return true;
}

CycInt CycInt::scaled(std::int64_t n) const {
    CycInt r = *this;
    for (auto& a : r.c_) a *= n;
    return r;
}

std::optional<std::int64_t> CycInt::as_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

std::complex<double> CycInt::to_complex() const {
    std::complex<double> r = 0.0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const double arg = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p_);
        r += static_cast<double>(c_[k]) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return r;
}

}  // namespace tracecodes
