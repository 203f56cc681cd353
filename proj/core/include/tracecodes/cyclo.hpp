#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace tracecodes {

// Exact element of Z[zeta_p] for an odd prime p, where zeta_p = exp(2*pi*i/p).
// Coordinates are kept on the basis {1, zeta, ..., zeta^{p-2}}; the relation
// 1 + zeta + ... + zeta^{p-1} = 0 eliminates zeta^{p-1}, so the representation
// is canonical and equality is componentwise.
//
// Coefficients are int64.  Character sums over fields of size at most 3^10
// have coordinates bounded by the field size, and the products formed during
// verification square that bound, which still leaves ~40 bits of headroom.
class CycInt {
public:
    explicit CycInt(int p);

    // zeta_p^{k mod p}; k may be negative.
    static CycInt root(int p, std::int64_t k);
    static CycInt integer(int p, std::int64_t n);

    int prime() const { return p_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
    CycInt operator-() const;

    bool operator==(const CycInt& o) const = default;

    bool is_zero() const;

    // n * this, n a plain integer.
    CycInt scaled(std::int64_t n) const;

    // The integer n when this == n * zeta^0 in canonical form, empty otherwise.
    std::optional<std::int64_t> as_integer() const;

    // Numerical value at zeta_p = exp(2*pi*i/p).
    std::complex<double> to_complex() const;

private:
    int p_;
    std::vector<std::int64_t> c_;  // length p-1
};

}  // namespace tracecodes
