#pragma once

#include <cstdint>
#include <vector>

namespace tracecodes {

// A field element, packed as sum coeff[i] * p^i over the power basis of the
// tower's modulus.  Packed-index comparison is lexicographic on the
// coefficient sequence read from the highest-degree coefficient down, which
// gives the deterministic ordering the defining-set construction relies on.
using Elem = std::uint32_t;

// The field F_{p^m} for an odd prime p, together with the two designated
// subfields F_{p^m1} and F_{p^m2} (m1 | m, m2 | m) and the prime field.
// Subfields are realized inside F_{p^m} as the fixed sets of the p^mi-power
// Frobenius, so traces land in the right place by construction and no
// embedding compatibility question arises.
//
// The modulus is the first monic irreducible polynomial of degree m over F_p
// in lexicographic order; alpha is the first element of multiplicative order
// p^m - 1 in candidate order (the polynomial x first, then ascending packed
// index).  Both searches are deterministic, so equal parameters always give
// identical towers.
//
// Immutable after construction; all member functions are const and safe to
// call concurrently.
class FieldTower {
public:
    static FieldTower build(int p, int m, int m1, int m2);

    int p() const { return p_; }
    int m() const { return m_; }
    int m1() const { return m1_; }
    int m2() const { return m2_; }

    std::uint64_t order() const { return q_; }                 // p^m
    std::uint64_t subfield_order(int level) const;             // p^level, level | m

    // Monic modulus coefficients, degree 0 first, length m+1.
    const std::vector<int>& modulus() const { return modulus_; }
    Elem alpha() const { return alpha_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t n) const;
    std::vector<int> coeffs(Elem a) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // errc::division_by_zero on 0
    Elem pow(Elem a, std::int64_t e) const;
    Elem frobenius(Elem a, int k) const;  // a^{p^k}

    // Discrete log base alpha; a must be nonzero.
    std::uint64_t log(Elem a) const;

    bool in_subfield(Elem x, int level) const;

    // Trace from the level `from` subfield onto the level `to` subfield:
    // x + x^{p^to} + ... ; requires to | from | m and x in subfield(from).
    Elem trace(Elem x, int from, int to) const;

    // Trace from the full field, the common case.
    Elem trace_to(Elem x, int to) const { return trace(x, m_, to); }

    // Quadratic character of the level subfield: 0 at 0, +1 on nonzero
    // squares, -1 on non-squares.  x must lie in that subfield.
    int quad_char(Elem x, int level) const;

    // The p^level Frobenius-fixed elements: 0 first, then successive powers
    // of the subfield generator alpha^{(p^m-1)/(p^level-1)}.
    std::vector<Elem> subfield_elements(int level) const;

    // Dense ordinal of x inside subfield_elements(level) for level m1 or m2,
    // -1 when x is not in that subfield.  Backed by a precomputed table; used
    // by the enumeration hot paths.
    std::int32_t subfield_ordinal(Elem x, int level) const;

private:
    FieldTower() = default;

    int p_ = 0, m_ = 0, m1_ = 0, m2_ = 0;
    std::uint64_t q_ = 0;
    std::vector<int> modulus_;
    Elem alpha_ = 0;

    std::vector<Elem> exp_;           // alpha^i, i in [0, q-2]
    std::vector<std::uint32_t> log_;  // inverse of exp_ on nonzero elements
    std::vector<Elem> trace_m1_, trace_m2_, trace_1_;
    std::vector<std::int32_t> ord_m1_, ord_m2_;

    Elem mul_nonzero(Elem a, Elem b) const;
    const std::vector<Elem>* trace_table(int to) const;
    void build_tables();
};

}  // namespace tracecodes
