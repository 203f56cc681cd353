#pragma once

#include <complex>
#include <cstdint>

#include "tracecodes/cyclo.hpp"
#include "tracecodes/gf.hpp"

namespace tracecodes {

// Evaluation strategy for the sums that have both a direct summation and a
// closed form.  `brute` always sums term by term; `closed` assembles the
// closed-form expression.  The two must agree exactly as elements of
// Z[zeta_p] -- that agreement is the core verification this module exists for.
enum class Mode { brute, closed };

// The closed form of Omega(b, c) in the m1 | m2 branch admits two
// transcription variants in two sub-cases: the sign of the double Gauss-sum
// product when m/m1 is even and m2/m1 is odd, and a trailing -(p^m1 - 1) term
// when both quotients are even.  `verified` is the variant confirmed by
// exhaustive comparison against direct summation and is the default
// everywhere; `alternate` is the rejected variant, kept so the tests can pin
// the choice.  See docs/TABLE_READINGS.md.
enum class OmegaReading { verified, alternate };

// Sign/size data of a quadratic Gauss sum: value = unit * p^{half_exponent/2}.
struct SignedGauss {
    enum class Unit { plus_one, minus_one, plus_i, minus_i };
    int p = 0;
    int level = 0;
    Unit unit = Unit::plus_one;
    int half_exponent = 0;

    std::complex<double> value() const;
    bool is_real() const { return unit == Unit::plus_one || unit == Unit::minus_one; }
};

// Additive character of the level subfield: chi_a(x) = zeta_p^{Tr(a*x -> F_p)}.
// a and x must lie in the level subfield.
CycInt additive_char(const FieldTower& t, int level, Elem a, Elem x);

// Quadratic Gauss sum of the level subfield, summed term by term:
// sum over nonzero x of eta(x) * chi_1(x).
CycInt gauss_sum_bruteforce(const FieldTower& t, int level);

// Closed form of the quadratic Gauss sum over F_{p^level}:
// (-1)^{level-1} * i^{((p-1)/2)^2 * level} * sqrt(p^level).
SignedGauss gauss_sign(int p, int level);

// Weil sum of a quadratic polynomial over the level subfield:
// sum over c of chi_1(a2 c^2 + a1 c + a0).  Requires a2 != 0
// (errc::degenerate_quadratic otherwise).
CycInt weil_sum(const FieldTower& t, int level, Elem a2, Elem a1, Elem a0, Mode mode);

// Omega(b, c) = sum_{z in F_{p^m2}^*} chi''_1(zc) sum_{y in F_{p^m1}^*}
//               chi_1(-z^2 b^2 y) eta(y),
// with b in F_{p^m} and c in F_{p^m2}.  Closed mode dispatches on the
// divisibility relation between m1 and m2 and the relevant parities, with
// Gauss-sum factors substituted by their term-by-term values so the result
// stays exact in Z[zeta_p].  Requires m2 | m1 or m1 | m2.
CycInt omega(const FieldTower& t, Elem b, Elem c, Mode mode, OmegaReading reading = OmegaReading::verified);

// N_i = #{ b in F_{p^m}^* : Tr_{p^m/p^{m_i}}(b^2) = a }, i in {1, 2}.
long long count_quadric(const FieldTower& t, int i, Elem a, Mode mode);

// M = #{ c in F_{p^m2}^* : Tr_{p^m2/p^m1}(c^2 / a) = t }, requires m1 | m2,
// a nonzero in the m2 subfield, tval in the m1 subfield.
long long count_subfield_quadric(const FieldTower& t, Elem a, Elem tval, Mode mode);

}  // namespace tracecodes
