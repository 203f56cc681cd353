#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tracecodes {

// Which closed-form case a tower falls into.
struct CaseTag {
    enum class Relation { m2_divides_m1, m1_divides_m2 };
    Relation relation = Relation::m2_divides_m1;
    bool m_over_m1_even = false;
    std::optional<bool> m2_over_m1_even;  // set in the m1 | m2 branch
    std::optional<bool> m_over_m2_even;   // set in the m1 | m2 branch

    bool operator==(const CaseTag&) const = default;
};

// The seven sign exponents; each is present only when its p-power
// half-exponent is integral for the given parameters.
struct SignExponents {
    std::optional<long long> l1;  // G(eta, chi_1) G(eta', chi'_1) eta'(-1) = (-1)^{l1} p^{(m+m1)/2}
    std::optional<long long> l2;  // G(eta, chi_1)                          = (-1)^{l2} p^{m/2}
    std::optional<long long> l3;  // G(eta, chi_1) G(eta'', chi''_1)        = (-1)^{l3} p^{(m+m2)/2}
    std::optional<long long> l4;  // l3 with the extra eta''(-1) factor
    std::optional<long long> l5;  // triple product with eta''(-1)          = (-1)^{l5} p^{(m+m1+m2)/2}
    std::optional<long long> l6;  // G(eta', chi'_1) G(eta'', chi''_1) eta''(-1) = (-1)^{l6} p^{(m1+m2)/2}
    std::optional<long long> l7;  // G(eta'', chi''_1)                      = (-1)^{l7} p^{m2/2}
};

struct SpectrumRow {
    long long weight = 0;
    long long frequency = 0;
    bool operator==(const SpectrumRow&) const = default;
};

// Closed-form prediction of the augmented code's weight distribution.  Rows
// cover the nonzero weights; the zero word accounts for the remaining +1.
// When the dimension hypothesis of the matching case fails, hypothesis_ok is
// false and the rows (still counts of (b, c) message pairs) are diagnostic
// only; they are empty if the case formulas degenerate entirely.
struct PredictedSpectrum {
    int p = 0, m = 0, m1 = 0, m2 = 0;
    CaseTag tag;
    long long length = 0;
    long long dimension = 0;  // m/m2 + 1
    std::vector<SpectrumRow> rows;
    bool hypothesis_ok = false;
    bool self_orthogonal_claimed = false;
    std::string self_orthogonality_condition;

    bool operator==(const PredictedSpectrum&) const = default;
};

struct OrthogonalityClaim {
    bool claimed = false;
    std::string condition;
};

// |D| in closed form: p^{m-m1} when m/m1 is odd, and
// p^{m-m1} + (p^{m1}-1)(-1)^{l2} p^{m/2} / p^{m1} when even.
long long predicted_length(int p, int m, int m1);

SignExponents exponents(int p, int m, int m1, int m2);

PredictedSpectrum predicted_spectrum(int p, int m, int m1, int m2);

// True exactly when the case's printed sufficient condition holds; false
// means "no claim made", not "not self-orthogonal".
OrthogonalityClaim predicted_self_orthogonality(int p, int m, int m1, int m2);

}  // namespace tracecodes
