#include "tracecodes/theory.hpp"

#include <algorithm>
#include <map>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

long long ipow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long long exact_div(long long num, long long den) {
    require(den != 0 && num % den == 0, errc::internal, "non-integral value in a closed-form table");
    return num / den;
}

long long sign_of(long long l) { return l % 2 == 0 ? 1 : -1; }

void check_relation(int m, int m1, int m2) {
    require(m % m1 == 0 && m % m2 == 0, errc::not_divisor, "m1 and m2 must divide m");
    require(m1 % m2 == 0 || m2 % m1 == 0, errc::incomparable_levels, "neither m2 | m1 nor m1 | m2");
}

struct Stratum {
    long long weight;
    long long frequency;
};

// Shared assembly state: every stratum weight is n - (p^m + corr)/p^{m1+m2},
// where corr collects the character-sum contribution of that stratum.
struct Assembler {
    long long n, qm, P;
    std::vector<Stratum> strata;

    void add(long long corr, long long freq) {
        require(freq >= 0, errc::internal, "negative frequency in a closed-form table");
        if (freq == 0) return;
        const long long w = n - exact_div(qm + corr, P);
        require(w >= 0 && w <= n, errc::internal, "weight outside [0, n]");
        strata.push_back({w, freq});
    }
    void add_full_weight(long long freq) { strata.push_back({n, freq}); }
};

}  // namespace

long long predicted_length(int p, int m, int m1) {
    require(m >= 1 && m1 >= 1 && m % m1 == 0, errc::not_divisor, "m1 must divide m");
    const long long lead = ipow_ll(p, m - m1);
    if ((m / m1) % 2 == 1) return lead;
    const long long hsq = static_cast<long long>((p - 1) / 2) * ((p - 1) / 2);
    const long long l2 = hsq * (m / 2) + m - 1;
    const long long g = sign_of(l2) * ipow_ll(p, m / 2);
    return lead + exact_div((ipow_ll(p, m1) - 1) * g, ipow_ll(p, m1));
}

SignExponents exponents(int p, int m, int m1, int m2) {
    check_relation(m, m1, m2);
    const long long hsq = static_cast<long long>((p - 1) / 2) * ((p - 1) / 2);
    const long long half1 = (ipow_ll(p, m1) - 1) / 2;
    const long long half2 = (ipow_ll(p, m2) - 1) / 2;
    SignExponents e;
    if ((m + m1) % 2 == 0) e.l1 = hsq * ((m + m1) / 2) + m1 + m - 2 + half1;
    if (m % 2 == 0) e.l2 = hsq * (m / 2) + m - 1;
    if ((m + m2) % 2 == 0) {
        e.l3 = hsq * ((m + m2) / 2) + m2 + m - 2;
        e.l4 = *e.l3 + half2;
    }
    if ((m + m1 + m2) % 2 == 0) e.l5 = hsq * ((m + m1 + m2) / 2) + m + m1 + m2 - 3 + half2;
    if ((m1 + m2) % 2 == 0) e.l6 = hsq * ((m1 + m2) / 2) + m1 + m2 - 2 + half2;
    if (m2 % 2 == 0) e.l7 = hsq * (m2 / 2) + m2 - 1;
    return e;
}

OrthogonalityClaim predicted_self_orthogonality(int p, int m, int m1, int m2) {
    check_relation(m, m1, m2);
    (void)p;
    OrthogonalityClaim c;
    if (m1 % m2 == 0) {
        if ((m / m1) % 2 == 1) {
            c.condition = "m > m1 + 2*m2";
            c.claimed = m > m1 + 2 * m2;
        } else {
            c.condition = "m/m1 even and m/m1 > 2";
            c.claimed = m / m1 > 2;
        }
        return c;
    }
    const bool odd_m_m1 = (m / m1) % 2 == 1;
    const bool odd_m2_m1 = (m2 / m1) % 2 == 1;
    if (odd_m_m1) {
        c.condition = "m > 2*m1 + m2";
        c.claimed = m > 2 * m1 + m2;
    } else if (odd_m2_m1) {
        c.condition = "m > m1 + m2";
        c.claimed = m > m1 + m2;
    } else {
        c.condition = "m > 2*m1 + m2";
        c.claimed = m > 2 * m1 + m2;
    }
    return c;
}

PredictedSpectrum predicted_spectrum(int p, int m, int m1, int m2) {
    check_relation(m, m1, m2);

    PredictedSpectrum out;
    out.p = p;
    out.m = m;
    out.m1 = m1;
    out.m2 = m2;
    out.length = predicted_length(p, m, m1);
    out.dimension = m / m2 + 1;
    const auto claim = predicted_self_orthogonality(p, m, m1, m2);
    out.self_orthogonal_claimed = claim.claimed;
    out.self_orthogonality_condition = claim.condition;

    const SignExponents ex = exponents(p, m, m1, m2);
    const long long q1 = ipow_ll(p, m1);
    const long long q2 = ipow_ll(p, m2);

    Assembler a;
    a.n = out.length;
    a.qm = ipow_ll(p, m);
    a.P = ipow_ll(p, m1 + m2);

    const bool m_over_m1_even = (m / m1) % 2 == 0;
    out.tag.m_over_m1_even = m_over_m1_even;

    auto assemble = [&] {
        if (m1 % m2 == 0) {
            out.tag.relation = CaseTag::Relation::m2_divides_m1;
            if (!m_over_m1_even) {
                out.hypothesis_ok = m / m1 > 1;
                // strata split on eta'(Tr(b^2)) and on c = 0
                const long long theta1 = sign_of(*ex.l1) * ipow_ll(p, (m + m1) / 2);
                const long long n0 = ipow_ll(p, m - m1);
                const long long s_plus = exact_div(q1 - 1, 2) * (n0 + exact_div(theta1, q1));
                const long long s_minus = exact_div(q1 - 1, 2) * (n0 - exact_div(theta1, q1));
                a.add_full_weight(q2 - 1);
                a.add(0, (n0 - 1) * q2);
                a.add(-theta1, s_plus * (q2 - 1));
                a.add(theta1, s_minus * (q2 - 1));
                a.add((q2 - 1) * theta1, s_plus);
                a.add(-(q2 - 1) * theta1, s_minus);
            } else {
                out.hypothesis_ok = m / m1 > 2;
                const long long gamma = sign_of(*ex.l2) * ipow_ll(p, m / 2);
                const long long n_zero_trace = a.n - 1;  // #{b != 0 : Tr(b^2) = 0}
                const long long n_rest = a.qm - 1 - n_zero_trace;
                a.add_full_weight(q2 - 1);
                a.add((q1 - 1) * q2 * gamma, n_zero_trace);
                a.add(0, n_zero_trace * (q2 - 1));
                a.add((q1 - q2) * gamma, n_rest);
                a.add(q1 * gamma, n_rest * (q2 - 1));
            }
            return;
        }

        out.tag.relation = CaseTag::Relation::m1_divides_m2;
        const bool m2_over_m1_even = (m2 / m1) % 2 == 0;
        const bool m_over_m2_even = (m / m2) % 2 == 0;
        out.tag.m2_over_m1_even = m2_over_m1_even;
        out.tag.m_over_m2_even = m_over_m2_even;

        if (!m_over_m1_even) {
            // m2/m1 divides the odd m/m1, so both quotients are odd
            out.hypothesis_ok = m > m1;
            const long long theta4 = sign_of(*ex.l4) * ipow_ll(p, (m + m2) / 2);
            const long long lead2 = ipow_ll(p, m - m2);
            const long long split = ipow_ll(p, m2 - m1);  // per-b count of {c = 0 or Delta = 0}
            a.add_full_weight(q2 - 1);
            a.add(0, (lead2 - 1) * q2);
            for (int eps : {1, -1}) {
                const long long s2 = exact_div(q2 - 1, 2) * (lead2 + eps * exact_div(theta4, q2));
                a.add((q1 - 1) * eps * theta4, s2 * split);
                a.add(-eps * theta4, s2 * (q2 - split));
            }
            return;
        }

        const long long gamma = sign_of(*ex.l2) * ipow_ll(p, m / 2);
        const long long lead2 = ipow_ll(p, m - m2);

        if (!m2_over_m1_even) {
            out.hypothesis_ok = m > 2 * m1;
            const long long theta5 = sign_of(*ex.l5) * ipow_ll(p, (m + m1 + m2) / 2);
            const long long theta6 = sign_of(*ex.l6) * ipow_ll(p, (m1 + m2) / 2);
            const long long n_zero_trace = lead2 + exact_div((q2 - 1) * gamma, q2) - 1;
            const long long n_rest = a.qm - 1 - n_zero_trace;
            a.add_full_weight(q2 - 1);
            a.add((q1 - 1) * q2 * gamma, n_zero_trace);
            a.add(0, n_zero_trace * (q2 - 1) + n_rest * ipow_ll(p, m2 - m1));
            for (int sig : {1, -1}) {
                const long long per_b =
                    exact_div(q1 - 1, 2) * (ipow_ll(p, m2 - m1) + sig * exact_div(theta6, q1));
                a.add(sig * theta5, n_rest * per_b);
            }
            return;
        }

        out.hypothesis_ok = m > 2 * m1;
        const long long theta4 = sign_of(*ex.l4) * ipow_ll(p, (m + m2) / 2);
        const long long gamma7 = sign_of(*ex.l7) * ipow_ll(p, m2 / 2);
        const long long n_zero_trace =
            m_over_m2_even ? lead2 + exact_div((q2 - 1) * gamma, q2) - 1 : lead2 - 1;
        a.add_full_weight(q2 - 1);
        a.add((q1 - 1) * q2 * gamma, n_zero_trace);
        a.add(0, n_zero_trace * (q2 - 1));
        for (int eps : {1, -1}) {
            const long long s2 = m_over_m2_even
                                     ? exact_div(q2 - 1, 2) * (lead2 - exact_div(gamma, q2))
                                     : exact_div(q2 - 1, 2) * (lead2 + eps * exact_div(theta4, q2));
            // per-b count of {c = 0 or Delta = 0} given eta''(Tr(b^2)) = eps
            const long long m0 = ipow_ll(p, m2 - m1) + (q1 - 1) * eps * exact_div(gamma7, q1);
            a.add((q1 - 1) * eps * theta4, s2 * m0);
            a.add(-eps * theta4, s2 * (q2 - m0));
        }
    };

    try {
        assemble();
        // pair-count mass: every (b, c) is in exactly one stratum
        long long mass = 1;
        for (const auto& s : a.strata) mass += s.frequency;
        require(mass == a.qm * q2, errc::internal, "strata do not partition the message pairs");
    } catch (const error& e) {
        if (e.code() != errc::internal || out.hypothesis_ok) throw;
        a.strata.clear();  // degenerate out-of-hypothesis tower: no diagnostic rows
    }

    std::map<long long, long long> merged;
    for (const auto& s : a.strata) merged[s.weight] += s.frequency;
    for (const auto& [w, f] : merged)
        if (f != 0) out.rows.push_back({w, f});
    return out;
}

}  // namespace tracecodes
