#include "tracecodes/charsums.hpp"

#include <cmath>
#include <string>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

long long ipow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long long exact_div(long long num, long long den) {
    require(den != 0 && num % den == 0, errc::internal, "closed form produced a non-integral value");
    return num / den;
}

std::int64_t cyc_integer(const CycInt& a) {
    auto v = a.as_integer();
    require(v.has_value(), errc::internal, "Gauss-sum product expected to be a rational integer");
    return *v;
}

}  // namespace

std::complex<double> SignedGauss::value() const {
    const double mag = std::pow(static_cast<double>(p), static_cast<double>(half_exponent) / 2.0);
    switch (unit) {
        case Unit::plus_one: return {mag, 0.0};
        case Unit::minus_one: return {-mag, 0.0};
        case Unit::plus_i: return {0.0, mag};
        case Unit::minus_i: return {0.0, -mag};
    }
    return {};
}

CycInt additive_char(const FieldTower& t, int level, Elem a, Elem x) {
    require(t.in_subfield(a, level), errc::not_in_subfield, "character index outside the subfield");
    require(t.in_subfield(x, level), errc::not_in_subfield, "character argument outside the subfield");
    const Elem e = t.trace(t.mul(a, x), level, 1);
    return CycInt::root(t.p(), static_cast<std::int64_t>(e));
}

CycInt gauss_sum_bruteforce(const FieldTower& t, int level) {
    CycInt s(t.p());
    for (Elem x : t.subfield_elements(level)) {
        if (x == 0) continue;
        const Elem e = t.trace(x, level, 1);
        s += CycInt::root(t.p(), static_cast<std::int64_t>(e)).scaled(t.quad_char(x, level));
    }
    return s;
}

SignedGauss gauss_sign(int p, int level) {
    SignedGauss g;
    g.p = p;
    g.level = level;
    g.half_exponent = level;
    const int h = (p - 1) / 2;
    // (-1)^{level-1} contributes 2 mod 4 to the power of i when odd.
    int ipow = (h * h % 4) * level + 2 * (level - 1);
    ipow %= 4;
    if (ipow < 0) ipow += 4;
    switch (ipow) {
        case 0: g.unit = SignedGauss::Unit::plus_one; break;
        case 1: g.unit = SignedGauss::Unit::plus_i; break;
        case 2: g.unit = SignedGauss::Unit::minus_one; break;
        case 3: g.unit = SignedGauss::Unit::minus_i; break;
    }
    return g;
}

CycInt weil_sum(const FieldTower& t, int level, Elem a2, Elem a1, Elem a0, Mode mode) {
    require(a2 != 0, errc::degenerate_quadratic, "quadratic coefficient must be nonzero");
    require(t.in_subfield(a2, level) && t.in_subfield(a1, level) && t.in_subfield(a0, level),
            errc::not_in_subfield, "coefficients outside the subfield");
    if (mode == Mode::brute) {
        CycInt s(t.p());
        for (Elem c : t.subfield_elements(level)) {
            const Elem v = t.add(t.add(t.mul(a2, t.mul(c, c)), t.mul(a1, c)), a0);
            s += CycInt::root(t.p(), static_cast<std::int64_t>(t.trace(v, level, 1)));
        }
        return s;
    }
    // chi(a0 - a1^2 (4 a2)^{-1}) * eta(a2) * G(eta, chi_1)
    const Elem four = t.from_int(4);
    const Elem shift = t.sub(a0, t.mul(t.mul(a1, a1), t.inv(t.mul(four, a2))));
    CycInt s = CycInt::root(t.p(), static_cast<std::int64_t>(t.trace(shift, level, 1)));
    s = s.scaled(t.quad_char(a2, level));
    return s * gauss_sum_bruteforce(t, level);
}

namespace {

CycInt omega_bruteforce(const FieldTower& t, Elem b, Elem c) {
    const int p = t.p();
    CycInt s(p);
    const Elem b2 = t.mul(b, b);
    for (Elem z : t.subfield_elements(t.m2())) {
        if (z == 0) continue;
        const Elem zc = t.trace(t.mul(z, c), t.m2(), 1);
        const Elem z2b2 = t.mul(t.mul(z, z), b2);
        for (Elem y : t.subfield_elements(t.m1())) {
            if (y == 0) continue;
            const Elem arg = t.trace_to(t.neg(t.mul(z2b2, y)), 1);
            const int eta = t.quad_char(y, t.m());
            s += CycInt::root(p, static_cast<std::int64_t>(t.add(zc, arg))).scaled(eta);
        }
    }
    return s;
}

CycInt omega_closed(const FieldTower& t, Elem b, Elem c, OmegaReading reading) {
    const int p = t.p();
    const int m = t.m(), m1 = t.m1(), m2 = t.m2();
    const long long q1 = ipow_ll(p, m1);
    const long long q2 = ipow_ll(p, m2);
    const bool m_over_m1_odd = (m / m1) % 2 == 1;

    if (m1 % m2 == 0) {
        // m2 | m1 branch
        const Elem tr = t.trace_to(t.mul(b, b), m1);
        if (m_over_m1_odd) {
            if (tr == 0) return CycInt(p);
            const CycInt gp = gauss_sum_bruteforce(t, m1);
            const int s = t.quad_char(t.neg(tr), m1);
            if (c != 0) return (-gp).scaled(s);
            return gp.scaled(s * (q2 - 1));
        }
        if (tr == 0 && c == 0) return CycInt::integer(p, (q1 - 1) * (q2 - 1));
        if (tr == 0) return CycInt::integer(p, -(q1 - 1));
        if (c == 0) return CycInt::integer(p, -(q2 - 1));
        return CycInt::integer(p, 1);
    }

    require(m2 % m1 == 0, errc::incomparable_levels, "neither m2 | m1 nor m1 | m2");

    // m1 | m2 branch
    const Elem tr = t.trace_to(t.mul(b, b), m2);
    const bool m2_over_m1_odd = (m2 / m1) % 2 == 1;

    // Delta = Tr_{m2 -> m1}(c^2 / Tr(b^2)), only meaningful when Tr(b^2) != 0.
    auto delta = [&]() -> Elem { return t.trace(t.mul(t.mul(c, c), t.inv(tr)), m2, m1); };

    if (m_over_m1_odd) {
        // a divisor of the odd m/m1, so m2/m1 is odd here as well
        if (tr == 0) return CycInt(p);
        const CycInt gpp = gauss_sum_bruteforce(t, m2);
        const int s = t.quad_char(t.neg(tr), m2);
        if (c == 0 || delta() == 0) return gpp.scaled(s * (q1 - 1));
        return (-gpp).scaled(s);
    }

    if (m2_over_m1_odd) {
        if (tr == 0 && c == 0) return CycInt::integer(p, (q1 - 1) * (q2 - 1));
        if (tr == 0 || c == 0 || delta() == 0) return CycInt::integer(p, -(q1 - 1));
        const CycInt prod = gauss_sum_bruteforce(t, m2) * gauss_sum_bruteforce(t, m1);
        const int s = t.quad_char(delta(), m1) * t.quad_char(t.neg(tr), m2);
        CycInt v = prod.scaled(reading == OmegaReading::verified ? s : -s);
        return v - CycInt::integer(p, q1 - 1);
    }

    // m/m1 even, m2/m1 even
    if (tr == 0 && c == 0) return CycInt::integer(p, (q1 - 1) * (q2 - 1));
    if (tr == 0) return CycInt::integer(p, -(q1 - 1));
    const CycInt gpp = gauss_sum_bruteforce(t, m2);
    const int s = t.quad_char(t.neg(tr), m2);
    if (c == 0 || delta() == 0) return (gpp.scaled(s) - CycInt::integer(p, 1)).scaled(q1 - 1);
    CycInt v = (-gpp).scaled(s);
    if (reading == OmegaReading::verified) v -= CycInt::integer(p, q1 - 1);
    return v;
}

}  // namespace

CycInt omega(const FieldTower& t, Elem b, Elem c, Mode mode, OmegaReading reading) {
    require(t.m1() % t.m2() == 0 || t.m2() % t.m1() == 0, errc::incomparable_levels,
            "neither m2 | m1 nor m1 | m2");
    require(t.in_subfield(c, t.m2()), errc::not_in_subfield, "c outside the m2 subfield");
    if (mode == Mode::brute) return omega_bruteforce(t, b, c);
    return omega_closed(t, b, c, reading);
}

long long count_quadric(const FieldTower& t, int i, Elem a, Mode mode) {
    require(i == 1 || i == 2, errc::internal, "subfield selector must be 1 or 2");
    const int mi = i == 1 ? t.m1() : t.m2();
    require(t.in_subfield(a, mi), errc::not_in_subfield, "a outside the selected subfield");

    if (mode == Mode::brute) {
        long long count = 0;
        for (std::uint64_t x = 1; x < t.order(); ++x) {
            const Elem b = static_cast<Elem>(x);
            if (t.trace_to(t.mul(b, b), mi) == a) ++count;
        }
        return count;
    }

    const int p = t.p();
    const int m = t.m();
    const long long qi = ipow_ll(p, mi);
    const long long lead = ipow_ll(p, m - mi);
    if ((m / mi) % 2 == 1) {
        if (a == 0) return lead - 1;
        const std::int64_t prod = cyc_integer(gauss_sum_bruteforce(t, m) * gauss_sum_bruteforce(t, mi));
        const int s = t.quad_char(t.neg(a), mi);
        return lead + exact_div(prod * s, qi);
    }
    const std::int64_t g = cyc_integer(gauss_sum_bruteforce(t, m));
    if (a == 0) return lead + exact_div((qi - 1) * g, qi) - 1;
    return lead - exact_div(g, qi);
}

long long count_subfield_quadric(const FieldTower& t, Elem a, Elem tval, Mode mode) {
    const int m1 = t.m1(), m2 = t.m2();
    require(m2 % m1 == 0, errc::incomparable_levels, "requires m1 | m2");
    require(a != 0, errc::zero_denominator, "a must be nonzero");
    require(t.in_subfield(a, m2), errc::not_in_subfield, "a outside the m2 subfield");
    require(t.in_subfield(tval, m1), errc::not_in_subfield, "t outside the m1 subfield");

    if (mode == Mode::brute) {
        long long count = 0;
        const Elem ainv = t.inv(a);
        for (Elem c : t.subfield_elements(m2)) {
            if (c == 0) continue;
            if (t.trace(t.mul(t.mul(c, c), ainv), m2, m1) == tval) ++count;
        }
        return count;
    }

    const int p = t.p();
    const long long q1 = ipow_ll(p, m1);
    const long long lead = ipow_ll(p, m2 - m1);
    if ((m2 / m1) % 2 == 1) {
        if (tval == 0) return lead - 1;
        const std::int64_t prod = cyc_integer(gauss_sum_bruteforce(t, m2) * gauss_sum_bruteforce(t, m1));
        const int s = t.quad_char(t.neg(t.mul(a, tval)), m2);
        return lead + exact_div(prod * s, q1);
    }
    const std::int64_t g = cyc_integer(gauss_sum_bruteforce(t, m2));
    const int s = t.quad_char(a, m2);
    if (tval == 0) return lead + exact_div((q1 - 1) * g * s, q1) - 1;
    return lead - exact_div(g * s, q1);
}

}  // namespace tracecodes
