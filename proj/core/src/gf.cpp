#include "tracecodes/gf.hpp"

#include <algorithm>
#include <string>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t ipow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense polynomials over F_p, coefficient of x^i at index i.
using Poly = std::vector<int>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce by the monic mod
    const int deg = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(r.size()) - 1; i >= deg; --i) {
        const int c = r[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) {
            auto& t = r[static_cast<std::size_t>(i - deg + j)];
            t = ((t - c * mod[static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }
    r.resize(static_cast<std::size_t>(deg));
    return r;
}

Poly poly_powmod_x_pk(const Poly& mod, int p, std::uint64_t e) {
    // x^e mod `mod`
    Poly base = {0, 1};
    Poly r = {1};
    r.resize(mod.size() - 1, 0);
    base.resize(mod.size() - 1, 0);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& b, int p) {
    poly_trim(a);
    Poly bb = b;
    poly_trim(bb);
    const int db = static_cast<int>(bb.size()) - 1;
    const int lead_inv = [&] {
        for (int t = 1; t < p; ++t)
            if (t * bb.back() % p == 1) return t;
        return 0;
    }();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int c = a.back() * lead_inv % p;
        for (int j = 0; j <= db; ++j) {
            auto& t = a[static_cast<std::size_t>(shift + j)];
            t = ((t - c * bb[static_cast<std::size_t>(j)]) % p + p) % p;
        }
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test: f of degree m is irreducible over F_p iff x^{p^m} = x (mod f)
// and gcd(x^{p^{m/l}} - x, f) = 1 for every prime l | m.
bool is_irreducible(const Poly& f, int p, int m) {
    Poly xq = poly_powmod_x_pk(f, p, ipow_u64(static_cast<std::uint64_t>(p), m));
    Poly x = {0, 1};
    x.resize(f.size() - 1, 0);
    if (xq != x) return false;
    for (std::uint64_t l : prime_factors(static_cast<std::uint64_t>(m))) {
        Poly xe = poly_powmod_x_pk(f, p, ipow_u64(static_cast<std::uint64_t>(p), m / static_cast<int>(l)));
        Poly diff = xe;
        diff[1] = ((diff[1] - 1) % p + p) % p;
        Poly g = poly_gcd(f, diff, p);
        if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
    return true;
}

Poly find_modulus(int p, int m) {
    // First monic irreducible of degree m, non-leading coefficients taken as
    // the base-p digits of an ascending counter (constant term least
    // significant).
    const std::uint64_t count = ipow_u64(static_cast<std::uint64_t>(p), m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(static_cast<std::size_t>(m) + 1, 0);
        std::uint64_t t = idx;
        for (int i = 0; i < m; ++i) {
            f[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::uint64_t>(p));
            t /= static_cast<std::uint64_t>(p);
        }
        f[static_cast<std::size_t>(m)] = 1;
        if (m == 1 || is_irreducible(f, p, m)) return f;
    }
    fail(errc::reducible_modulus, "no irreducible modulus found");
}

}  // namespace

FieldTower FieldTower::build(int p, int m, int m1, int m2) {
    require(is_odd_prime(p), errc::not_odd_prime, "p = " + std::to_string(p) + " is not an odd prime");
    require(m >= 1 && m1 >= 1 && m2 >= 1, errc::not_divisor, "levels must be positive");
    require(m % m1 == 0, errc::not_divisor, "m1 does not divide m");
    require(m % m2 == 0, errc::not_divisor, "m2 does not divide m");

    FieldTower t;
    t.p_ = p;
    t.m_ = m;
    t.m1_ = m1;
    t.m2_ = m2;
    t.q_ = ipow_u64(static_cast<std::uint64_t>(p), m);
    require(t.q_ <= (1u << 22), errc::budget_exceeded, "field too large for table construction");
    t.modulus_ = find_modulus(p, m);
    t.build_tables();
    return t;
}

void FieldTower::build_tables() {
    const std::uint64_t q = q_;
    const int p = p_;
    const int m = m_;

    // Multiplication of packed indices through the modulus, digit arithmetic.
    auto raw_mul = [&](Elem a, Elem b) -> Elem {
        std::vector<int> acc(static_cast<std::size_t>(2 * m), 0);
        std::vector<int> da(static_cast<std::size_t>(m)), db(static_cast<std::size_t>(m));
        std::uint64_t ta = a, tb = b;
        for (int i = 0; i < m; ++i) {
            da[static_cast<std::size_t>(i)] = static_cast<int>(ta % static_cast<std::uint64_t>(p));
            ta /= static_cast<std::uint64_t>(p);
            db[static_cast<std::size_t>(i)] = static_cast<int>(tb % static_cast<std::uint64_t>(p));
            tb /= static_cast<std::uint64_t>(p);
        }
        for (int i = 0; i < m; ++i) {
            if (da[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < m; ++j)
                acc[static_cast<std::size_t>(i + j)] =
                    (acc[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
        }
        for (int i = 2 * m - 2; i >= m; --i) {
            const int c = acc[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j < m; ++j) {
                auto& v = acc[static_cast<std::size_t>(i - m + j)];
                v = ((v - c * modulus_[static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        Elem r = 0;
        for (int i = m - 1; i >= 0; --i) r = r * static_cast<Elem>(p) + static_cast<Elem>(acc[static_cast<std::size_t>(i)]);
        return r;
    };

    const auto factors = prime_factors(q - 1);
    auto is_primitive = [&](Elem g) {
        // order test through the factorization of q-1
        auto pw = [&](Elem base, std::uint64_t e) {
            Elem r = 1;
            while (e > 0) {
                if (e & 1) r = raw_mul(r, base);
                base = raw_mul(base, base);
                e >>= 1;
            }
            return r;
        };
        if (pw(g, q - 1) != 1) return false;
        for (auto l : factors)
            if (pw(g, (q - 1) / l) == 1) return false;
        return true;
    };

    alpha_ = 0;
    if (m >= 2 && is_primitive(static_cast<Elem>(p))) {
        alpha_ = static_cast<Elem>(p);  // the polynomial x
    } else {
        for (std::uint64_t c = 2; c < q; ++c) {
            if (m >= 2 && c == static_cast<std::uint64_t>(p)) continue;
            if (is_primitive(static_cast<Elem>(c))) {
                alpha_ = static_cast<Elem>(c);
                break;
            }
        }
    }
    require(alpha_ != 0, errc::internal, "no primitive element found");

    exp_.assign(static_cast<std::size_t>(q - 1), 0);
    log_.assign(static_cast<std::size_t>(q), 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        exp_[static_cast<std::size_t>(i)] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = raw_mul(cur, alpha_);
    }
    require(cur == 1, errc::internal, "alpha order mismatch");

    auto fill_trace = [&](int to, std::vector<Elem>& tab) {
        tab.assign(static_cast<std::size_t>(q), 0);
        const std::uint64_t pe = ipow_u64(static_cast<std::uint64_t>(p), to) % (q - 1);
        for (std::uint64_t x = 1; x < q; ++x) {
            // sum of x^{p^{to*i}} through the log table
            std::uint64_t e = log_[x];
            Elem s = 0;
            for (int i = 0; i < m / to; ++i) {
                s = add(s, exp_[static_cast<std::size_t>(e)]);
                e = (e * pe) % (q - 1);
            }
            tab[static_cast<std::size_t>(x)] = s;
        }
    };
    fill_trace(m1_, trace_m1_);
    fill_trace(m2_, trace_m2_);
    fill_trace(1, trace_1_);

    auto fill_ordinals = [&](int level, std::vector<std::int32_t>& tab) {
        tab.assign(static_cast<std::size_t>(q), -1);
        const auto elems = subfield_elements(level);
        for (std::size_t i = 0; i < elems.size(); ++i) tab[elems[i]] = static_cast<std::int32_t>(i);
    };
    fill_ordinals(m1_, ord_m1_);
    fill_ordinals(m2_, ord_m2_);
}

std::uint64_t FieldTower::subfield_order(int level) const {
    require(level >= 1 && m_ % level == 0, errc::not_divisor, "level does not divide m");
    return ipow_u64(static_cast<std::uint64_t>(p_), level);
}

Elem FieldTower::from_int(std::int64_t n) const {
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::vector<int> FieldTower::coeffs(Elem a) const {
    std::vector<int> c(static_cast<std::size_t>(m_));
    std::uint64_t t = a;
    for (int i = 0; i < m_; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::uint64_t>(p_));
        t /= static_cast<std::uint64_t>(p_);
    }
    return c;
}

Elem FieldTower::add(Elem a, Elem b) const {
    Elem r = 0;
    Elem mult = 1;
    const auto pp = static_cast<Elem>(p_);
    while (a != 0 || b != 0) {
        r += mult * ((a % pp + b % pp) % pp);
        a /= pp;
        b /= pp;
        mult *= pp;
    }
    return r;
}

Elem FieldTower::neg(Elem a) const {
    Elem r = 0;
    Elem mult = 1;
    const auto pp = static_cast<Elem>(p_);
    while (a != 0) {
        const Elem d = a % pp;
        r += mult * (d == 0 ? 0 : pp - d);
        a /= pp;
        mult *= pp;
    }
    return r;
}

Elem FieldTower::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldTower::mul_nonzero(Elem a, Elem b) const {
    const std::uint64_t e = log_[a] + static_cast<std::uint64_t>(log_[b]);
    const std::uint64_t n = q_ - 1;
    return exp_[static_cast<std::size_t>(e >= n ? e - n : e)];
}

Elem FieldTower::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return mul_nonzero(a, b);
}

Elem FieldTower::inv(Elem a) const {
    require(a != 0, errc::division_by_zero, "inverse of zero");
    const std::uint64_t l = log_[a];
    return exp_[static_cast<std::size_t>(l == 0 ? 0 : q_ - 1 - l)];
}

Elem FieldTower::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        require(e >= 0, errc::division_by_zero, "inverse of zero");
        return e == 0 ? 1 : 0;
    }
    const auto n = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
    if (r < 0) r += n;
    return exp_[static_cast<std::size_t>(r)];
}

Elem FieldTower::frobenius(Elem a, int k) const {
    if (a == 0) return 0;
    std::uint64_t e = log_[a];
    const std::uint64_t n = q_ - 1;
    for (int i = 0; i < k; ++i) e = (e * static_cast<std::uint64_t>(p_)) % n;
    return exp_[static_cast<std::size_t>(e)];
}

std::uint64_t FieldTower::log(Elem a) const {
    require(a != 0, errc::division_by_zero, "log of zero");
    return log_[a];
}

bool FieldTower::in_subfield(Elem x, int level) const {
    require(level >= 1 && m_ % level == 0, errc::not_divisor, "level does not divide m");
    if (x == 0 || level == m_) return true;
    const std::uint64_t step = (q_ - 1) / (subfield_order(level) - 1);
    return log_[x] % step == 0;
}

const std::vector<Elem>* FieldTower::trace_table(int to) const {
    if (to == m1_) return &trace_m1_;
    if (to == m2_) return &trace_m2_;
    if (to == 1) return &trace_1_;
    return nullptr;
}

Elem FieldTower::trace(Elem x, int from, int to) const {
    require(from >= 1 && m_ % from == 0, errc::not_divisor, "from-level does not divide m");
    require(to >= 1 && from % to == 0, errc::not_divisor, "to-level does not divide from-level");
    require(in_subfield(x, from), errc::not_in_subfield, "element outside the from-level subfield");
    if (from == to) return x;
    if (from == m_) {
        if (const auto* tab = trace_table(to)) return (*tab)[x];
    }
    Elem s = 0;
    for (int i = 0; i < from / to; ++i) s = add(s, frobenius(x, to * i));
    return s;
}

int FieldTower::quad_char(Elem x, int level) const {
    require(level >= 1 && m_ % level == 0, errc::not_divisor, "level does not divide m");
    if (x == 0) return 0;
    const std::uint64_t step = (q_ - 1) / (subfield_order(level) - 1);
    require(log_[x] % step == 0, errc::not_in_subfield, "element outside the given subfield");
    return (log_[x] / step) % 2 == 0 ? 1 : -1;
}

std::vector<Elem> FieldTower::subfield_elements(int level) const {
    const std::uint64_t qs = subfield_order(level);
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(qs));
    out.push_back(0);
    const std::uint64_t step = (q_ - 1) / (qs - 1);
    for (std::uint64_t i = 0; i + 1 < qs; ++i) out.push_back(exp_[static_cast<std::size_t>(i * step)]);
    return out;
}

std::int32_t FieldTower::subfield_ordinal(Elem x, int level) const {
    if (level == m1_) return ord_m1_[x];
    if (level == m2_) return ord_m2_[x];
    fail(errc::not_divisor, "ordinal table only kept for the two designated subfields");
}

}  // namespace tracecodes
