#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tracecodes/charsums.hpp"
#include "tracecodes/codes.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/theory.hpp"

using namespace tracecodes;

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<SpectrumRow> rows(std::initializer_list<std::pair<long long, long long>> init) {
    std::vector<SpectrumRow> v;
    for (auto [w, f] : init) v.push_back({w, f});
    return v;
}

std::vector<SpectrumRow> nonzero_rows(const WeightDistribution& wd) {
    std::vector<SpectrumRow> v;
    for (const auto& [w, f] : wd.counts)
        if (w > 0) v.push_back({w, f});
    return v;
}

}  // namespace

TEST_CASE("predicted lengths") {
    CHECK(predicted_length(3, 6, 2) == 81);
    CHECK(predicted_length(3, 8, 2) == 657);
    CHECK(predicted_length(3, 4, 1) == 21);   // negative sign branch
    CHECK(predicted_length(3, 6, 3) == 53);   // positive sign branch
    CHECK(predicted_length(3, 5, 1) == 81);
    CHECK(predicted_length(5, 4, 1) == 105);
}

TEST_CASE("predicted length equals the defining-set size") {
    for (int p : {3, 5})
        for (int m = 1; m <= 6; ++m) {
            if (ipow(p, m) > (1 << 22)) continue;
            for (int m1 = 1; m1 <= m; ++m1) {
                if (m % m1 != 0) continue;
                const FieldTower t = FieldTower::build(p, m, m1, 1);
                CHECK(predicted_length(p, m, m1) == static_cast<long long>(defining_set(t).size()));
            }
        }
    const FieldTower t = FieldTower::build(3, 8, 2, 1);
    CHECK(predicted_length(3, 8, 2) == static_cast<long long>(defining_set(t).size()));
}

TEST_CASE("sign exponents: frozen values") {
    CHECK(exponents(3, 8, 2, 1).l2 == 11);
    CHECK(exponents(3, 6, 2, 1).l1 == 14);
    CHECK(exponents(3, 6, 1, 1).l2 == 8);
    CHECK(!exponents(3, 5, 1, 1).l2.has_value());  // odd m has no integral p^{m/2}
}

TEST_CASE("sign exponents agree with the exact Gauss-sum products") {
    for (auto [p, m, m1, m2] : {std::array{3, 4, 2, 1}, {3, 6, 2, 1}, {3, 6, 1, 2}, {5, 2, 1, 1}}) {
        const FieldTower t = FieldTower::build(p, m, m1, m2);
        const auto ex = exponents(p, m, m1, m2);
        if (m % 2 == 0) {
            const auto g = gauss_sum_bruteforce(t, m).as_integer();
            REQUIRE(g.has_value());
            CHECK(*g == (*ex.l2 % 2 == 0 ? 1 : -1) * ipow(p, m / 2));
        }
        if ((m + m1) % 2 == 0) {
            const auto prod = (gauss_sum_bruteforce(t, m) * gauss_sum_bruteforce(t, m1)).as_integer();
            REQUIRE(prod.has_value());
            const int eta1_minus1 = t.quad_char(t.neg(t.one()), m1);
            CHECK(*prod * eta1_minus1 == (*ex.l1 % 2 == 0 ? 1 : -1) * ipow(p, (m + m1) / 2));
        }
        if ((m + m2) % 2 == 0) {
            const auto prod = (gauss_sum_bruteforce(t, m) * gauss_sum_bruteforce(t, m2)).as_integer();
            REQUIRE(prod.has_value());
            const int eta2_minus1 = t.quad_char(t.neg(t.one()), m2);
            CHECK(*prod * eta2_minus1 == (*ex.l4 % 2 == 0 ? 1 : -1) * ipow(p, (m + m2) / 2));
        }
    }
}

TEST_CASE("sign exponents compose: l4 = l2 + l7 + (q2-1)/2 mod 2 when all exist") {
    for (int p : {3, 5, 7})
        for (int m = 2; m <= 8; m += 2)
            for (int m2 = 2; m2 <= m; m2 += 2) {
                if (m % m2 != 0) continue;
                const auto ex = exponents(p, m, 1, m2);
                REQUIRE(ex.l2.has_value());
                REQUIRE(ex.l4.has_value());
                REQUIRE(ex.l7.has_value());
                const long long eta2 = (ipow(p, m2) - 1) / 2;
                CHECK((*ex.l4 - (*ex.l2 + *ex.l7 + eta2)) % 2 == 0);
            }
}

TEST_CASE("predicted spectra: frozen rows from the worked examples") {
    const auto ex1 = predicted_spectrum(3, 6, 2, 1);
    CHECK(ex1.length == 81);
    CHECK(ex1.dimension == 7);
    CHECK(ex1.hypothesis_ok);
    CHECK(ex1.rows ==
          rows({{48, 360}, {51, 576}, {54, 240}, {57, 720}, {60, 288}, {81, 2}}));

    const auto ex2 = predicted_spectrum(3, 8, 2, 1);
    CHECK(ex2.rows ==
          rows({{414, 1312}, {432, 5904}, {441, 11808}, {486, 656}, {657, 2}}));

    const auto ex3 = predicted_spectrum(3, 5, 1, 1);
    CHECK(ex3.rows == rows({{48, 90}, {51, 144}, {54, 240}, {57, 180}, {60, 72}, {81, 2}}));

    const auto ex4 = predicted_spectrum(3, 4, 1, 1);
    CHECK(ex4.length == 21);
    CHECK(ex4.dimension == 5);
    CHECK(ex4.rows == rows({{12, 100}, {15, 120}, {18, 20}, {21, 2}}));

    const auto ex5 = predicted_spectrum(3, 6, 1, 2);
    CHECK(ex5.rows == rows({{216, 80}, {228, 1800}, {231, 2304}, {234, 640}, {237, 1440},
                            {240, 288}, {261, 8}}));
}

TEST_CASE("case tags and hypothesis flags") {
    const auto a = predicted_spectrum(3, 6, 2, 1);
    CHECK(a.tag.relation == CaseTag::Relation::m2_divides_m1);
    CHECK(!a.tag.m_over_m1_even);

    const auto b = predicted_spectrum(3, 6, 3, 1);  // m/m1 = 2: dimension clause not covered
    CHECK(b.tag.m_over_m1_even);
    CHECK(!b.hypothesis_ok);
    CHECK(b.length == 53);

    const auto c = predicted_spectrum(3, 6, 1, 2);
    CHECK(c.tag.relation == CaseTag::Relation::m1_divides_m2);
    CHECK(c.tag.m2_over_m1_even == true);
    CHECK(c.tag.m_over_m2_even == false);
    CHECK(c.hypothesis_ok);

    CHECK(predicted_spectrum(3, 3, 1, 1).hypothesis_ok);
    CHECK(predicted_spectrum(3, 8, 2, 1).hypothesis_ok);
    CHECK_THROWS_AS(predicted_spectrum(3, 6, 2, 3), error);
}

TEST_CASE("self-orthogonality claims") {
    CHECK(predicted_self_orthogonality(3, 6, 2, 1).claimed);   // 6 > 2 + 2*1
    CHECK(!predicted_self_orthogonality(3, 3, 1, 1).claimed);  // 3 > 1 + 2 fails
    CHECK(predicted_self_orthogonality(3, 8, 2, 1).claimed);   // even case, m/m1 = 4 > 2
    CHECK(predicted_self_orthogonality(3, 5, 1, 1).claimed);   // 5 > 2*1 + 1
    CHECK(predicted_self_orthogonality(3, 4, 1, 1).claimed);   // 4 > 1 + 1
    CHECK(!predicted_self_orthogonality(3, 4, 1, 2).claimed);  // 4 > 2*1 + 2 fails
    CHECK(predicted_self_orthogonality(3, 6, 1, 2).claimed);   // 6 > 2*1 + 2
}

TEST_CASE("claimed self-orthogonality forces p-divisible predicted weights") {
    for (int p : {3, 5})
        for (int m = 2; m <= 6; ++m)
            for (int m1 = 1; m1 <= m; ++m1) {
                if (m % m1 != 0) continue;
                for (int m2 = 1; m2 <= m; ++m2) {
                    if (m % m2 != 0 || (m1 % m2 != 0 && m2 % m1 != 0)) continue;
                    const auto sp = predicted_spectrum(p, m, m1, m2);
                    if (!sp.self_orthogonal_claimed) continue;
                    for (const auto& r : sp.rows) CHECK(r.weight % p == 0);
                }
            }
}

TEST_CASE("oracle equivalence: closed-form spectra equal exhaustive enumeration") {
    const EnumBudget budget;
    for (int p : {3, 5, 7})
        for (int m = 1; m <= (p == 7 ? 4 : 8); ++m)
            for (int m1 = 1; m1 <= m; ++m1) {
                if (m % m1 != 0) continue;
                for (int m2 = 1; m2 <= m; ++m2) {
                    if (m % m2 != 0 || (m1 % m2 != 0 && m2 % m1 != 0)) continue;
                    long long pairs = ipow(p, m + m2);
                    if (static_cast<std::uint64_t>(pairs) > budget.max_pairs) continue;
                    long long n = 0;
                    try {
                        n = predicted_length(p, m, m1);
                    } catch (const error&) {
                        continue;
                    }
                    if (n > static_cast<long long>(budget.max_length)) continue;

                    INFO("tower (", p, ",", m, ",", m1, ",", m2, ")");
                    const auto sp = predicted_spectrum(p, m, m1, m2);
                    // pair mass always accounts for every message
                    if (!sp.rows.empty()) {
                        long long mass = 1;
                        for (const auto& r : sp.rows) mass += r.frequency;
                        CHECK(mass == pairs);
                    }
                    if (!sp.hypothesis_ok) continue;

                    const FieldTower t = FieldTower::build(p, m, m1, m2);
                    const LinearCode code = build_code(t);
                    const auto wd = weight_distribution_bruteforce(code, budget);
                    CHECK(wd.collapse == 1);
                    CHECK(nonzero_rows(wd) == sp.rows);
                    CHECK(code_params(code, wd).k == sp.dimension);
                }
            }
}
