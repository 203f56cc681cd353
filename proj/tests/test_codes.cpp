#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tracecodes/codes.hpp"
#include "tracecodes/errors.hpp"

using namespace tracecodes;

namespace {

bool throws_code(errc want, auto&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code() == want;
    }
    return false;
}

std::map<long long, long long> rows(std::initializer_list<std::pair<long long, long long>> init) {
    std::map<long long, long long> m;
    for (auto [w, f] : init) m[w] = f;
    return m;
}

// random codeword as a row-space combination
std::vector<Elem> random_codeword(const LinearCode& code, std::mt19937& rng) {
    const FieldTower& t = *code.tower;
    const auto sub = t.subfield_elements(t.m2());
    std::uniform_int_distribution<std::size_t> pick(0, sub.size() - 1);
    std::vector<Elem> word(code.length(), 0);
    for (const auto& row : code.gen_rows) {
        const Elem coef = sub[pick(rng)];
        for (std::size_t i = 0; i < word.size(); ++i)
            word[i] = t.add(word[i], t.mul(coef, row[i]));
    }
    return word;
}

}  // namespace

TEST_CASE("defining set: sizes, order, membership") {
    for (auto [p, m, m1, m2, n] :
         {std::array{3, 6, 2, 1, 81}, {3, 8, 2, 1, 657}, {3, 4, 1, 1, 21}}) {
        const FieldTower t = FieldTower::build(p, m, m1, m2);
        const auto d = defining_set(t);
        CHECK(d.size() == static_cast<std::size_t>(n));
        CHECK(d.back() == 0);
        std::set<Elem> distinct(d.begin(), d.end());
        CHECK(distinct.size() == d.size());
        for (Elem x : d) CHECK(t.trace_to(t.mul(x, x), t.m1()) == 0);
    }
}

TEST_CASE("generator matrix shape and the zero column") {
    const FieldTower t = FieldTower::build(3, 4, 1, 1);
    const LinearCode code = build_code(t);
    REQUIRE(code.rows() == 5);
    REQUIRE(code.length() == 21);
    CHECK(code.gen_rows[0] == std::vector<Elem>(21, 1));
    for (std::size_t r = 0; r < code.rows(); ++r)
        CHECK(code.gen_rows[r][20] == (r == 0 ? t.one() : t.zero()));
    for (const auto& row : code.gen_rows)
        for (Elem e : row) CHECK(t.in_subfield(e, t.m2()));
}

TEST_CASE("weight distributions match the known enumerators") {
    const FieldTower ta = FieldTower::build(3, 6, 2, 1);
    const auto wda = weight_distribution_bruteforce(build_code(ta));
    CHECK(wda.collapse == 1);
    CHECK(wda.counts ==
          rows({{0, 1}, {48, 360}, {51, 576}, {54, 240}, {57, 720}, {60, 288}, {81, 2}}));

    const FieldTower tb = FieldTower::build(3, 5, 1, 1);
    const auto wdb = weight_distribution_bruteforce(build_code(tb));
    CHECK(wdb.counts ==
          rows({{0, 1}, {48, 90}, {51, 144}, {54, 240}, {57, 180}, {60, 72}, {81, 2}}));
}

TEST_CASE("enumeration budget is enforced") {
    const FieldTower t = FieldTower::build(3, 4, 1, 1);
    const LinearCode code = build_code(t);
    EnumBudget tiny;
    tiny.max_pairs = 10;
    CHECK(throws_code(errc::budget_exceeded, [&] { weight_distribution_bruteforce(code, tiny); }));
}

TEST_CASE("code parameters") {
    const FieldTower ta = FieldTower::build(3, 6, 2, 1);
    const LinearCode ca = build_code(ta);
    const auto pa = code_params(ca, weight_distribution_bruteforce(ca));
    CHECK(pa.n == 81);
    CHECK(pa.k == 7);
    CHECK(pa.d == 48);
    CHECK(pa.q == 3);
    CHECK(pa.full_dimension);

    const FieldTower tb = FieldTower::build(3, 3, 1, 1);
    const LinearCode cb = build_code(tb);
    const auto pb = code_params(cb, weight_distribution_bruteforce(cb));
    CHECK(pb.n == 9);
    CHECK(pb.k == 4);
    CHECK(pb.d == 4);
}

TEST_CASE("message collapse outside the dimension hypothesis") {
    // m = m1 degenerates to the single coordinate d = 0
    const FieldTower t = FieldTower::build(3, 3, 3, 1);
    const LinearCode code = build_code(t);
    REQUIRE(code.length() == 1);
    const auto wd = weight_distribution_bruteforce(code);
    CHECK(wd.collapse == 27);
    CHECK(wd.counts == rows({{0, 1}, {1, 2}}));
    const auto cp = code_params(code, wd);
    CHECK(cp.k == 1);
    CHECK(!cp.full_dimension);
}

TEST_CASE("self-orthogonality matches a direct Gram computation") {
    for (auto [p, m, m1, m2] :
         {std::array{3, 6, 2, 1}, {3, 6, 1, 2}, {3, 3, 1, 1}, {3, 4, 1, 1}, {3, 4, 1, 2}}) {
        const FieldTower t = FieldTower::build(p, m, m1, m2);
        const LinearCode code = build_code(t);
        bool gram_zero = true;
        for (const auto& r : code.gen_rows)
            for (const auto& s : code.gen_rows) {
                Elem acc = 0;
                for (std::size_t i = 0; i < code.length(); ++i)
                    acc = t.add(acc, t.mul(r[i], s[i]));
                gram_zero = gram_zero && acc == 0;
            }
        CHECK(is_self_orthogonal(code) == gram_zero);
    }
    CHECK(is_self_orthogonal(build_code(FieldTower::build(3, 6, 2, 1))));
    CHECK(is_self_orthogonal(build_code(FieldTower::build(3, 6, 1, 2))));
    // weights 4 and 5 are not multiples of 3, so this one cannot be
    CHECK(!is_self_orthogonal(build_code(FieldTower::build(3, 3, 1, 1))));
}

TEST_CASE("divisible codes containing the all-ones word are self-orthogonal") {
    for (auto [p, m, m1, m2] : {std::array{3, 6, 2, 1}, {3, 8, 2, 1}, {3, 5, 1, 1},
                                {3, 4, 1, 1}, {3, 6, 1, 2}}) {
        const FieldTower t = FieldTower::build(p, m, m1, m2);
        const LinearCode code = build_code(t);
        const auto wd = weight_distribution_bruteforce(code);
        if (p_divisibility(p, wd) >= p) CHECK(is_self_orthogonal(code));
    }
}

TEST_CASE("self-orthogonal codewords have vanishing self inner product") {
    const FieldTower t = FieldTower::build(3, 6, 2, 1);
    const LinearCode code = build_code(t);
    REQUIRE(is_self_orthogonal(code));
    std::mt19937 rng(17);
    for (int iter = 0; iter < 100; ++iter) {
        const auto w = random_codeword(code, rng);
        Elem acc = 0;
        for (Elem x : w) acc = t.add(acc, t.mul(x, x));
        CHECK(acc == 0);
    }
}

TEST_CASE("p-divisibility") {
    const FieldTower t = FieldTower::build(3, 6, 2, 1);
    const auto wd = weight_distribution_bruteforce(build_code(t));
    CHECK(p_divisibility(3, wd) == 3);

    WeightDistribution manual;
    manual.counts = rows({{0, 1}, {4, 2}, {8, 2}});
    CHECK(p_divisibility(3, manual) == 1);

    WeightDistribution zero;
    zero.counts = rows({{0, 1}});
    CHECK(throws_code(errc::zero_code, [&] { p_divisibility(3, zero); }));
}

TEST_CASE("dual distance is 3, and the pair scan agrees with the quadratic oracle") {
    for (auto [p, m, m1, m2] : {std::array{3, 4, 1, 1}, {3, 3, 1, 1}, {3, 4, 1, 2}, {5, 3, 1, 1}}) {
        const FieldTower t = FieldTower::build(p, m, m1, m2);
        const LinearCode code = build_code(t);
        CHECK(dual_distance_small(code) == 3);

        // O(n^2) oracle: no column is a scalar multiple of another
        bool proportional = false;
        for (std::size_t i = 0; i < code.length() && !proportional; ++i)
            for (std::size_t j = i + 1; j < code.length() && !proportional; ++j) {
                for (Elem s : t.subfield_elements(t.m2())) {
                    if (s == 0) continue;
                    bool equal = true;
                    for (std::size_t r = 0; r < code.rows(); ++r)
                        equal = equal && code.gen_rows[r][i] == t.mul(s, code.gen_rows[r][j]);
                    if (equal) proportional = true;
                }
            }
        CHECK(!proportional);
    }
}

TEST_CASE("locality 2 with verified recovery pairs") {
    for (auto [p, m, m1, m2] : {std::array{3, 3, 1, 1}, {3, 4, 1, 2}}) {
        const FieldTower t = FieldTower::build(p, m, m1, m2);
        const LinearCode code = build_code(t);
        const auto loc = locality(code);
        CHECK(loc.r == 2);
        REQUIRE(loc.groups.size() == code.length());
        for (std::size_t i = 0; i < code.length(); ++i) {
            const auto& g = loc.groups[i];
            CHECK(g.a != i);
            CHECK(g.b != i);
            CHECK(g.a != g.b);
            for (std::size_t r = 0; r < code.rows(); ++r)
                CHECK(code.gen_rows[r][i] == t.add(t.mul(g.coef_a, code.gen_rows[r][g.a]),
                                                   t.mul(g.coef_b, code.gen_rows[r][g.b])));
        }
    }
}

TEST_CASE("repair round-trips every coordinate") {
    std::mt19937 rng(23);
    for (auto [p, m, m1, m2] : {std::array{3, 3, 1, 1}, {3, 4, 1, 1}, {3, 4, 1, 2}, {5, 3, 1, 1}}) {
        const FieldTower t = FieldTower::build(p, m, m1, m2);
        const LinearCode code = build_code(t);
        for (int iter = 0; iter < 20; ++iter) {
            const auto original = random_codeword(code, rng);
            for (std::size_t pos = 0; pos < code.length(); ++pos) {
                std::vector<std::optional<Elem>> word(original.begin(), original.end());
                word[pos] = std::nullopt;
                CHECK(repair_erasure(code, word, pos) == original[pos]);
            }
        }
    }
}

TEST_CASE("repair fails when the recovery pair is damaged") {
    const FieldTower t = FieldTower::build(3, 4, 1, 1);
    const LinearCode code = build_code(t);
    std::mt19937 rng(29);
    const auto original = random_codeword(code, rng);
    const auto group = repair_group(code, 5);
    std::vector<std::optional<Elem>> word(original.begin(), original.end());
    word[5] = std::nullopt;
    word[group.a] = std::nullopt;
    CHECK(throws_code(errc::group_erased, [&] { repair_erasure(code, word, 5); }));
}
