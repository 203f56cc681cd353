#include "tracecodes/codes.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

long long ipow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

std::vector<Elem> defining_set(const FieldTower& t) {
    std::vector<Elem> d;
    for (std::uint64_t x = 1; x < t.order(); ++x) {
        const Elem e = static_cast<Elem>(x);
        if (t.trace_to(t.mul(e, e), t.m1()) == 0) d.push_back(e);
    }
    d.push_back(0);  // d_n = 0
    return d;
}

LinearCode build_code(const FieldTower& t) {
    LinearCode code;
    code.tower = &t;
    code.coords = defining_set(t);
    const std::size_t n = code.coords.size();
    const int rows = t.m() / t.m2() + 1;
    code.gen_rows.assign(static_cast<std::size_t>(rows), std::vector<Elem>(n, 0));
    for (std::size_t i = 0; i < n; ++i) code.gen_rows[0][i] = 1;
    for (int r = 1; r < rows; ++r) {
        const Elem at = t.pow(t.alpha(), r - 1);
        for (std::size_t i = 0; i < n; ++i)
            code.gen_rows[static_cast<std::size_t>(r)][i] = t.trace_to(t.mul(at, code.coords[i]), t.m2());
    }
    return code;
}

WeightDistribution weight_distribution_bruteforce(const LinearCode& code, const EnumBudget& budget) {
    const FieldTower& t = *code.tower;
    const std::size_t n = code.coords.size();
    const long long q2 = static_cast<long long>(t.subfield_order(t.m2()));
    const long long pairs = static_cast<long long>(t.order()) * q2;
    require(static_cast<std::uint64_t>(pairs) <= budget.max_pairs && n <= budget.max_length,
            errc::budget_exceeded,
            "enumeration budget exceeded: " + std::to_string(pairs) + " pairs, length " + std::to_string(n));

    const auto sub = t.subfield_elements(t.m2());
    std::vector<std::size_t> neg_ord(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i)
        neg_ord[i] = static_cast<std::size_t>(t.subfield_ordinal(t.neg(sub[i]), t.m2()));

    std::vector<long long> raw(n + 1, 0);
    std::vector<long long> hist(sub.size(), 0);
    // codeword(b, c)_i = Tr(b d_i) + c; for fixed b, histogram the traces and
    // read off the zero count of every c at once.
    for (std::uint64_t b = 0; b < t.order(); ++b) {
        std::fill(hist.begin(), hist.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const Elem v = t.trace_to(t.mul(static_cast<Elem>(b), code.coords[i]), t.m2());
            ++hist[static_cast<std::size_t>(t.subfield_ordinal(v, t.m2()))];
        }
        for (std::size_t ci = 0; ci < sub.size(); ++ci) {
            const long long zeros = hist[neg_ord[ci]];
            ++raw[n - static_cast<std::size_t>(zeros)];
        }
    }

    WeightDistribution wd;
    wd.collapse = raw[0];  // messages mapping to the zero codeword
    require(wd.collapse >= 1, errc::internal, "zero codeword missing");
    for (std::size_t w = 0; w <= n; ++w) {
        if (raw[w] == 0) continue;
        require(raw[w] % wd.collapse == 0, errc::internal, "message fibers of unequal size");
        wd.counts[static_cast<long long>(w)] = raw[w] / wd.collapse;
    }
    return wd;
}

CodeParams code_params(const LinearCode& code, const WeightDistribution& wd) {
    const FieldTower& t = *code.tower;
    CodeParams cp;
    cp.n = static_cast<long long>(code.coords.size());
    cp.q = static_cast<long long>(t.subfield_order(t.m2()));
    cp.collapse = wd.collapse;
    long long total = 0;
    cp.d = 0;
    for (const auto& [w, c] : wd.counts) {
        total += c;
        if (w > 0 && (cp.d == 0 || w < cp.d)) cp.d = w;
    }
    long long k = 0, qk = 1;
    while (qk < total) {
        qk *= cp.q;
        ++k;
    }
    require(qk == total, errc::internal, "codeword count is not a power of the alphabet size");
    cp.k = k;
    cp.full_dimension = (cp.k == static_cast<long long>(t.m() / t.m2()) + 1);
    return cp;
}

bool is_self_orthogonal(const LinearCode& code) {
    const FieldTower& t = *code.tower;
    for (std::size_t r = 0; r < code.gen_rows.size(); ++r) {
        for (std::size_t s = r; s < code.gen_rows.size(); ++s) {
            Elem acc = 0;
            for (std::size_t i = 0; i < code.coords.size(); ++i)
                acc = t.add(acc, t.mul(code.gen_rows[r][i], code.gen_rows[s][i]));
            if (acc != 0) return false;
        }
    }
    return true;
}

long long p_divisibility(int p, const WeightDistribution& wd) {
    int minval = -1;
    for (const auto& [w, c] : wd.counts) {
        if (w == 0) continue;
        int v = 0;
        long long x = w;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        if (minval < 0 || v < minval) minval = v;
    }
    require(minval >= 0, errc::zero_code, "distribution has no nonzero weight");
    return ipow_ll(p, minval);
}

namespace {

// Column scaled so its first nonzero entry is 1; proportional columns get
// identical canonical forms.  Row 0 is all-ones for these codes, so the form
// is simply the column itself, but the generic scan keeps the check honest.
std::vector<Elem> canonical_column(const FieldTower& t, const LinearCode& code, std::size_t i) {
    std::vector<Elem> col(code.gen_rows.size());
    for (std::size_t r = 0; r < code.gen_rows.size(); ++r) col[r] = code.gen_rows[r][i];
    for (std::size_t r = 0; r < col.size(); ++r) {
        if (col[r] != 0) {
            const Elem s = t.inv(col[r]);
            for (auto& v : col) v = t.mul(v, s);
            break;
        }
    }
    return col;
}

}  // namespace

namespace {

using CoordIndex = std::unordered_map<Elem, std::size_t>;

CoordIndex coord_index(const LinearCode& code) {
    CoordIndex idx;
    idx.reserve(code.coords.size());
    for (std::size_t i = 0; i < code.coords.size(); ++i) idx.emplace(code.coords[i], i);
    return idx;
}

// First u in F_{p^m2} \ {0, 1} (subfield enumeration order) with
// u^{-1} d_i in the defining set, together with the index of u^{-1} d_i.
std::optional<std::pair<std::size_t, Elem>> partner_for(const LinearCode& code, const CoordIndex& idx,
                                                        std::size_t i) {
    const FieldTower& t = *code.tower;
    for (Elem u : t.subfield_elements(t.m2())) {
        if (u == 0 || u == 1) continue;
        const auto it = idx.find(t.mul(t.inv(u), code.coords[i]));
        if (it != idx.end() && it->second != i) return std::make_pair(it->second, u);
    }
    return std::nullopt;
}

RepairGroup group_for(const LinearCode& code, const CoordIndex& idx, std::size_t pos) {
    const FieldTower& t = *code.tower;
    const std::size_t n = code.coords.size();
    require(pos < n, errc::internal, "coordinate out of range");
    require(t.subfield_order(t.m2()) >= 3, errc::alphabet_too_small, "needs some u outside {0, 1}");

    if (pos + 1 < n) {
        // g_i = u g_j + (1-u) g_n with d_j = u^{-1} d_i.
        const auto found = partner_for(code, idx, pos);
        require(found.has_value(), errc::internal, "no recovery pair for coordinate");
        RepairGroup g;
        g.a = found->first;
        g.b = n - 1;
        g.coef_a = found->second;
        g.coef_b = t.sub(1, found->second);
        return g;
    }

    // Last coordinate (d = 0): solve the same identity for g_n.
    const auto found = partner_for(code, idx, 0);
    require(found.has_value(), errc::internal, "no recovery pair for the last coordinate");
    const Elem u = found->second;
    const Elem vinv = t.inv(t.sub(1, u));
    RepairGroup g;
    g.a = 0;
    g.b = found->first;
    g.coef_a = vinv;
    g.coef_b = t.neg(t.mul(u, vinv));
    return g;
}

}  // namespace

int dual_distance_small(const LinearCode& code) {
    const FieldTower& t = *code.tower;
    const std::size_t n = code.coords.size();

    for (std::size_t i = 0; i < n; ++i) {
        bool all_zero = true;
        for (const auto& row : code.gen_rows) all_zero = all_zero && row[i] == 0;
        if (all_zero) return 1;
    }

    std::vector<std::vector<Elem>> forms;
    forms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) forms.push_back(canonical_column(t, code, i));
    std::sort(forms.begin(), forms.end());
    if (std::adjacent_find(forms.begin(), forms.end()) != forms.end()) return 2;

    // A dependent triple (i, partner, n) comes straight from the recovery pairs.
    if (n >= 3) {
        const auto idx = coord_index(code);
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (partner_for(code, idx, i).has_value()) return 3;
    }
    return 4;
}

RepairGroup repair_group(const LinearCode& code, std::size_t pos) {
    return group_for(code, coord_index(code), pos);
}

LocalityResult locality(const LinearCode& code) {
    const std::size_t n = code.coords.size();

    // No coordinate may be recoverable from a single other one; that would be
    // two proportional columns, which the dual-distance scan rules out.
    require(dual_distance_small(code) >= 3, errc::internal, "proportional columns: locality would be 1");

    const auto idx = coord_index(code);
    LocalityResult res;
    res.r = 2;
    res.groups.reserve(n);
    for (std::size_t i = 0; i < n; ++i) res.groups.push_back(group_for(code, idx, i));
    return res;
}

Elem repair_erasure(const LinearCode& code, const std::vector<std::optional<Elem>>& word, std::size_t pos) {
    const FieldTower& t = *code.tower;
    require(word.size() == code.coords.size(), errc::internal, "word length mismatch");
    const RepairGroup g = repair_group(code, pos);
    require(word[g.a].has_value() && word[g.b].has_value(), errc::group_erased,
            "a recovery-pair member is erased");
    return t.add(t.mul(g.coef_a, *word[g.a]), t.mul(g.coef_b, *word[g.b]));
}

}  // namespace tracecodes
