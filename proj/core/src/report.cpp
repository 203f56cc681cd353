#include "tracecodes/report.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracecodes/errors.hpp"

namespace tracecodes {

using nlohmann::json;

namespace {

long long min_nonzero_weight(const std::vector<SpectrumRow>& rows) {
    long long d = 0;
    for (const auto& r : rows)
        if (r.weight > 0 && (d == 0 || r.weight < d)) d = r.weight;
    return d;
}

std::vector<LemmaCheck> tower_lemma_checks(const FieldTower& t, OmegaReading reading) {
    std::vector<LemmaCheck> out;
    {
        LemmaCheck c{"lemma7", 0, 0};
        const auto sub2 = t.subfield_elements(t.m2());
        for (std::uint64_t b = 0; b < t.order(); ++b)
            for (Elem cc : sub2) {
                ++c.checked;
                if (!(omega(t, static_cast<Elem>(b), cc, Mode::brute) ==
                      omega(t, static_cast<Elem>(b), cc, Mode::closed, reading)))
                    ++c.mismatches;
            }
        out.push_back(c);
    }
    {
        LemmaCheck c{"lemma8", 0, 0};
        for (int i : {1, 2}) {
            const int mi = i == 1 ? t.m1() : t.m2();
            for (Elem a : t.subfield_elements(mi)) {
                ++c.checked;
                if (count_quadric(t, i, a, Mode::brute) != count_quadric(t, i, a, Mode::closed))
                    ++c.mismatches;
            }
        }
        out.push_back(c);
    }
    if (t.m2() % t.m1() == 0) {
        LemmaCheck c{"lemma9", 0, 0};
        for (Elem a : t.subfield_elements(t.m2())) {
            if (a == 0) continue;
            for (Elem tv : t.subfield_elements(t.m1())) {
                ++c.checked;
                if (count_subfield_quadric(t, a, tv, Mode::brute) !=
                    count_subfield_quadric(t, a, tv, Mode::closed))
                    ++c.mismatches;
            }
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

Report make_report(int p, int m, int m1, int m2, const ReportOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    r.p = p;
    r.m = m;
    r.m1 = m1;
    r.m2 = m2;

    const FieldTower tower = FieldTower::build(p, m, m1, m2);
    r.predicted = predicted_spectrum(p, m, m1, m2);
    r.q = static_cast<long long>(tower.subfield_order(m2));

    const LinearCode code = build_code(tower);
    r.n = static_cast<long long>(code.length());

    if (opt.bruteforce) {
        const WeightDistribution wd = weight_distribution_bruteforce(code, opt.budget);
        const CodeParams cp = code_params(code, wd);
        r.bruteforce_ran = true;
        r.k = cp.k;
        r.d = cp.d;
        r.collapse = cp.collapse;
        for (const auto& [w, f] : wd.counts)
            if (w > 0) r.weights_brute.push_back({w, f});
        r.divisibility = p_divisibility(p, wd);
    } else {
        r.k = r.predicted.hypothesis_ok ? r.predicted.dimension : 0;
        r.d = r.predicted.hypothesis_ok ? min_nonzero_weight(r.predicted.rows) : 0;
    }

    r.self_orthogonal = is_self_orthogonal(code);
    r.dual_distance = dual_distance_small(code);
    if (code.length() >= 3) r.locality_r = locality(code).r;
    if (r.k >= 1 && r.n >= 3 && r.d >= 1)
        r.bounds = analyze_bounds(r.n, r.k, r.d, r.q, r.locality_r > 0 ? r.locality_r : 2);
    r.omega_reading = opt.reading == OmegaReading::verified ? "verified" : "alternate";
    if (opt.lemma_checks) r.lemmas = tower_lemma_checks(tower, opt.reading);

    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

bool weights_match(const Report& r) {
    if (r.n != r.predicted.length) return false;
    if (!r.bruteforce_ran || !r.predicted.hypothesis_ok) return true;
    return r.k == r.predicted.dimension && r.weights_brute == r.predicted.rows;
}

// --- serialization ----------------------------------------------------------

namespace {

json rows_to_json(const std::vector<SpectrumRow>& rows) {
    json a = json::array();
    for (const auto& r : rows) a.push_back({r.weight, r.frequency});
    return a;
}

std::vector<SpectrumRow> rows_from_json(const json& a) {
    std::vector<SpectrumRow> rows;
    for (const auto& e : a) rows.push_back({e.at(0).get<long long>(), e.at(1).get<long long>()});
    return rows;
}

json tag_to_json(const CaseTag& tag) {
    json j;
    j["relation"] = tag.relation == CaseTag::Relation::m2_divides_m1 ? "m2|m1" : "m1|m2";
    j["m_over_m1"] = tag.m_over_m1_even ? "even" : "odd";
    j["m2_over_m1"] = tag.m2_over_m1_even ? json(*tag.m2_over_m1_even ? "even" : "odd") : json();
    j["m_over_m2"] = tag.m_over_m2_even ? json(*tag.m_over_m2_even ? "even" : "odd") : json();
    return j;
}

CaseTag tag_from_json(const json& j) {
    CaseTag tag;
    tag.relation = j.at("relation").get<std::string>() == "m2|m1" ? CaseTag::Relation::m2_divides_m1
                                                                  : CaseTag::Relation::m1_divides_m2;
    tag.m_over_m1_even = j.at("m_over_m1").get<std::string>() == "even";
    if (!j.at("m2_over_m1").is_null()) tag.m2_over_m1_even = j.at("m2_over_m1").get<std::string>() == "even";
    if (!j.at("m_over_m2").is_null()) tag.m_over_m2_even = j.at("m_over_m2").get<std::string>() == "even";
    return tag;
}

json report_to_json_obj(const Report& r) {
    json j;
    j["schema"] = r.schema;
    j["tower"] = {{"p", r.p}, {"m", r.m}, {"m1", r.m1}, {"m2", r.m2}};
    j["code"] = {{"n", r.n},
                 {"k", r.k},
                 {"d", r.d},
                 {"q", r.q},
                 {"collapse", r.collapse},
                 {"bruteforce", r.bruteforce_ran}};
    j["weights_brute"] = rows_to_json(r.weights_brute);
    j["predicted"] = {{"length", r.predicted.length},
                      {"dimension", r.predicted.dimension},
                      {"rows", rows_to_json(r.predicted.rows)},
                      {"hypothesis_ok", r.predicted.hypothesis_ok},
                      {"self_orthogonal_claimed", r.predicted.self_orthogonal_claimed},
                      {"condition", r.predicted.self_orthogonality_condition},
                      {"case", tag_to_json(r.predicted.tag)}};
    j["match"] = weights_match(r);  // derived, recomputed on every serialization
    j["divisibility"] = r.divisibility;
    j["self_orthogonal"] = r.self_orthogonal;
    j["locality"] = r.locality_r;
    j["dual_distance"] = r.dual_distance;
    json labels = json::array();
    for (auto l : r.bounds.labels) labels.push_back(to_string(l));
    j["bounds"] = {{"n", r.bounds.n},
                   {"k", r.bounds.k},
                   {"d", r.bounds.d},
                   {"q", r.bounds.q},
                   {"r", r.bounds.r},
                   {"singleton_like", r.bounds.singleton_like},
                   {"cm_k", r.bounds.cm_k},
                   {"griesmer_at_d", r.bounds.griesmer_at_d},
                   {"labels", labels},
                   {"dual_verdict", to_string(r.bounds.dual_verdict)}};
    json lem = json::array();
    for (const auto& c : r.lemmas)
        lem.push_back({{"name", c.name}, {"checked", c.checked}, {"mismatches", c.mismatches}});
    j["lemmas"] = lem;
    j["omega_reading"] = r.omega_reading;
    j["seconds"] = r.seconds;
    return j;
}

}  // namespace

std::string report_to_json(const Report& r) { return report_to_json_obj(r).dump(2); }

Report report_from_json(const std::string& text) {
    const json j = json::parse(text);
    Report r;
    r.schema = j.at("schema").get<int>();
    r.p = j.at("tower").at("p").get<int>();
    r.m = j.at("tower").at("m").get<int>();
    r.m1 = j.at("tower").at("m1").get<int>();
    r.m2 = j.at("tower").at("m2").get<int>();
    r.n = j.at("code").at("n").get<long long>();
    r.k = j.at("code").at("k").get<long long>();
    r.d = j.at("code").at("d").get<long long>();
    r.q = j.at("code").at("q").get<long long>();
    r.collapse = j.at("code").at("collapse").get<long long>();
    r.bruteforce_ran = j.at("code").at("bruteforce").get<bool>();
    r.weights_brute = rows_from_json(j.at("weights_brute"));
    const json& pr = j.at("predicted");
    r.predicted.p = r.p;
    r.predicted.m = r.m;
    r.predicted.m1 = r.m1;
    r.predicted.m2 = r.m2;
    r.predicted.length = pr.at("length").get<long long>();
    r.predicted.dimension = pr.at("dimension").get<long long>();
    r.predicted.rows = rows_from_json(pr.at("rows"));
    r.predicted.hypothesis_ok = pr.at("hypothesis_ok").get<bool>();
    r.predicted.self_orthogonal_claimed = pr.at("self_orthogonal_claimed").get<bool>();
    r.predicted.self_orthogonality_condition = pr.at("condition").get<std::string>();
    r.predicted.tag = tag_from_json(pr.at("case"));
    r.divisibility = j.at("divisibility").get<long long>();
    r.self_orthogonal = j.at("self_orthogonal").get<bool>();
    r.locality_r = j.at("locality").get<int>();
    r.dual_distance = j.at("dual_distance").get<int>();
    const json& b = j.at("bounds");
    r.bounds.n = b.at("n").get<long long>();
    r.bounds.k = b.at("k").get<long long>();
    r.bounds.d = b.at("d").get<long long>();
    r.bounds.q = b.at("q").get<long long>();
    r.bounds.r = b.at("r").get<int>();
    r.bounds.singleton_like = b.at("singleton_like").get<long long>();
    r.bounds.cm_k = b.at("cm_k").get<long long>();
    r.bounds.griesmer_at_d = b.at("griesmer_at_d").get<long long>();
    for (const auto& s : b.at("labels")) {
        const std::string name = s.get<std::string>();
        for (auto l : {LrcLabel::d_optimal, LrcLabel::almost_d_optimal, LrcLabel::k_optimal,
                       LrcLabel::almost_k_optimal, LrcLabel::griesmer_optimal})
            if (to_string(l) == name) r.bounds.labels.push_back(l);
    }
    r.bounds.dual_verdict = b.at("dual_verdict").get<std::string>() == "optimal-or-almost"
                                ? DualVerdict::optimal_or_almost
                                : DualVerdict::inconclusive;
    for (const auto& c : j.at("lemmas"))
        r.lemmas.push_back({c.at("name").get<std::string>(), c.at("checked").get<long long>(),
                            c.at("mismatches").get<long long>()});
    r.omega_reading = j.at("omega_reading").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    return r;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "tower p=" << r.p << " m=" << r.m << " m1=" << r.m1 << " m2=" << r.m2 << "\n";
    os << "code  [" << r.n << ", " << r.k << ", " << r.d << "] over F_" << r.q;
    if (r.collapse > 1) os << "  (message collapse " << r.collapse << ")";
    os << "\n";
    auto put_rows = [&](const char* label, const std::vector<SpectrumRow>& rows) {
        os << label << " 1";
        for (const auto& row : rows) os << " + " << row.frequency << "z^" << row.weight;
        os << "\n";
    };
    if (r.bruteforce_ran) put_rows("weights (enumerated):", r.weights_brute);
    put_rows("weights (predicted): ", r.predicted.rows);
    os << "hypothesis_ok " << (r.predicted.hypothesis_ok ? "true" : "false") << ", match "
       << (weights_match(r) ? "true" : "false") << "\n";
    os << "divisibility " << r.divisibility << ", self-orthogonal "
       << (r.self_orthogonal ? "true" : "false") << " (claimed "
       << (r.predicted.self_orthogonal_claimed ? "true" : "false") << ", condition "
       << r.predicted.self_orthogonality_condition << ")\n";
    os << "locality " << r.locality_r << ", dual distance "
       << (r.dual_distance > 3 ? std::string(">3") : std::to_string(r.dual_distance)) << "\n";
    os << "bounds: singleton-like " << r.bounds.singleton_like << ", cm-k " << r.bounds.cm_k
       << ", griesmer-at-d " << r.bounds.griesmer_at_d << ", dual "
       << to_string(r.bounds.dual_verdict) << ", labels [";
    for (std::size_t i = 0; i < r.bounds.labels.size(); ++i)
        os << (i ? ", " : "") << to_string(r.bounds.labels[i]);
    os << "]\n";
    for (const auto& c : r.lemmas)
        os << c.name << ": " << c.checked << " checked, " << c.mismatches << " mismatches\n";
    os << std::fixed << std::setprecision(3) << "elapsed " << r.seconds << "s\n";
    return os.str();
}

void weights_to_csv(const Report& r, std::ostream& out) {
    out << "weight,frequency\n0,1\n";
    for (const auto& row : r.weights_brute) out << row.weight << "," << row.frequency << "\n";
}

// --- verification drivers ---------------------------------------------------

bool VerifySummary::ok() const {
    for (const auto& l : lines)
        if (l.failed != 0) return false;
    return true;
}

void VerifySummary::append(const VerifySummary& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

VerifySummary verify_lemma4(const std::vector<int>& primes, int max_level, std::uint64_t max_size) {
    VerifySummary s;
    for (int p : primes) {
        std::uint64_t size = 1;
        for (int level = 1; level <= max_level; ++level) {
            size *= static_cast<std::uint64_t>(p);
            if (size > max_size) break;
            VerifyLine line;
            line.name = "lemma4 p=" + std::to_string(p) + " level=" + std::to_string(level);
            line.checked = 1;
            const FieldTower t = FieldTower::build(p, level, 1, 1);
            const auto brute = gauss_sum_bruteforce(t, level).to_complex();
            const auto closed = gauss_sign(p, level).value();
            if (std::abs(brute - closed) > 1e-6 * std::abs(closed)) line.failed = 1;
            s.lines.push_back(line);
        }
    }
    return s;
}

VerifySummary verify_lemma5(const FieldTower& t, bool exhaustive, int samples, unsigned seed) {
    VerifySummary s;
    VerifyLine line;
    line.name = "lemma5 q=" + std::to_string(t.order()) + (exhaustive ? " exhaustive" : " sampled");
    const int level = t.m();
    auto check = [&](Elem a2, Elem a1, Elem a0) {
        ++line.checked;
        if (!(weil_sum(t, level, a2, a1, a0, Mode::brute) == weil_sum(t, level, a2, a1, a0, Mode::closed)))
            ++line.failed;
    };
    if (exhaustive) {
        for (std::uint64_t a2 = 1; a2 < t.order(); ++a2)
            for (std::uint64_t a1 = 0; a1 < t.order(); ++a1)
                for (std::uint64_t a0 = 0; a0 < t.order(); ++a0)
                    check(static_cast<Elem>(a2), static_cast<Elem>(a1), static_cast<Elem>(a0));
    } else {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<std::uint64_t> any(0, t.order() - 1);
        std::uniform_int_distribution<std::uint64_t> nonzero(1, t.order() - 1);
        for (int i = 0; i < samples; ++i)
            check(static_cast<Elem>(nonzero(rng)), static_cast<Elem>(any(rng)), static_cast<Elem>(any(rng)));
    }
    s.lines.push_back(line);
    return s;
}

VerifySummary verify_lemma5_default() {
    VerifySummary s;
    s.append(verify_lemma5(FieldTower::build(3, 2, 1, 1), true, 0, 0));
    s.append(verify_lemma5(FieldTower::build(3, 3, 1, 1), true, 0, 0));
    s.append(verify_lemma5(FieldTower::build(3, 4, 1, 1), false, 200, 2024));
    s.append(verify_lemma5(FieldTower::build(3, 5, 1, 1), false, 200, 2025));
    return s;
}

VerifySummary verify_lemma7(const FieldTower& t, OmegaReading reading) {
    VerifySummary s;
    VerifyLine line;
    line.name = "lemma7 (" + std::to_string(t.p()) + "," + std::to_string(t.m()) + "," +
                std::to_string(t.m1()) + "," + std::to_string(t.m2()) + ")";
    const auto sub2 = t.subfield_elements(t.m2());
    for (std::uint64_t b = 0; b < t.order(); ++b)
        for (Elem c : sub2) {
            ++line.checked;
            if (!(omega(t, static_cast<Elem>(b), c, Mode::brute) ==
                  omega(t, static_cast<Elem>(b), c, Mode::closed, reading)))
                ++line.failed;
        }
    s.lines.push_back(line);
    return s;
}

VerifySummary verify_lemma8(const FieldTower& t) {
    VerifySummary s;
    VerifyLine line;
    line.name = "lemma8 (" + std::to_string(t.p()) + "," + std::to_string(t.m()) + "," +
                std::to_string(t.m1()) + "," + std::to_string(t.m2()) + ")";
    for (int i : {1, 2}) {
        const int mi = i == 1 ? t.m1() : t.m2();
        long long closed_total = 0;
        for (Elem a : t.subfield_elements(mi)) {
            ++line.checked;
            const long long closed = count_quadric(t, i, a, Mode::closed);
            closed_total += closed;
            if (count_quadric(t, i, a, Mode::brute) != closed) ++line.failed;
        }
        // partition identity: the closed counts must exhaust the nonzero field
        ++line.checked;
        if (closed_total != static_cast<long long>(t.order()) - 1) ++line.failed;
    }
    s.lines.push_back(line);
    return s;
}

VerifySummary verify_lemma9(const FieldTower& t) {
    VerifySummary s;
    VerifyLine line;
    line.name = "lemma9 (" + std::to_string(t.p()) + "," + std::to_string(t.m()) + "," +
                std::to_string(t.m1()) + "," + std::to_string(t.m2()) + ")";
    if (t.m2() % t.m1() != 0) {
        s.lines.push_back(line);  // inapplicable, zero checks
        return s;
    }
    const long long q2 = static_cast<long long>(t.subfield_order(t.m2()));
    for (Elem a : t.subfield_elements(t.m2())) {
        if (a == 0) continue;
        long long closed_total = 0;
        for (Elem tv : t.subfield_elements(t.m1())) {
            ++line.checked;
            const long long closed = count_subfield_quadric(t, a, tv, Mode::closed);
            closed_total += closed;
            if (count_subfield_quadric(t, a, tv, Mode::brute) != closed) ++line.failed;
        }
        ++line.checked;
        if (closed_total != q2 - 1) ++line.failed;
    }
    s.lines.push_back(line);
    return s;
}

std::vector<std::array<int, 4>> default_verify_towers() {
    return {{3, 3, 1, 1}, {3, 4, 1, 1}, {3, 4, 1, 2}, {3, 6, 2, 1}, {3, 6, 1, 2}, {5, 2, 1, 1}};
}

std::vector<std::array<int, 4>> example_towers() {
    return {{3, 6, 2, 1}, {3, 8, 2, 1}, {3, 5, 1, 1}, {3, 4, 1, 1},
            {3, 6, 1, 2}, {3, 3, 1, 1}, {3, 4, 1, 1}, {3, 4, 1, 2}};
}

std::vector<std::array<int, 4>> dual_survey_towers() {
    return {{3, 4, 1, 1}, {3, 5, 1, 1}, {3, 4, 1, 2}, {5, 4, 1, 1}, {3, 3, 1, 1},
            {5, 3, 1, 1}, {7, 3, 1, 1}, {3, 6, 3, 1}, {3, 6, 2, 1}, {3, 6, 2, 2}};
}

// --- command line -----------------------------------------------------------

namespace {

void print_summary(const VerifySummary& s, std::ostream& out) {
    for (const auto& l : s.lines)
        out << (l.failed == 0 ? "PASS " : "FAIL ") << l.name << ": " << l.checked << " checked, "
            << l.failed << " failed\n";
}

int cmd_report(int p, int m, int m1, int m2, const ReportOptions& opt, const std::string& format,
               const std::string& out_file, const std::string& csv_file, std::ostream& out,
               std::ostream& err) {
    Report r;
    try {
        r = make_report(p, m, m1, m2, opt);
    } catch (const error& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return 2;
    }
    const std::string text = format == "json" ? report_to_json(r) + "\n" : report_to_text(r);
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << text;
    } else {
        out << text;
    }
    if (!csv_file.empty()) {
        std::ofstream f(csv_file);
        weights_to_csv(r, f);
    }
    return weights_match(r) ? 0 : 1;
}

int cmd_verify(const std::string& scope, const std::string& towers_preset, int p_filter, int max_level,
               std::ostream& out, std::ostream& err) {
    std::vector<std::array<int, 4>> towers = default_verify_towers();
    if (towers_preset == "paper-examples") {
        towers = example_towers();
        const auto extra = dual_survey_towers();
        towers.insert(towers.end(), extra.begin(), extra.end());
    }
    if (p_filter > 0 && scope != "lemma4") {
        std::erase_if(towers, [&](const auto& a) { return a[0] != p_filter; });
    }

    VerifySummary s;
    try {
        if (scope == "lemma4" || scope == "all") {
            const std::vector<int> primes =
                p_filter > 0 ? std::vector<int>{p_filter} : std::vector<int>{3, 5, 7};
            s.append(verify_lemma4(primes, max_level));
        }
        if (scope == "lemma5" || scope == "all") s.append(verify_lemma5_default());
        for (const auto& a : towers) {
            const bool want7 = scope == "lemma7" || scope == "all";
            const bool want8 = scope == "lemma8" || scope == "all";
            const bool want9 = scope == "lemma9" || scope == "all";
            if (!want7 && !want8 && !want9) continue;
            const FieldTower t = FieldTower::build(a[0], a[1], a[2], a[3]);
            if (want7) s.append(verify_lemma7(t));
            if (want8) s.append(verify_lemma8(t));
            if (want9) s.append(verify_lemma9(t));
        }
    } catch (const error& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return 2;
    }
    print_summary(s, out);
    return s.ok() ? 0 : 1;
}

int cmd_sweep(const std::vector<int>& ps, int m_max, bool paper_examples, const ReportOptions& base_opt,
              const std::string& format, std::ostream& out, std::ostream& err) {
    std::vector<std::array<int, 4>> towers;
    if (paper_examples) {
        towers = example_towers();
        const auto extra = dual_survey_towers();
        towers.insert(towers.end(), extra.begin(), extra.end());
    } else {
        for (int p : ps)
            for (int m = 1; m <= m_max; ++m)
                for (int m1 = 1; m1 <= m; ++m1) {
                    if (m % m1 != 0) continue;
                    for (int m2 = 1; m2 <= m; ++m2) {
                        if (m % m2 != 0) continue;
                        if (m1 % m2 != 0 && m2 % m1 != 0) continue;
                        long long pairs = 1;
                        for (int i = 0; i < m + m2; ++i) pairs *= p;
                        if (static_cast<std::uint64_t>(pairs) > base_opt.budget.max_pairs) continue;
                        try {
                            if (predicted_length(p, m, m1) >
                                static_cast<long long>(base_opt.budget.max_length))
                                continue;
                        } catch (const error&) {
                            continue;
                        }
                        towers.push_back({p, m, m1, m2});
                    }
                }
    }

    ReportOptions opt = base_opt;
    opt.lemma_checks = false;
    bool all_match = true;
    json arr = json::array();
    for (const auto& a : towers) {
        Report r;
        try {
            r = make_report(a[0], a[1], a[2], a[3], opt);
        } catch (const error& e) {
            err << "invalid parameters for (" << a[0] << "," << a[1] << "," << a[2] << "," << a[3]
                << "): " << e.what() << "\n";
            return 2;
        }
        const bool match = weights_match(r);
        all_match = all_match && match;
        if (format == "json") {
            arr.push_back(json::parse(report_to_json(r)));
        } else {
            out << "(" << r.p << "," << r.m << "," << r.m1 << "," << r.m2 << ")  [" << r.n << ", "
                << r.k << ", " << r.d << "]_" << r.q << "  hyp=" << (r.predicted.hypothesis_ok ? 1 : 0)
                << " match=" << (match ? 1 : 0) << " so=" << (r.self_orthogonal ? 1 : 0)
                << " div=" << r.divisibility << " dual=[" << r.n << ", " << r.n - r.k << ", "
                << r.dual_distance << "] " << to_string(r.bounds.dual_verdict) << "\n";
        }
    }
    if (format == "json") out << arr.dump(2) << "\n";
    return all_match ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"analysis of augmented trace codes over finite-field towers"};
    app.require_subcommand(1);

    int p = 3, m = 1, m1 = 1, m2 = 1;
    std::string format = "text";
    bool no_bruteforce = false;
    std::uint64_t budget = EnumBudget{}.max_pairs;
    std::string out_file, csv_file;

    auto* rep = app.add_subcommand("report", "analyze one tower");
    rep->add_option("--p", p, "odd prime")->required();
    rep->add_option("--m", m, "extension degree")->required();
    rep->add_option("--m1", m1, "first subfield degree");
    rep->add_option("--m2", m2, "alphabet subfield degree");
    rep->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    rep->add_flag("--no-bruteforce", no_bruteforce, "skip the exhaustive weight enumeration");
    rep->add_option("--budget", budget, "max (b, c) pairs for enumeration");
    rep->add_option("--out", out_file, "write the report to a file instead of stdout");
    rep->add_option("--weights-csv", csv_file, "also write the weight distribution as CSV");

    std::string scope = "all", towers = "default";
    int p_filter = 0, max_level = 4;
    auto* ver = app.add_subcommand("verify", "check closed forms against direct summation");
    ver->add_option("--scope", scope, "lemma4, lemma5, lemma7, lemma8, lemma9 or all")
        ->check(CLI::IsMember({"lemma4", "lemma5", "lemma7", "lemma8", "lemma9", "all"}));
    ver->add_option("--towers", towers, "default or paper-examples")
        ->check(CLI::IsMember({"default", "paper-examples"}));
    ver->add_option("--p", p_filter, "restrict to one characteristic");
    ver->add_option("--max-level", max_level, "largest extension degree for the sign law");

    std::vector<int> sweep_ps{3};
    int m_max = 6;
    bool paper_examples = false;
    auto* sw = app.add_subcommand("sweep", "analyze a whole family of towers");
    sw->add_option("--p", sweep_ps, "characteristics to sweep");
    sw->add_option("--m-max", m_max, "largest extension degree");
    sw->add_flag("--paper-examples", paper_examples, "pin the worked examples and the dual survey");
    sw->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sw->add_option("--budget", budget, "max (b, c) pairs per tower");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    ReportOptions opt;
    opt.bruteforce = !no_bruteforce;
    opt.budget.max_pairs = budget;

    if (rep->parsed()) return cmd_report(p, m, m1, m2, opt, format, out_file, csv_file, out, err);
    if (ver->parsed()) return cmd_verify(scope, towers, p_filter, max_level, out, err);
    return cmd_sweep(sweep_ps, m_max, paper_examples, opt, format, out, err);
}

}  // namespace tracecodes
