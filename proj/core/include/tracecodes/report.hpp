#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "tracecodes/bounds.hpp"
#include "tracecodes/charsums.hpp"
#include "tracecodes/codes.hpp"
#include "tracecodes/theory.hpp"

namespace tracecodes {

struct LemmaCheck {
    std::string name;
    long long checked = 0;
    long long mismatches = 0;
    bool operator==(const LemmaCheck&) const = default;
};

// Everything the CLI reports about one tower.  Match flags are never stored;
// weights_match() recomputes them from the embedded data.
struct Report {
    int schema = 1;
    int p = 0, m = 0, m1 = 0, m2 = 0;
    long long n = 0, k = 0, d = 0, q = 0;
    bool bruteforce_ran = false;
    long long collapse = 1;
    std::vector<SpectrumRow> weights_brute;  // nonzero weights only
    PredictedSpectrum predicted;
    long long divisibility = 0;
    bool self_orthogonal = false;
    int locality_r = 0;     // 0 when not applicable (length < 3)
    int dual_distance = 0;  // 4 means "> 3"
    BoundReport bounds;
    std::vector<LemmaCheck> lemmas;
    std::string omega_reading = "verified";  // closed-form variant used for lemma7
    double seconds = 0.0;

    bool operator==(const Report&) const = default;
};

struct ReportOptions {
    bool bruteforce = true;
    EnumBudget budget;
    bool lemma_checks = true;
    OmegaReading reading = OmegaReading::verified;
};

Report make_report(int p, int m, int m1, int m2, const ReportOptions& opt = {});

// Recomputed match flag: measured length/dimension/distribution agree with
// the closed forms wherever a comparison is defined (the distribution and
// dimension are only compared under the case's dimension hypothesis).
bool weights_match(const Report& r);

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);
void weights_to_csv(const Report& r, std::ostream& out);  // weight,frequency

// --- verification drivers -------------------------------------------------

struct VerifyLine {
    std::string name;
    long long checked = 0;
    long long failed = 0;
};

struct VerifySummary {
    std::vector<VerifyLine> lines;
    bool ok() const;
    void append(const VerifySummary& other);
};

// Gauss-sum sign law through the complex bridge, 1e-6 relative tolerance.
VerifySummary verify_lemma4(const std::vector<int>& primes, int max_level, std::uint64_t max_size = 2401);

// Weil sums: term-by-term vs closed form, exhaustive or sampled coefficients.
VerifySummary verify_lemma5(const FieldTower& t, bool exhaustive, int samples, unsigned seed);
VerifySummary verify_lemma5_default();

VerifySummary verify_lemma7(const FieldTower& t, OmegaReading reading = OmegaReading::verified);
VerifySummary verify_lemma8(const FieldTower& t);
VerifySummary verify_lemma9(const FieldTower& t);

// The tower list the verify subcommand sweeps by default.
std::vector<std::array<int, 4>> default_verify_towers();

// Preset behind `sweep --paper-examples`: the eight worked examples, then the
// ten dual-parameter survey rows.
std::vector<std::array<int, 4>> example_towers();
std::vector<std::array<int, 4>> dual_survey_towers();

// Full command-line front end (subcommands: report, verify, sweep).
// Returns the process exit code: 0 success, 1 failed verification or
// mismatch, 2 invalid parameters.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tracecodes
