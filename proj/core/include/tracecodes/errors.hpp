#pragma once

#include <stdexcept>
#include <string>

namespace tracecodes {

// Every precondition violation in the library maps to one of these codes so
// callers (and the CLI) can react without string-matching.
enum class errc {
    not_odd_prime,
    not_divisor,
    reducible_modulus,
    division_by_zero,
    not_in_subfield,
    mixed_primes,
    degenerate_quadratic,
    incomparable_levels,
    zero_denominator,
    budget_exceeded,
    alphabet_too_small,
    group_erased,
    zero_code,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace tracecodes
