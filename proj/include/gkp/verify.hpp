#pragma once

// Cross-method verification suites. Every check compares two exact values
// obtained by independent routes; a check passes iff they are equal.

#include "gkp/core.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gkp {

struct CheckResult {
    std::string suite;
    std::string id;
    std::string params;
    long n = 0;
    long k = 0;
    Rational lhs;
    Rational rhs;
    bool pass = false;
    // Recorded but excluded from the exit status.
    bool informational = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    std::size_t passed() const;
    std::size_t failed() const;
    std::size_t informational_failed() const;
    bool ok() const { return failed() == 0; }
    const CheckResult* first_failure() const;

    // Sorted keys, rationals in wire format.
    std::string to_json() const;
    std::string summary() const;
};

struct VerifyOptions {
    // Overrides each suite's default size when set.
    std::optional<long> n_max;
    long trials = 100;
    std::uint64_t seed = 42;
};

// cross, b1, altsum, a2zero, bijection, transition, eulerian, marked, all
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options);

// Deterministic coefficient sampler: integers drawn uniformly from [lo, hi]
// using the fully specified mt19937_64 stream.
class SpecSampler {
public:
    SpecSampler(std::uint64_t seed, std::string_view stream);

    long draw(long lo, long hi);
    long draw_nonzero(long lo, long hi);
    GkpSpec spec(long lo = -3, long hi = 3);

private:
    std::mt19937_64 gen_;
};

}  // namespace gkp
