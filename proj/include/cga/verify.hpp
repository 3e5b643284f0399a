#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cga/algebra.hpp"

namespace cga {

struct Failure {
    std::string case_id;
    std::string inputs;
    std::string expected;
    std::string got;
};

// Structured outcome of one verification suite.  Deterministic for a fixed
// (suite, Params, seed): elapsed_ms is always 0 in the serialized stream, wall
// time is reported separately.
struct Report {
    std::string suite;
    Params par;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<Failure> failures;
    std::int64_t elapsed_ms = 0;
    bool pass = true;
};

std::string report_json(const Report& r);

// splitmix64: portable deterministic stream
struct Rng {
    std::uint64_t state = 0;
    explicit Rng(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

Rng trial_rng(std::uint64_t seed, const std::string& suite, int trial);

// random instances: support density 1/2 below the degree bound, coefficients
// uniform mod p^N, exponents uniform in [-p^2, p^2]
Series random_series(const Params& par, Chart chart, Rng& rng);
GroupElt random_group_elt(const Params& par, Rng& rng);

const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);
Report run_suite(const std::string& name, const Params& par, std::uint64_t seed, int trials);

} // namespace cga
