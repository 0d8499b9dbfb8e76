// Fast built-in invariant suite, runnable from the CLI.
#pragma once

#include <cstdint>
#include <ostream>

namespace pcfec {

struct SelftestOptions {
    std::uint64_t seed = 1;
    // Corrupts a component-code generator before running the checks; the
    // suite must then fail. Exercised by the CLI tests.
    bool inject_generator_fault = false;
};

// Runs field-axiom, bounded-distance, erasure-decoding, and score-register
// checks. Returns the number of failed checks (0 = pass) and writes one
// line per check to `out`.
int run_selftest(std::ostream& out, const SelftestOptions& opts);

} // namespace pcfec
