// Bundled per-code defaults: tuned erasure thresholds and initial anchor
// thresholds.
#pragma once

namespace pcfec {

// Erasure threshold T tuned offline with the `sweep-t` tool at the
// target-BER 1e-4 operating point. Codes without a measured entry fall back
// to a nearby code's value.
double default_erasure_threshold(int nu, int t, bool even_weight);

// Initial anchor threshold: 9 for t=2, 10 for t=3, 12 for t=4 (14 for the
// n=127, t=4 codes).
int default_initial_t_a(int nu, int t);

} // namespace pcfec
