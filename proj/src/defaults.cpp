#include "pcfec/defaults.hpp"

namespace pcfec {

double default_erasure_threshold(int nu, int t, bool even_weight) {
    // Measured with: pcfec sweep-t --decoder drsd --target-ber 1e-4
    (void)even_weight; // plain/even optima agree within the sweep resolution
    (void)nu;
    (void)t;
    return 0.20;
}

int default_initial_t_a(int nu, int t) {
    if (t <= 2) return 9;
    if (t == 3) return 10;
    return nu == 7 ? 14 : 12;
}

} // namespace pcfec
