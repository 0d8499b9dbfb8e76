// Monte Carlo BER estimation, noise-threshold binary search, and net
// coding gain arithmetic.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcfec/channel.hpp"
#include "pcfec/decoders.hpp"
#include "pcfec/product.hpp"

namespace pcfec {

struct StoppingRule {
    std::int64_t min_frame_errors = 50;
    std::int64_t max_frames = 1'000'000;
};

struct BerPoint {
    double ebn0_db = 0.0;
    std::int64_t frames = 0;
    std::int64_t payload_bits = 0; // frames * k^2, systematic positions only
    std::int64_t bit_errors = 0;   // residual erasures count as errors
    std::int64_t frame_errors = 0;
    double ber = 0.0;
    std::string stop_reason;       // "frame_errors" or "max_frames"
};

struct ThresholdResult {
    double target_ber = 0.0;
    double lo_db = 0.0;
    double hi_db = 0.0;
    double estimate_db = 0.0; // midpoint of the final bracket
    std::vector<BerPoint> probes;
    bool monotone_warning = false; // probe BERs not monotone in Eb/N0
};

// Simulates frames until the stopping rule fires. Frame f always draws its
// randomness from substream f of chan.seed, so the result is bit-identical
// for any worker count. Frames are dispatched in fixed-size batches and the
// stopping rule is evaluated at batch boundaries.
BerPoint run_ber_point(const ProductCode& pc, const DecoderConfig& dec, const ChannelConfig& chan,
                       const StoppingRule& stop, int workers = 1);

// Bisects Eb/N0 until the bracket is narrower than resolution_db. Requires
// BER(lo) >= target >= BER(hi); throws BracketError otherwise. Probe p uses
// substream p of chan.seed.
ThresholdResult threshold_search(const ProductCode& pc, const DecoderConfig& dec,
                                 const ChannelConfig& chan, double target_ber, double lo_db,
                                 double hi_db, double resolution_db, const StoppingRule& stop,
                                 int workers = 1);

// Eb/N0 (dB) at which uncoded BPSK reaches the target BER:
// Q(sqrt(2 Eb/N0)) = target. Throws DomainError outside (0, 0.5).
double uncoded_ebn0_db_for_ber(double target_ber);

// Net coding gain under the Eb/N0-difference convention: the uncoded
// requirement at the target BER minus the coded threshold. The threshold is
// a caller-supplied value (e.g. an extrapolated waterfall position); no
// extrapolation happens here.
double ncg_db(double threshold_ebn0_db, double target_ber);

} // namespace pcfec
