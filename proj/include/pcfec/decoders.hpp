// Iterative product decoders: conventional iBDD, plain iterative
// error-and-erasure decoding, the reliability-score decoder with anchor
// based miscorrection rejection, and a genie-aided benchmark that discards
// every miscorrection.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pcfec/channel.hpp"
#include "pcfec/drs.hpp"
#include "pcfec/eaed.hpp"
#include "pcfec/product.hpp"

namespace pcfec {

enum class DecoderVariant { Ibdd, IterEaed, Drsd, GenieEaed };

struct DecoderConfig {
    DecoderVariant variant = DecoderVariant::Drsd;
    int total_iterations = 10;
    int drsd_iterations = 8;        // leading scored iterations (Drsd only)
    int initial_t_a = 9;
    double erasure_threshold = 0.0; // T used to quantize the soft frame
    std::uint64_t seed = 0;
};

// Schedule presets: the scored phase takes four fifths of the budget
// (10 -> 8+2, 20 -> 16+4).
DecoderConfig make_decoder_config(DecoderVariant variant, int total_iterations,
                                  double erasure_threshold, int initial_t_a);

struct IterationStats {
    int accepted = 0; // decoding decisions written back
    int rejected = 0; // decisions discarded (anchor conflict / genie)
    int failed = 0;   // no decode attempt succeeded
    int clean = 0;    // word was already a codeword
    int total() const { return accepted + rejected + failed + clean; }
};

struct DecodeReport {
    TernaryFrame frame;                       // final state, may hold residual erasures
    int iterations_used = 0;
    std::vector<IterationStats> per_iteration;
    bool converged = false;                   // every row/column a clean codeword
    std::vector<std::uint8_t> final_scores;   // register state (scored decoder only)
    int final_t_a = 0;

    // Hard projection; residual erasures emit as 0 (and count as bit errors
    // in BER accounting).
    std::vector<std::uint8_t> hard() const { return hard_frame(frame); }
};

// Conventional iterative bounded-distance decoding on a hard-decision
// frame: full row passes alternating with column passes, every success
// accepted. Stops early once a full iteration changes nothing.
DecodeReport decode_ibdd(const std::vector<std::uint8_t>& frame, int n, const ComponentCode& code,
                         int iterations);

// Iterative EaED without the score register; every decoded word is
// accepted. Also serves as the trailing phase of the scored decoder.
DecodeReport decode_iter_eaed(TernaryFrame frame, const ComponentCode& code, int iterations,
                              std::mt19937_64& rng);

// Like decode_iter_eaed, but any decoded word that differs from the
// transmitted row/column is discarded. Benchmark only.
DecodeReport decode_genie_eaed(TernaryFrame frame, const std::vector<std::uint8_t>& truth,
                               const ComponentCode& code, int iterations, std::mt19937_64& rng);

// The proposed decoder. Two initialization paths: score register from the
// soft magnitudes, working frame from ternary quantization at cfg's T.
// Scored iterations protect anchor bits (score > T_a) from flips, discard
// conflicting decisions, and update scores per decision outcome; T_a rises
// every five iterations. The remaining iterations run plain EaED.
DecodeReport decode_drsd(const SoftFrame& soft, const ComponentCode& code,
                         const DecoderConfig& cfg, std::mt19937_64& rng);

} // namespace pcfec
