// BI-AWGN transmission, ternary quantization with erasure threshold T, and
// the reliability-score initialization map from soft channel outputs.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pcfec/product.hpp"

namespace pcfec {

struct ChannelConfig {
    double ebn0_db = 4.0;
    double rate = 1.0;              // product-code rate r = k^2/n^2
    double erasure_threshold = 0.0; // T
    std::uint64_t seed = 0;         // master seed for simulation substreams
    bool all_zero_payload = false;  // default simulates random payloads

    // sigma^2 = (2 r Eb/N0)^-1 with Eb/N0 in linear scale
    double sigma2() const;
};

struct SoftFrame {
    int n = 0;
    std::vector<double> values; // row-major

    SoftFrame() = default;
    explicit SoftFrame(int size) : n(size), values(static_cast<std::size_t>(size) * size, 0.0) {}
};

// y_i = (-1)^x_i + n_i, bit 0 mapped to +1, noise variance cfg.sigma2().
SoftFrame transmit(const std::vector<std::uint8_t>& frame, int n, const ChannelConfig& cfg,
                   std::mt19937_64& rng);

// |y| <= T is declared an erasure (closed interval); otherwise the usual
// hard-decision rule: y > T -> 0, y < -T -> 1.
TernaryFrame quantize(const SoftFrame& soft, double threshold);

// Plain hard decision (y < 0 -> 1), ties to 0.
std::vector<std::uint8_t> hard_decision(const SoftFrame& soft);

// Initial reliability scores: the n^2 magnitudes |y_i| are sorted ascending
// and split into 16 groups of ceil(n^2/16) entries (the last group may be
// smaller); group g receives score 9 + g, so the least reliable bits start
// at 9 and the most reliable at 24. Ties are broken by position index.
std::vector<std::uint8_t> init_drs(const SoftFrame& soft);

} // namespace pcfec
