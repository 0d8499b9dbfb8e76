#include "pcfec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pcfec {

double ChannelConfig::sigma2() const {
    return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

SoftFrame transmit(const std::vector<std::uint8_t>& frame, int n, const ChannelConfig& cfg,
                   std::mt19937_64& rng) {
    SoftFrame soft(n);
    std::normal_distribution<double> noise(0.0, std::sqrt(cfg.sigma2()));
    for (std::size_t i = 0; i < soft.values.size(); ++i)
        soft.values[i] = (frame[i] ? -1.0 : 1.0) + noise(rng);
    return soft;
}

TernaryFrame quantize(const SoftFrame& soft, double threshold) {
    TernaryFrame f(soft.n);
    for (std::size_t i = 0; i < soft.values.size(); ++i) {
        const double v = soft.values[i];
        if (std::abs(v) <= threshold)
            f.cells[i] = Trit::Erased;
        else
            f.cells[i] = (v < 0.0) ? Trit::One : Trit::Zero;
    }
    return f;
}

std::vector<std::uint8_t> hard_decision(const SoftFrame& soft) {
    std::vector<std::uint8_t> bits(soft.values.size(), 0);
    for (std::size_t i = 0; i < soft.values.size(); ++i) bits[i] = soft.values[i] < 0.0 ? 1 : 0;
    return bits;
}

std::vector<std::uint8_t> init_drs(const SoftFrame& soft) {
    const std::size_t total = soft.values.size();
    std::vector<std::uint32_t> order(total);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::abs(soft.values[a]) < std::abs(soft.values[b]);
    });
    const std::size_t group_size = (total + 15) / 16;
    std::vector<std::uint8_t> scores(total, 0);
    for (std::size_t rank = 0; rank < total; ++rank)
        scores[order[rank]] = static_cast<std::uint8_t>(9 + rank / group_size);
    return scores;
}

} // namespace pcfec
