// Per-bit dynamic reliability scores: 5-bit saturating counters, anchor
// classification against a threshold, and the threshold schedule.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pcfec/errors.hpp"

namespace pcfec {

inline constexpr int kDrsMin = 0;
inline constexpr int kDrsMax = 31;

enum class FeedbackKind { Rejected, Accepted, AlreadyCodeword, Failure };

// One decoding decision's effect on the register. Positions are flat
// row-major indices into the frame and must be distinct within one event
// (flip sets and word position lists are distinct by construction).
//  Rejected        -> the conflicting anchor positions, each decremented
//  Accepted        -> the flipped positions, each decremented
//  AlreadyCodeword -> every position of the clean word, each incremented
//  Failure         -> positions ignored, no change
struct DecisionFeedback {
    FeedbackKind kind = FeedbackKind::Failure;
    std::vector<int> positions;
};

class DrsRegister {
public:
    DrsRegister(std::vector<std::uint8_t> initial_scores, int n, int initial_t_a);

    int n() const { return n_; }
    int t_a() const { return t_a_; }
    std::uint8_t score(int flat) const { return scores_[static_cast<std::size_t>(flat)]; }
    std::uint8_t score(int i, int j) const { return scores_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<std::uint8_t>& scores() const { return scores_; }

    // Anchor predicate is a strict inequality: score > T_a.
    bool is_anchor(int flat) const { return scores_[static_cast<std::size_t>(flat)] > t_a_; }

    void apply(FeedbackKind kind, std::span<const int> positions);
    void apply_decision_feedback(const DecisionFeedback& event) {
        apply(event.kind, event.positions);
    }

    // T_a grows by one after every fifth completed iteration.
    void bump_t_a(int iteration_index) {
        if (iteration_index >= 1 && iteration_index % 5 == 0) ++t_a_;
    }

private:
    int n_;
    int t_a_;
    std::vector<std::uint8_t> scores_;
};

} // namespace pcfec
