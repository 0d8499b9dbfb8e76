#include "pcfec/drs.hpp"

#include <string>

namespace pcfec {

DrsRegister::DrsRegister(std::vector<std::uint8_t> initial_scores, int n, int initial_t_a)
    : n_(n), t_a_(initial_t_a), scores_(std::move(initial_scores)) {
    if (static_cast<std::size_t>(n) * n != scores_.size())
        throw DimensionMismatch("score matrix size " + std::to_string(scores_.size()) +
                                " does not match n = " + std::to_string(n));
    for (auto s : scores_)
        if (s > kDrsMax)
            throw UnsupportedParameters("initial score " + std::to_string(int{s}) +
                                        " outside [0, 31]");
}

void DrsRegister::apply(FeedbackKind kind, std::span<const int> positions) {
    switch (kind) {
        case FeedbackKind::Failure:
            return;
        case FeedbackKind::Rejected:
        case FeedbackKind::Accepted:
            for (int p : positions) {
                auto& s = scores_[static_cast<std::size_t>(p)];
                if (s > kDrsMin) --s;
            }
            return;
        case FeedbackKind::AlreadyCodeword:
            for (int p : positions) {
                auto& s = scores_[static_cast<std::size_t>(p)];
                if (s < kDrsMax) ++s;
            }
            return;
    }
}

} // namespace pcfec
