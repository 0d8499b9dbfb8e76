#include "pcfec/decoders.hpp"

#include <string>

namespace pcfec {

namespace {

// Words are visited rows first, then columns; one full iteration covers
// all 2n of them. Flat positions index the row-major frame.
inline int flat_pos(bool is_row, int word_idx, int p, int n) {
    return is_row ? word_idx * n + p : p * n + word_idx;
}

void word_positions(std::vector<int>& out, bool is_row, int word_idx, int n) {
    out.clear();
    for (int p = 0; p < n; ++p) out.push_back(flat_pos(is_row, word_idx, p, n));
}

void write_word(TernaryFrame& frame, bool is_row, int idx, const BitWord& cw) {
    const int n = frame.n;
    if (is_row) {
        for (int p = 0; p < n; ++p)
            frame.at(idx, p) = cw[static_cast<std::size_t>(p)] ? Trit::One : Trit::Zero;
    } else {
        for (int p = 0; p < n; ++p)
            frame.at(p, idx) = cw[static_cast<std::size_t>(p)] ? Trit::One : Trit::Zero;
    }
}

// Shared by the plain iterative decoder, the genie benchmark, and the
// trailing phase of the scored decoder. With `truth` set, decoded words
// that differ from the transmitted row/column are discarded.
void run_eaed_phase(TernaryFrame& frame, const ComponentCode& code, int iterations,
                    std::mt19937_64& rng, const std::vector<std::uint8_t>* truth,
                    DecodeReport& report) {
    const int n = frame.n;
    for (int it = 0; it < iterations; ++it) {
        IterationStats st;
        bool changed = false;
        for (int w = 0; w < 2 * n; ++w) {
            const bool is_row = w < n;
            const int idx = is_row ? w : w - n;
            TernaryWord y = is_row ? frame.row(idx) : frame.col(idx);
            EaedResult res = eaed_decode(code, y, rng);
            if (res.tag != EaedTag::Decoded) {
                ++st.failed;
                continue;
            }
            if (truth != nullptr) {
                bool match = true;
                for (int p = 0; p < n && match; ++p)
                    match = res.codeword[static_cast<std::size_t>(p)] ==
                            (*truth)[static_cast<std::size_t>(flat_pos(is_row, idx, p, n))];
                if (!match) {
                    ++st.rejected;
                    continue;
                }
            }
            if (!res.changed) {
                ++st.clean;
                continue;
            }
            write_word(frame, is_row, idx, res.codeword);
            ++st.accepted;
            changed = true;
        }
        report.per_iteration.push_back(st);
        ++report.iterations_used;
        if (st.clean == 2 * n) {
            report.converged = true;
            break;
        }
        // Without erasures every decode above was deterministic, so an
        // unchanged frame is a fixed point; with erasures a later random
        // fill may still succeed.
        if (!changed && frame.erasures() == 0) break;
    }
}

} // namespace

DecoderConfig make_decoder_config(DecoderVariant variant, int total_iterations,
                                  double erasure_threshold, int initial_t_a) {
    DecoderConfig cfg;
    cfg.variant = variant;
    cfg.total_iterations = total_iterations;
    cfg.drsd_iterations =
        variant == DecoderVariant::Drsd ? total_iterations - total_iterations / 5 : total_iterations;
    cfg.initial_t_a = initial_t_a;
    cfg.erasure_threshold = erasure_threshold;
    return cfg;
}

DecodeReport decode_ibdd(const std::vector<std::uint8_t>& frame, int n, const ComponentCode& code,
                         int iterations) {
    std::vector<std::uint8_t> cells = frame;
    DecodeReport report;
    BitWord word(static_cast<std::size_t>(n));
    for (int it = 0; it < iterations; ++it) {
        IterationStats st;
        bool changed = false;
        for (int w = 0; w < 2 * n; ++w) {
            const bool is_row = w < n;
            const int idx = is_row ? w : w - n;
            for (int p = 0; p < n; ++p)
                word[static_cast<std::size_t>(p)] = cells[static_cast<std::size_t>(flat_pos(is_row, idx, p, n))];
            BddResult r = code.bdd(word);
            if (!r.success) {
                ++st.failed;
            } else if (r.flips.empty()) {
                ++st.clean;
            } else {
                for (int p : r.flips) cells[static_cast<std::size_t>(flat_pos(is_row, idx, p, n))] ^= 1;
                ++st.accepted;
                changed = true;
            }
        }
        report.per_iteration.push_back(st);
        ++report.iterations_used;
        if (!changed) {
            report.converged = st.clean == 2 * n;
            break;
        }
    }
    if (!report.converged && !report.per_iteration.empty())
        report.converged = report.per_iteration.back().clean == 2 * n;
    report.frame = to_ternary_frame(cells, n);
    return report;
}

DecodeReport decode_iter_eaed(TernaryFrame frame, const ComponentCode& code, int iterations,
                              std::mt19937_64& rng) {
    DecodeReport report;
    run_eaed_phase(frame, code, iterations, rng, nullptr, report);
    report.frame = std::move(frame);
    return report;
}

DecodeReport decode_genie_eaed(TernaryFrame frame, const std::vector<std::uint8_t>& truth,
                               const ComponentCode& code, int iterations, std::mt19937_64& rng) {
    if (truth.size() != frame.cells.size())
        throw DimensionMismatch("truth frame size does not match received frame");
    DecodeReport report;
    run_eaed_phase(frame, code, iterations, rng, &truth, report);
    report.frame = std::move(frame);
    return report;
}

DecodeReport decode_drsd(const SoftFrame& soft, const ComponentCode& code,
                         const DecoderConfig& cfg, std::mt19937_64& rng) {
    if (cfg.variant != DecoderVariant::Drsd)
        throw ConfigMismatch("decode_drsd called with a non-DRSD config");
    if (cfg.drsd_iterations < 0 || cfg.drsd_iterations > cfg.total_iterations)
        throw ConfigMismatch("scored iterations " + std::to_string(cfg.drsd_iterations) +
                             " exceed total " + std::to_string(cfg.total_iterations));
    const int n = soft.n;
    DrsRegister reg(init_drs(soft), n, cfg.initial_t_a);
    TernaryFrame frame = quantize(soft, cfg.erasure_threshold);
    DecodeReport report;
    std::vector<int> scratch;
    scratch.reserve(static_cast<std::size_t>(n));

    for (int it = 1; it <= cfg.drsd_iterations; ++it) {
        IterationStats st;
        for (int w = 0; w < 2 * n; ++w) {
            const bool is_row = w < n;
            const int idx = is_row ? w : w - n;
            TernaryWord y = is_row ? frame.row(idx) : frame.col(idx);
            EaedResult res = eaed_decode(code, y, rng);
            if (res.tag != EaedTag::Decoded) {
                ++st.failed; // failure changes neither the word nor the register
                continue;
            }
            if (!res.changed) {
                word_positions(scratch, is_row, idx, n);
                reg.apply(FeedbackKind::AlreadyCodeword, scratch);
                ++st.clean;
                continue;
            }
            // Anchors are read live: updates from earlier words in this
            // pass are already visible here.
            scratch.clear();
            for (int p : res.committed_flips) {
                const int fp = flat_pos(is_row, idx, p, n);
                if (reg.is_anchor(fp)) scratch.push_back(fp);
            }
            if (!scratch.empty()) {
                reg.apply(FeedbackKind::Rejected, scratch);
                ++st.rejected; // decision discarded, frame untouched
                continue;
            }
            write_word(frame, is_row, idx, res.codeword);
            scratch.clear();
            for (int p : res.committed_flips) scratch.push_back(flat_pos(is_row, idx, p, n));
            reg.apply(FeedbackKind::Accepted, scratch);
            ++st.accepted;
        }
        reg.bump_t_a(it);
        report.per_iteration.push_back(st);
        ++report.iterations_used;
        if (st.clean == 2 * n) {
            report.converged = true; // frame is a product codeword already
            break;
        }
    }

    const int trailing = cfg.total_iterations - cfg.drsd_iterations;
    if (!report.converged && trailing > 0)
        run_eaed_phase(frame, code, trailing, rng, nullptr, report);

    report.final_scores = reg.scores();
    report.final_t_a = reg.t_a();
    report.frame = std::move(frame);
    return report;
}

} // namespace pcfec
