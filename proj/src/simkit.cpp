#include "pcfec/simkit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "pcfec/rng.hpp"

namespace pcfec {

namespace {

// Batch size is a fixed constant: the set of simulated frames must not
// depend on the worker count.
constexpr std::int64_t kBatchFrames = 1024;

std::vector<std::uint8_t> random_payload(int bits, std::mt19937_64& rng) {
    std::vector<std::uint8_t> msg(static_cast<std::size_t>(bits));
    std::uint64_t chunk = 0;
    for (int i = 0; i < bits; ++i) {
        if (i % 64 == 0) chunk = rng();
        msg[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((chunk >> (i % 64)) & 1);
    }
    return msg;
}

// Payload-bit errors of one simulated frame (message block at rows/cols
// n-k..n-1); residual erasures count as errors.
std::int64_t simulate_frame(const ProductCode& pc, const DecoderConfig& dec,
                            const ChannelConfig& chan, std::uint64_t frame_seed) {
    const ComponentCode& code = pc.component();
    const int n = pc.n();
    const int k = pc.k();
    const int off = n - k;

    std::mt19937_64 rng = make_engine(frame_seed);
    std::vector<std::uint8_t> msg = chan.all_zero_payload
                                        ? std::vector<std::uint8_t>(static_cast<std::size_t>(k) * k, 0)
                                        : random_payload(k * k, rng);
    const std::vector<std::uint8_t> encoded = pc.encode(msg);
    const SoftFrame soft = transmit(encoded, n, chan, rng);

    DecodeReport report;
    switch (dec.variant) {
        case DecoderVariant::Ibdd:
            report = decode_ibdd(hard_decision(soft), n, code, dec.total_iterations);
            break;
        case DecoderVariant::IterEaed:
            report = decode_iter_eaed(quantize(soft, dec.erasure_threshold), code,
                                      dec.total_iterations, rng);
            break;
        case DecoderVariant::Drsd:
            report = decode_drsd(soft, code, dec, rng);
            break;
        case DecoderVariant::GenieEaed:
            report = decode_genie_eaed(quantize(soft, dec.erasure_threshold), encoded, code,
                                       dec.total_iterations, rng);
            break;
    }

    std::int64_t errors = 0;
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            const Trit v = report.frame.at(off + r, off + c);
            const std::uint8_t want = msg[static_cast<std::size_t>(r) * k + c];
            if (v == Trit::Erased || static_cast<std::uint8_t>(v == Trit::One) != want) ++errors;
        }
    }
    return errors;
}

} // namespace

BerPoint run_ber_point(const ProductCode& pc, const DecoderConfig& dec, const ChannelConfig& chan,
                       const StoppingRule& stop, int workers) {
    BerPoint point;
    point.ebn0_db = chan.ebn0_db;

    std::int64_t done = 0;
    while (done < stop.max_frames) {
        const std::int64_t batch = std::min(kBatchFrames, stop.max_frames - done);
        const std::int64_t first = done;
        const int nthreads = static_cast<int>(std::min<std::int64_t>(std::max(workers, 1), batch));

        if (nthreads <= 1) {
            for (std::int64_t f = first; f < first + batch; ++f) {
                const std::int64_t e = simulate_frame(pc, dec, chan, derive_seed(chan.seed, static_cast<std::uint64_t>(f)));
                point.bit_errors += e;
                point.frame_errors += (e > 0);
            }
        } else {
            std::atomic<std::int64_t> next{first};
            std::vector<std::int64_t> t_bits(static_cast<std::size_t>(nthreads), 0);
            std::vector<std::int64_t> t_frames(static_cast<std::size_t>(nthreads), 0);
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(nthreads));
            for (int w = 0; w < nthreads; ++w) {
                pool.emplace_back([&, w] {
                    for (;;) {
                        const std::int64_t f = next.fetch_add(1);
                        if (f >= first + batch) break;
                        const std::int64_t e =
                            simulate_frame(pc, dec, chan, derive_seed(chan.seed, static_cast<std::uint64_t>(f)));
                        t_bits[static_cast<std::size_t>(w)] += e;
                        t_frames[static_cast<std::size_t>(w)] += (e > 0);
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (int w = 0; w < nthreads; ++w) {
                point.bit_errors += t_bits[static_cast<std::size_t>(w)];
                point.frame_errors += t_frames[static_cast<std::size_t>(w)];
            }
        }

        done += batch;
        if (point.frame_errors >= stop.min_frame_errors) {
            point.stop_reason = "frame_errors";
            break;
        }
    }
    if (point.stop_reason.empty()) point.stop_reason = "max_frames";

    point.frames = done;
    point.payload_bits = done * static_cast<std::int64_t>(pc.k()) * pc.k();
    point.ber = point.payload_bits > 0
                    ? static_cast<double>(point.bit_errors) / static_cast<double>(point.payload_bits)
                    : 0.0;
    return point;
}

ThresholdResult threshold_search(const ProductCode& pc, const DecoderConfig& dec,
                                 const ChannelConfig& chan, double target_ber, double lo_db,
                                 double hi_db, double resolution_db, const StoppingRule& stop,
                                 int workers) {
    if (lo_db >= hi_db) throw BracketError("bracket is empty or reversed");
    ThresholdResult result;
    result.target_ber = target_ber;

    std::uint64_t probe_idx = 0;
    auto probe = [&](double db) {
        ChannelConfig c = chan;
        c.ebn0_db = db;
        c.seed = derive_seed(chan.seed, probe_idx++);
        BerPoint p = run_ber_point(pc, dec, c, stop, workers);
        result.probes.push_back(p);
        return p.ber;
    };

    const double ber_lo = probe(lo_db);
    if (ber_lo < target_ber)
        throw BracketError("BER at the low edge is already below the target");
    const double ber_hi = probe(hi_db);
    if (ber_hi > target_ber)
        throw BracketError("BER at the high edge is above the target");

    double lo = lo_db, hi = hi_db;
    while (hi - lo > resolution_db) {
        const double mid = 0.5 * (lo + hi);
        if (probe(mid) >= target_ber)
            lo = mid;
        else
            hi = mid;
    }
    result.lo_db = lo;
    result.hi_db = hi;
    result.estimate_db = 0.5 * (lo + hi);

    // soft sanity check: BER should fall as Eb/N0 grows
    std::vector<const BerPoint*> sorted;
    for (const auto& p : result.probes) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](const BerPoint* a, const BerPoint* b) { return a->ebn0_db < b->ebn0_db; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i]->ber > sorted[i - 1]->ber) result.monotone_warning = true;

    return result;
}

double uncoded_ebn0_db_for_ber(double target_ber) {
    if (!(target_ber > 0.0) || !(target_ber < 0.5))
        throw DomainError("target BER must lie in (0, 0.5)");
    // invert Q(x) = erfc(x/sqrt(2))/2 by bisection
    double lo = 0.0, hi = 45.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double q = 0.5 * std::erfc(mid / std::sqrt(2.0));
        if (q > target_ber)
            lo = mid;
        else
            hi = mid;
    }
    const double q_inv = 0.5 * (lo + hi);
    return 10.0 * std::log10(q_inv * q_inv / 2.0);
}

double ncg_db(double threshold_ebn0_db, double target_ber) {
    return uncoded_ebn0_db_for_ber(target_ber) - threshold_ebn0_db;
}

} // namespace pcfec
