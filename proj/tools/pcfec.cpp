// pcfec: product-code FEC Monte Carlo simulator.
// Subcommands: ber, threshold, sweep-t, ncg, selftest.
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcfec/defaults.hpp"
#include "pcfec/io.hpp"
#include "pcfec/rng.hpp"
#include "pcfec/selftest.hpp"
#include "pcfec/simkit.hpp"

namespace {

using namespace pcfec;

struct CodeArg {
    int nu = 7;
    int n = 127;
    int t = 2;
    bool even = true;
};

CodeArg parse_code(const std::string& text) {
    CodeArg c;
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3)
        throw CLI::ValidationError("--code", "expected n,t[,even|plain], e.g. 127,2,even");
    c.n = std::stoi(parts[0]);
    c.t = std::stoi(parts[1]);
    c.even = parts.size() < 3 || parts[2] == "even";
    if (parts.size() == 3 && parts[2] != "even" && parts[2] != "plain")
        throw CLI::ValidationError("--code", "third field must be 'even' or 'plain'");
    int nu = 0;
    while ((1 << nu) < c.n + 1) ++nu;
    if ((1 << nu) != c.n + 1)
        throw CLI::ValidationError("--code", "length must be 2^nu - 1");
    c.nu = nu;
    return c;
}

DecoderVariant parse_decoder(const std::string& name) {
    if (name == "ibdd") return DecoderVariant::Ibdd;
    if (name == "eaed") return DecoderVariant::IterEaed;
    if (name == "drsd") return DecoderVariant::Drsd;
    if (name == "genie") return DecoderVariant::GenieEaed;
    throw CLI::ValidationError("--decoder", "unknown decoder '" + name +
                                            "' (ibdd, eaed, drsd, genie)");
}

const char* decoder_name(DecoderVariant v) {
    switch (v) {
        case DecoderVariant::Ibdd: return "ibdd";
        case DecoderVariant::IterEaed: return "eaed";
        case DecoderVariant::Drsd: return "drsd";
        case DecoderVariant::GenieEaed: return "genie";
    }
    return "?";
}

std::vector<double> parse_grid(const std::string& text) {
    // "start:step:stop" inclusive, or a comma-separated list
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        double start = 0, step = 0, stop = 0;
        char c1 = 0, c2 = 0;
        std::stringstream ss(text);
        ss >> start >> c1 >> step >> c2 >> stop;
        if (ss.fail() || c1 != ':' || c2 != ':' || step <= 0)
            throw CLI::ValidationError("--ebn0", "expected start:step:stop with step > 0");
        for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    } else {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) grid.push_back(std::stod(part));
    }
    if (grid.empty()) throw CLI::ValidationError("--ebn0", "empty grid");
    return grid;
}

std::pair<double, double> parse_bracket(const std::string& text) {
    const auto pos = text.find(':');
    if (pos == std::string::npos)
        throw CLI::ValidationError("--bracket", "expected lo:hi in dB");
    return {std::stod(text.substr(0, pos)), std::stod(text.substr(pos + 1))};
}

struct Experiment {
    std::string code_str = "127,2,even";
    std::string decoder_str = "drsd";
    std::vector<std::string> decoder_list;
    int iters = 10;
    int drsd_iters = -1; // -1: preset total - total/5
    double erasure_t = -1.0; // -1: bundled default
    int initial_ta = -1;     // -1: default per code
    std::uint64_t seed = 1;
    int workers = 1;
    std::int64_t frame_errors = 50;
    std::int64_t max_frames = 1'000'000;
    std::string payload = "random";
    std::string out_csv;
    std::string out_json;

    CodeArg code;

    void resolve() {
        code = parse_code(code_str);
        if (erasure_t < 0) erasure_t = default_erasure_threshold(code.nu, code.t, code.even);
        if (initial_ta < 0) initial_ta = default_initial_t_a(code.nu, code.t);
    }

    ProductCode make_product_code() const {
        GaloisField field = GaloisField::with_default_poly(code.nu);
        return ProductCode(ComponentCode(field, code.t, code.even));
    }

    DecoderConfig make_decoder(DecoderVariant v) const {
        DecoderConfig cfg = make_decoder_config(v, iters, erasure_t, initial_ta);
        if (drsd_iters >= 0 && v == DecoderVariant::Drsd) cfg.drsd_iterations = drsd_iters;
        cfg.seed = seed;
        return cfg;
    }

    ChannelConfig make_channel(const ProductCode& pc, double ebn0_db) const {
        ChannelConfig chan;
        chan.ebn0_db = ebn0_db;
        chan.rate = pc.rate();
        chan.erasure_threshold = erasure_t;
        chan.seed = seed;
        chan.all_zero_payload = payload == "zero";
        return chan;
    }

    StoppingRule make_stop() const { return {frame_errors, max_frames}; }

    RunInfo make_run_info(const std::string& kind, const std::string& decoder) const {
        RunInfo info;
        info.kind = kind;
        info.seed = seed;
        info.config = {{"code", code_str},
                       {"decoder", decoder},
                       {"iterations", std::to_string(iters)},
                       {"drsd_iterations", std::to_string(drsd_iters)},
                       {"erasure_threshold", std::to_string(erasure_t)},
                       {"initial_t_a", std::to_string(initial_ta)},
                       {"payload", payload},
                       {"min_frame_errors", std::to_string(frame_errors)},
                       {"max_frames", std::to_string(max_frames)},
                       {"workers", std::to_string(workers)}};
        return info;
    }
};

void add_common_options(CLI::App* cmd, Experiment& exp, bool multi_decoder) {
    cmd->add_option("--code", exp.code_str, "Component code as n,t[,even|plain]")->required();
    if (multi_decoder)
        cmd->add_option("--decoder", exp.decoder_list,
                        "Decoder (ibdd, eaed, drsd, genie); repeat to compare")
            ->required();
    else
        cmd->add_option("--decoder", exp.decoder_str, "Decoder (ibdd, eaed, drsd, genie)")
            ->required();
    cmd->add_option("--iters", exp.iters, "Total decoding iterations");
    cmd->add_option("--drsd-iters", exp.drsd_iters,
                    "Scored iterations before the plain trailing phase (default: preset)");
    cmd->add_option("--T", exp.erasure_t, "Erasure threshold (default: bundled per-code value)");
    cmd->add_option("--ta", exp.initial_ta, "Initial anchor threshold (default: per-code value)");
    cmd->add_option("--seed", exp.seed, "Master seed");
    cmd->add_option("--workers", exp.workers, "Worker threads (results are worker-independent)");
    cmd->add_option("--frame-errors", exp.frame_errors, "Stop after this many frame errors");
    cmd->add_option("--max-frames", exp.max_frames, "Frame budget per point");
    cmd->add_option("--payload", exp.payload, "Payload source: random or zero")
        ->check(CLI::IsMember({"random", "zero"}));
    cmd->add_option("--out", exp.out_csv, "CSV output path");
    cmd->add_option("--json", exp.out_json, "JSON output path");
}

int cmd_ber(Experiment& exp, const std::string& grid_str) {
    exp.resolve();
    const ProductCode pc = exp.make_product_code();
    const DecoderVariant variant = parse_decoder(exp.decoder_str);
    const DecoderConfig dec = exp.make_decoder(variant);
    const std::vector<double> grid = parse_grid(grid_str);

    std::vector<BerPoint> points;
    std::cout << "ebn0_db      frames   bit_errors  frame_errors          ber\n";
    for (double ebn0 : grid) {
        const ChannelConfig chan = exp.make_channel(pc, ebn0);
        BerPoint p = run_ber_point(pc, dec, chan, exp.make_stop(), exp.workers);
        points.push_back(p);
        std::cout << std::fixed << std::setprecision(3) << std::setw(7) << p.ebn0_db << ' '
                  << std::setw(11) << p.frames << ' ' << std::setw(12) << p.bit_errors << ' '
                  << std::setw(13) << p.frame_errors << ' ' << std::scientific
                  << std::setprecision(4) << std::setw(12) << p.ber << '\n';
    }

    RunInfo info = exp.make_run_info("ber", exp.decoder_str);
    info.config.emplace_back("ebn0_grid", grid_str);
    if (!exp.out_csv.empty()) write_csv_file(exp.out_csv, info, points);
    if (!exp.out_json.empty()) {
        nlohmann::json results = nlohmann::json::array();
        for (const auto& p : points) results.push_back(to_json(p));
        write_json_file(exp.out_json, make_document(info, std::move(results)));
    }
    return 0;
}

int cmd_threshold(Experiment& exp, double target_ber, const std::string& bracket_str,
                  double resolution, const std::vector<double>& ncg_at, double ncg_target) {
    exp.resolve();
    const ProductCode pc = exp.make_product_code();
    const auto [lo, hi] = parse_bracket(bracket_str);

    struct Entry {
        std::string name;
        ThresholdResult result;
    };
    std::vector<Entry> entries;
    for (const auto& name : exp.decoder_list) {
        const DecoderVariant variant = parse_decoder(name);
        const DecoderConfig dec = exp.make_decoder(variant);
        const ChannelConfig chan = exp.make_channel(pc, lo);
        ThresholdResult r = threshold_search(pc, dec, chan, target_ber, lo, hi, resolution,
                                             exp.make_stop(), exp.workers);
        entries.push_back({name, std::move(r)});
    }

    std::cout << "decoder     threshold_db   gain_vs_" << entries.front().name << "_db\n";
    for (const auto& e : entries) {
        const double gain = entries.front().result.estimate_db - e.result.estimate_db;
        std::cout << std::left << std::setw(10) << e.name << std::right << std::fixed
                  << std::setprecision(3) << std::setw(13) << e.result.estimate_db
                  << std::setw(16) << gain;
        if (e.result.monotone_warning) std::cout << "   (non-monotone probes)";
        std::cout << '\n';
    }
    for (double db : ncg_at)
        std::cout << "ncg(" << std::fixed << std::setprecision(2) << db << " dB @ "
                  << std::scientific << std::setprecision(0) << ncg_target
                  << ") = " << std::fixed << std::setprecision(3) << ncg_db(db, ncg_target)
                  << " dB\n";

    if (!exp.out_json.empty()) {
        RunInfo info = exp.make_run_info("threshold", entries.front().name);
        info.config.emplace_back("target_ber", std::to_string(target_ber));
        info.config.emplace_back("bracket", bracket_str);
        info.config.emplace_back("resolution_db", std::to_string(resolution));
        nlohmann::json results = nlohmann::json::array();
        for (const auto& e : entries) {
            nlohmann::json j = to_json(e.result);
            j["decoder"] = e.name;
            results.push_back(std::move(j));
        }
        write_json_file(exp.out_json, make_document(info, std::move(results)));
    }
    return 0;
}

int cmd_sweep_t(Experiment& exp, const std::string& values_str, double target_ber,
                const std::string& bracket_str, double resolution) {
    exp.resolve();
    const ProductCode pc = exp.make_product_code();
    const auto [lo, hi] = parse_bracket(bracket_str);
    const DecoderVariant variant = parse_decoder(exp.decoder_str);
    const double base_t = exp.erasure_t;

    // values: absolute numbers, or multipliers of the bundled default ("0.9x")
    std::vector<double> ts;
    std::stringstream ss(values_str);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (!part.empty() && part.back() == 'x')
            ts.push_back(base_t * std::stod(part.substr(0, part.size() - 1)));
        else
            ts.push_back(std::stod(part));
    }

    std::cout << "T           threshold_db\n";
    std::vector<std::pair<double, ThresholdResult>> rows;
    for (double t_val : ts) {
        Experiment e = exp;
        e.erasure_t = t_val;
        const DecoderConfig dec = e.make_decoder(variant);
        const ChannelConfig chan = e.make_channel(pc, lo);
        ThresholdResult r = threshold_search(pc, dec, chan, target_ber, lo, hi, resolution,
                                             e.make_stop(), e.workers);
        std::cout << std::fixed << std::setprecision(4) << std::setw(7) << t_val
                  << std::setprecision(3) << std::setw(16) << r.estimate_db << '\n';
        rows.emplace_back(t_val, std::move(r));
    }

    if (!exp.out_json.empty()) {
        RunInfo info = exp.make_run_info("sweep-t", exp.decoder_str);
        info.config.emplace_back("target_ber", std::to_string(target_ber));
        info.config.emplace_back("bracket", bracket_str);
        info.config.emplace_back("values", values_str);
        nlohmann::json results = nlohmann::json::array();
        for (auto& [t_val, r] : rows) {
            nlohmann::json j = to_json(r);
            j["erasure_threshold"] = t_val;
            results.push_back(std::move(j));
        }
        write_json_file(exp.out_json, make_document(info, std::move(results)));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Product-code FEC Monte Carlo simulator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file");

    Experiment ber_exp, thr_exp, sweep_exp;
    std::string grid_str = "3.0:0.25:5.0";
    double target_ber = 1e-4, resolution = 0.02, ncg_target = 1e-15, ncg_threshold_db = 0.0;
    std::string bracket_str = "2.5:6.0", sweep_values = "0.9x,1.0x,1.1x";
    std::vector<double> ncg_at;
    std::uint64_t selftest_seed = 1;
    bool inject_fault = false;

    CLI::App* ber = app.add_subcommand("ber", "BER over an Eb/N0 grid");
    add_common_options(ber, ber_exp, false);
    ber->add_option("--ebn0", grid_str, "Eb/N0 grid in dB: start:step:stop or list");

    CLI::App* thr = app.add_subcommand("threshold", "Noise threshold at a target BER");
    add_common_options(thr, thr_exp, true);
    thr->add_option("--target-ber", target_ber, "Target BER");
    thr->add_option("--bracket", bracket_str, "Search bracket lo:hi in dB");
    thr->add_option("--resolution", resolution, "Bracket width at termination, dB");
    thr->add_option("--ncg-at", ncg_at, "Report NCG for these extrapolated thresholds (dB)");
    thr->add_option("--ncg-target", ncg_target, "Reference BER for NCG");

    CLI::App* sweep = app.add_subcommand("sweep-t", "Threshold vs erasure threshold T");
    sweep->alias("sweep-T");
    add_common_options(sweep, sweep_exp, false);
    sweep->add_option("--values", sweep_values, "T values; suffix x scales the bundled default");
    sweep->add_option("--target-ber", target_ber, "Target BER");
    sweep->add_option("--bracket", bracket_str, "Search bracket lo:hi in dB");
    sweep->add_option("--resolution", resolution, "Bracket width at termination, dB");

    CLI::App* ncg = app.add_subcommand("ncg", "Net coding gain for a given threshold");
    ncg->add_option("--threshold-db", ncg_threshold_db, "Coded threshold Eb/N0 in dB")->required();
    ncg->add_option("--target-ber", ncg_target, "Reference BER");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the fast invariant suite");
    selftest->add_option("--seed", selftest_seed, "Suite seed");
    selftest->add_flag("--inject-fault", inject_fault, "Corrupt a generator (must fail)")
        ->group(""); // hidden test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (ber->parsed()) return cmd_ber(ber_exp, grid_str);
        if (thr->parsed())
            return cmd_threshold(thr_exp, target_ber, bracket_str, resolution, ncg_at, ncg_target);
        if (sweep->parsed())
            return cmd_sweep_t(sweep_exp, sweep_values, target_ber, bracket_str, resolution);
        if (ncg->parsed()) {
            std::cout << std::fixed << std::setprecision(4) << ncg_db(ncg_threshold_db, ncg_target)
                      << '\n';
            return 0;
        }
        if (selftest->parsed()) {
            SelftestOptions opts;
            opts.seed = selftest_seed;
            opts.inject_generator_fault = inject_fault;
            return run_selftest(std::cout, opts) == 0 ? 0 : 3;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
