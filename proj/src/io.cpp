#include "pcfec/io.hpp"

#include <fstream>
#include <iomanip>

namespace pcfec {

void write_ber_csv(std::ostream& out, const RunInfo& info, const std::vector<BerPoint>& points) {
    out << "# kind=" << info.kind << " schema_version=" << kResultSchemaVersion << '\n';
    out << "# seed=" << info.seed << '\n';
    for (const auto& [key, value] : info.config) out << "# " << key << '=' << value << '\n';
    out << "ebn0_db,frames,bits,bit_errors,frame_errors,ber\n";
    for (const auto& p : points) {
        out << std::setprecision(10) << p.ebn0_db << ',' << p.frames << ',' << p.payload_bits << ','
            << p.bit_errors << ',' << p.frame_errors << ',' << std::setprecision(12) << p.ber
            << '\n';
    }
}

nlohmann::json to_json(const BerPoint& p) {
    return {{"ebn0_db", p.ebn0_db},       {"frames", p.frames},
            {"payload_bits", p.payload_bits}, {"bit_errors", p.bit_errors},
            {"frame_errors", p.frame_errors}, {"ber", p.ber},
            {"stop_reason", p.stop_reason}};
}

nlohmann::json to_json(const ThresholdResult& r) {
    nlohmann::json probes = nlohmann::json::array();
    for (const auto& p : r.probes) probes.push_back(to_json(p));
    return {{"target_ber", r.target_ber},   {"lo_db", r.lo_db},
            {"hi_db", r.hi_db},             {"estimate_db", r.estimate_db},
            {"monotone_warning", r.monotone_warning}, {"probes", std::move(probes)}};
}

nlohmann::json make_document(const RunInfo& info, nlohmann::json results) {
    nlohmann::json config = nlohmann::json::object();
    for (const auto& [key, value] : info.config) config[key] = value;
    return {{"schema_version", kResultSchemaVersion},
            {"kind", info.kind},
            {"seed", info.seed},
            {"config", std::move(config)},
            {"results", std::move(results)}};
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << doc.dump(2) << '\n';
}

void write_csv_file(const std::string& path, const RunInfo& info,
                    const std::vector<BerPoint>& points) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_ber_csv(out, info, points);
}

} // namespace pcfec
