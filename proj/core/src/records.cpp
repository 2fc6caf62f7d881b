#include "pawn/records.hpp"

#include <chrono>
#include <ctime>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "pawn/errors.hpp"

namespace pawn {

namespace {

using json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

}  // namespace

RecordLine to_record_line(const EnumRecord& r) {
    RecordLine line;
    line.factorization = r.factorization.to_string();
    line.cls = std::string(to_string(r.cls));
    line.delta = r.abundance.get_str();
    line.omega = r.omega;
    line.big_omega = r.big_omega;
    line.digits = r.factorization.digits();
    return line;
}

RecordLine to_record_line(const PwnRecord& r) {
    RecordLine line;
    line.factorization = r.factorization.to_string();
    line.index_sequence = r.index_sequence.to_string();
    line.cls = "abundant";
    line.delta = r.abundance.get_str();
    line.omega = r.factorization.omega();
    line.big_omega = r.factorization.big_omega();
    line.digits = r.digits;
    line.certified = r.certified;
    return line;
}

std::string to_json(const RecordLine& r) {
    json j;
    j["factorization"] = r.factorization;
    if (r.index_sequence) j["index_sequence"] = *r.index_sequence;
    j["class"] = r.cls;
    j["delta"] = r.delta;
    j["omega"] = r.omega;
    j["big_omega"] = r.big_omega;
    j["digits"] = r.digits;
    if (r.certified) j["certified"] = *r.certified;
    return j.dump();
}

RecordLine parse_record_line(std::string_view line) {
    try {
        const json j = json::parse(line);
        RecordLine r;
        r.factorization = j.at("factorization").get<std::string>();
        if (j.contains("index_sequence")) r.index_sequence = j.at("index_sequence").get<std::string>();
        r.cls = j.at("class").get<std::string>();
        r.delta = j.at("delta").get<std::string>();
        r.omega = j.at("omega").get<std::size_t>();
        r.big_omega = j.at("big_omega").get<std::size_t>();
        r.digits = j.at("digits").get<std::size_t>();
        if (j.contains("certified")) r.certified = j.at("certified").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad record line: ") + e.what());
    }
}

std::vector<RecordLine> read_records(std::istream& in) {
    std::vector<RecordLine> out;
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(parse_record_line(line));
    return out;
}

void RecordWriter::write(const RecordLine& r) {
    *out_ << to_json(r) << '\n';
    ++count_;
}

std::string RunManifest::to_json() const {
    json j;
    j["command"] = command;
    json cfg = json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    j["started"] = started;
    j["finished"] = finished;
    json tot = json::object();
    for (const auto& [k, v] : totals) tot[k] = v;
    j["totals"] = tot;
    j["output_path"] = output_path;
    return j.dump(2);
}

RunManifest RunManifest::parse(std::string_view text) {
    try {
        const json j = json::parse(text);
        RunManifest m;
        m.command = j.at("command").get<std::string>();
        for (const auto& [k, v] : j.at("config").items()) m.config.emplace_back(k, v.get<std::string>());
        m.started = j.at("started").get<std::string>();
        m.finished = j.at("finished").get<std::string>();
        for (const auto& [k, v] : j.at("totals").items()) m.totals.emplace_back(k, v.get<std::uint64_t>());
        m.output_path = j.at("output_path").get<std::string>();
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad manifest: ") + e.what());
    }
}

std::optional<std::uint64_t> RunManifest::total(std::string_view key) const {
    for (const auto& [k, v] : totals)
        if (k == key) return v;
    return std::nullopt;
}

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint64_t records_to_csv(std::istream& in, std::ostream& out) {
    out << "factorization,index_sequence,class,delta,omega,big_omega,digits,certified\n";
    std::uint64_t n = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const RecordLine r = parse_record_line(line);
        out << csv_field(r.factorization) << ',' << csv_field(r.index_sequence.value_or("")) << ',' << r.cls << ','
            << r.delta << ',' << r.omega << ',' << r.big_omega << ',' << r.digits << ','
            << (r.certified ? (*r.certified ? "true" : "false") : "") << '\n';
        ++n;
    }
    return n;
}

}  // namespace pawn
