#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pawn/enumerate.hpp"
#include "pawn/weird.hpp"

namespace pawn {

/// One JSON-lines record as stored on disk. Big values are decimal strings.
struct RecordLine {
    std::string factorization;
    std::optional<std::string> index_sequence;
    std::string cls;
    std::string delta;
    std::size_t omega = 0;
    std::size_t big_omega = 0;
    std::size_t digits = 0;
    std::optional<bool> certified;

    friend bool operator==(const RecordLine&, const RecordLine&) = default;
};

RecordLine to_record_line(const EnumRecord& r);
RecordLine to_record_line(const PwnRecord& r);

std::string to_json(const RecordLine& r);

/// ParseError on malformed input or missing fields.
RecordLine parse_record_line(std::string_view line);

/// Every non-empty line of `in`.
std::vector<RecordLine> read_records(std::istream& in);

/// Writes one record per line and counts them.
class RecordWriter {
public:
    explicit RecordWriter(std::ostream& out) : out_(&out) {}

    void write(const RecordLine& r);
    void write(const EnumRecord& r) { write(to_record_line(r)); }
    void write(const PwnRecord& r) { write(to_record_line(r)); }

    std::uint64_t count() const { return count_; }

private:
    std::ostream* out_;
    std::uint64_t count_ = 0;
};

struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::string started;
    std::string finished;
    std::vector<std::pair<std::string, std::uint64_t>> totals;
    std::string output_path;

    std::string to_json() const;
    static RunManifest parse(std::string_view text);

    std::optional<std::uint64_t> total(std::string_view key) const;
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Converts a JSON-lines record stream to CSV with a header row.
/// Returns the number of records converted.
std::uint64_t records_to_csv(std::istream& in, std::ostream& out);

}  // namespace pawn
