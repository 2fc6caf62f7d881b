#include <gtest/gtest.h>

#include <pawn/errors.hpp>
#include <pawn/records.hpp>

#include <regex>
#include <sstream>

using pawn::Factorization;
using pawn::RecordLine;

TEST(Records, EnumRecordLine) {
    pawn::EnumRecord r;
    r.factorization = Factorization::parse("2^2*5");
    r.abundance = 2;
    r.omega = 2;
    r.big_omega = 3;
    const auto line = pawn::to_record_line(r);
    EXPECT_EQ(pawn::to_json(line),
              R"({"factorization":"2^2*5","class":"abundant","delta":"2","omega":2,"big_omega":3,"digits":2})");
    EXPECT_EQ(pawn::parse_record_line(pawn::to_json(line)), line);
}

TEST(Records, PwnRecordLine) {
    const auto r = pawn::make_pwn_record(Factorization::parse("2^2*13*17*443*97919*563915507"));
    const auto line = pawn::to_record_line(r);
    EXPECT_EQ(line.index_sequence, "[1^2, 2, 1, 1, 1, -2]");
    EXPECT_EQ(line.delta, "1768");
    EXPECT_EQ(line.omega, 6u);
    EXPECT_EQ(line.big_omega, 7u);
    EXPECT_EQ(line.certified, true);
    EXPECT_EQ(pawn::parse_record_line(pawn::to_json(line)), line);
}

TEST(Records, ReaderAndWriter) {
    std::stringstream ss;
    pawn::RecordWriter w(ss);
    RecordLine a{"2*5*7", "[1, 1, -1]", "abundant", "4", 3, 3, 2, true};
    RecordLine b{"2^2*7", std::nullopt, "perfect", "0", 2, 3, 2, std::nullopt};
    w.write(a);
    w.write(b);
    EXPECT_EQ(w.count(), 2u);
    ss << "\n   \n";
    const auto back = pawn::read_records(ss);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0], a);
    EXPECT_EQ(back[1], b);
}

TEST(Records, RejectsBadLines) {
    EXPECT_THROW(pawn::parse_record_line("{"), pawn::ParseError);
    EXPECT_THROW(pawn::parse_record_line(R"({"factorization":"2"})"), pawn::ParseError);
    EXPECT_THROW(pawn::parse_record_line(
                     R"({"factorization":"2","class":"abundant","delta":4,"omega":1,"big_omega":1,"digits":1})"),
                 pawn::ParseError);
}

TEST(Records, ManifestRoundTrip) {
    pawn::RunManifest m;
    m.command = "enumerate";
    m.config = {{"mode", "sfpan"}, {"k", "4"}, {"seed", "1"}};
    m.started = pawn::utc_timestamp();
    m.finished = m.started;
    m.totals = {{"abundant", 18}, {"perfect", 0}};
    m.output_path = "out.jsonl";
    const auto back = pawn::RunManifest::parse(m.to_json());
    EXPECT_EQ(back.command, m.command);
    EXPECT_EQ(back.config, m.config);
    EXPECT_EQ(back.totals, m.totals);
    EXPECT_EQ(back.output_path, m.output_path);
    EXPECT_EQ(back.total("abundant"), 18u);
    EXPECT_FALSE(back.total("weird"));
    EXPECT_THROW(pawn::RunManifest::parse("[]"), pawn::ParseError);
}

TEST(Records, TimestampFormat) {
    EXPECT_TRUE(std::regex_match(pawn::utc_timestamp(), std::regex(R"(\d{4}-\d\d-\d\dT\d\d:\d\d:\d\dZ)")));
}

TEST(Records, CsvExport) {
    std::stringstream in, out;
    pawn::RecordWriter w(in);
    w.write(RecordLine{"2*5*7", "[1, 1, -1]", "abundant", "4", 3, 3, 2, true});
    w.write(RecordLine{"2^2*5", std::nullopt, "abundant", "2", 2, 3, 2, std::nullopt});
    EXPECT_EQ(pawn::records_to_csv(in, out), 2u);
    EXPECT_EQ(out.str(),
              "factorization,index_sequence,class,delta,omega,big_omega,digits,certified\n"
              "2*5*7,\"[1, 1, -1]\",abundant,4,3,3,2,true\n"
              "2^2*5,,abundant,2,2,3,2,\n");
}
