#include <gtest/gtest.h>

#include "fhyper/report.hpp"
#include "test_util.hpp"

using namespace fhyper;

namespace {

std::vector<CountReport> sample() {
  return {
      CountReport::make("main (3;1,2)", 7, 3, Rat(8), Rat(8), 1.5),
      CountReport::make("surface, \"quoted\"", 11, 2, Rat(-5, 3), std::nullopt),
      CountReport::make("torus", 13, -1, Rat(0), Rat(1)),
  };
}

}  // namespace

TEST(Report, Make) {
  const auto r = sample();
  EXPECT_TRUE(r[0].equal);
  EXPECT_FALSE(r[1].equal);
  EXPECT_FALSE(r[2].equal);
  EXPECT_FALSE(all_equal(r));
  EXPECT_TRUE(all_equal({r[0]}));
  EXPECT_TRUE(all_equal({}));
}

TEST(Report, Rationals) {
  EXPECT_EQ(rat_to_string(Rat(6, 4)), "3/2");
  EXPECT_EQ(rat_to_string(Rat(-7)), "-7");
  EXPECT_EQ(rat_from_string("6/4"), Rat(3, 2));
  EXPECT_EQ(rat_from_string("-12"), Rat(-12));
  EXPECT_ERROR_KIND(rat_from_string("x"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(rat_from_string("1/0"), ErrorKind::ParseError);
}

TEST(Report, JsonRoundTrip) {
  const auto r = sample();
  const auto text = report_serialize(r, ReportFormat::Json);
  EXPECT_EQ(report_parse(text, ReportFormat::Json), r);
  const auto j = nlohmann::json::parse(text);
  EXPECT_TRUE(j[1].at("formula").is_null());
  EXPECT_EQ(j[1].at("brute"), "-5/3");
  EXPECT_EQ(report_from_json(report_to_json(r[0])), r[0]);
}

TEST(Report, CsvRoundTrip) {
  const auto r = sample();
  const auto text = report_serialize(r, ReportFormat::Csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "label,q,lam,brute,formula,equal,elapsed_ms");
  EXPECT_EQ(report_parse(text, ReportFormat::Csv), r);
  EXPECT_NE(text.find("7,3,8,8,true,1.500"), std::string::npos);
  EXPECT_NE(text.find("11,2,-5/3,,false"), std::string::npos);
}

TEST(Report, EmptyCsv) {
  EXPECT_EQ(report_serialize({}, ReportFormat::Csv),
            "label,q,lam,brute,formula,equal,elapsed_ms\n");
  EXPECT_TRUE(report_parse("label,q,lam,brute,formula,equal,elapsed_ms\n", ReportFormat::Csv)
                  .empty());
  EXPECT_EQ(report_serialize({}, ReportFormat::Json), "[]\n");
}

TEST(Report, ParseErrors) {
  EXPECT_ERROR_KIND(report_parse("ok", ReportFormat::Text), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(report_parse("{", ReportFormat::Json), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(report_parse(R"([{"label":"x"}])", ReportFormat::Json), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(report_parse("a,b\n", ReportFormat::Csv), ErrorKind::ParseError);
  const std::string header = "label,q,lam,brute,formula,equal,elapsed_ms\n";
  EXPECT_ERROR_KIND(report_parse(header + "x,7,1,2\n", ReportFormat::Csv), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(report_parse(header + "x,seven,1,2,2,true,0\n", ReportFormat::Csv),
                    ErrorKind::ParseError);
  EXPECT_ERROR_KIND(report_parse(header + "x,7,1,2,2,maybe,0\n", ReportFormat::Csv),
                    ErrorKind::ParseError);
}

TEST(Report, TextFormat) {
  const auto text = report_serialize(sample(), ReportFormat::Text);
  EXPECT_NE(text.find("(withheld)"), std::string::npos);
  EXPECT_NE(text.find("FAIL"), std::string::npos);
}
