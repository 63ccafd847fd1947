#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "braidmono/records.hpp"

using namespace braidmono;

namespace {

std::string one_line(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(img).to_one_line();
}

OutputRecord random_record(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg_dist(1, 12);
  OutputRecord r;
  r.degree = deg_dist(rng);
  r.sigma = one_line(r.degree, rng);
  r.a1 = one_line(r.degree, rng);
  r.a2 = one_line(r.degree, rng);
  r.b1 = one_line(r.degree, rng);
  r.b2 = one_line(r.degree, rng);
  if (rng() % 2 == 0) {
    std::uniform_int_distribution<std::uint64_t> u64(1, 1000000);
    r.orbit_size = u64(rng);
    r.stabilizer_order = u64(rng);
    r.galois = rng() % 2 == 0;
    r.transitive = rng() % 2 == 0;
    r.image_order = u64(rng);
    r.chi = 1;
    r.k_squared = 10 - r.degree;
  }
  return r;
}

std::vector<OutputRecord> parse_string(const std::string& text) {
  std::istringstream in(text);
  return read_records(in);
}

}  // namespace

TEST_CASE("round trip: serialize then parse is the identity on 1000 random records") {
  std::mt19937 rng(1234);
  for (Format format : {Format::Jsonl, Format::Csv}) {
    for (int trial = 0; trial < 1000; ++trial) {
      OutputRecord r = random_record(rng);
      std::string text;
      if (format == Format::Csv) text += csv_header(r.classified()) + "\n";
      text += serialize_record(r, format) + "\n";
      auto parsed = parse_string(text);
      REQUIRE(parsed.size() == 1);
      CHECK(parsed[0] == r);
    }
  }
}

TEST_CASE("solution records convert to representations and back") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    OutputRecord r = random_record(rng);
    MonodromyRep rep = to_rep(r);
    OutputRecord back = to_record(rep);
    CHECK(back.degree == r.degree);
    CHECK(back.sigma == r.sigma);
    CHECK(back.a1 == r.a1);
    CHECK(back.a2 == r.a2);
    CHECK(back.b1 == r.b1);
    CHECK(back.b2 == r.b2);
  }
}

TEST_CASE("degree/permutation mismatch is rejected when rebuilding a representation") {
  OutputRecord r;
  r.degree = 3;
  r.sigma = "[2,1]";  // degree 2, record says 3
  r.a1 = r.a2 = r.b1 = r.b2 = "[1,2,3]";
  CHECK_THROWS_AS(to_rep(r), std::invalid_argument);
  r.sigma = "[2,2,1]";  // not a bijection
  CHECK_THROWS_AS(to_rep(r), std::invalid_argument);
}

TEST_CASE("jsonl parsing reports line numbers and skips summaries") {
  std::string text =
      "{\"schema\":\"1\",\"degree\":2,\"sigma\":\"[2,1]\",\"a1\":\"[1,2]\","
      "\"a2\":\"[1,2]\",\"b1\":\"[1,2]\",\"b2\":\"[1,2]\"}\n"
      "{\"summary\":true,\"total_count\":16}\n";
  auto records = parse_string(text);
  REQUIRE(records.size() == 1);
  CHECK(records[0].degree == 2);
  CHECK_FALSE(records[0].classified());

  try {
    parse_string(text + "{malformed\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line_no == 3);
  }

  try {
    parse_string("{\"schema\":\"1\",\"degree\":2}\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line_no == 1);
  }
}

TEST_CASE("csv parsing: header, quoting, comments, field errors") {
  std::string text =
      "schema,degree,sigma,a1,a2,b1,b2\n"
      "1,2,\"[2,1]\",\"[1,2]\",\"[1,2]\",\"[1,2]\",\"[1,2]\"\n"
      "# summary total_count=16\n";
  auto records = parse_string(text);
  REQUIRE(records.size() == 1);
  CHECK(records[0].sigma == "[2,1]");

  // wrong field count
  std::string bad = "schema,degree,sigma,a1,a2,b1,b2\n1,2,\"[2,1]\"\n";
  CHECK_THROWS_AS(parse_string(bad), ParseError);

  // unknown column
  CHECK_THROWS_AS(parse_string("schema,degree,nope\n"), ParseError);

  // boolean and integer field validation on classified rows
  std::string classified =
      csv_header(true) + "\n" +
      "1,2,\"[2,1]\",\"[1,2]\",\"[1,2]\",\"[1,2]\",\"[1,2]\",1,2,maybe,true,2,1,8\n";
  CHECK_THROWS_AS(parse_string(classified), ParseError);
}

TEST_CASE("empty input parses to no records") {
  CHECK(parse_string("").empty());
  CHECK(parse_string("\n\n").empty());
}

TEST_CASE("classified records carry the class columns in both formats") {
  std::mt19937 rng(5);
  OutputRecord r = random_record(rng);
  r.orbit_size = 6;
  r.stabilizer_order = 1;
  r.galois = false;
  r.transitive = true;
  r.image_order = 6;
  r.chi = 1;
  r.k_squared = 7;

  std::string jsonl = serialize_record(r, Format::Jsonl);
  CHECK(jsonl.find("\"orbit_size\":6") != std::string::npos);
  auto parsed = parse_string(jsonl + "\n");
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0] == r);

  std::string csv = csv_header(true) + "\n" + serialize_record(r, Format::Csv) + "\n";
  auto parsed_csv = parse_string(csv);
  REQUIRE(parsed_csv.size() == 1);
  CHECK(parsed_csv[0] == r);
}

TEST_CASE("format names") {
  CHECK(parse_format("jsonl") == Format::Jsonl);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
