#include <doctest.h>

#include "hgk/io.hpp"

using namespace hgk;

namespace {
std::string data_dir() { return HGKIT_DATA_DIR; }
}

TEST_CASE("group documents round trip") {
  GroupDocument doc = load_group_document(data_dir() + "/groups/V4.json");
  CHECK(doc.degree == 4);
  CHECK(doc.name == "V4");
  PermGroup G = group_from_document(doc);
  CHECK(G.order() == 4);
  std::string text = group_document_json(G, doc.name);
  GroupDocument again = parse_group_document(text);
  CHECK(again.degree == doc.degree);
  CHECK(group_from_document(again).same_element_set(G));
}

TEST_CASE("group document errors") {
  CHECK_THROWS_AS(parse_group_document("{"), ParseError);
  CHECK_THROWS_AS(parse_group_document("{\"generators\": []}"), ParseError);
  CHECK_THROWS_AS(parse_group_document("{\"degree\": 0}"), ParseError);
  CHECK_THROWS_AS(parse_group_document("{\"degree\": 4, \"generators\": [\"(1,5)\"]}"),
                  ParseError);
  CHECK_THROWS_AS(load_group_document(data_dir() + "/groups/nope.json"), ParseError);
}

TEST_CASE("presentation documents parse rationals both ways") {
  SplittingFieldPresentation p =
      load_presentation_document(data_dir() + "/fields/cbrt2.json");
  CHECK(p.min_poly.size() == 7);
  CHECK(p.min_poly.back() == 1);
  CHECK(p.generator_images.size() == 2);
  CHECK(p.binding.size() == 2);
  CHECK_THROWS_AS(parse_presentation_document("{\"min_poly\": [\"1/0\"]}"), ParseError);
}

TEST_CASE("classify renders and JSON round trips") {
  auto rows = classify_degree(4);
  std::string js = render_classify(rows, 4, OutputFormat::json);
  auto parsed = classify_rows_from_json(js);
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].name == rows[i].name);
    CHECK(parsed[i].order == rows[i].order);
    CHECK(parsed[i].verdict == rows[i].verdict);
    CHECK(parsed[i].decided_by == rows[i].decided_by);
    CHECK(parsed[i].witness_complement == rows[i].witness_complement);
  }
  // deterministic output
  CHECK(render_classify(rows, 4, OutputFormat::text) ==
        render_classify(classify_degree(4), 4, OutputFormat::text));
  std::string csv = render_classify(rows, 4, OutputFormat::csv);
  CHECK(csv.find("S4,24,almost classically Galois,S3,V4") != std::string::npos);
}

TEST_CASE("format names") {
  CHECK(parse_format("text") == OutputFormat::text);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(parse_format("yaml"), ParseError);
}
