#include <doctest.h>

#include <sstream>

#include "stimamp/output.hpp"

using namespace stimamp;

TEST_CASE("csv cells") {
  CHECK(format_csv_cell(ordered_json(2.0 / 3.0)) == "0.66666666666666663");
  CHECK(format_csv_cell(ordered_json(0.5)) == "0.5");
  CHECK(format_csv_cell(ordered_json(12)) == "12");
  CHECK(format_csv_cell(ordered_json(nullptr)).empty());
  CHECK(format_csv_cell(ordered_json(true)) == "true");
  CHECK(format_csv_cell(ordered_json("2,0")) == "\"2,0\"");
  CHECK(format_csv_cell(ordered_json("say \"hi\"")) == "\"say \"\"hi\"\"\"");
}

TEST_CASE("records") {
  OutputRecord rec;
  rec.command = "demo";
  rec.parameters = {{"n", 3}};
  rec.columns = {"a", "b"};
  rec.add_row({{"a", 1}, {"b", 0.25}});
  CHECK_THROWS_AS(rec.add_row({{"b", 1}, {"a", 2}}), std::logic_error);
  CHECK_THROWS_AS(rec.add_row({{"a", 1}}), std::logic_error);

  std::ostringstream csv;
  write_record(rec, OutputFormat::Csv, csv);
  CHECK(csv.str() == "# schema_version=1.0\n# command=demo\n# parameter.n=3\na,b\n1,0.25\n");

  const auto doc = nlohmann::json::parse([&] {
    std::ostringstream js;
    write_record(rec, OutputFormat::Json, js);
    return js.str();
  }());
  CHECK(doc["schema_version"] == "1.0");
  CHECK(doc["command"] == "demo");
  CHECK(doc["rows"][0]["b"] == 0.25);
  CHECK_FALSE(doc.contains("summary"));

  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
