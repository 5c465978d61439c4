#include "doctest.h"
#include "helpers.hpp"
#include "qnb/json_io.hpp"
#include "qnb/zoo.hpp"

using namespace qnb;
using namespace qnb::testing;

namespace {

std::string error_text(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("zoo maps round-trip through both map formats") {
  for (const auto& f : {make_jk(2, 8), make_toffoli(9), make_tk(2, 10), make_jt(2, 1, 13)}) {
    for (auto format : {MapFormat::rule, MapFormat::automatic}) {
      const auto text = map_to_json(f, format).dump();
      const auto g = parse_map(text);
      CHECK(same_function(f, g));
      CHECK(g.descriptor().family == f.descriptor().family);
      CHECK(g.descriptor().params == f.descriptor().params);
      CHECK(map_to_json(g, format).dump() == text);
    }
  }
}

TEST_CASE("small maps are written as tables, large ones as rules") {
  CHECK(map_to_json(make_jk(2, 8), MapFormat::automatic)["kind"] == "explicit");
  CHECK(map_to_json(make_jk(2, 9), MapFormat::automatic)["kind"] == "rule");
  CHECK(map_to_json(make_jk(2, 8), MapFormat::rule)["kind"] == "rule");
}

TEST_CASE("explicit maps parse") {
  const auto text = R"({"domain": [["a", 2], ["b", 3]], "codomain": [["a", 2], ["b", 3]],
                       "kind": "explicit", "table": [1, 0, 3, 2, 5, 4]})";
  const auto f = parse_map(text);
  CHECK(f.is_explicit());
  CHECK(f.domain()->id(1) == "b");
  CHECK(f.table() == std::vector<std::uint64_t>{1, 0, 3, 2, 5, 4});
  CHECK(f.descriptor().family == "explicit");
}

TEST_CASE("parse errors name the line or field") {
  const auto syntax = error_text([] { parse_map("{\n  \"domain\": [\n  ,]\n}"); });
  CHECK(contains(syntax, "line 3"));

  const auto missing = error_text([] { parse_map(R"({"domain": [], "codomain": [], "kind": "explicit"})"); });
  CHECK(contains(missing, "table"));

  const auto typed = error_text(
      [] { parse_map(R"({"domain": [["a", "two"]], "codomain": [], "kind": "explicit", "table": []})"); });
  CHECK(contains(typed, "domain[0][1]"));

  const auto kind = error_text([] { parse_map(R"({"domain": [], "codomain": [], "kind": "magic"})"); });
  CHECK(contains(kind, "kind"));

  const auto bit = error_text([] {
    parse_map(R"({"domain": [["0", 2], ["1", 2], ["2", 2]], "codomain": [["0", 2], ["1", 2], ["2", 2]],
                 "ring": true, "kind": "rule", "rule": {"layers": 1, "outputs": [[[[1, 3]]]]}})");
  });
  CHECK(contains(bit, "rule.outputs[0][0][0][1]"));
}

TEST_CASE("invalid maps in valid JSON keep their own error kinds") {
  CHECK(kind_of([] {
          parse_map(R"({"domain": [["a", 2]], "codomain": [["a", 2]], "kind": "explicit", "table": [0, 0]})");
        }) == ErrorKind::NotInjective);
  CHECK(kind_of([] {
          parse_map(R"({"domain": [["a", 2], ["a", 2]], "codomain": [], "kind": "explicit", "table": []})");
        }) == ErrorKind::DuplicateSite);
}

TEST_CASE("scheme reports carry members and intervals") {
  const auto f = make_jk(2, 8);
  const auto j = scheme_to_json(in_scheme(invert(f), 0, 1));
  CHECK(j["source_slice"] == 1);
  CHECK(j["target_slice"] == 0);
  const auto& site3 = j["sites"][3];
  CHECK(site3["site"] == "3");
  CHECK(site3["members"] == Json::array({"1", "2"}));
  CHECK(site3["interval"] == Json::array({1, 2}));
  CHECK(site3["offset_interval"] == Json::array({-2, -1}));

  const auto X = binary_sites(3);
  const auto plain = site_set_to_json(sites(X, {0, 2}));
  CHECK(plain["members"] == Json::array({"s0", "s2"}));
  CHECK_FALSE(plain.contains("interval"));
}

TEST_CASE("set descriptions") {
  const auto ring = CellSpace::ring(8, 2);
  CHECK(describe(ring_interval(ring, -2, 1)) == "[-2,1]");
  CHECK(describe(sites(ring, {0, 2})) == "{0,2}");
  CHECK(describe_relative(sites(ring, {3, 4}), 3) == "[0,1]");
  CHECK(describe_relative(sites(ring, {1, 3}), 2) == "{-1,1}");
}
