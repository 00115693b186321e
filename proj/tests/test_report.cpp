#include "qkc/report.hpp"

#include <doctest.h>

using namespace qkc;

TEST_CASE("report at n = 2 passes and is deterministic") {
  const VerificationReport a = run_suite("all", 2, 6, Mode::Truncated);
  const VerificationReport b = run_suite("all", 2, 6, Mode::Truncated);
  CHECK(a.pass());
  CHECK(a.failures() == 0);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.text() == b.text());
  const Json j = a.to_json();
  CHECK(j["suite"] == "all");
  CHECK(j["n"] == 2);
  CHECK(j["trunc"] == 6);
  CHECK(j["mode"] == "truncated");
  CHECK(j["status"] == "pass");
  CHECK_FALSE(j["checks"][0].contains("seconds"));
  CHECK(a.to_json(true)["checks"][0].contains("seconds"));
}

TEST_CASE("each suite runs on its own") {
  for (const auto& s : suite_names()) {
    const VerificationReport r = run_suite(s, 2, 6, Mode::Exact);
    CHECK(r.pass());
    CHECK_FALSE(r.records.empty());
    for (const auto& c : r.records) CHECK(c.id.rfind(s + ": ", 0) == 0);
  }
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(run_suite("all", 0, 4, Mode::Truncated), ConfigError);
  CHECK_THROWS_AS(run_suite("nope", 2, 6, Mode::Truncated), ConfigError);
  CHECK_THROWS_AS(run_suite("qkpres", 6, 14, Mode::Truncated), ConfigError);
  CHECK_THROWS_AS(run_suite("all", 6, 14, Mode::Truncated), ConfigError);
  CHECK_THROWS_AS(parse_mode("fast"), ConfigError);
  CHECK(parse_mode("exact") == Mode::Exact);
}

TEST_CASE("a failing record makes the report fail") {
  VerificationReport r;
  r.records.push_back(run_check("ok", []() -> std::optional<std::string> { return std::nullopt; }));
  r.records.push_back(run_check("bad", []() -> std::optional<std::string> { return std::string("here"); }));
  r.records.push_back(run_check("throws", []() -> std::optional<std::string> { throw std::runtime_error("boom"); }));
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == 2);
  CHECK(r.records[1].location == "here");
  CHECK(r.records[2].location.find("boom") != std::string::npos);
}
