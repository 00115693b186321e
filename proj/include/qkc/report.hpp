#pragma once

#include "qkc/check.hpp"
#include "qkc/rings.hpp"

#include <string>
#include <vector>

namespace qkc {

enum class Mode { Truncated, Exact };

std::string mode_str(Mode m);
Mode parse_mode(const std::string& s);

const std::vector<std::string>& suite_names();  // without "all"
bool known_suite(const std::string& s);

struct VerificationReport {
  std::string suite;
  int n = 0;
  int trunc = 0;
  Mode mode = Mode::Truncated;
  std::vector<CheckRecord> records;

  bool pass() const { return all_pass(records); }
  int failures() const;
  // seconds are included only when timing is set, so default output is byte-stable
  Json to_json(bool timing = false) const;
  std::string text(bool timing = false) const;
};

// suite in suite_names() or "all"; trunc is the T/Q truncation degree used in truncated mode
VerificationReport run_suite(const std::string& suite, int n, int trunc, Mode mode);

}  // namespace qkc
