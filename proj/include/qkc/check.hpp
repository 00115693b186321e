#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkc {

struct CheckRecord {
  std::string id;
  bool pass = false;
  std::string location;  // first failing term, empty on pass
  double seconds = 0.0;
};

// f returns nullopt on success or a description of the first mismatch
template <class F>
CheckRecord run_check(std::string id, F&& f) {
  CheckRecord r;
  r.id = std::move(id);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::optional<std::string> bad = f();
    r.pass = !bad.has_value();
    if (bad) r.location = *bad;
  } catch (const std::exception& e) {
    r.pass = false;
    r.location = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline bool all_pass(const std::vector<CheckRecord>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

inline void append(std::vector<CheckRecord>& to, const std::vector<CheckRecord>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace qkc
