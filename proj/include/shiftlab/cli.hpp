#pragma once

// Command dispatch, JSON reports and the corpus manifest checker behind the
// shiftlab tool.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shiftlab/core.hpp"

namespace shiftlab {

inline constexpr const char* kVersion = "0.1.0";

struct Flags {
  std::vector<std::string> inputs;
  std::size_t max_len = 8;
  std::size_t period = 4;
  bool exact = true;
  std::optional<std::size_t> cap;
  std::optional<std::string> out;
  std::optional<std::string> word;
  std::optional<std::size_t> coordinate;
  std::optional<std::string> set;     // X symbols, comma separated
  std::optional<std::string> symbol;  // a Y symbol
  std::optional<std::string> bridge;
  std::optional<std::string> keep;    // X symbols, comma separated
  std::optional<std::string> vbar;
  std::optional<std::size_t> bound;
};

nlohmann::json flags_json(const Flags& flags);

struct Report {
  nlohmann::json doc;
  int exit_code = 0;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> all{"check",  "degree",   "class-degree", "transition-blocks",
                                            "fiber",  "partition", "tau",         "diamond",
                                            "sub-diamond", "compose-check", "verify-examples"};
  return all;
}

// Never throws for mathematical or input failures; they become reports with
// exit codes 2 and 1.
Report run(const std::string& command, const Flags& flags);

struct AssertionResult {
  std::string id;
  std::string tag;
  std::string file;
  bool passed = false;
  nlohmann::json actual;
  std::string detail;
};

using TripleLoader = std::function<FactorTriple(const std::string& file)>;

// Runs every assertion of a manifest. A failing computation (exception)
// counts as a failed assertion.
std::vector<AssertionResult> verify_manifest(const nlohmann::json& manifest, const TripleLoader& load);

}  // namespace shiftlab
