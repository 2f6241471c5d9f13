#ifndef SUPERKRULL_REPORT_H_
#define SUPERKRULL_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superkrull/polynomial.h"
#include "superkrull/presentation.h"

namespace superkrull {

inline constexpr const char* kToolVersion = SUPERKRULL_VERSION;

struct CommandOptions {
  MonomialOrder order;
  bool witness = false;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
};

struct CommandReport {
  std::string command;
  std::string input_digest;
  nlohmann::json result;
  double seconds = 0;
  std::string tool_version = kToolVersion;
  std::optional<std::uint64_t> seed;
  // Human-readable summary, one item per line.
  std::vector<std::string> lines;

  // Keys sorted; identical inputs give identical output apart from timing.
  nlohmann::json ToJson() const;
};

const std::vector<std::string>& Commands();

// FNV-1a 64 of the canonical presentation text, as 16 hex digits.
std::string InputDigest(const SuperPresentation& p);

// Dispatches ksdim, onerel, regular, omega, oracle or experiment. Library
// errors propagate unchanged.
CommandReport RunCommand(const std::string& command, const SuperPresentation& p,
                         const CommandOptions& options = {});

}  // namespace superkrull

#endif  // SUPERKRULL_REPORT_H_
