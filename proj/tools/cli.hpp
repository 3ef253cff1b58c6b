#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with argument vectors and string streams.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monocodes/gf.hpp"

namespace monocodes::cli {

using Json = nlohmann::json;

enum ExitCode : int { kOk = 0, kMismatch = 1, kPrecondition = 2, kResourceGuard = 3 };

inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// Centralizers solve an n^2 x n^2 system; larger n is refused.
inline constexpr std::size_t kMaxCentralizerN = 24;

/// A validated invocation. Element values are codes in GF(p^m); sigma is
/// the 0-based one-line map.
struct JobSpec {
  std::string command;
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::size_t n = 0;
  std::vector<Code> a;
  std::vector<std::size_t> sigma;
  std::optional<std::vector<std::size_t>> select;
  std::vector<std::vector<Code>> vectors;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = 4096;
  bool nontrivial = false;
  std::string input;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

Json to_json(const JobSpec& job);
JobSpec job_from_json(const Json& j);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monocodes::cli
