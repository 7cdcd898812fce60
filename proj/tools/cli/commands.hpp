#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tdga::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;       // usage, IO, parse, or inconsistent input
inline constexpr int kExitAttackFail = 2;  // the attack's give-up branch (singular M_c or M_d)

inline constexpr std::uint64_t kDefaultSeed = 0x7d6a5eedULL;

struct RunConfig {
  std::string command;
  std::size_t n = 19;
  std::uint64_t q = 19;
  std::optional<std::uint64_t> lambda;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 10000;
  std::vector<std::string> inputs;
  std::optional<std::string> output;
};

/// Test hooks for the exchange command.
struct ExchangeHooks {
  /// Flip one coefficient of Bob's public key in transit.
  bool corrupt_peer_key = false;
};

/// Dispatches on config.command. Deterministic output goes to `out`;
/// timings and diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_params(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_keygen(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pk(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_exchange(const RunConfig& config, std::ostream& out, std::ostream& err, const ExchangeHooks& hooks = {});
int cmd_attack(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_circulant_stats(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_paper_examples(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Bundled worked instances (name, file contents), in order q = 23, 19, 41.
struct EmbeddedInstance {
  std::string_view name;
  std::string_view contents;
};
std::vector<EmbeddedInstance> embedded_instances();

}  // namespace tdga::cli
