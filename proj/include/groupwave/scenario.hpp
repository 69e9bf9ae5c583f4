#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupwave/errors.hpp"
#include "groupwave/norms.hpp"
#include "groupwave/verify.hpp"

namespace groupwave {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSemanticError = 3;

struct TimesSpec {
  bool is_list = false;
  double start = 0.0;
  double stop = 1.0;
  int steps = 11;
  std::vector<double> list;

  std::vector<double> values() const;
};

struct OutputSpec {
  std::string path;          // empty -> stdout
  std::string format = "csv";  // "csv" | "json"
  std::string samples_path;  // compare only: per-time-slice sample dumps
};

struct VerifyFlags {
  bool pde = true;
  bool initial = true;
  bool identities = true;
  bool classical = true;
};

struct NormSpec {
  NormMethod method = NormMethod::TruncatedRep;
  int resolution = 4;
};

struct ScenarioConfig {
  GroupId group = GroupId::IntZ;
  RealCharacter character = RealCharacter::id_on_z();
  AlgebraElement x0{GroupId::IntZ};
  AlgebraElement y0{GroupId::IntZ};
  TimesSpec times;
  double fd_step = 1e-3;
  std::vector<GroupElement> tracked;
  OutputSpec output;
  VerifyFlags verify;
  std::optional<NormSpec> norm;
};

/// Parses a scenario config from JSON. Unknown fields are rejected with the
/// offending field named; structural problems throw ConfigError, domain
/// violations (character/group mismatch, bad generator tables) throw
/// SemanticError.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario_file(const std::string& path);

/// Canonical JSON form with all defaults materialized;
/// serialize(parse(text)) is a fixed point.
std::string serialize_scenario(const ScenarioConfig& config);

/// Standalone JSON forms for characters and multiplier symbols (custom
/// symbols carry an opaque function and have no JSON form).
std::string character_to_json(const RealCharacter& character);
RealCharacter character_from_json(const std::string& json_text);
std::string multiplier_symbol_to_json(const MultiplierSymbol& symbol);
MultiplierSymbol multiplier_symbol_from_json(const std::string& json_text);

struct CommandOptions {
  int threads = 1;
  std::uint64_t seed = 0;
  std::string out_override;
  bool corrupt_t_b = false;  // verify negative-control fixture
};

int cmd_simulate(const ScenarioConfig& config, const CommandOptions& options);
int cmd_verify(const ScenarioConfig& config, const CommandOptions& options);
int cmd_norms(const ScenarioConfig& config, const CommandOptions& options);
int cmd_compare(const ScenarioConfig& config, const CommandOptions& options);

}  // namespace groupwave
