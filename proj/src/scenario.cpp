#include "groupwave/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "groupwave/circle.hpp"

namespace groupwave {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void reject_unknown_keys(const Json& object, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError("unknown field: " +
                        (path.empty() ? key : path + "." + key));
    }
  }
}

const Json& require_field(const Json& object, const std::string& path,
                          const std::string& key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ConfigError("missing field: " +
                      (path.empty() ? key : path + "." + key));
  }
  return *it;
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError("field must be a string: " + path);
  return j.get<std::string>();
}

double get_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError("field must be a number: " + path);
  return j.get<double>();
}

int get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    throw ConfigError("field must be an integer: " + path);
  }
  return j.get<int>();
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ConfigError("field must be a boolean: " + path);
  return j.get<bool>();
}

RealCharacter character_from_config(GroupId group, const Json& j,
                                    const std::string& path) {
  if (!j.is_object()) throw ConfigError("field must be an object: " + path);
  reject_unknown_keys(j, path, {"kind", "table"});
  std::string kind_name =
      get_string(require_field(j, path, "kind"), path + ".kind");
  RealCharacter::Kind kind;
  try {
    kind = RealCharacter::parse_kind_name(kind_name);
  } catch (const SemanticError& e) {
    throw ConfigError(path + ".kind: " + e.what());
  }
  auto require_group = [&](GroupId expected) {
    if (group != expected) {
      throw SemanticError("character kind '" + kind_name +
                          "' does not apply to group '" +
                          std::string(group_name(group)) + "'");
    }
  };
  switch (kind) {
    case RealCharacter::Kind::IdOnZ:
      require_group(GroupId::IntZ);
      return RealCharacter::id_on_z();
    case RealCharacter::Kind::DyadicOnDirectSum:
      require_group(GroupId::DirectSumZ);
      return RealCharacter::dyadic_on_direct_sum();
    case RealCharacter::Kind::UpperLeftOnHeisenberg:
      require_group(GroupId::HeisenbergZ);
      return RealCharacter::upper_left_on_heisenberg();
    case RealCharacter::Kind::ExponentSumXOnF2:
      require_group(GroupId::FreeGroup2);
      return RealCharacter::exponent_sum_x_on_f2();
    case RealCharacter::Kind::Custom:
      break;
  }
  const Json& table_json = require_field(j, path, "table");
  if (!table_json.is_object()) {
    throw ConfigError("field must be an object: " + path + ".table");
  }
  std::map<std::string, Rational> table;
  for (const auto& [key, value] : table_json.items()) {
    table.emplace(key, Rational::parse(get_string(value, path + ".table." + key)));
  }
  return RealCharacter::custom(group, table);
}

OrderedJson character_to_config_json(const RealCharacter& character) {
  OrderedJson j;
  j["kind"] = std::string(character.kind_name());
  if (character.kind() == RealCharacter::Kind::Custom) {
    OrderedJson table = OrderedJson::object();
    for (const auto& [g, value] : character.custom_table()) {
      table[to_text(g)] = value.to_string();
    }
    j["table"] = std::move(table);
  }
  return j;
}

AlgebraElement element_from_config(GroupId group, const Json& j,
                                   const std::string& path) {
  std::string text = get_string(j, path);
  try {
    return parse_algebra_element(group, text);
  } catch (const SemanticError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace

std::vector<double> TimesSpec::values() const {
  if (is_list) return list;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out.push_back(start);
    return out;
  }
  double step = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) out.push_back(start + i * step);
  return out;
}

ScenarioConfig parse_scenario(const std::string& json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(root, "",
                      {"group", "character", "x0", "y0", "times", "fd_step",
                       "tracked_elements", "output", "verify", "norm"});

  ScenarioConfig config;
  std::string group_text =
      get_string(require_field(root, "", "group"), "group");
  try {
    config.group = parse_group_name(group_text);
  } catch (const SemanticError& e) {
    throw ConfigError(std::string("group: ") + e.what());
  }
  config.character = character_from_config(
      config.group, require_field(root, "", "character"), "character");
  config.x0 =
      element_from_config(config.group, require_field(root, "", "x0"), "x0");
  config.y0 = root.contains("y0")
                  ? element_from_config(config.group, root["y0"], "y0")
                  : AlgebraElement(config.group);

  if (root.contains("times")) {
    const Json& times = root["times"];
    if (!times.is_object()) throw ConfigError("field must be an object: times");
    if (times.contains("list")) {
      reject_unknown_keys(times, "times", {"list"});
      const Json& list = times["list"];
      if (!list.is_array() || list.empty()) {
        throw ConfigError("times.list must be a nonempty array");
      }
      config.times.is_list = true;
      for (std::size_t i = 0; i < list.size(); ++i) {
        double t = get_number(list[i], "times.list");
        if (t < 0.0) throw ConfigError("times.list entries must be >= 0");
        config.times.list.push_back(t);
      }
    } else {
      reject_unknown_keys(times, "times", {"start", "stop", "steps"});
      config.times.start =
          get_number(require_field(times, "times", "start"), "times.start");
      config.times.stop =
          get_number(require_field(times, "times", "stop"), "times.stop");
      config.times.steps =
          get_int(require_field(times, "times", "steps"), "times.steps");
      if (config.times.steps < 1) throw ConfigError("times.steps must be >= 1");
      if (config.times.start < 0.0) throw ConfigError("times.start must be >= 0");
      if (config.times.stop < config.times.start) {
        throw ConfigError("times.stop must be >= times.start");
      }
    }
  }

  if (root.contains("fd_step")) {
    config.fd_step = get_number(root["fd_step"], "fd_step");
    if (!(config.fd_step > 0.0)) throw ConfigError("fd_step must be > 0");
  }

  if (root.contains("tracked_elements")) {
    const Json& tracked = root["tracked_elements"];
    if (!tracked.is_array()) {
      throw ConfigError("tracked_elements must be an array");
    }
    for (std::size_t i = 0; i < tracked.size(); ++i) {
      std::string text = get_string(tracked[i], "tracked_elements");
      try {
        config.tracked.push_back(parse_element(config.group, text));
      } catch (const SemanticError& e) {
        throw ConfigError("tracked_elements[" + std::to_string(i) +
                          "]: " + e.what());
      }
    }
  }

  if (root.contains("output")) {
    const Json& output = root["output"];
    if (!output.is_object()) throw ConfigError("output must be an object");
    reject_unknown_keys(output, "output", {"path", "format", "samples_path"});
    if (output.contains("path")) {
      config.output.path = get_string(output["path"], "output.path");
    }
    if (output.contains("format")) {
      config.output.format = get_string(output["format"], "output.format");
      if (config.output.format != "csv" && config.output.format != "json") {
        throw ConfigError("output.format must be 'csv' or 'json'");
      }
    }
    if (output.contains("samples_path")) {
      config.output.samples_path =
          get_string(output["samples_path"], "output.samples_path");
    }
  }

  if (root.contains("verify")) {
    const Json& verify = root["verify"];
    if (!verify.is_object()) throw ConfigError("verify must be an object");
    reject_unknown_keys(verify, "verify",
                        {"pde", "initial", "identities", "classical"});
    if (verify.contains("pde")) {
      config.verify.pde = get_bool(verify["pde"], "verify.pde");
    }
    if (verify.contains("initial")) {
      config.verify.initial = get_bool(verify["initial"], "verify.initial");
    }
    if (verify.contains("identities")) {
      config.verify.identities =
          get_bool(verify["identities"], "verify.identities");
    }
    if (verify.contains("classical")) {
      config.verify.classical =
          get_bool(verify["classical"], "verify.classical");
    }
  }

  if (root.contains("norm")) {
    const Json& norm = root["norm"];
    if (!norm.is_object()) throw ConfigError("norm must be an object");
    reject_unknown_keys(norm, "norm", {"method", "resolution"});
    NormSpec spec;
    std::string method =
        get_string(require_field(norm, "norm", "method"), "norm.method");
    try {
      spec.method = parse_norm_method(method);
    } catch (const SemanticError& e) {
      throw ConfigError(std::string("norm.method: ") + e.what());
    }
    spec.resolution =
        get_int(require_field(norm, "norm", "resolution"), "norm.resolution");
    if (spec.resolution < 1) throw ConfigError("norm.resolution must be >= 1");
    config.norm = spec;
  }

  return config;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const ScenarioConfig& config) {
  OrderedJson j;
  j["group"] = std::string(group_name(config.group));
  j["character"] = character_to_config_json(config.character);
  j["x0"] = to_text(config.x0);
  j["y0"] = to_text(config.y0);
  OrderedJson times;
  if (config.times.is_list) {
    times["list"] = config.times.list;
  } else {
    times["start"] = config.times.start;
    times["stop"] = config.times.stop;
    times["steps"] = config.times.steps;
  }
  j["times"] = std::move(times);
  j["fd_step"] = config.fd_step;
  OrderedJson tracked = OrderedJson::array();
  for (const GroupElement& g : config.tracked) tracked.push_back(to_text(g));
  j["tracked_elements"] = std::move(tracked);
  j["output"] = {{"path", config.output.path},
                 {"format", config.output.format},
                 {"samples_path", config.output.samples_path}};
  j["verify"] = {{"pde", config.verify.pde},
                 {"initial", config.verify.initial},
                 {"identities", config.verify.identities},
                 {"classical", config.verify.classical}};
  if (config.norm.has_value()) {
    j["norm"] = {{"method", std::string(norm_method_name(config.norm->method))},
                 {"resolution", config.norm->resolution}};
  }
  return j.dump(2) + "\n";
}

std::string character_to_json(const RealCharacter& character) {
  OrderedJson j;
  j["group"] = std::string(group_name(character.group()));
  OrderedJson body = character_to_config_json(character);
  for (auto& [key, value] : body.items()) j[key] = value;
  return j.dump();
}

RealCharacter character_from_json(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("character is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("character must be a JSON object");
  reject_unknown_keys(j, "character", {"group", "kind", "table"});
  GroupId group = parse_group_name(
      get_string(require_field(j, "character", "group"), "character.group"));
  Json body = j;
  body.erase("group");
  return character_from_config(group, body, "character");
}

std::string multiplier_symbol_to_json(const MultiplierSymbol& symbol) {
  OrderedJson j;
  switch (symbol.kind()) {
    case MultiplierSymbol::Kind::Exp:
      j["kind"] = "exp";
      j["t"] = symbol.time();
      break;
    case MultiplierSymbol::Kind::Generator:
      j["kind"] = "generator";
      break;
    case MultiplierSymbol::Kind::InverseOffKernel:
      j["kind"] = "inverse_off_kernel";
      break;
    case MultiplierSymbol::Kind::KernelProjector:
      j["kind"] = "kernel_projector";
      break;
    case MultiplierSymbol::Kind::Laplacian:
      j["kind"] = "laplacian";
      break;
    case MultiplierSymbol::Kind::Custom:
      throw SemanticError("custom multiplier symbols have no JSON form");
  }
  j["character"] = Json::parse(character_to_json(symbol.character()));
  return j.dump();
}

MultiplierSymbol multiplier_symbol_from_json(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("symbol is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("symbol must be a JSON object");
  reject_unknown_keys(j, "symbol", {"kind", "t", "character"});
  RealCharacter character = character_from_json(
      require_field(j, "symbol", "character").dump());
  std::string kind = get_string(require_field(j, "symbol", "kind"), "symbol.kind");
  if (kind == "exp") {
    return MultiplierSymbol::exp(
        character, get_number(require_field(j, "symbol", "t"), "symbol.t"));
  }
  if (kind == "generator") return MultiplierSymbol::generator(character);
  if (kind == "inverse_off_kernel") {
    return MultiplierSymbol::inverse_off_kernel(character);
  }
  if (kind == "kernel_projector") {
    return MultiplierSymbol::kernel_projector(character);
  }
  if (kind == "laplacian") return MultiplierSymbol::laplacian(character);
  throw ConfigError("symbol.kind: unknown multiplier kind '" + kind + "'");
}

namespace {

std::string csv_field(const std::string& value) {
  if (value.find(',') == std::string::npos &&
      value.find('"') == std::string::npos) {
    return value;
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
}

std::string resolve_path(const ScenarioConfig& config,
                         const CommandOptions& options) {
  return options.out_override.empty() ? config.output.path
                                      : options.out_override;
}

struct SimulationRow {
  double t = 0.0;
  double residual = 0.0;
  double energy = 0.0;
  std::vector<Complex> tracked;
};

SimulationRow simulate_row(const ScenarioConfig& config, const WaveProblem& p,
                           double t) {
  SimulationRow row;
  row.t = t;
  WaveState state = evolve_coefficient_form(p, t);
  if (config.verify.pde && t > config.fd_step) {
    state.residual_l2 = pde_residual(p, t, config.fd_step);
  }
  row.residual = state.residual_l2;
  row.energy = energy(p, state);
  row.tracked.reserve(config.tracked.size());
  for (const GroupElement& g : config.tracked) {
    row.tracked.push_back(state.u.coefficient(g));
  }
  return row;
}

/// Runs one job per time sample over the requested thread count; slot
/// indexing keeps results byte-identical regardless of scheduling.
std::vector<SimulationRow> simulate_rows(const ScenarioConfig& config,
                                         const WaveProblem& p,
                                         const std::vector<double>& times,
                                         int threads) {
  std::vector<SimulationRow> rows(times.size());
  if (threads <= 1 || times.size() <= 1) {
    for (std::size_t i = 0; i < times.size(); ++i) {
      rows[i] = simulate_row(config, p, times[i]);
    }
    return rows;
  }
  std::vector<std::future<void>> workers;
  std::size_t chunk = (times.size() + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(times.size(), begin + chunk);
    if (begin >= end) break;
    workers.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        rows[i] = simulate_row(config, p, times[i]);
      }
    }));
  }
  for (auto& worker : workers) worker.get();
  return rows;
}

}  // namespace

int cmd_simulate(const ScenarioConfig& config, const CommandOptions& options) {
  WaveProblem problem(config.character, config.x0, config.y0);
  std::vector<double> times = config.times.values();
  std::vector<SimulationRow> rows =
      simulate_rows(config, problem, times, options.threads);

  std::string content;
  if (config.output.format == "csv") {
    std::string header = "t";
    if (config.verify.pde) header += ",residual_l2";
    header += ",energy";
    for (const GroupElement& g : config.tracked) {
      header += "," + csv_field("re(w_" + to_text(g) + ")");
      header += "," + csv_field("im(w_" + to_text(g) + ")");
    }
    content = header + "\n";
    for (const SimulationRow& row : rows) {
      std::string line = format_double(row.t);
      if (config.verify.pde) line += "," + format_double(row.residual);
      line += "," + format_double(row.energy);
      for (const Complex& c : row.tracked) {
        line += "," + format_double(c.real());
        line += "," + format_double(c.imag());
      }
      content += line + "\n";
    }
  } else {
    OrderedJson j;
    j["schema_version"] = "1";
    OrderedJson out_rows = OrderedJson::array();
    for (const SimulationRow& row : rows) {
      OrderedJson r;
      r["t"] = row.t;
      if (config.verify.pde) r["residual_l2"] = row.residual;
      r["energy"] = row.energy;
      OrderedJson tracked = OrderedJson::object();
      for (std::size_t i = 0; i < config.tracked.size(); ++i) {
        tracked[to_text(config.tracked[i])] = {row.tracked[i].real(),
                                               row.tracked[i].imag()};
      }
      r["tracked"] = std::move(tracked);
      out_rows.push_back(std::move(r));
    }
    j["rows"] = std::move(out_rows);
    content = j.dump(2) + "\n";
  }
  write_output(resolve_path(config, options), content);
  return kExitOk;
}

int cmd_verify(const ScenarioConfig& config, const CommandOptions& options) {
  WaveProblem problem(config.character, config.x0, config.y0);
  VerifyOptions verify_options;
  verify_options.seed = options.seed;
  verify_options.threads = options.threads;
  verify_options.run_pde = config.verify.pde;
  verify_options.run_initial = config.verify.initial;
  verify_options.run_identities = config.verify.identities;
  verify_options.run_classical = config.verify.classical;
  verify_options.corrupt_t_b = options.corrupt_t_b;

  std::vector<FamilyResult> results = run_verification(problem, verify_options);
  bool all_pass = true;
  OrderedJson families = OrderedJson::array();
  for (const FamilyResult& family : results) {
    if (family.status == "fail" || family.status == "error") all_pass = false;
    OrderedJson f;
    f["name"] = family.name;
    f["status"] = family.status;
    f["max_residual"] = family.max_residual;
    f["trials"] = family.trials;
    if (!family.detail.empty()) f["detail"] = family.detail;
    families.push_back(std::move(f));
  }
  OrderedJson j;
  j["schema_version"] = "1";
  j["seed"] = options.seed;
  j["families"] = std::move(families);
  j["all_pass"] = all_pass;
  write_output(resolve_path(config, options), j.dump(2) + "\n");
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_norms(const ScenarioConfig& config, const CommandOptions& options) {
  if (!config.norm.has_value()) {
    throw ConfigError("missing field: norm");
  }
  NormReport report =
      config.norm->method == NormMethod::CircleGrid
          ? opnorm_circle_grid(config.x0, config.norm->resolution)
          : opnorm_truncated_rep(config.x0, config.norm->resolution);
  OrderedJson j;
  j["schema_version"] = "1";
  j["l1"] = report.l1;
  j["l2"] = report.l2;
  j["opnorm_lower"] = report.opnorm_lower;
  j["opnorm_upper"] = report.opnorm_upper;
  j["method"] = std::string(norm_method_name(report.method));
  j["resolution"] = report.resolution;
  j["converged"] = report.converged;
  j["iterations"] = report.iterations;
  write_output(resolve_path(config, options), j.dump(2) + "\n");
  return kExitOk;
}

int cmd_compare(const ScenarioConfig& config, const CommandOptions& options) {
  WaveProblem problem(config.character, config.x0, config.y0);
  CircleGrid grid(1024);
  std::vector<double> times = config.times.values();
  std::string content = "t,max_abs_error\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    double error = compare_solver_to_classical(problem, times[i], grid);
    content += format_double(times[i]) + "," + format_double(error) + "\n";
    if (!config.output.samples_path.empty()) {
      WaveState state = evolve_coefficient_form(problem, times[i]);
      std::vector<Complex> samples = evaluate_on_circle(state.u, grid);
      std::string dump = "theta,re,im\n";
      for (int k = 0; k < grid.size; ++k) {
        dump += format_double(grid.node(k)) + "," +
                format_double(samples[k].real()) + "," +
                format_double(samples[k].imag()) + "\n";
      }
      char suffix[32];
      std::snprintf(suffix, sizeof suffix, "_%04zu.csv", i);
      write_output(config.output.samples_path + suffix, dump);
    }
  }
  write_output(resolve_path(config, options), content);
  return kExitOk;
}

}  // namespace groupwave
