#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace adiawalk::cli {

using Json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

enum class ParamType { Number, Integer, String, NumberList, IntegerList, StringList };

struct ParamSpec {
  std::string name;
  ParamType type;
  Json default_value;
  std::string help;
};

struct ExperimentConfig {
  std::string experiment;
  Json parameters = Json::object();  // fully resolved, defaults filled in
  std::uint64_t seed = 0;
  std::string output_path;
};

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct ExperimentOutput {
  Table table;
  std::optional<Json> summary;
};

struct ExperimentInfo {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
  std::function<ExperimentOutput(const ExperimentConfig&)> run;
};

const std::vector<ExperimentInfo>& experiments();
const ExperimentInfo* find_experiment(const std::string& name);

// Parses a command-line string into a value of the given type.
Json coerce_string(const ParamSpec& spec, const std::string& text);
// Validates a JSON value against the type, widening scalars to one-element lists.
Json coerce_json(const ParamSpec& spec, const Json& value);

// Fills defaults and rejects unknown keys. Throws InputError.
Json resolve_parameters(const ExperimentInfo& info, const Json& given);

Json resolved_config_json(const ExperimentConfig& cfg);
std::uint64_t fnv1a64(const std::string& bytes);
std::string config_hash(const ExperimentConfig& cfg);

std::string format_number(double x);
std::string format_cell(const Cell& c);
std::vector<std::string> metadata_lines(const ExperimentConfig& cfg, const std::string& timestamp);
void write_csv(std::ostream& os, const ExperimentConfig& cfg, const Table& table, const std::string& timestamp);
Json summary_with_metadata(const ExperimentConfig& cfg, const Json& summary, const std::string& timestamp);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& contents);
// out.csv -> out.json; other names get ".json" appended.
std::string summary_path(const std::string& csv_path);

std::string list_text();

// Entry point; returns the process exit status.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace adiawalk::cli
