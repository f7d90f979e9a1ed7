#include "adiawalk/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "adiawalk/errors.hpp"
#include "adiawalk/parallel.hpp"

#ifndef ADIAWALK_VERSION
#define ADIAWALK_VERSION "unknown"
#endif

namespace adiawalk::cli {

namespace {

const char* type_name(ParamType t) {
  switch (t) {
    case ParamType::Number: return "number";
    case ParamType::Integer: return "integer";
    case ParamType::String: return "string";
    case ParamType::NumberList: return "list of numbers";
    case ParamType::IntegerList: return "list of integers";
    case ParamType::StringList: return "list of strings";
  }
  return "value";
}

bool is_list(ParamType t) {
  return t == ParamType::NumberList || t == ParamType::IntegerList || t == ParamType::StringList;
}

double parse_number(const std::string& name, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v))
    throw InputError("parameter '" + name + "': '" + text + "' is not a finite number");
  return v;
}

// Accepts plain integers, integral floats such as 1e5, and powers written 2^k.
std::int64_t parse_integer(const std::string& name, const std::string& text) {
  if (auto caret = text.find('^'); caret != std::string::npos) {
    const auto base = parse_integer(name, text.substr(0, caret));
    const auto exp = parse_integer(name, text.substr(caret + 1));
    if (base < 0 || exp < 0 || std::pow(double(base), double(exp)) > 9e18)
      throw InputError("parameter '" + name + "': power '" + text + "' out of range");
    std::int64_t v = 1;
    for (std::int64_t k = 0; k < exp; ++k) v *= base;
    return v;
  }
  const double v = parse_number(name, text);
  if (v != std::floor(v) || std::abs(v) > 9e18)
    throw InputError("parameter '" + name + "': '" + text + "' is not an integer");
  return static_cast<std::int64_t>(v);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Json coerce_scalar(const ParamSpec& spec, ParamType scalar, const Json& v) {
  switch (scalar) {
    case ParamType::Number:
      if (v.is_number() && std::isfinite(v.get<double>())) return v.get<double>();
      if (v.is_string()) return parse_number(spec.name, v.get<std::string>());
      break;
    case ParamType::Integer:
      if (v.is_number_integer()) return v.get<std::int64_t>();
      if (v.is_number_float()) {
        const double d = v.get<double>();
        if (d == std::floor(d) && std::abs(d) <= 9e18) return static_cast<std::int64_t>(d);
      }
      if (v.is_string()) return parse_integer(spec.name, v.get<std::string>());
      break;
    case ParamType::String:
      if (v.is_string()) return v;
      break;
    default: break;
  }
  throw InputError("parameter '" + spec.name + "' expects a " + type_name(spec.type));
}

ParamType element_type(ParamType t) {
  switch (t) {
    case ParamType::NumberList: return ParamType::Number;
    case ParamType::IntegerList: return ParamType::Integer;
    case ParamType::StringList: return ParamType::String;
    default: return t;
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string valid_names() {
  std::string s;
  for (const auto& e : experiments()) s += (s.empty() ? "" : ", ") + e.name;
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Json coerce_string(const ParamSpec& spec, const std::string& text) {
  if (!is_list(spec.type)) return coerce_json(spec, Json(text));
  Json arr = Json::array();
  for (const auto& part : split_commas(text)) {
    if (part.empty()) throw InputError("parameter '" + spec.name + "' has an empty list entry");
    arr.push_back(coerce_scalar(spec, element_type(spec.type), Json(part)));
  }
  return arr;
}

Json coerce_json(const ParamSpec& spec, const Json& value) {
  if (!is_list(spec.type)) return coerce_scalar(spec, spec.type, value);
  if (value.is_string()) return coerce_string(spec, value.get<std::string>());
  Json arr = Json::array();
  if (value.is_array()) {
    for (const auto& v : value) arr.push_back(coerce_scalar(spec, element_type(spec.type), v));
  } else {
    arr.push_back(coerce_scalar(spec, element_type(spec.type), value));
  }
  if (arr.empty()) throw InputError("parameter '" + spec.name + "' must not be empty");
  return arr;
}

Json resolve_parameters(const ExperimentInfo& info, const Json& given) {
  if (!given.is_object()) throw InputError("parameters must be a JSON object");
  Json out = Json::object();
  for (const auto& [key, value] : given.items()) {
    auto it = std::find_if(info.params.begin(), info.params.end(), [&](const auto& p) { return p.name == key; });
    if (it == info.params.end()) {
      std::string known;
      for (const auto& p : info.params) known += (known.empty() ? "" : ", ") + p.name;
      throw InputError("unknown parameter '" + key + "' for " + info.name + " (known: " + known + ")");
    }
    out[key] = coerce_json(*it, value);
  }
  for (const auto& p : info.params)
    if (!out.contains(p.name)) out[p.name] = p.default_value;
  return out;
}

Json resolved_config_json(const ExperimentConfig& cfg) {
  return Json{{"experiment", cfg.experiment}, {"parameters", cfg.parameters}, {"seed", cfg.seed}};
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string config_hash(const ExperimentConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(resolved_config_json(cfg).dump())));
  return buf;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::vector<std::string> metadata_lines(const ExperimentConfig& cfg, const std::string& timestamp) {
  return {
      std::string("# adiawalk ") + ADIAWALK_VERSION,
      "# experiment: " + cfg.experiment,
      "# config: " + resolved_config_json(cfg).dump(),
      "# config-hash: fnv1a64:" + config_hash(cfg),
      "# seed: " + std::to_string(cfg.seed) + " (mt19937_64)",
      "# created: " + timestamp,
  };
}

void write_csv(std::ostream& os, const ExperimentConfig& cfg, const Table& table, const std::string& timestamp) {
  for (const auto& line : metadata_lines(cfg, timestamp)) os << line << '\n';
  for (std::size_t k = 0; k < table.header.size(); ++k) os << (k ? "," : "") << table.header[k];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << format_cell(row[k]);
    os << '\n';
  }
}

Json summary_with_metadata(const ExperimentConfig& cfg, const Json& summary, const std::string& timestamp) {
  Json out = summary;
  out["metadata"] = Json{{"version", ADIAWALK_VERSION},
                         {"config", resolved_config_json(cfg)},
                         {"config_hash", "fnv1a64:" + config_hash(cfg)},
                         {"generator", "mt19937_64"},
                         {"created", timestamp}};
  return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw InputError("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw InputError("cannot move output into place at '" + path + "'");
  }
}

std::string summary_path(const std::string& csv_path) {
  std::filesystem::path p(csv_path);
  if (p.extension() == ".csv") return p.replace_extension(".json").string();
  return csv_path + ".json";
}

std::string list_text() {
  std::ostringstream os;
  for (const auto& e : experiments()) {
    os << e.name << "\n  " << e.description << "\n";
    for (const auto& p : e.params)
      os << "    --" << p.name << " (" << type_name(p.type) << ", default " << p.default_value.dump() << ")  "
         << p.help << "\n";
  }
  return os.str();
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete adiabatic walk experiments", "adiawalk"};
  app.allow_extras();
  std::string name, config_file, out_path;
  std::optional<std::int64_t> threads;
  std::optional<std::uint64_t> seed;
  bool list = false;
  app.add_option("experiment", name, "experiment name");
  app.add_option("--config", config_file, "JSON config file");
  app.add_option("--out", out_path, "output CSV path ('-' for stdout)");
  app.add_option("--threads", threads, "worker threads (default: ADIAWALK_THREADS or all cores)");
  app.add_option("--seed", seed, "seed for the mt19937_64 generator");
  app.add_flag("--list", list, "describe the experiments and their parameters");
  app.set_version_flag("--version", ADIAWALK_VERSION);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }
  if (list) {
    out << list_text();
    return kExitOk;
  }

  ExperimentConfig cfg;
  const ExperimentInfo* info = nullptr;
  try {
    Json file_cfg = Json::object();
    if (!config_file.empty()) {
      try {
        file_cfg = Json::parse(read_file(config_file));
      } catch (const Json::parse_error& e) {
        throw InputError("config file is not valid JSON: " + std::string(e.what()));
      }
      if (!file_cfg.is_object()) throw InputError("config file must hold a JSON object");
      for (const auto& [key, _] : file_cfg.items())
        if (key != "experiment" && key != "parameters" && key != "seed" && key != "output")
          throw InputError("unknown config key '" + key + "' (known: experiment, parameters, seed, output)");
    }
    if (file_cfg.contains("experiment")) {
      if (!file_cfg["experiment"].is_string()) throw InputError("config 'experiment' must be a string");
      const auto from_file = file_cfg["experiment"].get<std::string>();
      if (!name.empty() && name != from_file)
        throw InputError("experiment '" + name + "' conflicts with '" + from_file + "' in the config file");
      name = from_file;
    }
    if (name.empty()) throw InputError("no experiment given; valid names: " + valid_names());
    info = find_experiment(name);
    if (!info) throw InputError("unknown experiment '" + name + "'; valid names: " + valid_names());
    cfg.experiment = name;

    Json given = file_cfg.value("parameters", Json::object());
    if (!given.is_object()) throw InputError("config 'parameters' must be an object");
    const auto extras = app.remaining();
    for (std::size_t i = 0; i < extras.size(); ++i) {
      std::string key = extras[i], value;
      if (key.rfind("--", 0) != 0) throw InputError("unexpected argument '" + key + "'");
      key = key.substr(2);
      if (auto eq = key.find('='); eq != std::string::npos) {
        value = key.substr(eq + 1);
        key = key.substr(0, eq);
      } else {
        if (i + 1 >= extras.size()) throw InputError("parameter '--" + key + "' needs a value");
        value = extras[++i];
      }
      auto it = std::find_if(info->params.begin(), info->params.end(), [&](const auto& p) { return p.name == key; });
      if (it == info->params.end()) {
        given[key] = value;  // reported by resolve_parameters
      } else {
        given[key] = coerce_string(*it, value);
      }
    }
    cfg.parameters = resolve_parameters(*info, given);

    if (seed) {
      cfg.seed = *seed;
    } else if (file_cfg.contains("seed")) {
      if (!file_cfg["seed"].is_number_unsigned()) throw InputError("config 'seed' must be a nonnegative integer");
      cfg.seed = file_cfg["seed"].get<std::uint64_t>();
    }
    if (!out_path.empty()) {
      cfg.output_path = out_path;
    } else if (file_cfg.contains("output")) {
      if (!file_cfg["output"].is_string()) throw InputError("config 'output' must be a string");
      cfg.output_path = file_cfg["output"].get<std::string>();
    } else {
      cfg.output_path = name + ".csv";
    }

    std::int64_t n_threads = 0;
    if (threads) {
      n_threads = *threads;
    } else if (const char* env = std::getenv("ADIAWALK_THREADS"); env && *env) {
      n_threads = parse_integer("ADIAWALK_THREADS", env);
    }
    if (n_threads < 0) throw InputError("thread count must be nonnegative");
    set_thread_count(static_cast<int>(n_threads));
  } catch (const Error& e) {
    err << "adiawalk: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    const auto result = info->run(cfg);
    const auto stamp = utc_timestamp();
    std::ostringstream csv;
    write_csv(csv, cfg, result.table, stamp);
    if (cfg.output_path == "-") {
      out << csv.str();
    } else {
      write_file_atomic(cfg.output_path, csv.str());
      if (result.summary) {
        write_file_atomic(summary_path(cfg.output_path),
                          summary_with_metadata(cfg, *result.summary, stamp).dump(2) + "\n");
      }
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "adiawalk: " << e.what() << '\n';
    return kExitConfig;
  } catch (const GaplessError& e) {
    err << "adiawalk: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NumericalError& e) {
    err << "adiawalk: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "adiawalk: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace adiawalk::cli
