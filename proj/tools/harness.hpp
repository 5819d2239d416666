#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cli {

inline constexpr const char* kToolVersion = "1.0.0";

/// Shortest decimal text that round-trips back to the same double.
std::string format_double(double value);

/// Current wall-clock time as UTC ISO-8601 with seconds precision.
std::string timestamp_utc();

/// Content hash of the canonical (compact) JSON serialization.
std::string config_digest(const nlohmann::json& resolved_config);

/// Writes through a sibling temp file and renames it into place, so readers
/// never observe a partially written artifact.
void atomic_write(const std::filesystem::path& path,
                  const std::string& content);

/// A named CSV artifact: filename plus full body text.
struct CsvArtifact {
    std::string filename;
    std::string body;
};

/// Everything one subcommand run leaves on disk. `result` lands in
/// result.json without any timestamp so reruns are byte-identical; the
/// manifest carries the timestamp, digest and fully resolved config.
struct RunArtifacts {
    std::string subcommand;
    std::uint64_t seed = 0;
    nlohmann::json resolved_config;
    nlohmann::json result;
    std::optional<std::string> trials_csv;
    std::vector<CsvArtifact> plot_data;
};

/// Writes result.json, manifest.json and any CSV artifacts into `out_dir`,
/// creating the directory when needed.
void write_run_artifacts(const std::filesystem::path& out_dir,
                         const RunArtifacts& artifacts);

/// Loads and parses the config file; throws std::invalid_argument on a
/// missing file, malformed JSON, or a non-object root.
nlohmann::json load_config_file(const std::filesystem::path& path);

/// Throws std::invalid_argument when `config` holds a key outside `allowed`.
void reject_unknown_keys(const nlohmann::json& config,
                         const std::vector<std::string>& allowed,
                         const std::string& context);

/// Fetches config[key] as a double / integer / string, naming the offending
/// key on a type mismatch. Returns `fallback` when the key is absent.
double config_number(const nlohmann::json& config, const std::string& key,
                     double fallback);
std::uint64_t config_integer(const nlohmann::json& config,
                             const std::string& key, std::uint64_t fallback);
std::string config_string(const nlohmann::json& config, const std::string& key,
                          const std::string& fallback);

/// Final value of one setting: an explicit flag beats the config file, the
/// config file beats the built-in default.
template <typename T, typename U>
T resolve_setting(const std::optional<U>& flag, T config_value) {
    if (flag.has_value()) {
        return static_cast<T>(*flag);
    }
    return config_value;
}

}  // namespace cli
