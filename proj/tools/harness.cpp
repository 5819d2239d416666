#include "harness.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "photonbox/stats.hpp"

namespace cli {

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    const auto [end, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc()) {
        throw std::runtime_error("failed to format a number");
    }
    return std::string(buffer.data(), end);
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::array<char, 32> buffer{};
    std::strftime(buffer.data(), buffer.size(), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer.data();
}

std::string config_digest(const nlohmann::json& resolved_config) {
    const std::string canonical = resolved_config.dump();
    std::array<char, 32> hex{};
    std::snprintf(hex.data(), hex.size(), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(
                      photonbox::fnv1a64(canonical)));
    return hex.data();
}

void atomic_write(const std::filesystem::path& path,
                  const std::string& content) {
    const std::filesystem::path temp = path.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + temp.string() +
                                     " for writing");
        }
        out << content;
        if (!out.flush()) {
            throw std::runtime_error("failed writing " + temp.string());
        }
    }
    std::filesystem::rename(temp, path);
}

void write_run_artifacts(const std::filesystem::path& out_dir,
                         const RunArtifacts& artifacts) {
    std::filesystem::create_directories(out_dir);

    atomic_write(out_dir / "result.json", artifacts.result.dump(2) + "\n");

    nlohmann::json manifest;
    manifest["subcommand"] = artifacts.subcommand;
    manifest["config_digest"] = config_digest(artifacts.resolved_config);
    manifest["seed"] = artifacts.seed;
    manifest["tool_version"] = kToolVersion;
    manifest["timestamp"] = timestamp_utc();
    manifest["resolved_config"] = artifacts.resolved_config;
    atomic_write(out_dir / "manifest.json", manifest.dump(2) + "\n");

    if (artifacts.trials_csv.has_value()) {
        atomic_write(out_dir / "trials.csv", *artifacts.trials_csv);
    }
    for (const CsvArtifact& plot : artifacts.plot_data) {
        atomic_write(out_dir / plot.filename, plot.body);
    }
}

nlohmann::json load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("config file not found: " +
                                    path.string());
    }
    nlohmann::json config;
    try {
        in >> config;
    } catch (const nlohmann::json::parse_error& error) {
        throw std::invalid_argument("config file " + path.string() +
                                    " is not valid JSON: " + error.what());
    }
    if (!config.is_object()) {
        throw std::invalid_argument("config file " + path.string() +
                                    " must hold a JSON object");
    }
    return config;
}

void reject_unknown_keys(const nlohmann::json& config,
                         const std::vector<std::string>& allowed,
                         const std::string& context) {
    for (const auto& item : config.items()) {
        bool known = false;
        for (const std::string& key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument("unknown " + context +
                                        " config key '" + item.key() + "'");
        }
    }
}

double config_number(const nlohmann::json& config, const std::string& key,
                     double fallback) {
    if (!config.contains(key)) {
        return fallback;
    }
    if (!config[key].is_number()) {
        throw std::invalid_argument("config key '" + key +
                                    "' must be a number");
    }
    return config[key].get<double>();
}

std::uint64_t config_integer(const nlohmann::json& config,
                             const std::string& key, std::uint64_t fallback) {
    if (!config.contains(key)) {
        return fallback;
    }
    if (!config[key].is_number_integer() ||
        (config[key].is_number_integer() && config[key].get<double>() < 0)) {
        throw std::invalid_argument("config key '" + key +
                                    "' must be a non-negative integer");
    }
    return config[key].get<std::uint64_t>();
}

std::string config_string(const nlohmann::json& config, const std::string& key,
                          const std::string& fallback) {
    if (!config.contains(key)) {
        return fallback;
    }
    if (!config[key].is_string()) {
        throw std::invalid_argument("config key '" + key +
                                    "' must be a string");
    }
    return config[key].get<std::string>();
}

}  // namespace cli
