#include "photonbox/amplitude_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace photonbox {

namespace {

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& field, std::size_t line_no) {
    const std::string token = strip(field);
    double value = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw std::runtime_error("amplitude csv: bad number on line " +
                                 std::to_string(line_no));
    }
    return value;
}

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

}  // namespace

std::vector<AmplitudeRow> read_amplitude_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<AmplitudeRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = strip(line);
        if (trimmed.empty()) continue;
        if (!header_seen) {
            if (trimmed != "omega,re,im") {
                throw std::runtime_error(
                    "amplitude csv: expected header 'omega,re,im'");
            }
            header_seen = true;
            continue;
        }
        std::stringstream fields(trimmed);
        std::string omega_s, re_s, im_s, extra;
        if (!std::getline(fields, omega_s, ',') ||
            !std::getline(fields, re_s, ',') ||
            !std::getline(fields, im_s, ',')) {
            throw std::runtime_error("amplitude csv: bad row on line " +
                                     std::to_string(line_no));
        }
        if (std::getline(fields, extra, ',')) {
            throw std::runtime_error("amplitude csv: too many fields on line " +
                                     std::to_string(line_no));
        }
        rows.push_back({parse_double(omega_s, line_no),
                        parse_double(re_s, line_no),
                        parse_double(im_s, line_no)});
    }
    if (!header_seen) {
        throw std::runtime_error("amplitude csv: missing header");
    }
    return rows;
}

std::vector<AmplitudeRow> read_amplitude_csv_file(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open amplitude csv: " + path.string());
    }
    return read_amplitude_csv(in);
}

void write_amplitude_csv(std::ostream& out,
                         const SpectralAmplitude& amplitude) {
    out << "omega,re,im\n";
    const auto& grid = amplitude.grid();
    for (std::size_t k = 0; k < grid.count; ++k) {
        const cdouble v = amplitude.values()[k];
        out << format_double(grid.omega(k)) << ',' << format_double(v.real())
            << ',' << format_double(v.imag()) << '\n';
    }
}

}  // namespace photonbox
