#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vexh {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat sectioned key = value text format:
//   [section]
//   key = value      # comment
struct ConfigFile {
    std::string raw_text;  // echoed verbatim into the report header
    std::map<std::string, std::map<std::string, std::string>> sections;

    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_text(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<std::string> keys(const std::string& section) const;
};

} // namespace vexh
