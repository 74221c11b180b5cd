// Test support: locate the data/ fixture directory from the test working
// directory or the VKNOT_DATA_DIR environment variable.

#pragma once

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

namespace vknot::testsupport {

inline std::string data_path(const std::string& name) {
    if (const char* env = std::getenv("VKNOT_DATA_DIR")) return std::string(env) + "/" + name;
    for (const char* prefix : {"data/", "../data/", "../../data/"}) {
        const std::string candidate = prefix + name;
        if (std::ifstream(candidate).good()) return candidate;
    }
    throw std::runtime_error("fixture not found: " + name +
                             " (set VKNOT_DATA_DIR or run from the repository root)");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

} // namespace vknot::testsupport
