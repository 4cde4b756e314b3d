#pragma once

#include <stdexcept>
#include <string>

namespace blamelab {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    int line;  // 1-based; 0 when not line-addressable
    FormatError(const std::string& msg, int line_no)
        : std::runtime_error(msg), line(line_no) {}
};

std::string read_file(const std::string& path);

// Writes via a sibling temp file and rename, so readers never observe a
// partial file.
void write_file_atomic(const std::string& path, const std::string& content);

void make_dirs(const std::string& path);

}  // namespace blamelab
