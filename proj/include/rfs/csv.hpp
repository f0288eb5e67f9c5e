#pragma once

#include <string>

namespace rfs {

// Shortest-round-trip style formatting used everywhere determinism is
// claimed: %.17g always reproduces the exact double on read-back.
std::string format_g17(double v);

// Display precision for reports (12 significant digits).
std::string format_g12(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace rfs
