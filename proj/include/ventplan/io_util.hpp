#pragma once

#include <filesystem>
#include <string>

namespace ventplan {

std::string read_text_file(const std::filesystem::path& path);

// Writes to a sibling temp file then renames, so readers never see a
// half-written file.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace ventplan
