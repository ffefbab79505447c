#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace pakforge::digest {

/// Name of the digest algorithm baked into this build; recorded in manifest
/// headers so snapshots are comparable only when algorithms match.
const std::string& algorithm();

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// Lowercase hex SHA-256 of a file's contents, streamed.
std::string sha256_file(const std::filesystem::path& file);

} // namespace pakforge::digest
