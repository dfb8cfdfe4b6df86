#pragma once

#include <filesystem>
#include <span>
#include <string>

namespace abelcycle::cli {

/// Shortest form is not used: CSV must be byte-stable, so 17 significant
/// digits in the C locale.
std::string fmt(double x);

/// Joins already formatted fields with ',' and terminates with '\n'.
std::string csv_row(std::span<const double> values);

/// Writes `payload` to `path` through a sibling temp file and rename.
/// Throws std::runtime_error on I/O failure.
void write_atomic(const std::filesystem::path& path, const std::string& payload);

}  // namespace abelcycle::cli
