#pragma once

#include <string>

#include "nilcount/int_types.hpp"

namespace nilcount {

// Write-new-then-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

// Accepts plain decimal or scientific notation with an integral value
// ("1e9", "2.5e3"); exact, no floating-point round trip.
u64 parse_u64_scientific(const std::string& text);

} // namespace nilcount
