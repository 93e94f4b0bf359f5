#pragma once

#include <string>
#include <string_view>

namespace ontosim {

/// Writes via a temp file in the same directory plus an atomic rename, so a
/// failed run never leaves a partial output behind.
void write_file_atomic(const std::string& path, std::string_view content);

/// Fixed 6-decimal rendering used by every CSV/JSON emitter ("inf" for
/// infinities), keeping outputs byte-stable across runs.
std::string fmt6(double v);

/// RFC-4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace ontosim
