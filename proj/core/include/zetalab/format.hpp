#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace zetalab {

// Fixed 15-significant-digit rendering used for every emitted number.
std::string fmt_g15(double v);

// FNV-1a, used for the run-manifest checksums of emitted files.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace zetalab
