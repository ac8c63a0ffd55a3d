#pragma once

#include <string>

namespace skeinlab {

/// Hex-encoded SHA-256 digest of a byte string.
std::string sha256_hex(const std::string& data);

}  // namespace skeinlab
