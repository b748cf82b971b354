#pragma once

#include <string>

namespace singer {

// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace singer
