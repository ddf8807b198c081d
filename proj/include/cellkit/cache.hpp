// Binary cache files for KL tables and h-tensors.
//
// Layout (little-endian): magic "CELLKIT\0", u32 format version, u32 n,
// u32 payload kind, u64 record count, u64 raw and u64 deflated payload size,
// the zlib-deflated records, then a u32 CRC-32 of all preceding bytes.  A
// record is a list of permutations (n bytes each, one-line notation) followed
// by a Laurent polynomial: u32 term count, then per term an i32 exponent and a
// decimal coefficient string (u32 length + bytes).
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "cellkit/lusztig.hpp"

namespace cellkit {

constexpr std::uint32_t kCacheVersion = 1;

enum class CacheKind : std::uint32_t { kl_table = 1, h_tensor = 2 };

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::filesystem::path cache_path(const std::filesystem::path& dir, CacheKind kind, int n);

/// Writes to a temporary file in the same directory, then renames it into place.
void save_kl_table(const std::filesystem::path& file, const KLTable& table);
void save_h_tensor(const std::filesystem::path& file, const HTensor& tensor);

/// Throws CacheError on a missing, truncated, corrupt or stale file.
std::shared_ptr<KLTable> load_kl_table(const std::filesystem::path& file, int n);
std::shared_ptr<HTensor> load_h_tensor(const std::filesystem::path& file, int n);

}  // namespace cellkit
