#pragma once

#include <cstdint>
#include <string>

#include "symfun/memo.hpp"

namespace symfun {

/// Persistent coefficient cache: a versioned, checksummed JSON file with
/// sections for character, Littlewood-Richardson, Kronecker and basis
/// plethysm coefficients (all exact integers keyed by partition tuples).
struct CacheInfo {
    int version = 0;
    std::size_t characters = 0;
    std::size_t lr_products = 0;
    std::size_t kron_products = 0;
    std::size_t pleth_basis = 0;
};

inline constexpr int cache_format_version = 1;

/// Serializes the persistable sections of the given tables; deterministic
/// byte-for-byte for equal contents. Throws IoError on filesystem failure.
void cache_save(const MemoTables& tables, const std::string& path);

/// Loads a cache file into the tables. A missing file loads an empty cache
/// and succeeds; a malformed, version-mismatched or checksum-mismatched
/// file throws IoError and leaves the tables untouched. Loading is
/// idempotent.
CacheInfo cache_load(MemoTables& tables, const std::string& path);

/// Parses only the header and section sizes (same failure modes as load).
CacheInfo cache_inspect(const std::string& path);

} // namespace symfun
