#ifndef WRONQ_CACHE_HPP
#define WRONQ_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

namespace wronq {

// Bump when any serialized layout changes; stale entries are then ignored.
inline constexpr const char* kCacheFormatVersion = "v1";

// Key for one cached computation: operation + spec label + requested terms,
// prefixed with the format version. Safe as a file name.
std::string cache_key(const std::string& operation, const std::string& spec_label,
                      long terms);

// Verbatim payload of a previous run, if present.
std::optional<std::string> cache_lookup(const std::filesystem::path& dir,
                                        const std::string& key);

// Atomic write-then-rename; concurrent writers leave one winner and no
// partial files.
void cache_store(const std::filesystem::path& dir, const std::string& key,
                 const std::string& payload);

} // namespace wronq

#endif // WRONQ_CACHE_HPP
