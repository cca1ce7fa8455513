#include <wronq/cache.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace wronq {

std::string cache_key(const std::string& operation, const std::string& spec_label,
                      long terms) {
    std::string raw = std::string(kCacheFormatVersion) + "-" + operation + "-" + spec_label +
                      "-t" + std::to_string(terms);
    for (auto& ch : raw)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '.')
            ch = '_';
    return raw + ".json";
}

std::optional<std::string> cache_lookup(const std::filesystem::path& dir,
                                        const std::string& key) {
    std::ifstream in(dir / key, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void cache_store(const std::filesystem::path& dir, const std::string& key,
                 const std::string& payload) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;  // cache is best-effort
    auto tmp = dir / (key + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << payload;
    }
    std::filesystem::rename(tmp, dir / key, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

} // namespace wronq
