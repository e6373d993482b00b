#include "tropaz/manifest.hpp"

#include <cstdio>

namespace tropaz {

std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string RunManifest::hash_hex() const {
    std::uint64_t h = fnv1a64(kToolVersion);
    h = fnv1a64(config_bytes, h);
    h = fnv1a64(subcommand, h);
    for (const std::string& a : args) h = fnv1a64(a, h);
    h = fnv1a64(std::to_string(seed), h);
    h = fnv1a64(std::to_string(precision_bits), h);
    h = fnv1a64(std::to_string(quadrature_nodes), h);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace tropaz
