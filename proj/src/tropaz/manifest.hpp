#ifndef TROPAZ_MANIFEST_HPP
#define TROPAZ_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tropaz {

inline constexpr const char* kToolVersion = "tropaz 0.1.0";

// Everything that determines a run's output; the hash is embedded in every
// emitted artifact for reproducibility.
struct RunManifest {
    std::string config_path;
    std::string config_bytes;
    std::string subcommand;
    std::vector<std::string> args;
    std::uint64_t seed = 0;
    unsigned precision_bits = 256;
    unsigned quadrature_nodes = 256;

    std::string hash_hex() const;
};

std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t h = 1469598103934665603ULL);

} // namespace tropaz

#endif
