#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "unilog/matrix.hpp"

namespace unilog {

/// Seeded generator for the benchmark ensembles.
///
/// Bits come from std::mt19937_64 (fully specified by the standard); uniforms
/// take the top 53 bits and normals use the Box-Muller transform, so streams
/// are identical across standard libraries.
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64/box-muller";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform();
    /// Standard normal.
    double normal();
    /// Circular complex normal with E|z|^2 = 1.
    Complex complex_normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Independent sub-seed for stream `index` (splitmix64 of seed and index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace unilog
