#pragma once

#include <cstdint>

#include "skyrank/model.hpp"

namespace skyrank {

/// SplitMix64 output for counter k under the given seed. A pure function of
/// (seed, k): the generator is the sequence-split form, state seed + (k+1) *
/// golden gamma pushed through the 64-bit finalizer, so any slice of the
/// counter space can be produced independently and identically on every
/// platform.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k);

constexpr std::uint64_t kDefaultSeed = 42;

struct GenSpec {
    std::int64_t n = 0;
    int d = 1;
    std::uint64_t seed = kDefaultSeed;
    /// Inclusive integer bounds, one pair per attribute; a single pair is
    /// broadcast to all attributes.
    std::vector<std::pair<std::int64_t, std::int64_t>> value_range = {{1, 1000}};

    void validate() const;
};

/// n rows of d independent uniform integer attributes, RowIds 1..n. The
/// value at (row i, column j) is splitmix64_at(seed, i * d + j) reduced to
/// the attribute's range, so identical specs give identical datasets.
Dataset generate_independent(const GenSpec& spec);

}  // namespace skyrank
