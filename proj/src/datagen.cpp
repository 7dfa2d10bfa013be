#include "skyrank/datagen.hpp"

#include <numeric>

namespace skyrank {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void GenSpec::validate() const {
    if (n < 0) throw ParameterError("row count must be non-negative");
    if (d < 1) throw ParameterError("dimension count must be at least 1");
    if (value_range.empty())
        throw ParameterError("value range list must not be empty");
    if (value_range.size() != 1 && value_range.size() != static_cast<std::size_t>(d))
        throw ParameterError("value range list must have one entry or one per attribute");
    for (const auto& [lo, hi] : value_range)
        if (lo > hi)
            throw ParameterError("value range " + std::to_string(lo) + ".." +
                                 std::to_string(hi) + " is empty");
}

Dataset generate_independent(const GenSpec& spec) {
    spec.validate();
    const Eigen::Index n = static_cast<Eigen::Index>(spec.n);
    const Eigen::Index d = static_cast<Eigen::Index>(spec.d);

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index j = 0; j < d; ++j)
        names.push_back("A" + std::to_string(j + 1));

    Eigen::MatrixXd values(n, d);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            const auto& [lo, hi] =
                spec.value_range[spec.value_range.size() == 1
                                     ? 0
                                     : static_cast<std::size_t>(j)];
            const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
            const std::uint64_t raw = splitmix64_at(
                spec.seed, static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(d) +
                               static_cast<std::uint64_t>(j));
            values(i, j) = static_cast<double>(lo + static_cast<std::int64_t>(raw % span));
        }
    }

    std::vector<RowId> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), RowId{1});
    return Dataset::create(std::move(names), std::move(values), std::move(ids));
}

}  // namespace skyrank
