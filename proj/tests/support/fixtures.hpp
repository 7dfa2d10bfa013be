#pragma once

#include <random>
#include <string>
#include <utility>

#include "skyrank/model.hpp"

namespace skyrank::testing {

/// Eight game records over (Rarity, Duration, Win) with mixed directions:
/// the running example every golden test pins down. Skyline is {1, 2, 4}.
inline std::string battle_csv() {
    return "RowId,Rarity,Duration,Win\n"
           "1,5,20,70\n"
           "2,4,60,50\n"
           "3,5,30,60\n"
           "4,1,80,60\n"
           "5,5,90,40\n"
           "6,9,30,50\n"
           "7,7,80,40\n"
           "8,9,90,30\n";
}

inline const char* battle_prefs() { return "Rarity:MIN,Duration:MIN,Win:MAX"; }

inline Dataset battle_dataset() {
    Eigen::MatrixXd values(8, 3);
    values << 5, 20, 70,
              4, 60, 50,
              5, 30, 60,
              1, 80, 60,
              5, 90, 40,
              9, 30, 50,
              7, 80, 40,
              9, 90, 30;
    return Dataset::create({"Rarity", "Duration", "Win"}, values,
                           {1, 2, 3, 4, 5, 6, 7, 8});
}

inline PreferenceSpec battle_spec() {
    return PreferenceSpec{{Direction::Min, Direction::Min, Direction::Max}};
}

/// Uniform random dataset for property tests; deterministic per seed.
inline Dataset random_dataset(std::mt19937_64& rng, Eigen::Index n, Eigen::Index d,
                              int lo = 1, int hi = 40) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Eigen::MatrixXd values(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < d; ++j) values(i, j) = dist(rng);
    std::vector<std::string> names;
    std::vector<RowId> ids;
    for (Eigen::Index j = 0; j < d; ++j) names.push_back("A" + std::to_string(j + 1));
    for (Eigen::Index i = 0; i < n; ++i) ids.push_back(i + 1);
    return Dataset::create(std::move(names), std::move(values), std::move(ids));
}

inline PreferenceSpec random_prefs(std::mt19937_64& rng, Eigen::Index d) {
    PreferenceSpec p;
    for (Eigen::Index j = 0; j < d; ++j)
        p.dirs.push_back(rng() % 2 ? Direction::Min : Direction::Max);
    return p;
}

}  // namespace skyrank::testing
