#include "skyrank/skyline.hpp"

#include <algorithm>
#include <numeric>

namespace skyrank {

bool dominates(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b,
               const PreferenceSpec& p) {
    if (a.size() != b.size() || a.size() != p.size())
        throw ContractError("dominance test over mismatched dimensions");
    bool strict = false;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        const double x = a(j);
        const double y = b(j);
        if (p.dirs[static_cast<std::size_t>(j)] == Direction::Min) {
            if (x > y) return false;
            if (x < y) strict = true;
        } else {
            if (x < y) return false;
            if (x > y) strict = true;
        }
    }
    return strict;
}

namespace {

// Direction-adjusted copy where smaller is always better. Row-major so the
// pairwise scans walk contiguous memory.
using BadnessMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

BadnessMatrix badness_matrix(const Dataset& d, const PreferenceSpec& p) {
    if (p.size() != d.n_dims())
        throw ContractError("preference count does not match attribute count");
    BadnessMatrix out(d.n_rows(), d.n_dims());
    for (Eigen::Index j = 0; j < d.n_dims(); ++j)
        out.col(j) = (p.dirs[static_cast<std::size_t>(j)] == Direction::Min)
                         ? d.values.col(j)
                         : (-d.values.col(j)).eval();
    return out;
}

inline bool badness_dominates(const double* a, const double* b, Eigen::Index dims) {
    bool strict = false;
    for (Eigen::Index j = 0; j < dims; ++j) {
        if (a[j] > b[j]) return false;
        if (a[j] < b[j]) strict = true;
    }
    return strict;
}

}  // namespace

std::vector<Eigen::Index> skyline_of_rows(const Dataset& d, const PreferenceSpec& p,
                                          const std::vector<Eigen::Index>& rows) {
    const BadnessMatrix bad = badness_matrix(d, p);
    const Eigen::Index dims = d.n_dims();

    // Any positively-weighted badness sum is monotone under dominance, so a
    // scan in key order only ever meets dominators before the points they
    // dominate (ties aside, which the in-window eviction pass covers).
    std::vector<Eigen::Index> order = rows;
    std::vector<double> key(static_cast<std::size_t>(d.n_rows()), 0.0);
    for (Eigen::Index r : rows)
        key[static_cast<std::size_t>(r)] = bad.row(r).sum();
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        const double ka = key[static_cast<std::size_t>(a)];
        const double kb = key[static_cast<std::size_t>(b)];
        if (ka != kb) return ka < kb;
        return a < b;
    });

    std::vector<Eigen::Index> window;
    for (Eigen::Index cand : order) {
        const double* c = bad.data() + cand * dims;
        bool dominated = false;
        for (Eigen::Index w : window) {
            if (badness_dominates(bad.data() + w * dims, c, dims)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        std::erase_if(window, [&](Eigen::Index w) {
            return badness_dominates(c, bad.data() + w * dims, dims);
        });
        window.push_back(cand);
    }
    std::sort(window.begin(), window.end(), [&](Eigen::Index a, Eigen::Index b) {
        return d.row_ids[static_cast<std::size_t>(a)] <
               d.row_ids[static_cast<std::size_t>(b)];
    });
    return window;
}

SkylineResult compute_skyline(const Dataset& d, const PreferenceSpec& p) {
    std::vector<Eigen::Index> all(static_cast<std::size_t>(d.n_rows()));
    std::iota(all.begin(), all.end(), Eigen::Index{0});

    SkylineResult out;
    out.member_rows = skyline_of_rows(d, p, all);
    out.member_ids.reserve(out.member_rows.size());
    for (Eigen::Index r : out.member_rows)
        out.member_ids.push_back(d.row_ids[static_cast<std::size_t>(r)]);

    std::vector<RowId> members_sorted = out.member_ids;
    std::sort(members_sorted.begin(), members_sorted.end());
    for (RowId id : d.row_ids)
        if (!std::binary_search(members_sorted.begin(), members_sorted.end(), id))
            out.rest_ids.push_back(id);
    std::sort(out.rest_ids.begin(), out.rest_ids.end());
    return out;
}

std::vector<SkylineResult> multilevel_strip(const Dataset& d,
                                            const PreferenceSpec& p) {
    std::vector<SkylineResult> levels;
    std::vector<Eigen::Index> alive(static_cast<std::size_t>(d.n_rows()));
    std::iota(alive.begin(), alive.end(), Eigen::Index{0});

    while (!alive.empty()) {
        std::vector<Eigen::Index> members = skyline_of_rows(d, p, alive);
        SkylineResult level;
        level.member_rows = members;
        for (Eigen::Index r : members)
            level.member_ids.push_back(d.row_ids[static_cast<std::size_t>(r)]);

        std::vector<Eigen::Index> member_positions = members;
        std::sort(member_positions.begin(), member_positions.end());
        std::vector<Eigen::Index> next;
        next.reserve(alive.size() - members.size());
        for (Eigen::Index r : alive) {
            if (std::binary_search(member_positions.begin(), member_positions.end(), r))
                continue;
            next.push_back(r);
            level.rest_ids.push_back(d.row_ids[static_cast<std::size_t>(r)]);
        }
        std::sort(level.rest_ids.begin(), level.rest_ids.end());
        levels.push_back(std::move(level));
        alive = std::move(next);
    }
    return levels;
}

}  // namespace skyrank
