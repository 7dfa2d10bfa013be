#include "skyrank/dpidp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace skyrank {

namespace {

using RowMajorXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Smaller-is-better copy of the data; dominance becomes componentwise <=
// with one strict <.
RowMajorXd badness_matrix(const Dataset& d, const PreferenceSpec& p) {
    if (p.size() != d.n_dims())
        throw ContractError("preference count does not match attribute count");
    RowMajorXd out(d.n_rows(), d.n_dims());
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

DominanceMatrix build_dominance_matrix(const Dataset& d, const PreferenceSpec& p) {
    const Eigen::Index n = d.n_rows();
    const Eigen::Index dims = d.n_dims();
    DominanceMatrix out;
    out.m = BitMatrix(n);
    out.row_ids = d.row_ids;
    if (n == 0) return out;

    const RowMajorXd bad = badness_matrix(d, p);
    std::vector<double> key(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        key[static_cast<std::size_t>(i)] = bad.row(i).sum();

    // A dominator's badness sum never exceeds the dominated tuple's, so only
    // pairs ordered by key need testing; equal keys are tested both ways.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        const double ka = key[static_cast<std::size_t>(a)];
        const double kb = key[static_cast<std::size_t>(b)];
        if (ka != kb) return ka < kb;
        return a < b;
    });

    RowMajorXd sorted_bad(n, dims);
    for (Eigen::Index r = 0; r < n; ++r)
        sorted_bad.row(r) = bad.row(order[static_cast<std::size_t>(r)]);

    for (Eigen::Index bi = 0; bi < n; ++bi) {
        const Eigen::Index b = order[static_cast<std::size_t>(bi)];
        const double* brow = sorted_bad.data() + bi * dims;
        const double bkey = key[static_cast<std::size_t>(b)];
        for (Eigen::Index ai = 0; ai < bi; ++ai) {
            const double* arow = sorted_bad.data() + ai * dims;
            if (badness_dominates(arow, brow, dims)) {
                out.m.set(b, order[static_cast<std::size_t>(ai)]);
            } else if (key[static_cast<std::size_t>(order[static_cast<std::size_t>(ai)])] ==
                           bkey &&
                       badness_dominates(brow, arow, dims)) {
                out.m.set(order[static_cast<std::size_t>(ai)], b);
            }
        }
    }

    for (Eigen::Index i = 0; i < n; ++i)
        if (out.m.row_empty(i)) out.skyline_rows.push_back(i);
    std::sort(out.skyline_rows.begin(), out.skyline_rows.end(),
              [&](Eigen::Index a, Eigen::Index b) {
                  return d.row_ids[static_cast<std::size_t>(a)] <
                         d.row_ids[static_cast<std::size_t>(b)];
              });
    for (Eigen::Index r : out.skyline_rows)
        out.skyline_ids.push_back(d.row_ids[static_cast<std::size_t>(r)]);
    return out;
}

CoverageGraph transitive_reduction(const DominanceMatrix& dm) {
    const Eigen::Index n = dm.m.size();
    CoverageGraph out;
    out.reduced = BitMatrix(n);
    out.children.assign(static_cast<std::size_t>(n), {});
    out.sky_dom_count.assign(dm.skyline_rows.size(), 0);
    out.idp_count.assign(static_cast<std::size_t>(n), 0);
    if (n == 0) return out;

    // Keys are recoverable from the matrix itself: dominance count gives a
    // topological grading, but the strict order we need is "every point
    // between a and c handled before a". Dominator count of each point is
    // monotone along chains (a dominates b => dominators(a) is a strict
    // subset of dominators(b) union {a}), so sorting by it descending works:
    // chains ascend strictly in dominator count.
    std::vector<Eigen::Index> dom_count(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        dom_count[static_cast<std::size_t>(i)] = dm.m.row_count(i);
    std::vector<Eigen::Index> desc(static_cast<std::size_t>(n));
    std::iota(desc.begin(), desc.end(), Eigen::Index{0});
    std::sort(desc.begin(), desc.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (dom_count[static_cast<std::size_t>(a)] !=
            dom_count[static_cast<std::size_t>(b)])
            return dom_count[static_cast<std::size_t>(a)] >
                   dom_count[static_cast<std::size_t>(b)];
        return a < b;
    });

    const std::size_t words = dm.m.words_per_row();
    std::vector<std::uint64_t> redundant(words);

    std::vector<Eigen::Index> skyline_index_of(static_cast<std::size_t>(n), -1);
    for (std::size_t s = 0; s < dm.skyline_rows.size(); ++s)
        skyline_index_of[static_cast<std::size_t>(dm.skyline_rows[s])] =
            static_cast<Eigen::Index>(s);

    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index remaining = dom_count[static_cast<std::size_t>(c)];
        if (remaining == 0) continue;  // skyline member, nothing above it
        std::fill(redundant.begin(), redundant.end(), 0);
        // Walk c's dominators from "most dominated" to "least dominated":
        // by the time a is reached, every point strictly between a and c has
        // either been kept as a cover or marked redundant, and in both cases
        // its own dominators are in `redundant`. An a not yet marked has no
        // intermediate, i.e. it covers c.
        for (Eigen::Index rank = 0; rank < n && remaining > 0; ++rank) {
            const Eigen::Index a = desc[static_cast<std::size_t>(rank)];
            if (!dm.m.get(c, a)) continue;
            --remaining;
            const bool marked = (redundant[static_cast<std::size_t>(a) >> 6] >>
                                 (static_cast<std::size_t>(a) & 63)) &
                                1u;
            if (!marked) {
                out.reduced.set(c, a);
                const std::uint64_t* arow = dm.m.row(a);
                for (std::size_t k = 0; k < words; ++k) redundant[k] |= arow[k];
            }
            const Eigen::Index s = skyline_index_of[static_cast<std::size_t>(a)];
            if (s >= 0) {
                ++out.sky_dom_count[static_cast<std::size_t>(s)];
                ++out.idp_count[static_cast<std::size_t>(c)];
            }
        }
    }

    for (Eigen::Index c = 0; c < n; ++c)
        out.reduced.for_each_in_row(
            c, [&](Eigen::Index a) { out.children[static_cast<std::size_t>(a)].push_back(c); });
    return out;
}

LmTable layers_of_minima(const CoverageGraph& cg,
                         const std::vector<Eigen::Index>& skyline_rows) {
    const Eigen::Index n = cg.reduced.size();
    LmTable out;
    out.lm.reserve(skyline_rows.size());
    std::deque<Eigen::Index> queue;
    for (Eigen::Index sp : skyline_rows) {
        // dist holds the vertex count of the shortest path from sp; sp itself
        // stays 0 (it cannot reappear: nothing covers a skyline point).
        std::vector<std::int32_t> dist(static_cast<std::size_t>(n), 0);
        queue.clear();
        queue.push_back(sp);
        while (!queue.empty()) {
            const Eigen::Index u = queue.front();
            queue.pop_front();
            const std::int32_t du = (u == sp) ? 1 : dist[static_cast<std::size_t>(u)];
            for (Eigen::Index v : cg.children[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] != 0) continue;
                dist[static_cast<std::size_t>(v)] = du + 1;
                queue.push_back(v);
            }
        }
        out.lm.push_back(std::move(dist));
    }
    return out;
}

std::vector<double> dpidp_scores(const LmTable& lm, const CoverageGraph& cg,
                                 const DominanceMatrix& dm) {
    const Eigen::Index n = dm.m.size();
    const auto sky_count = static_cast<double>(dm.skyline_rows.size());
    std::vector<double> scores(dm.skyline_rows.size(), 0.0);
    if (dm.skyline_rows.empty()) return scores;

    std::vector<Eigen::Index> skyline_index_of(static_cast<std::size_t>(n), -1);
    for (std::size_t s = 0; s < dm.skyline_rows.size(); ++s)
        skyline_index_of[static_cast<std::size_t>(dm.skyline_rows[s])] =
            static_cast<Eigen::Index>(s);

    for (Eigen::Index p = 0; p < n; ++p) {
        if (dm.m.row_empty(p)) continue;
        const Eigen::Index idp = cg.idp_count[static_cast<std::size_t>(p)];
        if (idp <= 0)
            throw ContractError("dominated point with no skyline dominator");
        const double idp_term = std::log10(sky_count / static_cast<double>(idp));
        dm.m.for_each_in_row(p, [&](Eigen::Index j) {
            const Eigen::Index s = skyline_index_of[static_cast<std::size_t>(j)];
            if (s < 0) return;
            const std::int32_t layer =
                lm.lm[static_cast<std::size_t>(s)][static_cast<std::size_t>(p)];
            if (layer < 2)
                throw ContractError("dominated point unreachable in coverage graph");
            scores[static_cast<std::size_t>(s)] += idp_term / layer;
        });
    }
    return scores;
}

ScoreTable rank_dpidp(const Dataset& d, const PreferenceSpec& p) {
    DominanceMatrix dm = build_dominance_matrix(d, p);
    if (dm.skyline_rows.empty()) return make_score_table(d.attribute_names, {});
    CoverageGraph cg = transitive_reduction(dm);
    LmTable lm = layers_of_minima(cg, dm.skyline_rows);
    std::vector<double> scores = dpidp_scores(lm, cg, dm);

    std::vector<ScoreRow> entries;
    entries.reserve(dm.skyline_rows.size());
    for (std::size_t s = 0; s < dm.skyline_rows.size(); ++s) {
        ScoreRow row;
        row.row_id = dm.skyline_ids[s];
        row.values = d.values.row(dm.skyline_rows[s]);
        row.score = scores[s];
        entries.push_back(std::move(row));
    }
    return make_score_table(d.attribute_names, std::move(entries));
}

}  // namespace skyrank
