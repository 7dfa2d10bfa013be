#pragma once

// Independent reference implementations the tests check the library
// against. Everything here recomputes from first principles: quadratic
// scans, explicit path enumeration, compensated sums. Nothing calls back
// into the pipelines under test.

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "skyrank/bitmatrix.hpp"
#include "skyrank/model.hpp"

namespace skyrank::testing {

inline bool oracle_dominates(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b,
                             const PreferenceSpec& p) {
    bool all_weak = true, one_strict = false;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        const bool is_min = p.dirs[static_cast<std::size_t>(j)] == Direction::Min;
        const double x = is_min ? a(j) : -a(j);
        const double y = is_min ? b(j) : -b(j);
        if (x > y) all_weak = false;
        if (x < y) one_strict = true;
    }
    return all_weak && one_strict;
}

/// NOT EXISTS semantics, double loop over all pairs.
inline std::vector<RowId> oracle_skyline(const Dataset& d, const PreferenceSpec& p) {
    std::vector<RowId> out;
    for (Eigen::Index i = 0; i < d.n_rows(); ++i) {
        bool dominated = false;
        for (Eigen::Index j = 0; j < d.n_rows() && !dominated; ++j)
            if (i != j && oracle_dominates(d.values.row(j), d.values.row(i), p))
                dominated = true;
        if (!dominated) out.push_back(d.row_ids[static_cast<std::size_t>(i)]);
    }
    return out;
}

/// Reachability closure of a bit relation by depth-first search from every
/// node (edge (i,j) read as "j reaches i", matching the dominance matrix
/// orientation).
inline BitMatrix oracle_closure(const BitMatrix& m) {
    const Eigen::Index n = m.size();
    // children[j] = nodes j reaches directly.
    std::vector<std::vector<Eigen::Index>> children(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        m.for_each_in_row(i, [&](Eigen::Index j) {
            children[static_cast<std::size_t>(j)].push_back(i);
        });
    BitMatrix closure(n);
    std::vector<Eigen::Index> stack;
    std::vector<bool> seen;
    for (Eigen::Index j = 0; j < n; ++j) {
        seen.assign(static_cast<std::size_t>(n), false);
        stack.assign(children[static_cast<std::size_t>(j)].begin(),
                     children[static_cast<std::size_t>(j)].end());
        while (!stack.empty()) {
            const Eigen::Index v = stack.back();
            stack.pop_back();
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = true;
            closure.set(v, j);
            for (Eigen::Index w : children[static_cast<std::size_t>(v)])
                stack.push_back(w);
        }
    }
    return closure;
}

/// Minimum vertex count of any sp->target path for every target at once,
/// by plain relaxation until fixpoint over the acyclic graph. 0 means
/// unreachable.
inline std::vector<int> oracle_min_vertices_from(
    const std::vector<std::vector<Eigen::Index>>& children, Eigen::Index n,
    Eigen::Index sp) {
    constexpr int kInf = 1 << 29;
    std::vector<int> dist(static_cast<std::size_t>(n), kInf);
    dist[static_cast<std::size_t>(sp)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Eigen::Index u = 0; u < n; ++u) {
            const int du = dist[static_cast<std::size_t>(u)];
            if (du == kInf) continue;
            for (Eigen::Index v : children[static_cast<std::size_t>(u)])
                if (du + 1 < dist[static_cast<std::size_t>(v)]) {
                    dist[static_cast<std::size_t>(v)] = du + 1;
                    changed = true;
                }
        }
    }
    for (auto& x : dist)
        if (x == kInf) x = 0;
    dist[static_cast<std::size_t>(sp)] = 0;
    return dist;
}

/// Minimum vertex count over all paths sp -> target in the DAG given by
/// `children`, by exhaustive depth-first enumeration with a best-so-far
/// bound. Returns 0 when unreachable.
inline int oracle_min_path_vertices(
    const std::vector<std::vector<Eigen::Index>>& children, Eigen::Index sp,
    Eigen::Index target) {
    int best = 0;
    std::vector<Eigen::Index> stack;
    auto dfs = [&](auto&& self, Eigen::Index u, int depth) -> void {
        if (best != 0 && depth >= best) return;
        if (u == target) {
            best = depth;
            return;
        }
        for (Eigen::Index v : children[static_cast<std::size_t>(u)])
            self(self, v, depth + 1);
    };
    dfs(dfs, sp, 1);
    return best;
}

/// dp-idp scores straight from the defining formulas: full pairwise
/// dominance, covering pairs by the no-intermediate test, minimal path
/// enumeration, log10 weighting.
inline std::map<RowId, double> oracle_dpidp_scores(const Dataset& d,
                                                   const PreferenceSpec& p) {
    const Eigen::Index n = d.n_rows();
    std::vector<std::vector<bool>> dom(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n)));
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b)
            if (a != b)
                dom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    oracle_dominates(d.values.row(a), d.values.row(b), p);

    std::vector<Eigen::Index> skyline;
    for (Eigen::Index i = 0; i < n; ++i) {
        bool dominated = false;
        for (Eigen::Index j = 0; j < n; ++j)
            if (dom[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                dominated = true;
        if (!dominated) skyline.push_back(i);
    }

    // Covering relation: a covers c iff a dominates c with no b between.
    std::vector<std::vector<Eigen::Index>> children(static_cast<std::size_t>(n));
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index c = 0; c < n; ++c) {
            if (!dom[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]) continue;
            bool has_mid = false;
            for (Eigen::Index b = 0; b < n && !has_mid; ++b)
                if (dom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                    dom[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
                    has_mid = true;
            if (!has_mid) children[static_cast<std::size_t>(a)].push_back(c);
        }

    std::map<RowId, double> scores;
    for (Eigen::Index sp : skyline) {
        const std::vector<int> lm = oracle_min_vertices_from(children, n, sp);
        double score = 0.0;
        for (Eigen::Index c = 0; c < n; ++c) {
            if (!dom[static_cast<std::size_t>(sp)][static_cast<std::size_t>(c)]) continue;
            int sky_doms = 0;
            for (Eigen::Index s : skyline)
                if (dom[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)])
                    ++sky_doms;
            score += (1.0 / lm[static_cast<std::size_t>(c)]) *
                     std::log10(static_cast<double>(skyline.size()) / sky_doms);
        }
        scores[d.row_ids[static_cast<std::size_t>(sp)]] = score;
    }
    return scores;
}

/// Plain power iteration with L1 renormalization, fixed step count.
inline Eigen::RowVectorXd oracle_power_iteration(const Eigen::MatrixXd& g, int steps) {
    Eigen::RowVectorXd v =
        Eigen::RowVectorXd::Constant(g.rows(), 1.0 / static_cast<double>(g.rows()));
    for (int i = 0; i < steps; ++i) {
        Eigen::RowVectorXd next = Eigen::RowVectorXd::Zero(g.cols());
        for (Eigen::Index c = 0; c < g.cols(); ++c)
            for (Eigen::Index r = 0; r < g.rows(); ++r) next(c) += v(r) * g(r, c);
        v = next / next.cwiseAbs().sum();
    }
    return v;
}

inline double kahan_sum(const std::vector<double>& xs) {
    double sum = 0.0, carry = 0.0;
    for (double x : xs) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

inline double kahan_dot(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b) {
    std::vector<double> terms;
    for (Eigen::Index j = 0; j < a.size(); ++j) terms.push_back(a(j) * b(j));
    return kahan_sum(terms);
}

inline double kahan_norm(const Eigen::RowVectorXd& a) {
    return std::sqrt(kahan_dot(a, a));
}

/// The cosine pipeline recomputed step by step with compensated sums;
/// preferences must already be unified to `target`.
inline std::map<RowId, double> oracle_cosky_scores(const Eigen::MatrixXd& sky_rows,
                                                   const std::vector<RowId>& ids,
                                                   Direction target) {
    const Eigen::Index m = sky_rows.rows();
    const Eigen::Index dims = sky_rows.cols();
    Eigen::MatrixXd u(m, dims);
    for (Eigen::Index j = 0; j < dims; ++j) {
        std::vector<double> col;
        for (Eigen::Index i = 0; i < m; ++i) col.push_back(sky_rows(i, j));
        const double total = kahan_sum(col);
        for (Eigen::Index i = 0; i < m; ++i) u(i, j) = sky_rows(i, j) / total;
    }
    std::vector<double> gini(static_cast<std::size_t>(dims));
    for (Eigen::Index j = 0; j < dims; ++j) {
        std::vector<double> sq;
        for (Eigen::Index i = 0; i < m; ++i) sq.push_back(u(i, j) * u(i, j));
        gini[static_cast<std::size_t>(j)] = 1.0 - kahan_sum(sq);
    }
    const double gini_total = kahan_sum(gini);
    Eigen::MatrixXd w(m, dims);
    for (Eigen::Index j = 0; j < dims; ++j) {
        const double weight = gini_total == 0.0
                                  ? 1.0 / static_cast<double>(dims)
                                  : gini[static_cast<std::size_t>(j)] / gini_total;
        for (Eigen::Index i = 0; i < m; ++i) w(i, j) = weight * u(i, j);
    }
    Eigen::RowVectorXd ideal(dims);
    for (Eigen::Index j = 0; j < dims; ++j)
        ideal(j) = target == Direction::Min ? w.col(j).minCoeff() : w.col(j).maxCoeff();

    std::map<RowId, double> out;
    for (Eigen::Index i = 0; i < m; ++i) {
        const double score = w.row(i).cwiseEqual(ideal).all()
                                 ? 1.0
                                 : kahan_dot(w.row(i), ideal) /
                                       (kahan_norm(w.row(i)) * kahan_norm(ideal));
        out[ids[static_cast<std::size_t>(i)]] = score;
    }
    return out;
}

}  // namespace skyrank::testing
