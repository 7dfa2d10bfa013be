#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace skyrank {

/// Square boolean matrix packed 64 cells per word, row-major. Dense by
/// design: the dominance machinery targets up to ~1e5 rows, where one
/// matrix costs n*n/8 bytes. An adjacency-list backend is the documented
/// extension point beyond that.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(Eigen::Index n)
        : n_(n),
          words_per_row_((static_cast<std::size_t>(n) + 63) / 64),
          bits_(static_cast<std::size_t>(n) * words_per_row_, 0) {}

    Eigen::Index size() const { return n_; }

    bool get(Eigen::Index r, Eigen::Index c) const {
        return (row(r)[static_cast<std::size_t>(c) >> 6] >>
                (static_cast<std::size_t>(c) & 63)) &
               1u;
    }
    void set(Eigen::Index r, Eigen::Index c) {
        mutable_row(r)[static_cast<std::size_t>(c) >> 6] |=
            std::uint64_t{1} << (static_cast<std::size_t>(c) & 63);
    }
    void clear(Eigen::Index r, Eigen::Index c) {
        mutable_row(r)[static_cast<std::size_t>(c) >> 6] &=
            ~(std::uint64_t{1} << (static_cast<std::size_t>(c) & 63));
    }

    bool row_empty(Eigen::Index r) const {
        const std::uint64_t* w = row(r);
        for (std::size_t k = 0; k < words_per_row_; ++k)
            if (w[k]) return false;
        return true;
    }

    Eigen::Index row_count(Eigen::Index r) const {
        const std::uint64_t* w = row(r);
        Eigen::Index n = 0;
        for (std::size_t k = 0; k < words_per_row_; ++k)
            n += __builtin_popcountll(w[k]);
        return n;
    }

    /// Calls fn(column) for every set bit of row r, ascending column order.
    template <typename Fn>
    void for_each_in_row(Eigen::Index r, Fn&& fn) const {
        const std::uint64_t* w = row(r);
        for (std::size_t k = 0; k < words_per_row_; ++k) {
            std::uint64_t word = w[k];
            while (word) {
                const int bit = __builtin_ctzll(word);
                fn(static_cast<Eigen::Index>(k * 64 + static_cast<std::size_t>(bit)));
                word &= word - 1;
            }
        }
    }

    std::size_t words_per_row() const { return words_per_row_; }
    const std::uint64_t* row(Eigen::Index r) const {
        return bits_.data() + static_cast<std::size_t>(r) * words_per_row_;
    }
    std::uint64_t* mutable_row(Eigen::Index r) {
        return bits_.data() + static_cast<std::size_t>(r) * words_per_row_;
    }

    bool operator==(const BitMatrix& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    Eigen::Index n_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace skyrank
