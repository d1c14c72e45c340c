#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dophom/rational.hpp"

namespace dophom {

/// Sparse matrix over the rationals. No explicit zeros are stored.
class SparseMatrixQ {
public:
    SparseMatrixQ() = default;
    SparseMatrixQ(int rows, int cols) : rows_(rows), cols_(cols) {}

    static SparseMatrixQ identity(int n) {
        SparseMatrixQ m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Rational entry(int r, int c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set(int r, int c, const Rational& v) {
        check_bounds(r, c);
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }

    void add(int r, int c, const Rational& v) {
        check_bounds(r, c);
        if (v == 0) return;
        auto [it, inserted] = entries_.emplace(std::make_pair(r, c), v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }

    bool operator==(const SparseMatrixQ&) const = default;

    friend SparseMatrixQ operator*(const SparseMatrixQ& a, const SparseMatrixQ& b);
    friend SparseMatrixQ operator+(const SparseMatrixQ& a, const SparseMatrixQ& b);
    SparseMatrixQ scaled(const Rational& s) const;

    /// Matrix-vector product (dense vector of length cols()).
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

private:
    void check_bounds(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Rational> entries_;
};

struct RankKernel {
    int rank = 0;
    std::vector<std::vector<Rational>> kernel;  // basis vectors, length = cols
};

/// Exact rank and kernel basis via fraction-free (Bareiss) elimination with
/// shortest-row pivot selection.
RankKernel matrix_rank_kernel(const SparseMatrixQ& m);

/// One solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> matrix_solve(const SparseMatrixQ& m,
                                                  const std::vector<Rational>& rhs);

}  // namespace dophom
