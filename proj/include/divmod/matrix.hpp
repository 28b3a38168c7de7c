#pragma once

#include <cstdint>
#include <vector>

#include "divmod/polynomial.hpp"

namespace divmod {

// Dense row-major matrix of polynomials over a fixed ring.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    static PolyMatrix from_rows(RingPtr ring,
                                const std::vector<std::vector<Polynomial>>& rows);
    static PolyMatrix identity(RingPtr ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Polynomial p);

    std::vector<Polynomial> column(std::size_t c) const;
    std::vector<Polynomial> row(std::size_t r) const;

    PolyMatrix transpose() const;
    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const;
    PolyMatrix select_columns(const std::vector<std::size_t>& col_idx) const;
    PolyMatrix map_to(RingPtr target, const std::vector<std::size_t>& var_map) const;

    Polynomial determinant() const;

    // All t x t minors, ordered lexicographically by (row subset, column
    // subset).  t = 0 gives {1}; t beyond either dimension throws.
    std::vector<Polynomial> minors(std::size_t t) const;

    std::vector<std::vector<Scalar>> evaluate(const std::vector<Scalar>& point) const;
    std::vector<std::vector<Scalar>> evaluate_at_origin() const;

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> data_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

struct ScalarRankInfo {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
};

ScalarRankInfo scalar_rank_info(std::vector<std::vector<Scalar>> m, const Field& field);
std::size_t scalar_rank(const std::vector<std::vector<Scalar>>& m, const Field& field);

// Rank over the fraction field.  Randomized evaluation at seeded points picks
// the candidate; the corresponding symbolic pivot minor certifies the lower
// bound exactly.
std::size_t generic_rank(const PolyMatrix& m, std::uint64_t seed);

}  // namespace divmod
