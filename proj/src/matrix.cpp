#include "divmod/matrix.hpp"

#include <random>

namespace divmod {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    data_.assign(rows_ * cols_, Polynomial::zero(ring_));
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring,
                                 const std::vector<std::vector<Polynomial>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    PolyMatrix m(std::move(ring), r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InternalError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::from_integer(1, ring));
    return m;
}

const Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
    return data_[r * cols_ + c];
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
    if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
    if (p.ring() != ring_) throw InternalError("matrix entry ring mismatch");
    data_[r * cols_ + c] = std::move(p);
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
    std::vector<Polynomial> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
    std::vector<Polynomial> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
    return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
    PolyMatrix m(ring_, row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            m.set(r, c, at(row_idx[r], col_idx[c]));
    return m;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<std::size_t>& col_idx) const {
    std::vector<std::size_t> all_rows(rows_);
    for (std::size_t r = 0; r < rows_; ++r) all_rows[r] = r;
    return submatrix(all_rows, col_idx);
}

PolyMatrix PolyMatrix::map_to(RingPtr target, const std::vector<std::size_t>& var_map) const {
    PolyMatrix m(target, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m.set(r, c, at(r, c).map_to(target, var_map));
    return m;
}

namespace {

Polynomial det_recursive(const PolyMatrix& m, std::vector<std::size_t> rows,
                         std::vector<std::size_t> cols) {
    std::size_t n = rows.size();
    if (n == 0) return Polynomial::from_integer(1, m.ring());
    if (n == 1) return m.at(rows[0], cols[0]);
    // expand along the first column of the submatrix
    Polynomial acc = Polynomial::zero(m.ring());
    std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial& entry = m.at(rows[i], cols[0]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_rows;
        sub_rows.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) sub_rows.push_back(rows[k]);
        Polynomial cofactor = entry * det_recursive(m, sub_rows, sub_cols);
        acc = (i % 2 == 0) ? acc + cofactor : acc - cofactor;
    }
    return acc;
}

}  // namespace

Polynomial PolyMatrix::determinant() const {
    if (rows_ != cols_) throw MathError("determinant of a non-square matrix");
    std::vector<std::size_t> idx(rows_);
    for (std::size_t i = 0; i < rows_; ++i) idx[i] = i;
    return det_recursive(*this, idx, idx);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw MathError("matrix dimensions do not match for product");
    PolyMatrix out(a.ring(), a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Polynomial acc = Polynomial::zero(a.ring());
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(r, k).is_zero() || b.at(k, c).is_zero()) continue;
                acc = acc + a.at(r, k) * b.at(k, c);
            }
            out.set(r, c, std::move(acc));
        }
    return out;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // advance to the next k-subset in lexicographic order
        std::size_t i = k;
        while (i-- > 0) {
            if (cur[i] < n - k + i) {
                ++cur[i];
                for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

std::vector<Polynomial> PolyMatrix::minors(std::size_t t) const {
    std::vector<Polynomial> out;
    if (t == 0) {
        out.push_back(Polynomial::from_integer(1, ring_));
        return out;
    }
    if (t > rows_ || t > cols_) throw MathError("minor size exceeds matrix dimensions");
    auto row_sets = k_subsets(rows_, t);
    auto col_sets = k_subsets(cols_, t);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) out.push_back(submatrix(rs, cs).determinant());
    return out;
}

std::vector<std::vector<Scalar>> PolyMatrix::evaluate(const std::vector<Scalar>& point) const {
    std::vector<std::vector<Scalar>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r].reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(at(r, c).evaluate(point));
    }
    return out;
}

std::vector<std::vector<Scalar>> PolyMatrix::evaluate_at_origin() const {
    std::vector<std::vector<Scalar>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r].reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(at(r, c).constant_term());
    }
    return out;
}

ScalarRankInfo scalar_rank_info(std::vector<std::vector<Scalar>> m, const Field& field) {
    ScalarRankInfo info;
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<bool> row_used(rows, false);
    std::vector<std::size_t> row_of_pivot;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pr = rows;
        for (std::size_t r = 0; r < rows; ++r) {
            if (!row_used[r] && !m[r][c].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr == rows) continue;
        row_used[pr] = true;
        info.pivot_rows.push_back(pr);
        info.pivot_cols.push_back(c);
        Scalar inv = m[pr][c].inverse();
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][c].is_zero()) continue;
            Scalar factor = m[r][c] * inv;
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] = m[r][cc] - factor * m[pr][cc];
        }
    }
    (void)field;
    info.rank = info.pivot_rows.size();
    return info;
}

std::size_t scalar_rank(const std::vector<std::vector<Scalar>>& m, const Field& field) {
    return scalar_rank_info(m, field).rank;
}

std::size_t generic_rank(const PolyMatrix& m, std::uint64_t seed) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const Field& f = m.ring()->field();
    if (!f.is_rational() && f.p < 1024)
        throw MathError("prime field too small for randomized rank certification");
    std::size_t trials = 3;
    std::mt19937_64 rng(seed);
    ScalarRankInfo best;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Scalar> point;
        point.reserve(m.ring()->nvars());
        for (std::size_t v = 0; v < m.ring()->nvars(); ++v) {
            if (f.is_rational()) {
                std::uniform_int_distribution<long> dist(1, 10007);
                point.push_back(Scalar::integer(dist(rng), f));
            } else {
                std::uniform_int_distribution<std::uint64_t> dist(0, f.p - 1);
                point.push_back(Scalar::residue(dist(rng), f.p));
            }
        }
        ScalarRankInfo info = scalar_rank_info(m.evaluate(point), f);
        if (info.rank > best.rank) best = info;
        if (best.rank == std::min(m.rows(), m.cols())) break;
    }
    if (best.rank > 0) {
        // the sampled pivot minor is nonzero at the sample point, so its
        // symbolic determinant must be a nonzero polynomial
        Polynomial cert = m.submatrix(best.pivot_rows, best.pivot_cols).determinant();
        if (cert.is_zero()) throw InternalError("rank certificate failed");
    }
    return best.rank;
}

}  // namespace divmod
