// Dense exact linear algebra: rank, kernel, image, quotients and
// simultaneous fixed subspaces over an exact field K.
#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace catalg {

template <typename K>
using Vec = std::vector<K>;

template <typename K>
bool is_zero_vec(const Vec<K>& v) {
    for (const auto& x : v)
        if (!(x == K(0))) return false;
    return true;
}

template <typename K>
Vec<K> zero_vec(std::size_t n) { return Vec<K>(n, K(0)); }

template <typename K>
Vec<K> unit_vec(std::size_t n, std::size_t i) {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    return v;
}

template <typename K>
void axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
    assert(y.size() == x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

/// A linear map stored as a rows x cols matrix acting on column vectors:
/// column j is the image of the j-th source basis vector.
template <typename K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void set_col(std::size_t j, const Vec<K>& v) {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }
    Vec<K> col(std::size_t j) const {
        Vec<K> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
        Vec<K> out(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            K acc(0);
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik == K(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <typename K>
std::vector<std::size_t> rref(std::vector<Vec<K>>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!(rows[i][c] == K(0))) { sel = i; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        K inv = K(1) / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == K(0)) continue;
            K f = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r, zero_vec<K>(ncols));
    return pivots;
}

/// A subspace in canonical form: the basis rows are the unique reduced
/// echelon basis, so two subspaces are equal iff their bases are identical.
template <typename K>
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    Subspace(std::size_t ambient_dim, std::vector<Vec<K>> spanning)
        : ambient_(ambient_dim), basis_(std::move(spanning)) {
        for (const auto& v : basis_)
            if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector size mismatch");
        pivots_ = rref(basis_, ambient_);
    }

    static Subspace full(std::size_t n) {
        std::vector<Vec<K>> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vec<K>(n, i));
        return Subspace(n, std::move(rows));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec<K>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coordinates of v in the echelon basis, or nullopt if v is outside.
    std::optional<Vec<K>> coordinates(const Vec<K>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace::coordinates: size mismatch");
        Vec<K> coords(basis_.size(), K(0));
        Vec<K> residual = v;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            coords[i] = residual[pivots_[i]];
            if (!(coords[i] == K(0))) axpy(residual, -coords[i], basis_[i]);
        }
        if (!is_zero_vec(residual)) return std::nullopt;
        return coords;
    }

    bool contains(const Vec<K>& v) const { return coordinates(v).has_value(); }

    /// Vector with the given coordinates in the echelon basis.
    Vec<K> from_coordinates(const Vec<K>& coords) const {
        assert(coords.size() == basis_.size());
        Vec<K> v = zero_vec<K>(ambient_);
        for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, coords[i], basis_[i]);
        return v;
    }

    Subspace intersect(const Subspace& other) const {
        assert(ambient_ == other.ambient_);
        // Zassenhaus: row-reduce [U|U; W|0], read the intersection from
        // the rows whose left half vanished.
        std::size_t n = ambient_;
        std::vector<Vec<K>> rows;
        for (const auto& u : basis_) {
            Vec<K> r(2 * n, K(0));
            for (std::size_t j = 0; j < n; ++j) { r[j] = u[j]; r[n + j] = u[j]; }
            rows.push_back(std::move(r));
        }
        for (const auto& w : other.basis_) {
            Vec<K> r(2 * n, K(0));
            for (std::size_t j = 0; j < n; ++j) r[j] = w[j];
            rows.push_back(std::move(r));
        }
        rref(rows, 2 * n);
        std::vector<Vec<K>> inter;
        for (const auto& r : rows) {
            bool left_zero = true;
            for (std::size_t j = 0; j < n; ++j)
                if (!(r[j] == K(0))) { left_zero = false; break; }
            if (!left_zero) continue;
            Vec<K> v(r.begin() + n, r.end());
            if (!is_zero_vec(v)) inter.push_back(std::move(v));
        }
        return Subspace(n, std::move(inter));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<Vec<K>> basis_;
    std::vector<std::size_t> pivots_;
};

template <typename K>
std::size_t rank(const Matrix<K>& m) {
    std::vector<Vec<K>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec<K> r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j);
        rows.push_back(std::move(r));
    }
    return rref(rows, m.cols()).size();
}

template <typename K>
bool is_injective(const Matrix<K>& m) { return rank(m) == m.cols(); }

template <typename K>
bool is_surjective(const Matrix<K>& m) { return rank(m) == m.rows(); }

/// Null space of m in canonical echelon form.
template <typename K>
Subspace<K> kernel(const Matrix<K>& m) {
    std::size_t n = m.cols();
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec<K> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = m(i, j);
        rows.push_back(std::move(r));
    }
    auto pivots = rref(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec<K>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec<K> v = zero_vec<K>(n);
        v[free] = K(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return Subspace<K>(n, std::move(basis));
}

/// Column space of m.
template <typename K>
Subspace<K> image(const Matrix<K>& m) {
    std::vector<Vec<K>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return Subspace<K>(m.rows(), std::move(cols));
}

/// Intersection of the eigenspaces-at-1 of a family of square maps;
/// the full space when the family is empty.
template <typename K>
Subspace<K> simultaneous_fixed_space(const std::vector<Matrix<K>>& maps, std::size_t ambient_dim) {
    Subspace<K> fixed = Subspace<K>::full(ambient_dim);
    for (const auto& m : maps) {
        if (m.rows() != ambient_dim || m.cols() != ambient_dim)
            throw std::invalid_argument("simultaneous_fixed_space: map has wrong dimensions");
        fixed = fixed.intersect(kernel(m - Matrix<K>::identity(ambient_dim)));
    }
    return fixed;
}

template <typename K>
struct QuotientMap {
    Matrix<K> proj;    // ambient -> quotient, kernel exactly n
    Matrix<K> section; // quotient -> ambient, proj * section = id
};

/// Quotient of the ambient space by the subspace n. The quotient basis is
/// the set of coordinates not pivotal in n's echelon basis.
template <typename K>
QuotientMap<K> quotient_map(std::size_t ambient_dim, const Subspace<K>& n) {
    if (n.ambient_dim() != ambient_dim)
        throw std::invalid_argument("quotient_map: ambient dimension mismatch");
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : n.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) free.push_back(j);

    std::size_t q = free.size();
    QuotientMap<K> result{Matrix<K>(q, ambient_dim), Matrix<K>(ambient_dim, q)};
    // proj sends e_{free[i]} to q-basis vector i and reduces pivot
    // coordinates through n's echelon rows.
    for (std::size_t i = 0; i < q; ++i) result.proj(i, free[i]) = K(1);
    const auto& rows = n.basis();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t p = n.pivots()[r];
        // e_p = -(sum of free-coordinate tail of row r) modulo n
        for (std::size_t i = 0; i < q; ++i)
            result.proj(i, p) = -rows[r][free[i]];
    }
    for (std::size_t i = 0; i < q; ++i) result.section(free[i], i) = K(1);
    return result;
}

} // namespace catalg
