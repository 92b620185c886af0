#pragma once

// Exact rational dense linear algebra: row-major matrices, reduced row
// echelon form, kernels, determinants, inverses, characteristic polynomials
// (Faddeev-LeVerrier), Jordan block counts, canonical subspaces, and the
// inertia (signature) of symmetric forms by congruence diagonalization.
//
// Everything here is exact; no floating point.

#include <cstddef>
#include <utility>
#include <vector>

#include "geo5/poly.hpp"

namespace geo5 {

using Vec = std::vector<Rat>;

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, Vec(cols, Rat(0))) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
        for (const auto& r : rows) a_.emplace_back(r);
        rows_ = a_.size();
        cols_ = rows_ ? a_[0].size() : 0;
        for (const auto& r : a_)
            if (r.size() != cols_) throw ShapeMismatch("ragged matrix literal");
    }
    static Mat from_rows(std::vector<Vec> rows) {
        Mat m;
        m.a_ = std::move(rows);
        m.rows_ = m.a_.size();
        m.cols_ = m.rows_ ? m.a_[0].size() : 0;
        for (const auto& r : m.a_)
            if (r.size() != m.cols_) throw ShapeMismatch("ragged row list");
        return m;
    }
    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.a_[i][i] = Rat(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Vec& row(std::size_t i) { return a_[i]; }
    const Vec& row(std::size_t i) const { return a_[i]; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

    Vec col(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = a_[i][j];
        return c;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ShapeMismatch("matrix add");
        Mat r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) r.a_[i][j] = x.a_[i][j] + y.a_[i][j];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ShapeMismatch("matrix sub");
        Mat r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) r.a_[i][j] = x.a_[i][j] - y.a_[i][j];
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw ShapeMismatch("matrix product shapes");
        Mat r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x.a_[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r.a_[i][j] += x.a_[i][k] * y.a_[k][j];
            }
        return r;
    }
    friend Mat operator*(const Rat& s, const Mat& x) {
        Mat r = x;
        for (auto& row : r.a_)
            for (auto& e : row) e *= s;
        return r;
    }
    friend Vec operator*(const Mat& x, const Vec& v) {
        if (x.cols_ != v.size()) throw ShapeMismatch("matrix-vector shapes");
        Vec r(x.rows_, Rat(0));
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j)
                if (!x.a_[i][j].is_zero()) r[i] += x.a_[i][j] * v[j];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.a_[j][i] = a_[i][j];
        return r;
    }

    Rat trace() const {
        if (!is_square()) throw ShapeMismatch("trace of non-square matrix");
        Rat t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += a_[i][i];
        return t;
    }

    bool is_zero() const {
        for (const auto& r : a_)
            if (!vec_is_zero(r)) return false;
        return true;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Vec> a_;
};

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        std::swap(m.row(p), m.row(r));
        Rat inv = m.at(r, c).inv();
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Mat m) { return rref_in_place(m).size(); }

// Basis of the null space {v : M v = 0}, one vector per free column,
// in increasing free-column order (each has a 1 at its free column).
inline std::vector<Vec> kernel(Mat m) {
    std::vector<std::size_t> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), Rat(0));
        v[free] = Rat(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rat trace(const Mat& m) {
    if (!m.is_square()) throw ShapeMismatch("trace of non-square matrix");
    Rat t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

inline Rat det(Mat m) {
    if (!m.is_square()) throw ShapeMismatch("determinant of non-square matrix");
    Rat d(1);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m.at(p, c).is_zero()) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m.row(p), m.row(c));
            d = -d;
        }
        d *= m.at(c, c);
        Rat inv = m.at(c, c).inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Rat f = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

inline Mat inverse(const Mat& m) {
    if (!m.is_square()) throw ShapeMismatch("inverse of non-square matrix");
    std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    auto pivots = rref_in_place(aug);
    // All pivots must land in the left block; a rank-deficient left block
    // pushes pivots into the identity half.
    if (pivots.size() != n || pivots.back() >= n) throw DegenerateInput("matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Characteristic polynomial det(xI - M), monic, by Faddeev-LeVerrier.
inline Poly charpoly(const Mat& m) {
    if (!m.is_square()) throw ShapeMismatch("characteristic polynomial of non-square matrix");
    std::size_t n = m.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = Rat(1);
    Mat N = Mat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Mat MN = m * N;
        Rat ck = -(MN.trace() / Rat(Int(k)));
        c[n - k] = ck;
        N = MN + ck * Mat::identity(n);
    }
    return Poly(std::move(c));
}

inline Mat eval_poly_at(const Poly& p, const Mat& m) {
    if (!m.is_square()) throw ShapeMismatch("polynomial of non-square matrix");
    std::size_t n = m.rows();
    Mat acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        acc = acc + p[static_cast<std::size_t>(i)] * Mat::identity(n);
    }
    return acc;
}

// Total number of Jordan blocks of M over the complex numbers.  If s is the
// squarefree part of the characteristic polynomial then s(M) kills exactly
// one dimension per Jordan block, so the count is dim ker s(M) -- computable
// in exact rational arithmetic even when the eigenvalues are irrational.
inline int jordan_block_count(const Mat& m) {
    if (!m.is_square()) throw ShapeMismatch("Jordan block count of non-square matrix");
    Poly s = squarefree_part(charpoly(m));
    Mat sm = eval_poly_at(s, m);
    return static_cast<int>(m.rows() - rank(sm));
}

// A linear subspace of Q^n in canonical form: the rows of the stored matrix
// are the nonzero rows of the RREF of any spanning set, so two subspaces are
// equal iff their stored representations are identical.
class Subspace {
  public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        return s;
    }
    static Subspace full(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        for (std::size_t i = 0; i < ambient; ++i) {
            Vec v(ambient, Rat(0));
            v[i] = Rat(1);
            s.rows_.push_back(std::move(v));
        }
        return s;
    }
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient) {
        for (const auto& v : vectors)
            if (v.size() != ambient) throw ShapeMismatch("spanning vector has wrong length");
        Subspace s;
        s.ambient_ = ambient;
        if (vectors.empty()) return s;
        Mat m = Mat::from_rows(vectors);
        auto pivots = rref_in_place(m);
        for (std::size_t i = 0; i < pivots.size(); ++i) s.rows_.push_back(m.row(i));
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw ShapeMismatch("vector has wrong length");
        Vec w = v;
        for (const auto& r : rows_) {
            std::size_t lead = 0;
            while (lead < ambient_ && r[lead].is_zero()) ++lead;
            if (lead == ambient_) continue;
            if (!w[lead].is_zero()) {
                Rat f = w[lead];
                for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * r[j];
            }
        }
        return vec_is_zero(w);
    }

    bool contains(const Subspace& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw ShapeMismatch("subspace sum in different ambients");
        std::vector<Vec> all = a.rows_;
        all.insert(all.end(), b.rows_.begin(), b.rows_.end());
        return span(all, a.ambient_);
    }

    // Zassenhaus: row-reduce rows [u|u] for u in A and [w|0] for w in B; the
    // right halves of rows whose left half vanished span the intersection.
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw ShapeMismatch("subspace meet in different ambients");
        std::size_t n = a.ambient_;
        std::vector<Vec> rows;
        for (const auto& u : a.rows_) {
            Vec r(2 * n, Rat(0));
            for (std::size_t j = 0; j < n; ++j) { r[j] = u[j]; r[n + j] = u[j]; }
            rows.push_back(std::move(r));
        }
        for (const auto& w : b.rows_) {
            Vec r(2 * n, Rat(0));
            for (std::size_t j = 0; j < n; ++j) r[j] = w[j];
            rows.push_back(std::move(r));
        }
        if (rows.empty()) return zero(n);
        Mat m = Mat::from_rows(rows);
        rref_in_place(m);
        std::vector<Vec> inter;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            bool left_zero = true;
            for (std::size_t j = 0; j < n && left_zero; ++j)
                if (!m.at(i, j).is_zero()) left_zero = false;
            if (!left_zero) continue;
            Vec right(n);
            for (std::size_t j = 0; j < n; ++j) right[j] = m.at(i, n + j);
            if (!vec_is_zero(right)) inter.push_back(std::move(right));
        }
        return span(inter, n);
    }

  private:
    std::size_t ambient_ = 0;
    std::vector<Vec> rows_;
};

// Inertia of a symmetric rational form: (n_plus, n_minus, n_zero) counted
// WITH multiplicity, by congruence diagonalization.  When every active
// diagonal entry vanishes but some off-diagonal b = A[i][j] does not, the
// substitution e_i <- e_i + e_j makes A[i][i] = 2b nonzero and the standard
// pivot proceeds; this handles hyperbolic planes exactly.
struct SymSignature {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    friend bool operator==(const SymSignature&, const SymSignature&) = default;
};

inline SymSignature symmetric_signature(Mat a) {
    if (!a.is_square()) throw ShapeMismatch("signature of non-square matrix");
    std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.at(i, j) != a.at(j, i)) throw ShapeMismatch("signature of non-symmetric matrix");
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;
    SymSignature sig;
    while (!active.empty()) {
        std::size_t pivot = n;
        for (auto i : active)
            if (!a.at(i, i).is_zero()) { pivot = i; break; }
        if (pivot == n) {
            std::size_t pi = n, pj = n;
            for (std::size_t x = 0; x < active.size() && pi == n; ++x)
                for (std::size_t y = x + 1; y < active.size(); ++y)
                    if (!a.at(active[x], active[y]).is_zero()) {
                        pi = active[x];
                        pj = active[y];
                        break;
                    }
            if (pi == n) {
                sig.n_zero += static_cast<int>(active.size());
                break;
            }
            for (std::size_t k = 0; k < n; ++k) a.at(pi, k) += a.at(pj, k);
            for (std::size_t k = 0; k < n; ++k) a.at(k, pi) += a.at(k, pj);
            continue;
        }
        Rat d = a.at(pivot, pivot);
        if (d.sign() > 0) ++sig.n_plus; else ++sig.n_minus;
        std::vector<std::size_t> rest;
        for (auto i : active)
            if (i != pivot) rest.push_back(i);
        for (auto i : rest) {
            if (a.at(i, pivot).is_zero()) continue;
            Rat f = a.at(i, pivot) / d;
            for (auto j : rest) a.at(i, j) -= f * a.at(pivot, j);
            a.at(i, pivot) = Rat(0);
        }
        for (auto j : rest) a.at(pivot, j) = Rat(0);
        active = std::move(rest);
    }
    return sig;
}

} // namespace geo5
