#include "finalg/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace finalg {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_cols(int rows, const std::vector<LinComb>& cols) {
    RatMatrix m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& t : cols[j].terms()) {
            if (t.first >= rows) throw Error("from_cols: coordinate out of range");
            m.at(t.first, static_cast<int>(j)) = t.second;
        }
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw Error("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

LinComb RatMatrix::col(int j) const {
    std::vector<LinComb::Term> t;
    for (int i = 0; i < rows_; ++i)
        if (at(i, j) != 0) t.push_back({i, at(i, j)});
    return LinComb(std::move(t));
}

LinComb RatMatrix::row_vec(int i) const {
    std::vector<LinComb::Term> t;
    for (int j = 0; j < cols_; ++j)
        if (at(i, j) != 0) t.push_back({j, at(i, j)});
    return LinComb(std::move(t));
}

void RatMatrix::set_col(int j, const LinComb& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = 0;
    for (const auto& t : v.terms()) at(t.first, j) = t.second;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& w = o.at(k, j);
                if (w != 0) r.at(i, j) += v * w;
            }
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix diff shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

LinComb RatMatrix::apply(const LinComb& v) const {
    LinComb out;
    for (const auto& t : v.terms()) {
        if (t.first >= cols_) throw Error("apply: coordinate out of range");
        out.axpy(t.second, col(t.first));
    }
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Rat RatMatrix::trace() const {
    if (rows_ != cols_) throw Error("trace of non-square matrix");
    Rat t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << rat_str(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

RrefResult rref(const RatMatrix& m) {
    RrefResult res;
    res.reduced = m;
    RatMatrix& a = res.reduced;
    int r = 0;
    for (int j = 0; j < a.cols() && r < a.rows(); ++j) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, j) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int k = 0; k < a.cols(); ++k) std::swap(a.at(piv, k), a.at(r, k));
        Rat inv = 1 / a.at(r, j);
        for (int k = j; k < a.cols(); ++k) a.at(r, k) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, j) == 0) continue;
            Rat f = a.at(i, j);
            for (int k = j; k < a.cols(); ++k) a.at(i, k) -= f * a.at(r, k);
        }
        res.pivots.push_back(j);
        ++r;
    }
    res.rank = r;
    return res;
}

int rank_of(const RatMatrix& m) { return rref(m).rank; }

RatMatrix kernel_basis(const RatMatrix& m) {
    RrefResult e = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : e.pivots) is_piv[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    RatMatrix k(m.cols(), static_cast<int>(free_cols.size()));
    for (size_t idx = 0; idx < free_cols.size(); ++idx) {
        int f = free_cols[idx];
        k.at(f, static_cast<int>(idx)) = 1;
        for (int r = 0; r < e.rank; ++r) {
            const Rat& v = e.reduced.at(r, f);
            if (v != 0) k.at(e.pivots[r], static_cast<int>(idx)) = -v;
        }
    }
    return k;
}

RatMatrix column_span_canonical(const RatMatrix& m) {
    RrefResult e = rref(m.transpose());
    RatMatrix c(m.rows(), e.rank);
    for (int r = 0; r < e.rank; ++r)
        for (int j = 0; j < m.rows(); ++j) c.at(j, r) = e.reduced.at(r, j);
    return c;
}

bool same_column_span(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) return false;
    return column_span_canonical(a) == column_span_canonical(b);
}

RatMatrix subspace_intersection(const RatMatrix& u, const RatMatrix& w) {
    if (u.rows() != w.rows()) throw Error("subspace_intersection: ambient dimension mismatch");
    // solve u*x = w*y; intersection vectors are u*x
    RatMatrix stacked(u.rows(), u.cols() + w.cols());
    for (int i = 0; i < u.rows(); ++i) {
        for (int j = 0; j < u.cols(); ++j) stacked.at(i, j) = u.at(i, j);
        for (int j = 0; j < w.cols(); ++j) stacked.at(i, u.cols() + j) = -w.at(i, j);
    }
    RatMatrix k = kernel_basis(stacked);
    RatMatrix inter(u.rows(), k.cols());
    for (int c = 0; c < k.cols(); ++c)
        for (int i = 0; i < u.rows(); ++i) {
            Rat s = 0;
            for (int j = 0; j < u.cols(); ++j) s += u.at(i, j) * k.at(j, c);
            inter.at(i, c) = s;
        }
    return column_span_canonical(inter);
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw Error("solve: shape mismatch");
    RrefResult e = rref(hstack(a, b));
    // inconsistent if a pivot falls in the b-block
    for (int p : e.pivots)
        if (p >= a.cols()) return std::nullopt;
    RatMatrix x(a.cols(), b.cols());
    for (int r = 0; r < e.rank; ++r)
        for (int j = 0; j < b.cols(); ++j) x.at(e.pivots[r], j) = e.reduced.at(r, a.cols() + j);
    return x;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw Error("hstack: row mismatch");
    RatMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw Error("det of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix a = *this;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << int_str(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

IntMatrix int_inverse_transpose(const IntMatrix& m) {
    Int d = m.det();
    if (d != 1 && d != -1) throw Error("int_inverse_transpose: matrix is not unimodular");
    auto x = solve(to_rat(m), RatMatrix::identity(m.rows()));
    if (!x) throw Error("int_inverse_transpose: singular");
    IntMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& v = x->at(j, i);
            if (v.get_den() != 1) throw Error("int_inverse_transpose: non-integer entry");
            r.at(i, j) = v.get_num();
        }
    return r;
}

}  // namespace finalg
