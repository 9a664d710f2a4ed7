#include "cft/intmatrix.hpp"

#include "cft/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cft {

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

// col_dst -= q * col_src
void sub_column(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, dst) -= q * m.at(r, src);
}

void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(dst, c) -= q * m.at(src, c);
}

// (c_a, c_b) <- (s c_a + t c_b, -(b/g) c_a + (a/g) c_b) with s a + t b = g.
void gcd_combine_columns(IntMatrix& m, std::size_t ca, std::size_t cb, const BigInt& a, const BigInt& b, const BigInt& g,
                         const BigInt& s, const BigInt& t) {
    const BigInt ag = a / g, bg = b / g;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const BigInt x = m.at(r, ca), y = m.at(r, cb);
        m.at(r, ca) = s * x + t * y;
        m.at(r, cb) = -bg * x + ag * y;
    }
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DomainError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_row_major(std::size_t rows, std::size_t cols, const std::vector<long>& values) {
    if (values.size() != rows * cols) {
        throw DomainError("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(values.size()));
    }
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < values.size(); ++i) m.data_[i] = values[i];
    return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
    std::vector<BigInt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
    IntMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < count; ++c) out.at(r, c) = at(r, first + c);
    }
    return out;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
    IntMatrix out(count, cols_);
    for (std::size_t r = 0; r < count; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    }
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
    if (rows_ != other.rows_) throw DomainError("hconcat: row counts differ");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, cols_ + c) = other.at(r, c);
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    }
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& x = a.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(k, j);
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: dimension mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference: dimension mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned e) {
    if (m.rows() != m.cols()) throw DomainError("matrix_power needs a square matrix");
    IntMatrix result = IntMatrix::identity(m.rows());
    for (unsigned i = 0; i < e; ++i) result = result * m;
    return result;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out << ", ";
        out << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ", ";
            out << m.at(r, c).get_str();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

HermiteForm column_hermite_form(const IntMatrix& a) {
    HermiteForm hf{a, IntMatrix::identity(a.cols()), 0, {}};
    IntMatrix& H = hf.H;
    IntMatrix& U = hf.U;
    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < H.rows() && pivot_col < H.cols(); ++r) {
        // Fold every entry of row r right of the pivot into the pivot column.
        for (std::size_t c = pivot_col + 1; c < H.cols(); ++c) {
            if (H.at(r, c) == 0) continue;
            const BigInt x = H.at(r, pivot_col), y = H.at(r, c);
            BigInt g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            gcd_combine_columns(H, pivot_col, c, x, y, g, s, t);
            gcd_combine_columns(U, pivot_col, c, x, y, g, s, t);
        }
        if (H.at(r, pivot_col) == 0) continue;
        if (H.at(r, pivot_col) < 0) {
            for (std::size_t i = 0; i < H.rows(); ++i) H.at(i, pivot_col) = -H.at(i, pivot_col);
            for (std::size_t i = 0; i < U.rows(); ++i) U.at(i, pivot_col) = -U.at(i, pivot_col);
        }
        // Reduce earlier columns in this row into [0, pivot).
        for (std::size_t c = 0; c < pivot_col; ++c) {
            const BigInt q = floor_div(H.at(r, c), H.at(r, pivot_col));
            sub_column(H, c, pivot_col, q);
            sub_column(U, c, pivot_col, q);
        }
        hf.pivot_rows.push_back(r);
        ++pivot_col;
    }
    hf.rank = pivot_col;
    return hf;
}

IntMatrix lattice_basis(const IntMatrix& a) {
    const HermiteForm hf = column_hermite_form(a);
    return hf.H.columns(0, hf.rank);
}

IntMatrix integer_kernel(const IntMatrix& a) {
    const HermiteForm hf = column_hermite_form(a);
    return hf.U.columns(hf.rank, a.cols() - hf.rank);
}

bool in_lattice(const IntMatrix& a, const std::vector<BigInt>& v) {
    if (v.size() != a.rows()) throw DomainError("in_lattice: vector length mismatch");
    const HermiteForm hf = column_hermite_form(a);
    std::vector<BigInt> rest = v;
    std::size_t next = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (next < hf.rank && hf.pivot_rows[next] == r) {
            const BigInt& pivot = hf.H.at(r, next);
            if (!mpz_divisible_p(rest[r].get_mpz_t(), pivot.get_mpz_t())) return false;
            const BigInt q = rest[r] / pivot;
            for (std::size_t i = r; i < a.rows(); ++i) rest[i] -= q * hf.H.at(i, next);
            ++next;
        } else if (rest[r] != 0) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<BigInt>> lattice_coordinates(const IntMatrix& basis, const std::vector<BigInt>& v) {
    const std::size_t m = basis.rows(), n = basis.cols();
    if (v.size() != m) throw DomainError("lattice_coordinates: vector length mismatch");
    // Rational Gaussian elimination on [basis | v].
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = basis.at(r, c);
        aug[r][n] = v[r];
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = row;
        while (sel < m && aug[sel][c] == 0) ++sel;
        if (sel == m) throw DomainError("lattice_coordinates: basis is not of full column rank");
        std::swap(aug[sel], aug[row]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || aug[r][c] == 0) continue;
            const Rational f = aug[r][c] / aug[row][c];
            for (std::size_t k = c; k <= n; ++k) aug[r][k] -= f * aug[row][k];
        }
        pivots.push_back(row);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r) {
        if (aug[r][n] != 0) return std::nullopt;
    }
    std::vector<BigInt> y(n);
    for (std::size_t c = 0; c < n; ++c) {
        Rational q = aug[pivots[c]][n] / aug[pivots[c]][c];
        q.canonicalize();
        if (q.get_den() != 1) return std::nullopt;
        y[c] = q.get_num();
    }
    return y;
}

std::vector<BigInt> smith_invariants(const IntMatrix& a) {
    IntMatrix m = a;
    std::vector<BigInt> out;
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block goes to (t, t).
            std::size_t br = R, bc = C;
            for (std::size_t r = t; r < R; ++r) {
                for (std::size_t c = t; c < C; ++c) {
                    if (m.at(r, c) == 0) continue;
                    if (br == R || abs(m.at(r, c)) < abs(m.at(br, bc))) {
                        br = r;
                        bc = c;
                    }
                }
            }
            if (br == R) return out;
            swap_rows(m, t, br);
            swap_columns(m, t, bc);
            bool clean = true;
            for (std::size_t r = t + 1; r < R; ++r) {
                sub_row(m, r, t, floor_div(m.at(r, t), m.at(t, t)));
                if (m.at(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < C; ++c) {
                sub_column(m, c, t, floor_div(m.at(t, c), m.at(t, t)));
                if (m.at(t, c) != 0) clean = false;
            }
            if (!clean) continue;
            // Enforce d_t | every remaining entry.
            bool divides = true;
            for (std::size_t r = t + 1; r < R && divides; ++r) {
                for (std::size_t c = t + 1; c < C; ++c) {
                    if (!mpz_divisible_p(m.at(r, c).get_mpz_t(), m.at(t, t).get_mpz_t())) {
                        for (std::size_t k = t; k < C; ++k) m.at(t, k) += m.at(r, k);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        out.push_back(abs(m.at(t, t)));
    }
    return out;
}

}  // namespace cft
