#pragma once

// Dense integer matrices with exact big-integer entries: column Hermite form,
// Smith invariants, integer kernels and lattice membership.

#include "cft/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cft {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    /// rows x cols from a row-major list; throws DomainError on size mismatch.
    static IntMatrix from_row_major(std::size_t rows, std::size_t cols, const std::vector<long>& values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<BigInt> column(std::size_t c) const;
    IntMatrix columns(std::size_t first, std::size_t count) const;
    IntMatrix top_rows(std::size_t count) const;
    /// [A | B]
    IntMatrix hconcat(const IntMatrix& other) const;
    IntMatrix transpose() const;
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_power(const IntMatrix& m, unsigned e);
std::string to_string(const IntMatrix& m);

struct HermiteForm {
    IntMatrix H;          // A * U, lower echelon, nonzero columns first
    IntMatrix U;          // unimodular
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;  // pivot row of each nonzero column
};

HermiteForm column_hermite_form(const IntMatrix& a);

/// Basis (as columns) of the column lattice of a.
IntMatrix lattice_basis(const IntMatrix& a);
/// Basis (as columns) of {x in Z^n : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);
/// Whether v lies in the Z-span of the columns of a.
bool in_lattice(const IntMatrix& a, const std::vector<BigInt>& v);
/// The unique y with basis * y = v for a full-column-rank basis, when it is
/// integral.
std::optional<std::vector<BigInt>> lattice_coordinates(const IntMatrix& basis, const std::vector<BigInt>& v);

/// Nonzero Smith invariants d_1 | d_2 | ... (positive).
std::vector<BigInt> smith_invariants(const IntMatrix& a);

}  // namespace cft
