#pragma once

#include <cstddef>
#include <vector>

#include "hera/field.hpp"

namespace hera {

/// Dense row-major matrix over one field, entries stored as canonical
/// encodings.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(Field spec, size_t rows, size_t cols);

    static FieldMatrix identity(Field spec, size_t n);
    static FieldMatrix from_rows(Field spec, const std::vector<std::vector<uint32_t>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& spec() const { return spec_; }

    uint32_t enc_at(size_t r, size_t c) const { return d_[r * cols_ + c]; }
    void set_enc(size_t r, size_t c, uint32_t e) { d_[r * cols_ + c] = e; }
    FieldElement at(size_t r, size_t c) const { return spec_->element(enc_at(r, c)); }
    void set(size_t r, size_t c, const FieldElement& e) { set_enc(r, c, e.enc()); }

    std::vector<std::vector<uint32_t>> to_rows() const;

    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator-() const;
    bool operator==(const FieldMatrix& o) const;
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

    FieldMatrix scaled(const FieldElement& s) const;
    FieldMatrix transpose() const;
    bool is_zero() const;

    /// Row-echelon rank; Gaussian elimination with first-nonzero pivoting.
    size_t rank() const;

    /// Solve M X = rhs for square M; throws SingularError when M is singular.
    FieldMatrix solve(const FieldMatrix& rhs) const;
    FieldMatrix inverse() const;

    /// Column block [c0, c0+width) as a new matrix.
    FieldMatrix col_block(size_t c0, size_t width) const;
    /// Row block [r0, r0+height).
    FieldMatrix row_block(size_t r0, size_t height) const;

    size_t weight() const; // number of nonzero entries

private:
    void check_compatible(const FieldMatrix& o, bool same_shape) const;

    Field spec_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> d_;
};

} // namespace hera
