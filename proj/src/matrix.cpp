#include "hera/matrix.hpp"

#include <sstream>

namespace hera {

FieldMatrix::FieldMatrix(Field spec, size_t rows, size_t cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), d_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(Field spec, size_t n) {
    FieldMatrix m(std::move(spec), n, n);
    for (size_t i = 0; i < n; ++i) m.set_enc(i, i, 1);
    return m;
}

FieldMatrix FieldMatrix::from_rows(Field spec, const std::vector<std::vector<uint32_t>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    FieldMatrix m(spec, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ParseError("ragged matrix rows");
        for (size_t j = 0; j < c; ++j) {
            if (rows[i][j] >= spec->order()) throw ParseError("entry out of field range");
            m.set_enc(i, j, rows[i][j]);
        }
    }
    return m;
}

std::vector<std::vector<uint32_t>> FieldMatrix::to_rows() const {
    std::vector<std::vector<uint32_t>> out(rows_, std::vector<uint32_t>(cols_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out[i][j] = enc_at(i, j);
    return out;
}

void FieldMatrix::check_compatible(const FieldMatrix& o, bool same_shape) const {
    if (!spec_ || !o.spec_ || !spec_->same(*o.spec_)) throw ParamError("field spec mismatch");
    if (same_shape && (rows_ != o.rows_ || cols_ != o.cols_)) {
        std::ostringstream os;
        os << "shape mismatch: " << rows_ << "x" << cols_ << " vs " << o.rows_ << "x" << o.cols_;
        throw ParamError(os.str());
    }
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    check_compatible(o, true);
    FieldMatrix r(spec_, rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = spec_->add(d_[i], o.d_[i]);
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    check_compatible(o, true);
    FieldMatrix r(spec_, rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = spec_->sub(d_[i], o.d_[i]);
    return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    check_compatible(o, false);
    if (cols_ != o.rows_) throw ParamError("inner dimension mismatch");
    FieldMatrix r(spec_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t a = enc_at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                uint32_t prod = spec_->mul(a, o.enc_at(k, j));
                r.set_enc(i, j, spec_->add(r.enc_at(i, j), prod));
            }
        }
    return r;
}

FieldMatrix FieldMatrix::operator-() const {
    FieldMatrix r(spec_, rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = spec_->neg(d_[i]);
    return r;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    return spec_ && o.spec_ && spec_->same(*o.spec_) && rows_ == o.rows_ && cols_ == o.cols_ &&
           d_ == o.d_;
}

FieldMatrix FieldMatrix::scaled(const FieldElement& s) const {
    FieldMatrix r(spec_, rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = spec_->mul(d_[i], s.enc());
    return r;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(spec_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set_enc(j, i, enc_at(i, j));
    return r;
}

bool FieldMatrix::is_zero() const {
    for (uint32_t v : d_)
        if (v) return false;
    return true;
}

size_t FieldMatrix::weight() const {
    size_t w = 0;
    for (uint32_t v : d_)
        if (v) ++w;
    return w;
}

size_t FieldMatrix::rank() const {
    FieldMatrix m = *this;
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rank;
        while (pivot < rows_ && m.enc_at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (size_t j = 0; j < cols_; ++j)
                std::swap(m.d_[pivot * cols_ + j], m.d_[rank * cols_ + j]);
        uint32_t pinv = spec_->inv(m.enc_at(rank, col));
        for (size_t j = col; j < cols_; ++j)
            m.set_enc(rank, j, spec_->mul(m.enc_at(rank, j), pinv));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == rank) continue;
            uint32_t f = m.enc_at(i, col);
            if (f == 0) continue;
            for (size_t j = col; j < cols_; ++j)
                m.set_enc(i, j, spec_->sub(m.enc_at(i, j), spec_->mul(f, m.enc_at(rank, j))));
        }
        ++rank;
    }
    return rank;
}

FieldMatrix FieldMatrix::solve(const FieldMatrix& rhs) const {
    check_compatible(rhs, false);
    if (rows_ != cols_) throw ParamError("solve requires a square matrix");
    if (rhs.rows_ != rows_) throw ParamError("rhs row count mismatch");
    FieldMatrix m = *this;
    FieldMatrix x = rhs;
    size_t n = rows_, w = rhs.cols_;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m.enc_at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw SingularError("singular matrix in solve");
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j)
                std::swap(m.d_[pivot * n + j], m.d_[col * n + j]);
            for (size_t j = 0; j < w; ++j)
                std::swap(x.d_[pivot * w + j], x.d_[col * w + j]);
        }
        uint32_t pinv = spec_->inv(m.enc_at(col, col));
        for (size_t j = 0; j < n; ++j) m.set_enc(col, j, spec_->mul(m.enc_at(col, j), pinv));
        for (size_t j = 0; j < w; ++j) x.set_enc(col, j, spec_->mul(x.enc_at(col, j), pinv));
        for (size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            uint32_t f = m.enc_at(i, col);
            if (f == 0) continue;
            for (size_t j = 0; j < n; ++j)
                m.set_enc(i, j, spec_->sub(m.enc_at(i, j), spec_->mul(f, m.enc_at(col, j))));
            for (size_t j = 0; j < w; ++j)
                x.set_enc(i, j, spec_->sub(x.enc_at(i, j), spec_->mul(f, x.enc_at(col, j))));
        }
    }
    return x;
}

FieldMatrix FieldMatrix::inverse() const {
    return solve(identity(spec_, rows_));
}

FieldMatrix FieldMatrix::col_block(size_t c0, size_t width) const {
    if (c0 + width > cols_) throw ParamError("column block out of range");
    FieldMatrix r(spec_, rows_, width);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < width; ++j) r.set_enc(i, j, enc_at(i, c0 + j));
    return r;
}

FieldMatrix FieldMatrix::row_block(size_t r0, size_t height) const {
    if (r0 + height > rows_) throw ParamError("row block out of range");
    FieldMatrix r(spec_, height, cols_);
    for (size_t i = 0; i < height; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set_enc(i, j, enc_at(r0 + i, j));
    return r;
}

} // namespace hera
