#include "recurkit/matrix.hpp"

#include <stdexcept>

namespace recurkit {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExactScalar(1);
    return m;
}

ExactScalar ExactMatrix::determinant() const {
    if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
    ExactMatrix m = *this;
    std::size_t n = rows_;
    ExactScalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return ExactScalar(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        ExactScalar inv = invert(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            ExactScalar f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::logic_error("matrix size mismatch");
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

std::vector<ExactScalar> ExactMatrix::apply(const std::vector<ExactScalar>& v) const {
    if (v.size() != cols_) throw std::logic_error("vector size mismatch");
    std::vector<ExactScalar> out(rows_, ExactScalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

std::optional<std::vector<ExactScalar>> solve(const ExactMatrix& a,
                                              const std::vector<ExactScalar>& b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::logic_error("solve: size mismatch");
    std::size_t n = a.rows();
    ExactMatrix m = a;
    std::vector<ExactScalar> rhs = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            std::swap(rhs[pivot], rhs[col]);
        }
        ExactScalar inv = invert(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            ExactScalar f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
            rhs[i] -= f * rhs[col];
        }
    }
    std::vector<ExactScalar> x(n, ExactScalar(0));
    for (std::size_t i = n; i-- > 0;) {
        ExactScalar acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m.at(i, j) * x[j];
        x[i] = acc / m.at(i, i);
    }
    return x;
}

std::size_t rank(const ExactMatrix& a) {
    ExactMatrix m = a;
    std::size_t r = 0;
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        ExactScalar inv = invert(m.at(r, col));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            ExactScalar f = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace recurkit
