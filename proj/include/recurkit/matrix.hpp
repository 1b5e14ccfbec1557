#pragma once

#include <optional>
#include <vector>

#include "recurkit/scalar.hpp"

namespace recurkit {

// Small dense matrix over Q(i); plain Gaussian elimination is exact here.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, ExactScalar(0)) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    ExactScalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const ExactScalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    ExactScalar determinant() const;  // square only

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    std::vector<ExactScalar> apply(const std::vector<ExactScalar>& v) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<ExactScalar> a_;
};

// Solve A x = b for square A; nullopt when A is singular.
std::optional<std::vector<ExactScalar>> solve(const ExactMatrix& a,
                                              const std::vector<ExactScalar>& b);

std::size_t rank(const ExactMatrix& a);

}  // namespace recurkit
