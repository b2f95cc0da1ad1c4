#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclotome/gf.hpp"

namespace cyclotome {

// Dense row-major matrix over GF(p), sized for desk-scale codes (n <= 2^16).
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Mat&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> a_;
};

Mat mat_mul(const PrimeField& f, const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
bool mat_is_zero(const Mat& a);

// rank by Gaussian elimination (works on a copy)
std::size_t mat_rank(const PrimeField& f, Mat a);

// stack a on top of b (same column count)
Mat mat_vstack(const Mat& a, const Mat& b);

}  // namespace cyclotome
