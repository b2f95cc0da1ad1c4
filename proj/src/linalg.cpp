#include "cyclotome/linalg.hpp"

#include <stdexcept>

namespace cyclotome {

Mat mat_mul(const PrimeField& f, const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(v, b.at(k, j)));
        }
    return out;
}

Mat mat_transpose(const Mat& a) {
    Mat out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
    return out;
}

bool mat_is_zero(const Mat& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) return false;
    return true;
}

std::size_t mat_rank(const PrimeField& f, Mat a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        const auto scale = f.inv(a.at(rank, col));
        for (std::size_t j = col; j < a.cols(); ++j) a.at(rank, j) = f.mul(a.at(rank, j), scale);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || a.at(i, col) == 0) continue;
            const auto factor = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

Mat mat_vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw std::invalid_argument("mat_vstack: column mismatch");
    const std::size_t cols = a.rows() != 0 ? a.cols() : b.cols();
    Mat out(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

}  // namespace cyclotome
