#pragma once

#include "ewm/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ewm {

std::size_t rows(const Mat& m);
std::size_t cols(const Mat& m);
Mat transpose(const Mat& m);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat identity(std::size_t n);

struct Echelon {
    Mat m;                          // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

Echelon rref(Mat m);
std::size_t rank(const Mat& m);

// Some solution of A x = b, or nullopt if inconsistent. Free variables are 0.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Basis of { x : A x = 0 }.
std::vector<Vec> nullspace(const Mat& a, std::size_t ncols);

std::optional<Mat> inverse(const Mat& m);
Q determinant(Mat m);  // square

}  // namespace ewm
