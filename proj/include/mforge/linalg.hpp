#pragma once

#include <optional>
#include <vector>

#include "mforge/scalar.hpp"

namespace mforge {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

struct Echelon {
  Mat rows;                 // reduced rows, zero rows dropped
  std::vector<size_t> pivots;
};

// Reduced row-echelon form over the field of the entries. ncols is needed
// when the matrix has no rows.
Echelon rref(const Mat& m, const Field& f, size_t ncols);
size_t rank(const Mat& m, const Field& f, size_t ncols);
// basis of {x : m x = 0}
Mat kernel(const Mat& m, const Field& f, size_t ncols);
// some x with m x = b, if one exists
std::optional<Vec> solve(const Mat& m, const Vec& b, const Field& f, size_t ncols);

Vec zero_vec(const Field& f, size_t n);
bool is_zero_vec(const Vec& v);
Mat transpose(const Mat& m, const Field& f, size_t ncols);
Mat mat_inverse(const Mat& m, const Field& f);  // throws NotInvertible
Vec mat_vec(const Mat& m, const Vec& v);

}  // namespace mforge
