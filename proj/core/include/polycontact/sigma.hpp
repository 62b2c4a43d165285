#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polycontact/gaussian_rational.hpp"

namespace polycontact {

/// Small dense matrices over Q(i), row-major.
using Matrix = std::vector<std::vector<GaussianRational>>;

Matrix identity_matrix(std::size_t n);
Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matadd(const Matrix& a, const Matrix& b);
Matrix matscale(const GaussianRational& c, const Matrix& a);
/// Transpose with i -> -i on the entries.
Matrix dagger(const Matrix& a);
/// Gauss-Jordan; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);
bool is_zero(const Matrix& a);
std::string to_string(const Matrix& a);

/// sigma^mu = (1, Pauli x, y, z), indexed [mu][a][bdot] with a, bdot in {0, 1}.
const std::array<Matrix, 4>& sigma();

}  // namespace polycontact
