#include "polycontact/sigma.hpp"

#include <stdexcept>

namespace polycontact {

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, std::vector<GaussianRational>(cols));
}

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  if (a.front().size() != b.size()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix out = zero_matrix(a.size(), b.empty() ? 0 : b.front().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Matrix matadd(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b.at(i).at(j);
  }
  return out;
}

Matrix matscale(const GaussianRational& c, const Matrix& a) {
  Matrix out = a;
  for (auto& row : out) {
    for (auto& e : row) e *= c;
  }
  return out;
}

Matrix dagger(const Matrix& a) {
  if (a.empty()) return {};
  Matrix out = zero_matrix(a.front().size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j].conj();
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix m = a;
  Matrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    GaussianRational s = m[col][col].inverse();
    for (auto& e : m[col]) e *= s;
    for (auto& e : inv[col]) e *= s;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      GaussianRational f = m[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

bool is_zero(const Matrix& a) {
  for (const auto& row : a) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

std::string to_string(const Matrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (j) out += ", ";
      out += a[i][j].to_string();
    }
    out += "]";
  }
  return out + "]";
}

const std::array<Matrix, 4>& sigma() {
  static const std::array<Matrix, 4> table = [] {
    const GaussianRational i = GaussianRational::i();
    return std::array<Matrix, 4>{
        Matrix{{1, 0}, {0, 1}},
        Matrix{{0, 1}, {1, 0}},
        Matrix{{0, -i}, {i, 0}},
        Matrix{{1, 0}, {0, -1}},
    };
  }();
  return table;
}

}  // namespace polycontact
