#include "ana/gf.hpp"

#include "ana/rng.hpp"

namespace ana {

Matrix matMul(const Gf& gf, const Matrix& a, const Matrix& b) {
  Matrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      std::uint64_t v = a.at(i, k);
      if (!v) continue;
      for (int j = 0; j < b.cols(); ++j)
        r.at(i, j) = gf.add(r.at(i, j), gf.mul(v, b.at(k, j)));
    }
  return r;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

int rank(const Gf& gf, const Matrix& m) {
  Matrix w = m;
  int r = 0;
  for (int c = 0; c < w.cols() && r < w.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < w.rows(); ++i)
      if (w.at(i, c)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < w.cols(); ++j) std::swap(w.at(pivot, j), w.at(r, j));
    std::uint64_t pinv = gf.inv(w.at(r, c));
    for (int i = r + 1; i < w.rows(); ++i) {
      std::uint64_t f = gf.mul(w.at(i, c), pinv);
      if (!f) continue;
      for (int j = c; j < w.cols(); ++j)
        w.at(i, j) = gf.sub(w.at(i, j), gf.mul(f, w.at(r, j)));
    }
    ++r;
  }
  return r;
}

std::uint64_t det(const Gf& gf, Matrix w) {
  std::uint64_t d = 1;
  for (int c = 0; c < w.cols(); ++c) {
    int pivot = -1;
    for (int i = c; i < w.rows(); ++i)
      if (w.at(i, c)) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = c; j < w.cols(); ++j) std::swap(w.at(pivot, j), w.at(c, j));
      d = gf.neg(d);
    }
    d = gf.mul(d, w.at(c, c));
    std::uint64_t pinv = gf.inv(w.at(c, c));
    for (int i = c + 1; i < w.rows(); ++i) {
      std::uint64_t f = gf.mul(w.at(i, c), pinv);
      if (!f) continue;
      for (int j = c; j < w.cols(); ++j)
        w.at(i, j) = gf.sub(w.at(i, j), gf.mul(f, w.at(c, j)));
    }
  }
  return d;
}

Matrix invert(const Gf& gf, const Matrix& m) {
  const int n = m.rows();
  Matrix w = hcat(m, Matrix::identity(n));
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (w.at(i, c)) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw SingularMatrix();
    if (pivot != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(w.at(pivot, j), w.at(c, j));
    std::uint64_t pinv = gf.inv(w.at(c, c));
    for (int j = 0; j < 2 * n; ++j) w.at(c, j) = gf.mul(w.at(c, j), pinv);
    for (int i = 0; i < n; ++i) {
      if (i == c || !w.at(i, c)) continue;
      std::uint64_t f = w.at(i, c);
      for (int j = 0; j < 2 * n; ++j)
        w.at(i, j) = gf.sub(w.at(i, j), gf.mul(f, w.at(c, j)));
    }
  }
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = w.at(i, n + j);
  return inv;
}

std::vector<std::uint64_t> sampleUniform(const Gf& gf, std::uint64_t seed,
                                         size_t count) {
  Rng rng(seed);
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) v = rng.below(gf.modulus());
  return out;
}

}  // namespace ana
