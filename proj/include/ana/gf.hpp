#ifndef ANA_GF_HPP
#define ANA_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ana {

/// Default modulus: the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kPrime61 = 2305843009213693951ULL;
/// Smaller alternative: 2^31 - 1.
inline constexpr std::uint64_t kPrime31 = 2147483647ULL;

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};

/// Prime-field context. All values are canonical representatives in [0, p).
class Gf {
 public:
  explicit Gf(std::uint64_t p = kPrime61) : p_(p) {}

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw SingularMatrix();
    return pow(a, p_ - 2);
  }
  /// Reduce a (possibly negative) integer into [0, p).
  std::uint64_t fromSigned(long long v) const {
    long long m = v % static_cast<long long>(p_);
    return m < 0 ? static_cast<std::uint64_t>(m + static_cast<long long>(p_))
                 : static_cast<std::uint64_t>(m);
  }

 private:
  std::uint64_t p_;
};

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  std::uint64_t at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }
  bool isZero() const {
    for (auto v : a_)
      if (v) return false;
    return true;
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> a_;
};

Matrix matMul(const Gf& gf, const Matrix& a, const Matrix& b);
/// Horizontal concatenation [a b].
Matrix hcat(const Matrix& a, const Matrix& b);

/// Row-echelon rank via Gaussian elimination (first nonzero pivot).
int rank(const Gf& gf, const Matrix& m);
std::uint64_t det(const Gf& gf, Matrix m);
/// Throws SingularMatrix when rank < dimension.
Matrix invert(const Gf& gf, const Matrix& m);

/// Deterministic uniform field elements: same seed, same sequence.
std::vector<std::uint64_t> sampleUniform(const Gf& gf, std::uint64_t seed,
                                         size_t count);

}  // namespace ana

#endif
