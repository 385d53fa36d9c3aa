#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace mackey {

using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Hom coefficients, evaluated module maps and boundary matrices stay small;
// everything produced by elimination is arbitrary precision.
using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;
using BigMatrix = Matrix<Integer>;
using BigVector = Vector<Integer>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  OverflowError() : Error("int64 overflow") {}
};

/// int64 arithmetic that throws OverflowError instead of wrapping.  Used as
/// the fast scalar for elimination; callers retry with Integer on overflow.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT(implicit)

  constexpr std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw OverflowError();
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw OverflowError();
    return -v_;
  }
  Checked64& operator+=(Checked64 b) { return *this = *this + b; }
  Checked64& operator-=(Checked64 b) { return *this = *this - b; }
  Checked64& operator*=(Checked64 b) { return *this = *this * b; }
  friend auto operator<=>(Checked64, Checked64) = default;

 private:
  std::int64_t v_ = 0;
};

inline Integer to_integer(Checked64 x) { return Integer(x.value()); }
inline Integer to_integer(const Integer& x) { return x; }
inline Integer to_integer(std::int64_t x) { return Integer(x); }

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

/// Narrowing conversion; throws when the value does not fit.
inline std::int64_t to_int64(const Integer& x) {
  if (!fits_int64(x)) throw OverflowError();
  return x.convert_to<std::int64_t>();
}

template <typename Derived>
BigMatrix to_big(const Eigen::MatrixBase<Derived>& a) {
  BigMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = to_integer(a(i, j));
  return out;
}

IntMatrix to_int64(const BigMatrix& a);

std::string to_string(const Integer& x);

}  // namespace mackey
