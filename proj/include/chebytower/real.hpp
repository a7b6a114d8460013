#pragma once

#include <mpfr.h>

#include <string>

#include "chebytower/numeric.hpp"

namespace chebytower {

/// Arbitrary-precision binary float (MPFR-backed). A value carries its own
/// precision; binary operations round to the wider operand's precision
/// (round-to-nearest). Exact inputs (Int, Rat, double, 2^e scalings) convert
/// with a single rounding at the target precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  static Real of(double v, mpfr_prec_t prec);
  static Real of(const Int& v, mpfr_prec_t prec);
  static Real of(const Rat& v, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
  Real rounded_to(mpfr_prec_t prec) const;

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;

  /// Exact scaling by 2^e (e may be negative).
  Real ldexp2(long e) const;
  Real abs() const;
  Real cos() const;

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }
  bool operator<(const Real& o) const { return mpfr_less_p(x_, o.x_) != 0; }
  bool operator==(const Real& o) const { return mpfr_equal_p(x_, o.x_) != 0; }

  /// |*this| < 2^e, exact comparison.
  bool abs_less_pow2(long e) const;

  /// log2 |*this| as a double; -inf for zero.
  double log2_abs() const;

  /// Shortest decimal string that round-trips at this precision.
  std::string str() const;

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  mpfr_t x_;
};

}  // namespace chebytower
