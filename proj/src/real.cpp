#include "chebytower/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>

namespace chebytower {

Real Real::of(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const Int& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const Rat& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

Real Real::rounded_to(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.x_, x_, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t joint_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Real Real::operator+(const Real& o) const {
  Real r(joint_prec(*this, o));
  mpfr_add(r.raw(), x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r(joint_prec(*this, o));
  mpfr_sub(r.raw(), x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r(joint_prec(*this, o));
  mpfr_mul(r.raw(), x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::ldexp2(long e) const {
  Real r(precision());
  if (e >= 0) {
    mpfr_mul_2ui(r.x_, x_, static_cast<unsigned long>(e), MPFR_RNDN);
  } else {
    mpfr_div_2ui(r.x_, x_, static_cast<unsigned long>(-e), MPFR_RNDN);
  }
  return r;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.x_, x_, MPFR_RNDN);
  return r;
}

Real Real::cos() const {
  Real r(precision());
  mpfr_cos(r.x_, x_, MPFR_RNDN);
  return r;
}

bool Real::abs_less_pow2(long e) const {
  mpfr_t bound;
  mpfr_init2(bound, 8);
  mpfr_set_ui_2exp(bound, 1, e, MPFR_RNDN);
  bool less = mpfr_cmpabs(x_, bound) < 0;
  mpfr_clear(bound);
  return less;
}

double Real::log2_abs() const {
  if (mpfr_zero_p(x_)) return -std::numeric_limits<double>::infinity();
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_abs(t, x_, MPFR_RNDN);
  mpfr_log2(t, t, MPFR_RNDN);
  double v = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return v;
}

std::string Real::str() const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.Re", x_) < 0) return "nan";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace chebytower
