#include "chebytower/polyseq.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace chebytower {

namespace {

void check_degree_guard(int n, int max_degree_log2) {
  if (n < 0) throw DomainError("polynomial index must be nonnegative");
  if (max_degree_log2 < 1 || n + 1 > max_degree_log2) {
    throw ResourceError("degree 2^" + std::to_string(n + 1) +
                        " exceeds the degree guard 2^" + std::to_string(max_degree_log2));
  }
}

// Schoolbook convolution square of an even-coefficient array.
std::vector<Int> square(const std::vector<Int>& a) {
  std::vector<Int> r(2 * a.size() - 1, Int(0));
  Int t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      t = a[i] * a[j];
      r[i + j] += t;
      r[i + j] += t;
    }
    r[2 * i] += a[i] * a[i];
  }
  return r;
}

}  // namespace

EvenPoly gen_p(int n, int max_degree_log2) {
  check_degree_guard(n, max_degree_log2);
  EvenPoly p{{Int(-2), Int(1)}};
  for (int i = 1; i <= n; ++i) {
    p.coeffs = square(p.coeffs);
    p.coeffs[0] -= 2;
  }
  return p;
}

EvenPoly gen_q(int n, int max_degree_log2) {
  check_degree_guard(n, max_degree_log2);
  EvenPoly q{{Int(-2), Int(1)}};
  for (int i = 1; i <= n; ++i) {
    // q_i(x) = q_{i-1}(x^2 - 2) = sum_j c_j ((y - 2)^2)^j with y = x^2:
    // Horner over the fixed quadratic z = y^2 - 4y + 4.
    const std::vector<Int>& c = q.coeffs;
    std::vector<Int> r{c.back()};
    for (long j = static_cast<long>(c.size()) - 2; j >= 0; --j) {
      std::vector<Int> next(r.size() + 2, Int(0));
      for (std::size_t t = 0; t < r.size(); ++t) {
        next[t + 2] += r[t];
        next[t + 1] -= 4 * r[t];
        next[t] += 4 * r[t];
      }
      next[0] += c[j];
      r = std::move(next);
    }
    q.coeffs = std::move(r);
  }
  return q;
}

Rat eval_exact(const EvenPoly& p, const Rat& x) {
  Rat y = x * x;
  Rat acc(p.coeffs.back());
  for (long k = p.half_degree() - 1; k >= 0; --k) {
    acc = acc * y + Rat(p.coeffs[k]);
  }
  return acc;
}

LaurentPoly palindromic_lift(const EvenPoly& p) {
  // x^{2K} p(x + 1/x) = sum_k c_k x^{2K} (x + 1/x)^{2k}
  //                   = Horner over z = (x + 1/x)^2 = x^2 + 2 + x^{-2},
  // then one exponent shift. Dense array with an exponent offset; z has
  // coefficients (1, 2, 1) so each step is shift-and-add only.
  const std::vector<Int>& c = p.coeffs;
  // acc[i] is the coefficient of x^{2(i - steps)} after `steps` z-multiplies.
  std::vector<Int> acc{c.back()};
  for (long k = static_cast<long>(c.size()) - 2; k >= 0; --k) {
    std::vector<Int> next(acc.size() + 2, Int(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i];
      next[i + 1] += 2 * acc[i];
      next[i + 2] += acc[i];
    }
    // The new center sits one z-step lower; c_k multiplies x^0 there.
    next[(next.size() - 1) / 2] += c[k];
    acc = std::move(next);
  }
  const long K = p.half_degree();
  LaurentPoly out;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) {
      // acc spans exponents 2(i - K), shifted by +2K for the x^{2K} factor.
      out[2 * static_cast<long long>(i)] = acc[i];
    }
  }
  return out;
}

bool cyclotomic_identity_check(int n, int max_degree_log2) {
  EvenPoly p = gen_p(n, max_degree_log2);
  LaurentPoly lifted = palindromic_lift(p);
  LaurentPoly expected{{0, Int(1)}, {2 * p.degree(), Int(1)}};
  return lifted == expected;
}

EvenPoly compose_shift(const EvenPoly& p, int max_degree_log2) {
  if (2 * p.degree() > (1L << max_degree_log2)) {
    throw ResourceError("composition degree exceeds the degree guard 2^" +
                        std::to_string(max_degree_log2));
  }
  // p(x^2 + 2) = sum_j c_j ((y + 2)^2)^j with y = x^2: Horner over
  // z = y^2 + 4y + 4.
  const std::vector<Int>& c = p.coeffs;
  std::vector<Int> r{c.back()};
  for (long j = static_cast<long>(c.size()) - 2; j >= 0; --j) {
    std::vector<Int> next(r.size() + 2, Int(0));
    for (std::size_t t = 0; t < r.size(); ++t) {
      next[t + 2] += r[t];
      next[t + 1] += 4 * r[t];
      next[t] += 4 * r[t];
    }
    next[0] += c[j];
    r = std::move(next);
  }
  return EvenPoly{std::move(r)};
}

namespace {

// Upper bound on log2(sum_k |c_k| * ybound^k): enough guard bits to make
// Horner's absolute rounding error < 2^-(target+16) despite the cancellation
// between the monomial terms.
long cancellation_guard_bits(const EvenPoly& p, const Real& y) {
  long y_bits = 0;  // log2 upper bound of max(1, |y|)
  if (!y.is_zero()) {
    mpfr_exp_t e = mpfr_get_exp(y.raw());  // 2^{e-1} <= |y| < 2^e
    y_bits = std::max<long>(0, e);
  }
  long max_term = 0;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.coeffs[k] == 0) continue;
    long c_bits = static_cast<long>(mpz_sizeinbase(p.coeffs[k].get_mpz_t(), 2));
    max_term = std::max(max_term, c_bits + y_bits * static_cast<long>(k));
  }
  long count_bits = 1;
  while ((1L << count_bits) < static_cast<long>(p.coeffs.size()) + 1) ++count_bits;
  return max_term + count_bits + 32;
}

// Horner in the y = x^2 variable at full working precision.
Real horner_at_square(const EvenPoly& p, const Real& y, mpfr_prec_t work_prec) {
  Real acc = Real::of(p.coeffs.back(), work_prec);
  for (long k = p.half_degree() - 1; k >= 0; --k) {
    Real c = Real::of(p.coeffs[k], work_prec);
    acc = acc * y + c;
  }
  return acc;
}

}  // namespace

Real eval_real(const EvenPoly& p, const Real& x, mpfr_prec_t precision_bits) {
  if (precision_bits < 2) throw DomainError("precision_bits must be at least 2");
  Real y0 = x * x;
  mpfr_prec_t work = precision_bits + cancellation_guard_bits(p, y0);
  Real y = (x.rounded_to(work) * x.rounded_to(work));
  return horner_at_square(p, y, work).rounded_to(precision_bits);
}

Real trig_residual(int n, const Real& theta, mpfr_prec_t precision_bits,
                   int max_degree_log2) {
  if (precision_bits < 64) throw DomainError("precision_bits must be at least 64");
  check_degree_guard(n, max_degree_log2);
  EvenPoly p = gen_p(n, max_degree_log2);

  mpfr_prec_t side_prec = precision_bits + 64;
  Real two = Real::of(2.0, side_prec);
  Real x = two * theta.rounded_to(side_prec).cos();
  Real lhs = eval_real(p, x, side_prec);
  Real rhs = two * theta.rounded_to(side_prec).ldexp2(n + 1).cos();
  return (lhs - rhs).abs().rounded_to(precision_bits);
}

Real root_residual(int n, mpfr_prec_t precision_bits, int max_degree_log2) {
  if (precision_bits < 64) throw DomainError("precision_bits must be at least 64");
  check_degree_guard(n, max_degree_log2);
  EvenPoly p = gen_p(n, max_degree_log2);

  mpfr_prec_t side_prec = precision_bits + 64;
  Real theta = Real::pi(side_prec + n + 2).ldexp2(-(n + 2));
  Real x = Real::of(2.0, side_prec) * theta.cos();
  return eval_real(p, x, side_prec).abs().rounded_to(precision_bits);
}

DifferenceGeneratorProbe difference_generator_probe(int e, mpfr_prec_t precision_bits) {
  if (e < 4) throw DomainError("difference generator probe needs e >= 4");
  if (precision_bits < 64) throw DomainError("precision_bits must be at least 64");

  DifferenceGeneratorProbe probe;
  probe.e = e;
  probe.index_a = e - 3;
  probe.index_b = e - 4;

  mpfr_prec_t work = precision_bits + 64;
  // y = x^2 = 2 cos(2 pi / 2^{e-1}) - 2 for x = zeta - 1/zeta.
  Real phi = Real::pi(work + e).ldexp2(-(e - 2));
  Real y = Real::of(2.0, work) * phi.cos() - Real::of(2.0, work);

  auto residual_at = [&](int index) {
    EvenPoly composed = compose_shift(gen_p(index));
    mpfr_prec_t wide = precision_bits + cancellation_guard_bits(composed, y);
    Real phi_w = Real::pi(wide + e).ldexp2(-(e - 2));
    Real y_w = Real::of(2.0, wide) * phi_w.cos() - Real::of(2.0, wide);
    Real acc = Real::of(composed.coeffs.back(), wide);
    for (long k = composed.half_degree() - 1; k >= 0; --k) {
      acc = acc * y_w + Real::of(composed.coeffs[k], wide);
    }
    return acc.abs().rounded_to(precision_bits);
  };

  probe.residual_a = residual_at(probe.index_a);
  probe.residual_b = residual_at(probe.index_b);
  return probe;
}

}  // namespace chebytower
