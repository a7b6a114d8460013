#pragma once

#include <map>
#include <vector>

#include "chebytower/numeric.hpp"
#include "chebytower/real.hpp"

namespace chebytower {

/// Largest permitted log2 of a generated polynomial's degree. Guards against
/// accidental memory blowups; exceeding it raises ResourceError.
inline constexpr int kDefaultMaxDegreeLog2 = 14;

/// Dense even polynomial: coeffs[k] multiplies x^{2k}. Immutable by
/// convention; all operations return fresh values.
struct EvenPoly {
  std::vector<Int> coeffs;

  /// Degree in the x^2 variable (index of the top coefficient).
  long half_degree() const { return static_cast<long>(coeffs.size()) - 1; }
  long degree() const { return 2 * half_degree(); }
  bool operator==(const EvenPoly&) const = default;
};

/// Sparse Laurent polynomial over even exponents of x. Zero coefficients are
/// never stored, so equality is plain map equality.
using LaurentPoly = std::map<long long, Int>;

/// p_n in the tower p_0 = x^2 - 2, p_n = p_{n-1}^2 - 2. Degree 2^{n+1}, monic.
EvenPoly gen_p(int n, int max_degree_log2 = kDefaultMaxDegreeLog2);

/// q_n built by composition: q_0 = x^2 - 2, q_n = q_{n-1}(x^2 - 2).
/// Equals gen_p(n) coefficient-for-coefficient; the equality is one of the
/// cross-checks, not an implementation shortcut.
EvenPoly gen_q(int n, int max_degree_log2 = kDefaultMaxDegreeLog2);

/// Exact evaluation at a rational point (Horner in x^2).
Rat eval_exact(const EvenPoly& p, const Rat& x);

/// x^{deg p} * p(x + 1/x), expanded exactly.
LaurentPoly palindromic_lift(const EvenPoly& p);

/// True iff x^{2^{n+1}} * p_n(x + 1/x) == x^{2^{n+2}} + 1 exactly.
bool cyclotomic_identity_check(int n, int max_degree_log2 = kDefaultMaxDegreeLog2);

/// p(x^2 + 2): even again, degree doubled.
EvenPoly compose_shift(const EvenPoly& p, int max_degree_log2 = kDefaultMaxDegreeLog2);

/// p(x) at precision_bits. Internally widens the working precision by a
/// cancellation bound derived from the coefficient magnitudes, so the result
/// is accurate to ~2^-precision_bits absolutely even though the monomial
/// terms can dwarf the value.
Real eval_real(const EvenPoly& p, const Real& x, mpfr_prec_t precision_bits);

/// |p_n(2 cos theta) - 2 cos(2^{n+1} theta)| at precision_bits.
/// Residuals are reported, never asserted here.
Real trig_residual(int n, const Real& theta, mpfr_prec_t precision_bits,
                   int max_degree_log2 = kDefaultMaxDegreeLog2);

/// |p_n(2 cos(pi / 2^{n+2}))| at precision_bits; vanishes to working
/// precision because 2 cos(pi / 2^{n+2}) is a root of p_n.
Real root_residual(int n, mpfr_prec_t precision_bits,
                   int max_degree_log2 = kDefaultMaxDegreeLog2);

/// Residuals of the two candidate compositions p_idx(x^2 + 2) at the point
/// x with x^2 = 2 cos(2 pi / 2^{e-1}) - 2 (i.e. x = zeta - 1/zeta for a
/// primitive 2^e-th root of unity zeta; x is purely imaginary, so the even
/// composition reduces to a real evaluation). Exactly one candidate index
/// should annihilate the point; callers decide and report which.
struct DifferenceGeneratorProbe {
  int e = 0;
  int index_a = 0;  // e - 3
  int index_b = 0;  // e - 4
  Real residual_a;
  Real residual_b;
};
DifferenceGeneratorProbe difference_generator_probe(int e, mpfr_prec_t precision_bits);

}  // namespace chebytower
