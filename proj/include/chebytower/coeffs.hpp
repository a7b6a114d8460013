#pragma once

#include <vector>

#include "chebytower/invariants.hpp"
#include "chebytower/numeric.hpp"
#include "chebytower/polyseq.hpp"

namespace chebytower {

/// One coefficient row {c_{n,2k}}, possibly truncated: values[k] is the
/// coefficient of x^{2k} in p_n, for k = 0..kmax <= 2^n.
struct CoeffVector {
  long n = 0;
  long kmax = 0;
  std::vector<Int> values;

  bool complete() const { return n < 63 && kmax == (1L << n); }
  bool operator==(const CoeffVector&) const = default;
};

/// Complete row by echelon back-substitution, top coefficient downward:
/// c_{n,2^{n+1}} = 1 and for j = 1..2^n
///   c_{n,2(2^n-j)} = -sum_{i=2^n-j+1}^{2^n} C(2i, j+i-2^n) c_{n,2i}.
/// Independent of polynomial squaring.
CoeffVector coeffs_backsub(int n, int max_degree_log2 = kDefaultMaxDegreeLog2);

/// Row n truncated at kmax via the level recursion
///   c_{n,0} = c_{n-1,0}^2 - 2,
///   c_{n,2k} = even(k) c_{n-1,k}^2
///            + 2 sum_{s=max(0,k-2^{n-1})}^{min((k-1)/2, 2^{n-1}-1)} c_{n-1,2s} c_{n-1,2(k-s)}.
/// The dependencies never exceed index k, so truncated rows are exact; this
/// is what makes single coefficients reachable for n ~ 40.
CoeffVector coeffs_level_recursion(int n, long kmax);

/// All rows 0..n_max, each truncated at min(kmax, 2^row). One pass of the
/// level recursion; rows share no state afterwards.
std::vector<CoeffVector> coeffs_level_table(int n_max, long kmax);

/// Closed form for the j-th coefficient from the top, c_{n,2(2^n-j)},
/// j in 1..4. Validity thresholds: j=1 any n, j=2 n>=1, j=3 n>=2, j=4 n>=3.
Int closed_form_top(int n, int j);

/// Closed form for the low-order coefficients c_{n,2k}, k in 1..3, n >= 1:
///   c_{n,2} = -4^n,
///   c_{n,4} = -(1/12) 4^n + (1/12) 4^{2n},
///   c_{n,6} = -(1/90) 4^n + (1/72) 4^{2n} - (1/360) 4^{3n}.
/// The rational combination is always integer-valued.
Rat closed_form_low(int n, int k);

/// c_{n,2k} reassembled from the invariant table: 2 when k = 0, else
/// sum_{j=1}^{k} a(j,k) 4^{jn}. Asserts the sum clears all denominators
/// (ConsistencyError otherwise: the table is wrong).
Int coeff_from_invariants(long n, long k, const InvariantTable& table);

/// -sum_{i=1}^{2^n} C(2i,i) c_{n,2i} == 2, valid on complete rows with n >= 1.
bool central_binomial_identity(const CoeffVector& row);

}  // namespace chebytower
