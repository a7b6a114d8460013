#pragma once

#include <functional>
#include <vector>

#include "chebytower/numeric.hpp"

namespace chebytower {

/// Smallest n with k <= 2^n (ceil(log2 k)). k >= 1.
int eta(long k);

/// Column weight 1 / (4 (4^{j-1} - 1)) for j >= 2. The j = 1 weight (-1)
/// belongs to the tree alphabet, not here; j <= 1 raises DomainError.
Rat b_weight(long j);

/// Lower-triangular table of the n-independent invariants a(j,k),
/// 1 <= j <= k <= kmax, with c_{n,2k} = sum_j a(j,k) 4^{jn} for all n with
/// k <= 2^n (n >= 1). Built column by column; immutable once built.
struct InvariantTable {
  long kmax = 0;
  std::vector<std::vector<Rat>> columns;  // columns[k-1] = {a(1,k) .. a(k,k)}

  const Rat& at(long j, long k) const;  // 1-based, requires 1 <= j <= k <= kmax
};

/// Lower limit of the double-sum term: the full window starts at s = 0, the
/// clipped window (used only when assembling the j = 1 entry) starts at
/// s = k - 2^{eta(k)-1}.
enum class SumWindow { kFull, kClipped };

/// Square-convolution term: 2 * sum_l a(l,k/2) a(j-l,k/2) over the admissible
/// band, nonzero only for even k and 3 <= j <= k-1.
Rat u_term(long j, long k, const InvariantTable& table);

/// Cross-column double sum: sum_{s} sum_{r} a(r,s) a(j-r,k-s); empty inner
/// ranges contribute 0 (in particular the whole s = 0 slice).
Rat v_term(SumWindow window, long j, long k, const InvariantTable& table);

/// even(k) even(j) a(j/2,k/2)^2 + u(j,k) + 2 v(j,k).
Rat w_term(SumWindow window, long j, long k, const InvariantTable& table);

/// Column k of the table, computed from columns 1..k-1 of `prefix`.
/// Requires prefix.kmax >= k-1. Used by the table builder and by cache
/// revalidation.
std::vector<Rat> invariants_column(const InvariantTable& prefix, long k);

/// Full table for 1 <= k <= kmax by the column recursion.
InvariantTable invariants_recursive(long kmax);

/// Intermediate vectors of the two-phase divided-difference solve, recorded
/// stage by stage for golden-vector tests.
struct BpTrace {
  std::vector<std::vector<Rat>> nu_stages;    // nu^(1) .. nu^(k)
  std::vector<std::vector<Rat>> back_stages;  // a^(k) .. a^(1)
};

/// Column {a(1,k) .. a(k,k)} solved from k consecutive coefficient rows via
/// the exact divided-difference Vandermonde algorithm on the geometric nodes
/// 4^n, n = max(1, eta(k)) .. max(1, eta(k)) + k - 1. `coeff_source` must
/// return the exact c_{n,2k} for those n.
std::vector<Rat> invariants_vandermonde(long k, const std::function<Int(long)>& coeff_source,
                                        BpTrace* trace = nullptr);

/// Same, with the truncated level recursion as the coefficient source.
std::vector<Rat> invariants_vandermonde(long k, BpTrace* trace = nullptr);

/// The diagonal a(k,k) for k = 1..kmax using only previous diagonal entries.
std::vector<Rat> diagonal_recursive(long kmax);

}  // namespace chebytower
