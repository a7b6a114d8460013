#include "chebytower/coeffs.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace chebytower {

CoeffVector coeffs_backsub(int n, int max_degree_log2) {
  if (n < 0) throw DomainError("row index must be nonnegative");
  if (n + 1 > max_degree_log2) {
    throw ResourceError("degree 2^" + std::to_string(n + 1) +
                        " exceeds the degree guard 2^" + std::to_string(max_degree_log2));
  }
  const long m = 1L << n;
  CoeffVector row{n, m, std::vector<Int>(m + 1)};
  row.values[m] = 1;
  for (long j = 1; j <= m; ++j) {
    Int sum = 0;
    for (long i = m - j + 1; i <= m; ++i) {
      sum += binomial(2 * static_cast<unsigned long>(i), j + i - m) * row.values[i];
    }
    row.values[m - j] = -sum;
  }
  return row;
}

namespace {

// One level step: row n from row n-1, truncated at cap (cap <= 2^n).
std::vector<Int> level_step(const std::vector<Int>& prev, int n, long cap) {
  const long prev_top = static_cast<long>(prev.size()) - 1;  // <= 2^{n-1}
  std::vector<Int> next(cap + 1);
  next[0] = prev[0] * prev[0] - 2;
  for (long k = 1; k <= cap; ++k) {
    Int acc = 0;
    if (k % 2 == 0 && k / 2 <= prev_top) {
      acc = prev[k / 2] * prev[k / 2];
    }
    const long half = (n - 1 < 62) ? (1L << (n - 1)) : std::numeric_limits<long>::max() / 2;
    const long lo = std::max<long>(0, k - half);
    const long hi = std::min((k - 1) / 2, half - 1);
    Int cross = 0;
    for (long s = lo; s <= hi; ++s) {
      cross += prev[s] * prev[k - s];
    }
    acc += 2 * cross;
    next[k] = acc;
  }
  return next;
}

}  // namespace

CoeffVector coeffs_level_recursion(int n, long kmax) {
  if (n < 0 || kmax < 0) throw DomainError("row index and kmax must be nonnegative");
  if (n < 63 && kmax > (1L << n)) {
    throw DomainError("kmax " + std::to_string(kmax) + " exceeds 2^" + std::to_string(n));
  }
  std::vector<Int> row{Int(-2), Int(1)};
  if (n == 0) {
    row.resize(kmax + 1);
    return CoeffVector{0, kmax, std::move(row)};
  }
  for (int i = 1; i <= n; ++i) {
    const long full = (i < 62) ? (1L << i) : kmax;
    row = level_step(row, i, std::min(kmax, full));
  }
  return CoeffVector{n, kmax, std::move(row)};
}

std::vector<CoeffVector> coeffs_level_table(int n_max, long kmax) {
  if (n_max < 0 || kmax < 0) throw DomainError("row index and kmax must be nonnegative");
  std::vector<CoeffVector> rows;
  rows.reserve(n_max + 1);
  std::vector<Int> row{Int(-2), Int(1)};
  if (kmax < 1) row.resize(kmax + 1);
  rows.push_back(CoeffVector{0, std::min<long>(kmax, 1), row});
  for (int i = 1; i <= n_max; ++i) {
    const long full = (i < 62) ? (1L << i) : kmax;
    const long cap = std::min(kmax, full);
    row = level_step(rows.back().values, i, cap);
    rows.push_back(CoeffVector{i, cap, row});
  }
  return rows;
}

Int closed_form_top(int n, int j) {
  static constexpr int kMinN[] = {0, 0, 1, 2, 3};
  if (j < 1 || j > 4) throw DomainError("closed_form_top defined for j in 1..4");
  if (n < kMinN[j]) {
    throw DomainError("closed_form_top item " + std::to_string(j) + " needs n >= " +
                      std::to_string(kMinN[j]));
  }
  const Int t = pow2(n + 1);  // 2^{n+1}
  switch (j) {
    case 1:
      return -t;
    case 2:
      return pow2(n) * (t - 3);
    case 3:
      return t * (t - 3) - pow2(n) * (t - 1) * (t - 2) / 3;
    default: {
      Int inner = 4 * (t - 1) * (t - 2) / 3 - (t * t - 9);
      return pow2(n - 1) * (pow2(n) - 3) * inner;
    }
  }
}

Rat closed_form_low(int n, int k) {
  if (n < 1) throw DomainError("closed_form_low needs n >= 1");
  const Rat q2(pow2(2 * n));
  const Rat q4(pow2(4 * n));
  switch (k) {
    case 1:
      return -q2;
    case 2:
      return make_rat(-1, 12) * q2 + make_rat(1, 12) * q4;
    case 3:
      return make_rat(-1, 90) * q2 + make_rat(1, 72) * q4 +
             make_rat(-1, 360) * Rat(pow2(6 * n));
    default:
      throw DomainError("closed_form_low defined for k in 1..3");
  }
}

Int coeff_from_invariants(long n, long k, const InvariantTable& table) {
  if (n < 1) throw DomainError("invariant reassembly needs n >= 1");
  if (k < 0) throw DomainError("k must be nonnegative");
  if (k == 0) return 2;
  if (n < 62 && k > (1L << n)) {
    throw DomainError("k " + std::to_string(k) + " exceeds 2^" + std::to_string(n));
  }
  if (k > table.kmax) {
    throw DomainError("k " + std::to_string(k) + " exceeds the table's kmax " +
                      std::to_string(table.kmax));
  }
  Rat sum(0);
  for (long j = 1; j <= k; ++j) {
    sum += table.at(j, k) * Rat(pow2(2 * j * n));
  }
  if (!is_integer(sum)) {
    throw ConsistencyError("invariant sum for n=" + std::to_string(n) + ", k=" +
                           std::to_string(k) + " is not an integer: " + to_string(sum));
  }
  return sum.get_num();
}

bool central_binomial_identity(const CoeffVector& row) {
  if (row.n < 1 || !row.complete()) {
    throw DomainError("central binomial identity needs a complete row with n >= 1");
  }
  Int sum = 0;
  for (long i = 1; i <= row.kmax; ++i) {
    sum += binomial(2 * static_cast<unsigned long>(i), i) * row.values[i];
  }
  return -sum == 2;
}

}  // namespace chebytower
