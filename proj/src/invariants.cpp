#include "chebytower/invariants.hpp"

#include <bit>
#include <string>

#include "chebytower/coeffs.hpp"

namespace chebytower {

int eta(long k) {
  if (k < 1) throw DomainError("eta needs k >= 1");
  return static_cast<int>(std::bit_width(static_cast<unsigned long>(k - 1)));
}

Rat b_weight(long j) {
  if (j < 2) throw DomainError("b_weight defined for j >= 2");
  return make_rat(Int(1), 4 * (pow2(2 * (j - 1)) - 1));
}

const Rat& InvariantTable::at(long j, long k) const {
  if (k < 1 || k > kmax || j < 1 || j > k) {
    throw DomainError("invariant index (" + std::to_string(j) + ", " + std::to_string(k) +
                      ") outside the table (kmax=" + std::to_string(kmax) + ")");
  }
  return columns[k - 1][j - 1];
}

Rat u_term(long j, long k, const InvariantTable& table) {
  if (k % 2 != 0 || j < 3 || j > k - 1) return Rat(0);
  const long half = k / 2;
  const long lo = std::max<long>(1, j - half);
  const long hi = std::min((j - 1) / 2, half - 1);
  Rat sum(0);
  for (long l = lo; l <= hi; ++l) {
    sum += table.at(l, half) * table.at(j - l, half);
  }
  return 2 * sum;
}

Rat v_term(SumWindow window, long j, long k, const InvariantTable& table) {
  if (k < 2) return Rat(0);
  const long lo_s = window == SumWindow::kFull ? 0 : k - (1L << (eta(k) - 1));
  Rat sum(0);
  for (long s = std::max<long>(1, lo_s); s <= (k - 1) / 2; ++s) {
    const long lo_r = std::max<long>(1, j - k + s);
    const long hi_r = std::min(j - 1, s);
    for (long r = lo_r; r <= hi_r; ++r) {
      sum += table.at(r, s) * table.at(j - r, k - s);
    }
  }
  return sum;
}

Rat w_term(SumWindow window, long j, long k, const InvariantTable& table) {
  Rat sq(0);
  if (k % 2 == 0 && j % 2 == 0) {
    const Rat& a = table.at(j / 2, k / 2);
    sq = a * a;
  }
  return sq + u_term(j, k, table) + 2 * v_term(window, j, k, table);
}

std::vector<Rat> invariants_column(const InvariantTable& prefix, long k) {
  if (k < 1) throw DomainError("column index must be positive");
  if (prefix.kmax < k - 1) {
    throw DomainError("column " + std::to_string(k) + " needs the previous " +
                      std::to_string(k - 1) + " columns");
  }
  if (k == 1) return {Rat(-1)};
  std::vector<Rat> column(k);
  for (long j = k; j >= 2; --j) {
    column[j - 1] = b_weight(j) * w_term(SumWindow::kFull, j, k, prefix);
  }
  // The leading entry balances the clipped-window contributions of the first
  // admissible row n = eta(k).
  const int ek = eta(k);
  Rat lead(0);
  for (long l = 2; l <= k; ++l) {
    Rat w = w_term(SumWindow::kClipped, l, k, prefix);
    lead += (make_rat(Int(1), pow2(2 * l)) * w - column[l - 1]) * Rat(pow2(2 * ek * (l - 1)));
  }
  column[0] = lead;
  return column;
}

InvariantTable invariants_recursive(long kmax) {
  if (kmax < 1) throw DomainError("kmax must be positive");
  InvariantTable table;
  table.columns.reserve(kmax);
  for (long k = 1; k <= kmax; ++k) {
    table.columns.push_back(invariants_column(table, k));
    table.kmax = k;
  }
  return table;
}

std::vector<Rat> invariants_vandermonde(long k, const std::function<Int(long)>& coeff_source,
                                        BpTrace* trace) {
  if (k < 1) throw DomainError("column index must be positive");
  // The theorem needs n >= 1, so the k = 1 system starts at row 1, not
  // row eta(1) = 0; node exponents shift along with the rows.
  const long n0 = std::max<long>(1, eta(k));
  auto node_log4 = [n0](long j) { return n0 + j - 1; };  // l(j): node is 4^{l(j)}

  std::vector<Rat> nu(k);
  for (long j = 1; j <= k; ++j) {
    nu[j - 1] = make_rat(coeff_source(node_log4(j)), pow2(2 * node_log4(j)));
  }
  if (trace) trace->nu_stages.push_back(nu);

  // Phase 1: progressive divided differences, j downward so the vector
  // updates in place.
  for (long i = 1; i <= k - 1; ++i) {
    for (long j = k; j >= i + 1; --j) {
      Int denom = pow2(2 * node_log4(j)) - pow2(2 * (node_log4(j) - i));
      nu[j - 1] = make_rat(Int(1), denom) * (nu[j - 1] - nu[j - 2]);
    }
    if (trace) trace->nu_stages.push_back(nu);
  }

  // Phase 2: Newton-to-monomial back conversion, j upward.
  std::vector<Rat> a = nu;
  if (trace) trace->back_stages.push_back(a);
  for (long i = k - 1; i >= 1; --i) {
    const Rat node(pow2(2 * node_log4(i)));
    for (long j = i; j <= k - 1; ++j) {
      a[j - 1] = a[j - 1] - node * a[j];
    }
    if (trace) trace->back_stages.push_back(a);
  }
  return a;
}

std::vector<Rat> invariants_vandermonde(long k, BpTrace* trace) {
  if (k < 1) throw DomainError("column index must be positive");
  const long n0 = std::max<long>(1, eta(k));
  auto rows = coeffs_level_table(static_cast<int>(n0 + k - 1), k);
  auto source = [&rows, k](long n) { return rows[n].values[k]; };
  return invariants_vandermonde(k, source, trace);
}

std::vector<Rat> diagonal_recursive(long kmax) {
  if (kmax < 1) throw DomainError("kmax must be positive");
  std::vector<Rat> diag(kmax);
  diag[0] = Rat(-1);
  for (long k = 2; k <= kmax; ++k) {
    Rat inner(0);
    if (k % 2 == 0) {
      inner = diag[k / 2 - 1] * diag[k / 2 - 1];
    }
    Rat cross(0);
    for (long s = 1; s <= (k - 1) / 2; ++s) {
      cross += diag[s - 1] * diag[k - s - 1];
    }
    diag[k - 1] = b_weight(k) * (inner + 2 * cross);
  }
  return diag;
}

}  // namespace chebytower
