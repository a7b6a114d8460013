#include "chebytower/serialize.hpp"

#include <sstream>

namespace chebytower {

Json poly_to_json(int n, const EvenPoly& p) {
  Json j;
  j["n"] = n;
  Json coeffs = Json::array();
  for (const Int& c : p.coeffs) coeffs.push_back(to_string(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::string poly_to_csv(const EvenPoly& p, bool header) {
  std::ostringstream out;
  if (header) out << "k,c\n";
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    out << k << ',' << to_string(p.coeffs[k]) << '\n';
  }
  return out.str();
}

std::string poly_to_text(const EvenPoly& p) {
  std::ostringstream out;
  bool first = true;
  for (long k = p.half_degree(); k >= 0; --k) {
    const Int& c = p.coeffs[k];
    if (c == 0) continue;
    const Int mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag);
      out << "x^" << 2 * k;
    }
  }
  if (first) out << '0';
  return out.str();
}

Json coeffs_to_json(const CoeffVector& row) {
  Json j;
  j["n"] = row.n;
  j["kmax"] = row.kmax;
  Json values = Json::array();
  for (const Int& c : row.values) values.push_back(to_string(c));
  j["values"] = std::move(values);
  return j;
}

std::string coeffs_to_csv(const CoeffVector& row, bool header) {
  std::ostringstream out;
  if (header) out << "n,k,c\n";
  for (long k = 0; k <= row.kmax; ++k) {
    out << row.n << ',' << k << ',' << to_string(row.values[k]) << '\n';
  }
  return out.str();
}

Json table_to_json(const InvariantTable& table) {
  Json j;
  j["kmax"] = table.kmax;
  Json rows = Json::array();
  for (long k = 1; k <= table.kmax; ++k) {
    Json row = Json::array();
    for (long jj = 1; jj <= k; ++jj) row.push_back(to_string(table.at(jj, k)));
    rows.push_back(std::move(row));
  }
  j["a"] = std::move(rows);
  return j;
}

InvariantTable table_from_json(const Json& j) {
  if (!j.contains("kmax") || !j.contains("a") || !j["a"].is_array()) {
    throw DomainError("invariant table JSON needs 'kmax' and 'a'");
  }
  InvariantTable table;
  table.kmax = j["kmax"].get<long>();
  const auto& rows = j["a"];
  if (static_cast<long>(rows.size()) != table.kmax) {
    throw DomainError("invariant table JSON: 'a' must hold kmax rows");
  }
  for (long k = 1; k <= table.kmax; ++k) {
    const auto& row = rows[k - 1];
    if (!row.is_array() || static_cast<long>(row.size()) != k) {
      throw DomainError("invariant table JSON: row " + std::to_string(k) + " must hold " +
                        std::to_string(k) + " entries");
    }
    std::vector<Rat> column;
    column.reserve(k);
    for (const auto& cell : row) column.push_back(rat_from_string(cell.get<std::string>()));
    table.columns.push_back(std::move(column));
  }
  return table;
}

std::string table_to_text(const InvariantTable& table) {
  std::ostringstream out;
  for (long k = 1; k <= table.kmax; ++k) {
    out << "k=" << k << ':';
    for (long j = 1; j <= k; ++j) out << ' ' << to_string(table.at(j, k));
    out << '\n';
  }
  return out.str();
}

Json tree_to_json(const TreePtr& t) {
  Json j;
  j["label"] = t->label;
  Json children = Json::array();
  if (!t->is_leaf()) {
    children.push_back(tree_to_json(t->left));
    children.push_back(tree_to_json(t->right));
  }
  j["children"] = std::move(children);
  return j;
}

Json grouped_to_json(const std::map<WeightMonomial, Int>& groups) {
  Json arr = Json::array();
  for (const auto& [monomial, count] : groups) {
    Json entry;
    Json m;
    for (const auto& [label, exponent] : monomial) {
      m[std::to_string(label)] = exponent;
    }
    entry["monomial"] = std::move(m);
    entry["count"] = to_string(count);
    arr.push_back(std::move(entry));
  }
  return arr;
}

}  // namespace chebytower
