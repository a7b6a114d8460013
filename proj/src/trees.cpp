#include "chebytower/trees.hpp"

#include <string>
#include <unordered_map>

namespace chebytower {

Int count_trees(long k) {
  if (k < 1) throw DomainError("tree families are indexed by k >= 1");
  std::vector<Int> c(k + 1);
  c[1] = 1;
  for (long m = 2; m <= k; ++m) {
    for (long s = 1; s <= m - 1; ++s) {
      c[m] += c[s] * c[m - s];
    }
  }
  return c[k];
}

namespace {

// Bottom-up memoized enumeration; levels[m] lists all of T_m. Built once per
// call and frozen: the shared_ptr graph keeps shared subtrees alive.
std::vector<std::vector<TreePtr>> build_levels(long k) {
  std::vector<std::vector<TreePtr>> levels(k + 1);
  levels[1] = {std::make_shared<const Tree>()};
  for (long m = 2; m <= k; ++m) {
    // Bigger left subtree first, matching the conventional listing order.
    for (long s = m - 1; s >= 1; --s) {
      for (const TreePtr& left : levels[s]) {
        for (const TreePtr& right : levels[m - s]) {
          levels[m].push_back(std::make_shared<const Tree>(Tree{m, left, right}));
        }
      }
    }
  }
  return levels;
}

void check_guard(long k, long guard) {
  if (k < 1) throw DomainError("tree families are indexed by k >= 1");
  if (count_trees(k) > guard) {
    throw ResourceError("enumerating " + to_string(count_trees(k)) + " trees exceeds the guard " +
                        std::to_string(guard));
  }
}

}  // namespace

std::vector<TreePtr> enumerate_trees(long k, long enumeration_guard) {
  check_guard(k, enumeration_guard);
  return build_levels(k)[k];
}

Rat node_weight(long v) {
  if (v < 1) throw DomainError("node labels are positive");
  if (v == 1) return Rat(-1);
  return make_rat(Int(1), 4 * (pow2(2 * (v - 1)) - 1));
}

Rat tree_weight(const TreePtr& t) {
  if (!t) throw DomainError("null tree");
  Rat w = node_weight(t->label);
  if (!t->is_leaf()) {
    w *= tree_weight(t->left);
    w *= tree_weight(t->right);
  }
  return w;
}

namespace {

void collect_labels(const TreePtr& t, WeightMonomial& m) {
  ++m[t->label];
  if (!t->is_leaf()) {
    collect_labels(t->left, m);
    collect_labels(t->right, m);
  }
}

}  // namespace

WeightMonomial tree_monomial(const TreePtr& t) {
  if (!t) throw DomainError("null tree");
  WeightMonomial m;
  collect_labels(t, m);
  return m;
}

Rat weighted_catalan_enumerated(long k, long enumeration_guard) {
  check_guard(k, enumeration_guard);
  auto levels = build_levels(k);
  // Weights memoized on the shared nodes: each distinct subtree object is
  // costed once.
  std::unordered_map<const Tree*, Rat> memo;
  auto weight_of = [&memo](auto&& self, const TreePtr& t) -> const Rat& {
    auto it = memo.find(t.get());
    if (it != memo.end()) return it->second;
    Rat w = node_weight(t->label);
    if (!t->is_leaf()) {
      w *= self(self, t->left);
      w *= self(self, t->right);
    }
    return memo.emplace(t.get(), std::move(w)).first->second;
  };
  Rat sum(0);
  for (const TreePtr& t : levels[k]) {
    sum += weight_of(weight_of, t);
  }
  return sum;
}

Rat weighted_catalan_dp(long k) {
  if (k < 1) throw DomainError("tree families are indexed by k >= 1");
  std::vector<Rat> w(k + 1);
  w[1] = Rat(-1);
  for (long m = 2; m <= k; ++m) {
    Rat conv(0);
    for (long s = 1; s <= m - 1; ++s) {
      conv += w[s] * w[m - s];
    }
    w[m] = node_weight(m) * conv;
  }
  return w[k];
}

Rat weighted_catalan(long k, long enumeration_guard) {
  if (k >= 1 && count_trees(k) <= enumeration_guard) {
    return weighted_catalan_enumerated(k, enumeration_guard);
  }
  return weighted_catalan_dp(k);
}

std::map<WeightMonomial, Int> grouped_weights(long k, long enumeration_guard) {
  check_guard(k, enumeration_guard);
  auto trees = enumerate_trees(k, enumeration_guard);
  std::map<WeightMonomial, Int> groups;
  for (const TreePtr& t : trees) {
    groups[tree_monomial(t)] += 1;
  }
  return groups;
}

std::string render_tree(const TreePtr& t) {
  if (!t) throw DomainError("null tree");
  if (t->is_leaf()) return "1";
  return std::to_string(t->label) + "(" + render_tree(t->left) + "," + render_tree(t->right) + ")";
}

std::string render_monomial(const WeightMonomial& m) {
  std::string out;
  for (const auto& [label, exponent] : m) {
    if (!out.empty()) out += ' ';
    out += "b" + std::to_string(label);
    if (exponent != 1) out += "^" + std::to_string(exponent);
  }
  return out;
}

}  // namespace chebytower
