#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chebytower/numeric.hpp"

namespace chebytower {

/// Default cap on |T_k| = Catalan(k-1) for the explicit enumeration paths.
inline constexpr long kDefaultEnumerationGuard = 1000000;

/// Labeled ordered binary tree: leaves carry label 1; an internal node's
/// label is the sum of its two ordered children's labels, so the root label
/// equals the leaf count. Subtrees are shared structurally (the enumeration
/// memoizes child lists), which is safe because trees are immutable.
struct Tree;
using TreePtr = std::shared_ptr<const Tree>;
struct Tree {
  long label = 1;
  TreePtr left;   // null iff leaf
  TreePtr right;  // null iff leaf

  bool is_leaf() const { return left == nullptr; }
};

/// Multiplicities of each label among a tree's nodes (label -> count).
using WeightMonomial = std::map<long, long>;

/// |T_k| by the convolution count(k) = sum_s count(s) count(k-s); equals
/// Catalan(k-1). No enumeration, no guard.
Int count_trees(long k);

/// All trees with root label k, recursively over ordered child splits.
/// Subtree lists are memoized and shared; the result list owns its roots.
/// Raises ResourceError when |T_k| would exceed the guard.
std::vector<TreePtr> enumerate_trees(long k, long enumeration_guard = kDefaultEnumerationGuard);

/// Node weight alphabet: b(1) = -1, b(v) = 1 / (4 (4^{v-1} - 1)) for v >= 2.
Rat node_weight(long v);

/// Product of node weights over all nodes of t.
Rat tree_weight(const TreePtr& t);

/// Label multiplicities of t.
WeightMonomial tree_monomial(const TreePtr& t);

/// Sum of tree weights over T_k by explicit enumeration (guard applies).
Rat weighted_catalan_enumerated(long k, long enumeration_guard = kDefaultEnumerationGuard);

/// Same sum by the weight-respecting convolution
///   W(1) = -1, W(k) = b(k) sum_{s=1}^{k-1} W(s) W(k-s),
/// which never lists trees and scales to k in the hundreds.
Rat weighted_catalan_dp(long k);

/// Enumerates when |T_k| fits the guard, otherwise falls back to the DP.
Rat weighted_catalan(long k, long enumeration_guard = kDefaultEnumerationGuard);

/// Trees of T_k grouped by weight monomial; multiplicities sum to |T_k|.
std::map<WeightMonomial, Int> grouped_weights(long k,
                                              long enumeration_guard = kDefaultEnumerationGuard);

/// Canonical text rendering: "k(left,right)", leaves as "1".
std::string render_tree(const TreePtr& t);

/// Monomial rendering like "b1^5 b2^2 b4 b5" (exponent omitted when 1).
std::string render_monomial(const WeightMonomial& m);

}  // namespace chebytower
