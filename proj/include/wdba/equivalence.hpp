#pragma once

#include <optional>
#include <vector>

#include "wdba/automaton.hpp"

namespace wdba {

// A UP-word accepted by exactly one of two automata; empty when equivalent.
using Witness = std::optional<Decomposition>;

enum class WitnessSearch {
  // Prefix is the BFS path to the earliest disagreeing product cycle, period
  // the shortest return path: near-shortest witnesses.
  breadth_first,
  // Prefix is the DFS-tree path to the first disagreeing product state in
  // discovery order, period the first return path found by DFS, as an
  // on-the-fly emptiness check would report it.
  depth_first,
};

// Searches the reachable synchronized product for a cycle whose two sides
// disagree on acceptance. Both inputs must be weak.
Witness product_witness(const Wdba& lhs, const Wdba& rhs,
                        WitnessSearch search = WitnessSearch::breadth_first);

bool equivalent(const Wdba& lhs, const Wdba& rhs);

// Residual-equivalence class of every state of `a` (reachable or not):
// p and q share a class iff a rooted at p and a rooted at q accept the same
// language. Classes are numbered by first occurrence in state order.
std::vector<std::uint32_t> residual_classes(const Wdba& a);

// Minimal wDBA for L(a), states numbered in breadth-first order from the
// initial state with letters visited in alphabet order. Transient states are
// rejecting. Throws WeaknessError if `a` is not weak.
Wdba minimize(const Wdba& a);

// Structural identity up to renaming of states. Requires the same alphabet.
bool isomorphic(const Wdba& lhs, const Wdba& rhs);

}  // namespace wdba
