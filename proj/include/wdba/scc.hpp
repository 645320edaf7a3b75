#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wdba/automaton.hpp"

namespace wdba {

// Adjacency in compressed sparse row form.
struct Digraph {
  std::vector<std::uint32_t> offsets;  // size node_count + 1
  std::vector<std::uint32_t> targets;

  std::size_t node_count() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const std::uint32_t> successors(std::uint32_t v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

Digraph to_digraph(const TransitionSystem& ts);

// Iterative Tarjan. Component ids are numbered in topological order: an edge
// v -> w always satisfies result[v] <= result[w]. Sets `count`.
std::vector<std::uint32_t> strongly_connected_components(const Digraph& g, std::uint32_t& count);

struct SccDecomposition {
  struct Component {
    std::vector<StateId> states;  // ascending
    bool trivial = true;          // single state without a self-loop
    bool accepting = false;
  };

  std::vector<std::uint32_t> component_of;
  std::vector<Component> components;  // indexed by id, topological order

  bool is_transient(StateId q) const { return components[component_of[q]].trivial; }
};

// Structure only; every component is flagged rejecting.
SccDecomposition scc_decompose(const TransitionSystem& ts);

// Nontrivial components are accepting iff they contain an accepting state.
// Throws WeaknessError when a nontrivial component mixes both kinds.
SccDecomposition scc_decompose(const TransitionSystem& ts, const std::vector<bool>& accepting);

}  // namespace wdba
