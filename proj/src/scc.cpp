#include "wdba/scc.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wdba/errors.hpp"

namespace wdba {

Digraph to_digraph(const TransitionSystem& ts) {
  Digraph g;
  const std::size_t n = ts.state_count();
  const std::size_t k = ts.alphabet_size();
  g.offsets.resize(n + 1);
  g.targets.reserve(n * k);
  for (StateId q = 0; q < n; ++q) {
    g.offsets[q] = static_cast<std::uint32_t>(g.targets.size());
    for (Letter a = 0; a < k; ++a) {
      g.targets.push_back(ts.successor(q, a));
    }
  }
  g.offsets[n] = static_cast<std::uint32_t>(g.targets.size());
  return g;
}

std::vector<std::uint32_t> strongly_connected_components(const Digraph& g, std::uint32_t& count) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::uint32_t n = static_cast<std::uint32_t>(g.node_count());

  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> component(n, kUnvisited);
  std::vector<std::uint32_t> stack;
  // Explicit call stack: (vertex, position in its successor list).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> frames;

  std::uint32_t next_index = 0;
  std::uint32_t completed = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) {
      continue;
    }
    frames.emplace_back(root, 0);
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      auto succ = g.successors(v);
      if (pos < succ.size()) {
        std::uint32_t w = succ[pos++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      std::uint32_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        std::uint32_t parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = completed;
        } while (w != done);
        ++completed;
      }
    }
  }

  // Tarjan completes sinks first; flip to get a topological numbering.
  for (auto& c : component) {
    c = completed - 1 - c;
  }
  count = completed;
  return component;
}

SccDecomposition scc_decompose(const TransitionSystem& ts) {
  SccDecomposition out;
  std::uint32_t count = 0;
  const Digraph g = to_digraph(ts);
  out.component_of = strongly_connected_components(g, count);
  out.components.resize(count);
  for (StateId q = 0; q < ts.state_count(); ++q) {
    out.components[out.component_of[q]].states.push_back(q);
  }
  for (auto& c : out.components) {
    if (c.states.size() > 1) {
      c.trivial = false;
      continue;
    }
    const StateId q = c.states.front();
    for (Letter a = 0; a < ts.alphabet_size(); ++a) {
      if (ts.successor(q, a) == q) {
        c.trivial = false;
        break;
      }
    }
  }
  return out;
}

SccDecomposition scc_decompose(const TransitionSystem& ts, const std::vector<bool>& accepting) {
  SccDecomposition out = scc_decompose(ts);
  for (std::size_t id = 0; id < out.components.size(); ++id) {
    auto& c = out.components[id];
    if (c.trivial) {
      continue;
    }
    const bool first = accepting[c.states.front()];
    for (StateId q : c.states) {
      if (accepting[q] != first) {
        throw WeaknessError("SCC " + std::to_string(id) +
                            " contains both accepting and rejecting states");
      }
    }
    c.accepting = first;
  }
  return out;
}

}  // namespace wdba
