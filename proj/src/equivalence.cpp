#include "wdba/equivalence.hpp"

#include <deque>
#include <limits>

#include "wdba/errors.hpp"
#include "wdba/scc.hpp"

namespace wdba {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void require_same_alphabet(const Wdba& lhs, const Wdba& rhs) {
  if (!(lhs.alphabet() == rhs.alphabet())) {
    throw AlphabetMismatch();
  }
}

void require_weak(const Wdba& a) {
  if (!is_weak(a)) {
    throw WeaknessError("automaton is not weak");
  }
}

// Reachable part of the product of two automata, explored breadth-first.
struct Product {
  std::vector<std::pair<StateId, StateId>> pairs;  // node -> (lhs state, rhs state)
  std::vector<std::uint32_t> parent;
  std::vector<Letter> parent_letter;
  Digraph graph;
};

Product explore_product(const TransitionSystem& lhs, const TransitionSystem& rhs) {
  Product p;
  const std::size_t k = lhs.alphabet_size();
  const std::size_t m = rhs.state_count();
  std::vector<std::uint32_t> id(lhs.state_count() * m, kNone);
  auto intern = [&](StateId a, StateId b, std::uint32_t from, Letter via) {
    std::uint32_t& slot = id[a * m + b];
    if (slot == kNone) {
      slot = static_cast<std::uint32_t>(p.pairs.size());
      p.pairs.emplace_back(a, b);
      p.parent.push_back(from);
      p.parent_letter.push_back(via);
    }
    return slot;
  };
  intern(lhs.initial(), rhs.initial(), kNone, 0);
  for (std::uint32_t v = 0; v < p.pairs.size(); ++v) {
    p.graph.offsets.push_back(static_cast<std::uint32_t>(p.graph.targets.size()));
    auto [a, b] = p.pairs[v];
    for (Letter l = 0; l < k; ++l) {
      p.graph.targets.push_back(intern(lhs.successor(a, l), rhs.successor(b, l), v, l));
    }
  }
  p.graph.offsets.push_back(static_cast<std::uint32_t>(p.graph.targets.size()));
  return p;
}

// Shortest non-empty word leading from `from` back to itself, staying in the
// component `comp`; letters explored in order so ties break lexicographically.
Word shortest_cycle(const Digraph& g, const std::vector<std::uint32_t>& component, std::uint32_t from,
                    std::size_t letters) {
  const std::uint32_t comp = component[from];
  std::vector<std::uint32_t> parent(g.node_count(), kNone);
  std::vector<Letter> via(g.node_count(), 0);
  std::deque<std::uint32_t> queue{from};
  std::vector<bool> visited(g.node_count(), false);
  visited[from] = true;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    auto succ = g.successors(v);
    for (Letter l = 0; l < letters; ++l) {
      std::uint32_t w = succ[l];
      if (w == from) {
        Word path{l};
        for (std::uint32_t x = v; x != from; x = parent[x]) {
          path.push_back(via[x]);
        }
        return Word(path.rbegin(), path.rend());
      }
      if (!visited[w] && component[w] == comp) {
        visited[w] = true;
        parent[w] = v;
        via[w] = l;
        queue.push_back(w);
      }
    }
  }
  return {};
}

// Depth-first search over `g` from `from`, following letters in order and
// staying inside `keep` nodes. Returns the letters of the DFS-tree path to
// the first node satisfying `stop`, or of the first edge back to `from` when
// `cycle` is set.
template <typename Keep, typename Stop>
std::optional<Word> dfs_path(const Digraph& g, std::uint32_t from, std::size_t letters, bool cycle,
                             Keep keep, Stop stop) {
  if (!cycle && stop(from)) {
    return Word{};
  }
  std::vector<bool> visited(g.node_count(), false);
  std::vector<std::pair<std::uint32_t, Letter>> stack{{from, 0}};
  visited[from] = true;
  Word path;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == letters) {
      stack.pop_back();
      if (!path.empty()) {
        path.pop_back();
      }
      continue;
    }
    const Letter l = next++;
    const std::uint32_t w = g.successors(v)[l];
    if (cycle && w == from) {
      path.push_back(l);
      return path;
    }
    if (visited[w] || !keep(w)) {
      continue;
    }
    visited[w] = true;
    path.push_back(l);
    if (!cycle && stop(w)) {
      return path;
    }
    stack.emplace_back(w, 0);
  }
  return std::nullopt;
}

}  // namespace

Witness product_witness(const Wdba& lhs, const Wdba& rhs, WitnessSearch search) {
  require_same_alphabet(lhs, rhs);
  const Product p = explore_product(lhs.ts(), rhs.ts());
  std::uint32_t count = 0;
  const auto component = strongly_connected_components(p.graph, count);

  // A component is nontrivial when it has two nodes or a self-loop.
  std::vector<std::uint32_t> size(count, 0);
  std::vector<bool> self_loop(count, false);
  for (std::uint32_t v = 0; v < p.pairs.size(); ++v) {
    ++size[component[v]];
    for (std::uint32_t w : p.graph.successors(v)) {
      if (w == v) {
        self_loop[component[v]] = true;
      }
    }
  }
  const auto disagrees = [&](std::uint32_t v) {
    const std::uint32_t c = component[v];
    return (size[c] >= 2 || self_loop[c]) &&
           lhs.is_accepting(p.pairs[v].first) != rhs.is_accepting(p.pairs[v].second);
  };
  const std::size_t letters = lhs.alphabet().size();
  if (search == WitnessSearch::depth_first) {
    const auto everywhere = [](std::uint32_t) { return true; };
    auto prefix = dfs_path(p.graph, 0, letters, false, everywhere, disagrees);
    if (!prefix) {
      return std::nullopt;
    }
    std::uint32_t v = 0;
    for (const Letter l : *prefix) {
      v = p.graph.successors(v)[l];
    }
    const auto same_component = [&](std::uint32_t w) { return component[w] == component[v]; };
    auto period = dfs_path(p.graph, v, letters, true, same_component, everywhere);
    return Decomposition{std::move(*prefix), std::move(*period)};
  }
  // Nodes are numbered in BFS order, so the first hit is the earliest entry.
  for (std::uint32_t v = 0; v < p.pairs.size(); ++v) {
    const std::uint32_t c = component[v];
    if (size[c] < 2 && !self_loop[c]) {
      continue;
    }
    auto [a, b] = p.pairs[v];
    if (lhs.is_accepting(a) == rhs.is_accepting(b)) {
      continue;
    }
    Decomposition w;
    for (std::uint32_t x = v; p.parent[x] != kNone; x = p.parent[x]) {
      w.prefix.push_back(p.parent_letter[x]);
    }
    w.prefix = Word(w.prefix.rbegin(), w.prefix.rend());
    w.period = shortest_cycle(p.graph, component, v, lhs.alphabet().size());
    return w;
  }
  return std::nullopt;
}

bool equivalent(const Wdba& lhs, const Wdba& rhs) { return !product_witness(lhs, rhs).has_value(); }

std::vector<std::uint32_t> residual_classes(const Wdba& a) {
  require_weak(a);
  // Pair graph over all ordered state pairs; (p, q) is distinguishable iff it
  // reaches a nontrivial pair component whose sides disagree on acceptance.
  const TransitionSystem& ts = a.ts();
  const std::uint32_t n = static_cast<std::uint32_t>(ts.state_count());
  const std::size_t k = ts.alphabet_size();
  Digraph g;
  g.offsets.resize(static_cast<std::size_t>(n) * n + 1);
  g.targets.reserve(static_cast<std::size_t>(n) * n * k);
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < n; ++q) {
      g.offsets[p * n + q] = static_cast<std::uint32_t>(g.targets.size());
      for (Letter l = 0; l < k; ++l) {
        g.targets.push_back(ts.successor(p, l) * n + ts.successor(q, l));
      }
    }
  }
  g.offsets.back() = static_cast<std::uint32_t>(g.targets.size());

  std::uint32_t count = 0;
  const auto component = strongly_connected_components(g, count);
  std::vector<std::uint32_t> size(count, 0);
  std::vector<bool> bad(count, false);
  std::vector<bool> self_loop(count, false);
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    ++size[component[v]];
    for (std::uint32_t w : g.successors(v)) {
      self_loop[component[v]] = self_loop[component[v]] || w == v;
    }
  }
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    const std::uint32_t c = component[v];
    if ((size[c] > 1 || self_loop[c]) && a.is_accepting(v / n) != a.is_accepting(v % n)) {
      bad[c] = true;
    }
  }
  // Components are topologically numbered, so sweeping ids downwards sees
  // every successor component before its predecessors.
  std::vector<std::vector<std::uint32_t>> members(count);
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    members[component[v]].push_back(v);
  }
  for (std::uint32_t c = count; c-- > 0;) {
    if (bad[c]) {
      continue;
    }
    for (std::uint32_t v : members[c]) {
      for (std::uint32_t w : g.successors(v)) {
        if (bad[component[w]]) {
          bad[c] = true;
          break;
        }
      }
      if (bad[c]) {
        break;
      }
    }
  }

  std::vector<std::uint32_t> cls(n, kNone);
  std::uint32_t next = 0;
  for (std::uint32_t p = 0; p < n; ++p) {
    if (cls[p] != kNone) {
      continue;
    }
    cls[p] = next;
    for (std::uint32_t q = p + 1; q < n; ++q) {
      if (cls[q] == kNone && !bad[component[p * n + q]]) {
        cls[q] = next;
      }
    }
    ++next;
  }
  return cls;
}

Wdba minimize(const Wdba& a) {
  const auto cls = residual_classes(a);
  const TransitionSystem& ts = a.ts();
  const std::size_t k = ts.alphabet_size();

  // Number the reachable classes breadth-first from the initial state.
  std::uint32_t class_count = 0;
  for (auto c : cls) {
    class_count = std::max(class_count, c + 1);
  }
  std::vector<std::uint32_t> order(class_count, kNone);
  std::vector<StateId> representative;
  std::deque<StateId> queue;
  auto visit = [&](StateId q) {
    if (order[cls[q]] == kNone) {
      order[cls[q]] = static_cast<std::uint32_t>(representative.size());
      representative.push_back(q);
      queue.push_back(q);
    }
  };
  visit(ts.initial());
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (Letter l = 0; l < k; ++l) {
      visit(ts.successor(q, l));
    }
  }

  const std::size_t m = representative.size();
  TransitionSystem quotient(m, k, 0);
  for (StateId s = 0; s < m; ++s) {
    for (Letter l = 0; l < k; ++l) {
      quotient.set_successor(s, l, order[cls[ts.successor(representative[s], l)]]);
    }
  }

  // A quotient state on a cycle with loop word v accepts iff v^ω is accepted
  // from any original state of its class; weakness makes one probe per SCC
  // enough.
  std::vector<bool> accepting(m, false);
  const SccDecomposition sccs = scc_decompose(quotient);
  const Digraph g = to_digraph(quotient);
  for (const auto& comp : sccs.components) {
    if (comp.trivial) {
      continue;
    }
    const StateId s = comp.states.front();
    Decomposition probe{{}, shortest_cycle(g, sccs.component_of, s, k)};
    const bool acc = member(a.rerooted(representative[s]), probe);
    for (StateId t : comp.states) {
      accepting[t] = acc;
    }
  }
  return Wdba(a.alphabet(), std::move(quotient), std::move(accepting));
}

bool isomorphic(const Wdba& lhs, const Wdba& rhs) {
  require_same_alphabet(lhs, rhs);
  if (lhs.state_count() != rhs.state_count()) {
    return false;
  }
  const TransitionSystem& l = lhs.ts();
  const TransitionSystem& r = rhs.ts();
  std::vector<StateId> to_rhs(l.state_count(), kNone);
  std::vector<StateId> to_lhs(r.state_count(), kNone);
  std::deque<StateId> queue;
  auto bind = [&](StateId p, StateId q) {
    if (to_rhs[p] == kNone && to_lhs[q] == kNone) {
      to_rhs[p] = q;
      to_lhs[q] = p;
      queue.push_back(p);
      return lhs.is_accepting(p) == rhs.is_accepting(q);
    }
    return to_rhs[p] == q && to_lhs[q] == p;
  };
  if (!bind(l.initial(), r.initial())) {
    return false;
  }
  std::size_t bound = 1;
  while (!queue.empty()) {
    StateId p = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < l.alphabet_size(); ++a) {
      const bool fresh = to_rhs[l.successor(p, a)] == kNone;
      if (!bind(l.successor(p, a), r.successor(to_rhs[p], a))) {
        return false;
      }
      bound += fresh ? 1 : 0;
    }
  }
  return bound == l.state_count();
}

}  // namespace wdba
