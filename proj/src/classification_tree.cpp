#include "wdba/classification_tree.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace wdba {

ClassificationTree::ClassificationTree(Oracle& oracle)
    : oracle_(&oracle), alphabet_size_(oracle.alphabet().size()) {
  states_.push_back(Word{});
  nodes_.push_back(Node{});
  leaf_of_.push_back(0);
  transitions_.assign(alphabet_size_, 0);
}

std::size_t ClassificationTree::descend(std::size_t node, WordView word) {
  while (nodes_[node].experiment) {
    const Experiment& e = *nodes_[node].experiment;
    const bool answer = oracle_->mq(concat(word, e.prefix), e.period);
    node = nodes_[node].child[answer ? 1 : 0];
  }
  return node;
}

StateId ClassificationTree::sift(WordView word) { return nodes_[descend(0, word)].state; }

void ClassificationTree::ensure_closed() {
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    if (nodes_[transitions_[i]].experiment) {
      Word row = states_[i / alphabet_size_];
      row.push_back(static_cast<Letter>(i % alphabet_size_));
      transitions_[i] = descend(transitions_[i], row);
    }
  }
}

StateId ClassificationTree::successor(StateId state, Letter letter) const {
  const Node& node = nodes_[transitions_[state * alphabet_size_ + letter]];
  if (node.experiment) {
    throw std::logic_error("ClassificationTree: successor before ensure_closed");
  }
  return node.state;
}

void ClassificationTree::split(const Split& split) {
  if (std::find(states_.begin(), states_.end(), split.new_state) != states_.end()) {
    throw std::logic_error("ClassificationTree: state added twice");
  }
  const std::size_t inner = leaf_of_[split.old_state];
  const auto id = static_cast<StateId>(states_.size());
  const bool fresh = split.new_outcome;

  Node old_leaf;
  old_leaf.state = split.old_state;
  old_leaf.parent = inner;
  old_leaf.outcome = !fresh;
  Node new_leaf;
  new_leaf.state = id;
  new_leaf.parent = inner;
  new_leaf.outcome = fresh;
  nodes_.push_back(old_leaf);
  nodes_.push_back(new_leaf);
  const std::size_t old_index = nodes_.size() - 2;
  const std::size_t new_index = nodes_.size() - 1;

  Node& node = nodes_[inner];
  node.experiment = split.experiment;
  node.child[fresh ? 1 : 0] = new_index;
  node.child[fresh ? 0 : 1] = old_index;
  leaf_of_[split.old_state] = old_index;
  leaf_of_.push_back(new_index);
  states_.push_back(split.new_state);

  // The row that became the new state is known to sit in its leaf.
  transitions_[split.source * alphabet_size_ + split.letter] = new_index;
  transitions_.resize(transitions_.size() + alphabet_size_, 0);
}

std::optional<ValidCex> ClassificationTree::self_consistency_cex(const Hypothesis& hyp) const {
  for (StateId q = 0; q < states_.size(); ++q) {
    const StateId reached = hyp.ts.run(states_[q]);
    if (reached == q) {
      continue;
    }
    auto [e, outcome] = separator(q, reached);
    Word prefix = concat(states_[q], e.prefix);
    return ValidCex{std::move(prefix), std::move(e.period), outcome, states_[q].size()};
  }
  return std::nullopt;
}

std::vector<std::pair<Experiment, bool>> ClassificationTree::signature(StateId state) const {
  std::vector<std::pair<Experiment, bool>> path;
  for (std::size_t node = leaf_of_[state]; nodes_[node].parent != kNoNode;
       node = nodes_[node].parent) {
    path.emplace_back(*nodes_[nodes_[node].parent].experiment, nodes_[node].outcome);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::size_t ClassificationTree::node_depth(std::size_t node) const {
  std::size_t depth = 0;
  for (; nodes_[node].parent != kNoNode; node = nodes_[node].parent) {
    ++depth;
  }
  return depth;
}

std::pair<Experiment, bool> ClassificationTree::separator(StateId a, StateId b) const {
  if (a == b) {
    throw std::invalid_argument("ClassificationTree: a state has no separator from itself");
  }
  std::size_t x = leaf_of_[a];
  std::size_t y = leaf_of_[b];
  std::size_t dx = node_depth(x);
  std::size_t dy = node_depth(y);
  bool outcome = false;
  while (dx > dy) {
    outcome = nodes_[x].outcome;
    x = nodes_[x].parent;
    --dx;
  }
  while (dy > dx) {
    y = nodes_[y].parent;
    --dy;
  }
  while (nodes_[x].parent != nodes_[y].parent) {
    x = nodes_[x].parent;
    y = nodes_[y].parent;
  }
  outcome = nodes_[x].outcome;
  return {*nodes_[nodes_[x].parent].experiment, outcome};
}

std::size_t ClassificationTree::depth() const {
  std::size_t best = 0;
  for (const std::size_t leaf : leaf_of_) {
    best = std::max(best, node_depth(leaf));
  }
  return best;
}

void ClassificationTree::dump_dot(std::ostream& out) const {
  const Alphabet& alphabet = oracle_->alphabet();
  out << "digraph classification_tree {\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& node = nodes_[i];
    if (node.experiment) {
      out << "  n" << i << " [shape=ellipse,label=\"(" << alphabet.format(node.experiment->prefix)
          << ", " << alphabet.format(node.experiment->period) << ")\"];\n";
    } else {
      out << "  n" << i << " [shape=box,label=\"" << alphabet.format(states_[node.state])
          << "\"];\n";
    }
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& node = nodes_[i];
    if (!node.experiment) {
      continue;
    }
    out << "  n" << i << " -> n" << node.child[0] << " [style=dashed];\n";
    out << "  n" << i << " -> n" << node.child[1] << " [style=solid];\n";
  }
  out << "}\n";
}

}  // namespace wdba
