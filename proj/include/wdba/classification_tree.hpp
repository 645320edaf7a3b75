#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "wdba/discrimination.hpp"
#include "wdba/teacher.hpp"

namespace wdba {

// Binary tree whose inner nodes hold experiments and whose leaves hold the
// representatives. The ⊤-child of a node (x, y) collects words u with
// u·x·y^ω in L.
//
// Sift results for the rows S·Σ are kept between rounds: after a split only
// the transitions that ended in the split leaf are sifted further, starting
// from the new inner node.
class ClassificationTree final : public DiscriminationStructure {
 public:
  explicit ClassificationTree(Oracle& oracle);

  std::span<const Word> states() const override { return states_; }
  std::optional<StateId> classify(WordView word) override { return sift(word); }
  void ensure_closed() override;
  StateId successor(StateId state, Letter letter) const override;
  void split(const Split& split) override;
  std::optional<ValidCex> self_consistency_cex(const Hypothesis& hyp) const override;
  std::size_t experiment_count() const override { return nodes_.size() - states_.size(); }

  // One membership query per inner node on the path.
  StateId sift(WordView word);

  // Experiments and outcomes on the root-to-leaf path of a state.
  std::vector<std::pair<Experiment, bool>> signature(StateId state) const;
  // Lowest inner node on both paths: its experiment and the outcome of `a`.
  std::pair<Experiment, bool> separator(StateId a, StateId b) const;
  std::size_t depth() const;

  // Graphviz rendering; ⊤ edges solid, ⊥ edges dashed.
  void dump_dot(std::ostream& out) const;

 private:
  static constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);

  struct Node {
    std::optional<Experiment> experiment;  // inner nodes only
    StateId state = 0;                     // leaves only
    std::size_t parent = kNoNode;
    std::size_t child[2] = {kNoNode, kNoNode};  // indexed by outcome
    bool outcome = false;                       // edge label from the parent
  };

  std::size_t descend(std::size_t node, WordView word);
  std::size_t node_depth(std::size_t node) const;

  Oracle* oracle_;
  std::size_t alphabet_size_;
  std::vector<Word> states_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> leaf_of_;
  // Node reached so far by each row states_[q]·a.
  std::vector<std::size_t> transitions_;
};

}  // namespace wdba
