#pragma once

#include <iosfwd>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wdba/discrimination.hpp"
#include "wdba/teacher.hpp"

namespace wdba {

class Trace;

// Rows S ∪ S·Σ, columns E, entry(u, (x, y)) = MQ(u·x, y). Distinct members
// of S always have distinct rows, so the table never needs a consistency
// pass.
class ObservationTable final : public DiscriminationStructure {
 public:
  explicit ObservationTable(Oracle& oracle, Trace* trace = nullptr,
                            std::vector<Experiment> experiments = {});

  std::span<const Word> states() const override { return states_; }
  std::optional<StateId> classify(WordView word) override;
  void ensure_closed() override;
  StateId successor(StateId state, Letter letter) const override;
  void split(const Split& split) override;
  std::optional<ValidCex> self_consistency_cex(const Hypothesis& hyp) const override;
  std::size_t experiment_count() const override { return experiments_.size(); }

  // Appends u to S together with its one-letter extensions.
  void add_state(const Word& u);
  // Appends a column unless an equal ω-experiment is already present.
  // Returns whether a column was added.
  bool add_experiment(const Experiment& e);
  // Promotes the first S·Σ row without an equal S row. Returns false when
  // the table is closed.
  bool close_once();

  std::span<const Experiment> experiments() const { return experiments_; }
  std::size_t row_count() const { return rows_.size(); }
  const Word& row_word(std::size_t row) const { return rows_[row].word; }
  const std::vector<bool>& row_bits(std::size_t row) const { return rows_[row].bits; }
  bool row_in_s(std::size_t row) const { return rows_[row].state.has_value(); }
  std::size_t state_row(StateId state) const { return s_rows_[state]; }
  std::size_t extension_row(StateId state, Letter letter) const {
    return ext_rows_[state * alphabet_size_ + letter];
  }
  // State whose row equals `bits`, if any.
  std::optional<StateId> state_with_row(const std::vector<bool>& bits) const;
  bool entry(std::size_t row, std::size_t column) const { return rows_[row].bits[column]; }

  // Fixed text layout: the column header, S rows, a separator, then S·Σ
  // rows, each as the word followed by its bits.
  void dump(std::ostream& out) const;

 private:
  struct Row {
    Word word;
    std::vector<bool> bits;
    std::optional<StateId> state;
  };

  bool query(WordView word, const Experiment& e);
  std::size_t ensure_row(const Word& word);
  void rebuild_index();

  Oracle* oracle_;
  Trace* trace_;
  std::size_t alphabet_size_;
  std::vector<Word> states_;
  std::vector<Experiment> experiments_;
  std::unordered_set<Decomposition, DecompositionHash> experiment_set_;
  std::vector<Row> rows_;
  std::unordered_map<Word, std::size_t, WordHash> row_of_word_;
  std::vector<std::size_t> s_rows_;
  std::vector<std::size_t> ext_rows_;
  std::unordered_map<std::vector<bool>, StateId> state_of_bits_;
  std::unordered_map<Decomposition, bool, DecompositionHash> answers_;
};

}  // namespace wdba
