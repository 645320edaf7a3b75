#include "wdba/observation_table.hpp"

#include <ostream>
#include <stdexcept>

#include "wdba/trace.hpp"

namespace wdba {

ObservationTable::ObservationTable(Oracle& oracle, Trace* trace,
                                   std::vector<Experiment> experiments)
    : oracle_(&oracle), trace_(trace), alphabet_size_(oracle.alphabet().size()) {
  for (auto& e : experiments) {
    add_experiment(e);
  }
  add_state(Word{});
}

// Identical queries within the table are asked once. Different
// decompositions of one ω-word still count separately.
bool ObservationTable::query(WordView word, const Experiment& e) {
  Decomposition key{concat(word, e.prefix), e.period};
  if (const auto it = answers_.find(key); it != answers_.end()) {
    return it->second;
  }
  const bool answer = oracle_->mq(key.prefix, key.period);
  answers_.emplace(std::move(key), answer);
  return answer;
}

std::size_t ObservationTable::ensure_row(const Word& word) {
  if (const auto it = row_of_word_.find(word); it != row_of_word_.end()) {
    return it->second;
  }
  Row row{word, std::vector<bool>(experiments_.size()), std::nullopt};
  for (std::size_t c = 0; c < experiments_.size(); ++c) {
    row.bits[c] = query(word, experiments_[c]);
  }
  rows_.push_back(std::move(row));
  row_of_word_.emplace(word, rows_.size() - 1);
  return rows_.size() - 1;
}

void ObservationTable::add_state(const Word& u) {
  const std::size_t row = ensure_row(u);
  if (rows_[row].state) {
    throw std::logic_error("ObservationTable: state added twice");
  }
  if (state_of_bits_.contains(rows_[row].bits)) {
    throw std::logic_error("ObservationTable: new state is not separated from S");
  }
  const auto id = static_cast<StateId>(states_.size());
  rows_[row].state = id;
  states_.push_back(u);
  s_rows_.push_back(row);
  state_of_bits_.emplace(rows_[row].bits, id);
  for (Letter a = 0; a < alphabet_size_; ++a) {
    Word extended = u;
    extended.push_back(a);
    ext_rows_.push_back(ensure_row(extended));
  }
}

bool ObservationTable::add_experiment(const Experiment& e) {
  if (e.period.empty()) {
    throw std::invalid_argument("ObservationTable: experiment with empty period");
  }
  if (!experiment_set_.insert(canonical(e)).second) {
    return false;
  }
  experiments_.push_back(e);
  for (auto& row : rows_) {
    row.bits.push_back(query(row.word, e));
  }
  rebuild_index();
  return true;
}

void ObservationTable::rebuild_index() {
  state_of_bits_.clear();
  for (StateId q = 0; q < s_rows_.size(); ++q) {
    state_of_bits_.emplace(rows_[s_rows_[q]].bits, q);
  }
}

std::optional<StateId> ObservationTable::state_with_row(const std::vector<bool>& bits) const {
  if (const auto it = state_of_bits_.find(bits); it != state_of_bits_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<StateId> ObservationTable::classify(WordView word) {
  const Word w(word.begin(), word.end());
  if (const auto it = row_of_word_.find(w); it != row_of_word_.end()) {
    return state_with_row(rows_[it->second].bits);
  }
  std::vector<bool> bits(experiments_.size());
  for (std::size_t c = 0; c < experiments_.size(); ++c) {
    bits[c] = query(word, experiments_[c]);
  }
  return state_with_row(bits);
}

bool ObservationTable::close_once() {
  for (const std::size_t row : ext_rows_) {
    if (!rows_[row].state && !state_of_bits_.contains(rows_[row].bits)) {
      const Word word = rows_[row].word;
      add_state(word);
      if (trace_ != nullptr) {
        trace_->add_state(word);
      }
      return true;
    }
  }
  return false;
}

void ObservationTable::ensure_closed() {
  while (close_once()) {
  }
}

StateId ObservationTable::successor(StateId state, Letter letter) const {
  const auto it = state_of_bits_.find(rows_[extension_row(state, letter)].bits);
  if (it == state_of_bits_.end()) {
    throw std::logic_error("ObservationTable: successor on a table that is not closed");
  }
  return it->second;
}

void ObservationTable::split(const Split& split) {
  const Experiment& e = split.experiment;
  answers_.emplace(Decomposition{concat(split.new_state, e.prefix), e.period}, split.new_outcome);
  answers_.emplace(Decomposition{concat(states_[split.old_state], e.prefix), e.period},
                   !split.new_outcome);
  add_experiment(e);
  add_state(split.new_state);
}

std::optional<ValidCex> ObservationTable::self_consistency_cex(const Hypothesis& hyp) const {
  for (StateId q = 0; q < states_.size(); ++q) {
    if (hyp.ts.run(states_[q]) != q) {
      throw std::logic_error("ObservationTable: representative does not reach its own state");
    }
  }
  return std::nullopt;
}

void ObservationTable::dump(std::ostream& out) const {
  const Alphabet& alphabet = oracle_->alphabet();
  out << "E";
  for (const auto& e : experiments_) {
    out << ' ' << alphabet.format(e);
  }
  out << '\n';
  const auto print = [&](const Row& row) {
    out << alphabet.format(row.word);
    for (const bool bit : row.bits) {
      out << ' ' << (bit ? '1' : '0');
    }
    out << '\n';
  };
  for (const std::size_t row : s_rows_) {
    print(rows_[row]);
  }
  out << "--\n";
  for (const auto& row : rows_) {
    if (!row.state) {
      print(row);
    }
  }
}

}  // namespace wdba
