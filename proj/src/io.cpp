#include "wdba/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "wdba/errors.hpp"

namespace wdba {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      ++i;
    }
    if (i > start) {
      fields.push_back(line.substr(start, i - start));
    }
  }
  return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Wdba parse_automaton(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> states;
  std::optional<StateId> initial;
  std::vector<std::pair<std::size_t, std::size_t>> accepting;  // (state, line)
  struct Trans {
    std::size_t src;
    Letter letter;
    std::size_t dst;
    std::size_t line;
  };
  std::vector<Trans> transitions;
  bool header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto fields = split_fields(line);
    if (fields.empty()) {
      if (end == text.size()) {
        break;
      }
      continue;
    }
    if (!header) {
      if (fields.size() != 2 || fields[0] != "wdba" || fields[1] != "v1") {
        throw ParseError(line_no, "expected header 'wdba v1'");
      }
      header = true;
      continue;
    }
    const std::string_view key = fields[0];
    if (key == "alphabet") {
      if (alphabet) {
        throw ParseError(line_no, "duplicate alphabet line");
      }
      std::vector<std::string> symbols(fields.begin() + 1, fields.end());
      try {
        alphabet.emplace(std::move(symbols));
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "states") {
      if (states || fields.size() != 2) {
        throw ParseError(line_no, "expected a single 'states <N>' line");
      }
      states = parse_count(fields[1], line_no);
      if (*states == 0) {
        throw ParseError(line_no, "an automaton needs at least one state");
      }
    } else if (key == "initial") {
      if (initial || fields.size() != 2) {
        throw ParseError(line_no, "expected a single 'initial <id>' line");
      }
      initial = static_cast<StateId>(parse_count(fields[1], line_no));
    } else if (key == "accepting") {
      for (std::size_t i = 1; i < fields.size(); ++i) {
        accepting.emplace_back(parse_count(fields[i], line_no), line_no);
      }
    } else if (key == "trans") {
      if (fields.size() != 4) {
        throw ParseError(line_no, "expected 'trans <src> <letter> <dst>'");
      }
      if (!alphabet) {
        throw ParseError(line_no, "transition before the alphabet line");
      }
      auto letter = alphabet->find(fields[2]);
      if (!letter) {
        throw ParseError(line_no, "unknown letter '" + std::string(fields[2]) + "'");
      }
      transitions.push_back(
          {parse_count(fields[1], line_no), *letter, parse_count(fields[3], line_no), line_no});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
    if (end == text.size()) {
      break;
    }
  }

  if (!header) {
    throw ParseError(0, "empty input: expected header 'wdba v1'");
  }
  if (!alphabet) {
    throw ParseError(0, "missing 'alphabet' line");
  }
  if (!states) {
    throw ParseError(0, "missing 'states' line");
  }
  if (!initial) {
    throw ParseError(0, "missing 'initial' line");
  }
  const std::size_t n = *states;
  if (*initial >= n) {
    throw ParseError(0, "initial state " + std::to_string(*initial) + " out of range");
  }

  TransitionSystem ts(n, alphabet->size(), *initial);
  std::vector<bool> defined(n * alphabet->size(), false);
  for (const Trans& t : transitions) {
    if (t.src >= n) {
      throw ParseError(t.line, "source state " + std::to_string(t.src) + " out of range");
    }
    if (t.dst >= n) {
      throw ParseError(t.line, "target state " + std::to_string(t.dst) + " out of range");
    }
    const std::size_t slot = t.src * alphabet->size() + t.letter;
    if (defined[slot]) {
      throw ParseError(t.line, "duplicate transition for state " + std::to_string(t.src) +
                                   " and letter '" + alphabet->symbol(t.letter) + "'");
    }
    defined[slot] = true;
    ts.set_successor(static_cast<StateId>(t.src), t.letter, static_cast<StateId>(t.dst));
  }
  for (std::size_t q = 0; q < n; ++q) {
    for (Letter a = 0; a < alphabet->size(); ++a) {
      if (!defined[q * alphabet->size() + a]) {
        throw ParseError(0, "missing transition for state " + std::to_string(q) +
                                " and letter '" + alphabet->symbol(a) + "'");
      }
    }
  }

  std::vector<bool> acc(n, false);
  for (auto [q, line] : accepting) {
    if (q >= n) {
      throw ParseError(line, "accepting state " + std::to_string(q) + " out of range");
    }
    acc[q] = true;
  }
  return Wdba(std::move(*alphabet), std::move(ts), std::move(acc));
}

std::string serialize_automaton(const Wdba& a) {
  std::ostringstream out;
  out << "wdba v1\nalphabet";
  for (const auto& s : a.alphabet().symbols()) {
    out << ' ' << s;
  }
  out << "\nstates " << a.state_count() << "\ninitial " << a.ts().initial() << "\naccepting";
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (a.is_accepting(q)) {
      out << ' ' << q;
    }
  }
  out << '\n';
  for (StateId q = 0; q < a.state_count(); ++q) {
    for (Letter l = 0; l < a.alphabet().size(); ++l) {
      out << "trans " << q << ' ' << a.alphabet().symbol(l) << ' ' << a.ts().successor(q, l)
          << '\n';
    }
  }
  return out.str();
}

Wdba load_automaton(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_automaton(buffer.str());
}

void save_automaton(const std::filesystem::path& path, const Wdba& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out << serialize_automaton(a);
}

}  // namespace wdba
