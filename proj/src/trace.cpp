#include "wdba/trace.hpp"

#include <ostream>

namespace wdba {

void Trace::membership(WordView prefix, WordView period, bool answer) {
  *out_ << "MQ " << alphabet_.format(prefix) << '|' << alphabet_.format(period) << " -> "
        << (answer ? 1 : 0) << '\n';
}

void Trace::equivalence_ok() { *out_ << "EQ -> ok\n"; }

void Trace::equivalence_cex(const Decomposition& w) {
  *out_ << "EQ -> cex " << alphabet_.format(w) << '\n';
}

void Trace::add_state(WordView state) { *out_ << "ADD-STATE " << alphabet_.format(state) << '\n'; }

void Trace::add_experiment(WordView prefix, WordView period) {
  *out_ << "ADD-EXP " << alphabet_.format(prefix) << '|' << alphabet_.format(period) << '\n';
}

void Trace::mark(WordView state, bool accepting, WordView loop) {
  *out_ << "MARK " << alphabet_.format(state) << (accepting ? " acc" : " rej")
        << " loop=" << alphabet_.format(loop) << '\n';
}

void Trace::mark_transient(WordView state) {
  *out_ << "MARK " << alphabet_.format(state) << " rej transient\n";
}

void Trace::conflict_c1(WordView u1, WordView u2, WordView x, WordView y) {
  *out_ << "CONFLICT C1 u1=" << alphabet_.format(u1) << " u2=" << alphabet_.format(u2)
        << " x=" << alphabet_.format(x) << " y=" << alphabet_.format(y) << '\n';
}

void Trace::conflict_c2(WordView u, WordView x, WordView y) {
  *out_ << "CONFLICT C2 u=" << alphabet_.format(u) << " x=" << alphabet_.format(x)
        << " y=" << alphabet_.format(y) << '\n';
}

void Trace::resolve_state(WordView u1, WordView u2, WordView z, WordView w) {
  *out_ << "RESOLVE-STATE u1=" << alphabet_.format(u1) << " u2=" << alphabet_.format(u2)
        << " z=" << alphabet_.format(z) << " w=" << alphabet_.format(w) << '\n';
}

void Trace::resolve(WordView u, WordView x, WordView y, std::size_t k, std::size_t h) {
  *out_ << "RESOLVE u=" << alphabet_.format(u) << " x=" << alphabet_.format(x)
        << " y=" << alphabet_.format(y) << " k=" << k << " h=" << h << '\n';
}

void Trace::valid_cex(WordView prefix, WordView period) {
  *out_ << "VALID-CEX " << alphabet_.format(prefix) << '|' << alphabet_.format(period) << '\n';
}

void Trace::split(WordView left, WordView right, std::size_t index) {
  *out_ << "SPLIT at=" << index << ' ' << alphabet_.format(left) << " vs "
        << alphabet_.format(right) << '\n';
}

void Trace::note(std::string_view text) { *out_ << "# " << text << '\n'; }

}  // namespace wdba
