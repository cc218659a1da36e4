#include "sgasket/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgasket/errors.hpp"

namespace sgasket {

Symbol::Symbol(int value) : value_(static_cast<std::uint8_t>(value)) {
  if (value < 0 || value > 2) {
    throw std::invalid_argument("symbol out of alphabet {0,1,2}: " + std::to_string(value));
  }
}

Symbol Symbol::third(Symbol a, Symbol b) {
  if (a == b) {
    throw std::invalid_argument("Symbol::third requires distinct symbols");
  }
  return Symbol(3 - a.value() - b.value());
}

namespace {

bool is_symbol_char(char ch) { return ch == '0' || ch == '1' || ch == '2'; }

// Smallest root r with period == r^m.
Word primitive_root(const Word& period) {
  const std::size_t n = period.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) {
      repeats = period[i] == period[i - d];
    }
    if (repeats) return Word(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return period;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word word;
  word.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_symbol_char(text[i])) {
      throw MalformedCode(i, "expected symbol 0, 1 or 2");
    }
    word.emplace_back(text[i] - '0');
  }
  return word;
}

std::string to_string(std::span<const Symbol> word) {
  std::string out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(s.to_char());
  return out;
}

Code::Code(Word preperiod, Word period) : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) {
    throw std::invalid_argument("Code: period must be nonempty");
  }
}

Symbol Code::at(std::size_t i) const {
  if (i == 0) {
    throw std::out_of_range("Code::at is 1-based");
  }
  if (i <= preperiod_.size()) return preperiod_[i - 1];
  return period_[(i - preperiod_.size() - 1) % period_.size()];
}

Code Code::vertex(std::span<const Symbol> prefix, Symbol tail) {
  return Code(Word(prefix.begin(), prefix.end()), Word{tail});
}

Code parse_code(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && is_symbol_char(text[pos])) ++pos;
  if (pos == text.size()) {
    throw MalformedCode(pos, "missing '(' before period");
  }
  if (text[pos] != '(') {
    throw MalformedCode(pos, "expected symbol 0, 1, 2 or '('");
  }
  const std::size_t open = pos++;
  const std::size_t period_start = pos;
  while (pos < text.size() && is_symbol_char(text[pos])) ++pos;
  if (pos == text.size()) {
    throw MalformedCode(pos, "missing ')' after period");
  }
  if (text[pos] != ')') {
    throw MalformedCode(pos, "expected symbol 0, 1, 2 or ')'");
  }
  if (pos == period_start) {
    throw MalformedCode(pos, "empty period");
  }
  if (pos + 1 != text.size()) {
    throw MalformedCode(pos + 1, "trailing characters after ')'");
  }
  return Code(parse_word(text.substr(0, open)), parse_word(text.substr(period_start, pos - period_start)));
}

std::string to_string(const Code& c) {
  const Code canon = canonicalize(c);
  return to_string(canon.preperiod()) + "(" + to_string(canon.period()) + ")";
}

Code canonicalize(const Code& c) {
  Word pre = c.preperiod();
  Word period = c.period();
  // Absorb x...x | (...x) into the period by rotating it right.
  while (!pre.empty() && pre.back() == period.back()) {
    pre.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return Code(std::move(pre), primitive_root(period));
}

Symbol symbol_at(const Code& c, std::size_t i) { return c.at(i); }

bool same_sequence(const Code& a, const Code& b) { return canonicalize(a) == canonicalize(b); }

bool is_junction(const Code& c) {
  const Code canon = canonicalize(c);
  // Canonical form already guarantees preperiod.back() != period.back().
  return canon.has_constant_tail() && !canon.preperiod().empty();
}

Code twin(const Code& c) {
  const Code canon = canonicalize(c);
  if (!(canon.has_constant_tail() && !canon.preperiod().empty())) {
    throw NotAJunction(to_string(canon));
  }
  Word pre = canon.preperiod();
  const Symbol beta = pre.back();
  const Symbol alpha = canon.period().front();
  pre.back() = alpha;
  return Code(std::move(pre), Word{beta});
}

std::vector<Code> representations(const Code& c) {
  std::vector<Code> reps{canonicalize(c)};
  if (is_junction(reps.front())) {
    reps.push_back(twin(reps.front()));
  }
  return reps;
}

bool same_point(const Code& a, const Code& b) {
  const Code ca = canonicalize(a);
  const Code cb = canonicalize(b);
  if (ca == cb) return true;
  return is_junction(ca) && is_junction(cb) && twin(ca) == cb;
}

std::size_t CodeHash::operator()(const Code& c) const noexcept {
  std::size_t h = c.preperiod().size() * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](Symbol s) { h = (h ^ static_cast<std::size_t>(s.value() + 1)) * 0x100000001b3ULL; };
  for (Symbol s : c.preperiod()) mix(s);
  h ^= 0xff;
  for (Symbol s : c.period()) mix(s);
  return h;
}

}  // namespace sgasket
