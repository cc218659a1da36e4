#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgasket {

/// One letter of the address alphabet {0, 1, 2}.
class Symbol {
 public:
  /// Throws std::invalid_argument for anything outside {0, 1, 2}.
  explicit Symbol(int value);

  constexpr int value() const noexcept { return value_; }
  char to_char() const noexcept { return static_cast<char>('0' + value_); }

  /// The symbol different from both arguments. Requires a != b.
  static Symbol third(Symbol a, Symbol b);

  friend constexpr bool operator==(Symbol, Symbol) = default;
  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  std::uint8_t value_;
};

using Word = std::vector<Symbol>;

/// Parses a finite word such as "0120". Throws MalformedCode.
Word parse_word(std::string_view text);
std::string to_string(std::span<const Symbol> word);

/// Eventually periodic address a1 a2 a3 ... of a point of the gasket:
/// a finite preperiod followed by a nonempty period repeated forever.
///
/// Two Codes compare equal under operator== only when their stored
/// sequences match; use same_sequence() or same_point() for semantic
/// comparisons.
class Code {
 public:
  /// Throws std::invalid_argument if period is empty.
  Code(Word preperiod, Word period);

  const Word& preperiod() const noexcept { return preperiod_; }
  const Word& period() const noexcept { return period_; }

  /// i-th symbol of the infinite expansion, 1-based. Requires i >= 1.
  Symbol at(std::size_t i) const;

  /// Infinite expansion is a single symbol repeated from position
  /// preperiod().size() + 1 on, i.e. the point is a vertex of S_{a1..am}.
  bool has_constant_tail() const noexcept { return period_.size() == 1; }

  /// Code for the word `prefix` followed by `tail` repeated forever.
  static Code vertex(std::span<const Symbol> prefix, Symbol tail);

  friend bool operator==(const Code&, const Code&) = default;

 private:
  Word preperiod_;
  Word period_;
};

/// Parses `prefix '(' period ')'`. Throws MalformedCode with the byte
/// offset of the first violation. The result is not canonicalized.
Code parse_code(std::string_view text);

/// Canonical text form; always emits canonicalize(c).
std::string to_string(const Code& c);

/// Unique representative with minimal preperiod and primitive period.
Code canonicalize(const Code& c);

/// Same as c.at(i); exposed as a free function for symmetry with the CLI.
Symbol symbol_at(const Code& c, std::size_t i);

/// True when the two codes spell the same infinite sequence.
bool same_sequence(const Code& a, const Code& b);

/// Canonical form is sigma beta (alpha) with sigma possibly empty and
/// beta != alpha. The three outer corners (0), (1), (2) are not junctions.
bool is_junction(const Code& c);

/// sigma beta (alpha) -> sigma alpha (beta). Throws NotAJunction.
Code twin(const Code& c);

/// Every canonical code naming the same point as c (one or two entries).
std::vector<Code> representations(const Code& c);

/// Point equality up to the two-representation ambiguity of junctions.
bool same_point(const Code& a, const Code& b);

struct CodeHash {
  std::size_t operator()(const Code& c) const noexcept;
};

}  // namespace sgasket
