#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subjrand {

// Sequence alphabet. O encodes bit 0, X encodes bit 1.
enum class Symbol : std::uint8_t { O = 0, X = 1 };

constexpr Symbol complement(Symbol s) { return s == Symbol::O ? Symbol::X : Symbol::O; }
constexpr int bit_of(Symbol s) { return s == Symbol::X ? 1 : 0; }
constexpr Symbol symbol_of_bit(int b) { return b ? Symbol::X : Symbol::O; }

char symbol_char(Symbol s, bool digits = false);

/// Ordered sequence over {O, X}. Values are immutable by convention once
/// built and safe to share across threads. The empty sequence is legal.
class BitSeq {
 public:
  BitSeq() = default;
  explicit BitSeq(std::vector<Symbol> syms) : syms_(std::move(syms)) {}

  /// Parses "OXXO..." or "0110...", case-insensitive on O/X. Mixing the two
  /// alphabets within one token is an error (std::invalid_argument).
  static BitSeq parse(std::string_view text);

  /// The length-n sequence whose base-10 code is `code`. Requires
  /// 1 <= n <= 63 and 0 <= code < 2^n.
  static BitSeq from_code(std::uint64_t code, int length);

  /// Base-10 value 2^(n-1) x1 + ... + 2 x_{n-1} + x_n. Requires 1 <= n <= 63.
  std::uint64_t code() const;

  int size() const { return static_cast<int>(syms_.size()); }
  bool empty() const { return syms_.empty(); }
  Symbol operator[](int i) const { return syms_[static_cast<std::size_t>(i)]; }
  std::span<const Symbol> view() const { return syms_; }

  void push_back(Symbol s) { syms_.push_back(s); }
  void reserve(std::size_t n) { syms_.reserve(n); }

  BitSeq sub(int start, int len) const;
  BitSeq complemented() const;
  BitSeq reversed() const;
  BitSeq first_half() const;
  /// Even length and the second half repeats the first.
  bool is_duplication() const;

  /// All n-k+1 contiguous length-k subsequences, in order; empty when n < k.
  std::vector<BitSeq> windows(int k) const;

  std::string str(bool digits = false) const;

  bool operator==(const BitSeq&) const = default;

 private:
  std::vector<Symbol> syms_;
};

/// An 8-symbol observation window, stored as its base-10 code.
struct Window8 {
  std::uint8_t code = 0;
  BitSeq to_bitseq() const { return BitSeq::from_code(code, 8); }
  static Window8 of(const BitSeq& s);
  bool operator==(const Window8&) const = default;
};

/// Drops the first symbol and appends s; in code arithmetic
/// (2c mod 256) + bit(s).
constexpr Window8 shift_append(Window8 w, Symbol s) {
  return Window8{static_cast<std::uint8_t>(((w.code << 1) & 0xFF) | bit_of(s))};
}

/// Codes of all 8-symbol windows of x, in order (rolling evaluation).
std::vector<std::uint8_t> window8_codes(const BitSeq& x);

}  // namespace subjrand
