#include "core/bitseq.hpp"

#include <stdexcept>

namespace subjrand {

char symbol_char(Symbol s, bool digits) {
  if (digits) return s == Symbol::X ? '1' : '0';
  return s == Symbol::X ? 'X' : 'O';
}

BitSeq BitSeq::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("sequence token is empty");
  bool saw_letters = false;
  bool saw_digits = false;
  std::vector<Symbol> syms;
  syms.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'O':
      case 'o':
        saw_letters = true;
        syms.push_back(Symbol::O);
        break;
      case 'X':
      case 'x':
        saw_letters = true;
        syms.push_back(Symbol::X);
        break;
      case '0':
        saw_digits = true;
        syms.push_back(Symbol::O);
        break;
      case '1':
        saw_digits = true;
        syms.push_back(Symbol::X);
        break;
      default:
        throw std::invalid_argument(std::string("invalid sequence character '") + c +
                                    "' (expected [OX01]+)");
    }
  }
  if (saw_letters && saw_digits)
    throw std::invalid_argument("mixed OX and 01 alphabets in one sequence token");
  return BitSeq(std::move(syms));
}

BitSeq BitSeq::from_code(std::uint64_t code, int length) {
  if (length < 1 || length > 63) throw std::domain_error("sequence length must be in [1, 63]");
  if (code >> length) throw std::domain_error("code out of range for requested length");
  std::vector<Symbol> syms(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k)
    syms[static_cast<std::size_t>(k)] = symbol_of_bit((code >> (length - 1 - k)) & 1u);
  return BitSeq(std::move(syms));
}

std::uint64_t BitSeq::code() const {
  if (empty()) throw std::domain_error("cannot encode an empty sequence");
  if (size() > 63) throw std::domain_error("sequence too long to encode (max 63)");
  std::uint64_t c = 0;
  for (Symbol s : syms_) c = (c << 1) | static_cast<std::uint64_t>(bit_of(s));
  return c;
}

BitSeq BitSeq::sub(int start, int len) const {
  return BitSeq(std::vector<Symbol>(syms_.begin() + start, syms_.begin() + start + len));
}

BitSeq BitSeq::complemented() const {
  std::vector<Symbol> out(syms_.size());
  for (std::size_t k = 0; k < syms_.size(); ++k) out[k] = complement(syms_[k]);
  return BitSeq(std::move(out));
}

BitSeq BitSeq::reversed() const {
  return BitSeq(std::vector<Symbol>(syms_.rbegin(), syms_.rend()));
}

BitSeq BitSeq::first_half() const { return sub(0, size() / 2); }

bool BitSeq::is_duplication() const {
  const int n = size();
  if (n == 0 || n % 2 != 0) return false;
  const int h = n / 2;
  for (int k = 0; k < h; ++k)
    if (syms_[static_cast<std::size_t>(k)] != syms_[static_cast<std::size_t>(k + h)]) return false;
  return true;
}

std::vector<BitSeq> BitSeq::windows(int k) const {
  if (k < 1) throw std::domain_error("window length must be >= 1");
  std::vector<BitSeq> out;
  if (size() < k) return out;
  out.reserve(static_cast<std::size_t>(size() - k + 1));
  for (int s = 0; s + k <= size(); ++s) out.push_back(sub(s, k));
  return out;
}

std::string BitSeq::str(bool digits) const {
  std::string out;
  out.reserve(syms_.size());
  for (Symbol s : syms_) out.push_back(symbol_char(s, digits));
  return out;
}

Window8 Window8::of(const BitSeq& s) {
  if (s.size() != 8) throw std::domain_error("Window8 requires exactly 8 symbols");
  return Window8{static_cast<std::uint8_t>(s.code())};
}

std::vector<std::uint8_t> window8_codes(const BitSeq& x) {
  std::vector<std::uint8_t> out;
  if (x.size() < 8) return out;
  out.reserve(static_cast<std::size_t>(x.size() - 7));
  std::uint8_t code = 0;
  for (int k = 0; k < x.size(); ++k) {
    code = static_cast<std::uint8_t>((code << 1) | bit_of(x[k]));
    if (k >= 7) out.push_back(code);
  }
  return out;
}

}  // namespace subjrand
