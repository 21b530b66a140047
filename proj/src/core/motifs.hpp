#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/bitseq.hpp"

namespace subjrand {

/// A primitive (aperiodic) pattern of length 1..4. A block of a sequence is
/// read as a possibly truncated repetition of a motif.
struct Motif {
  std::uint8_t length = 1;
  std::array<Symbol, 4> pattern{};  // entries past `length` are unused

  Symbol at(int t) const { return pattern[static_cast<std::size_t>(t % length)]; }
  std::string str() const;
  bool operator==(const Motif&) const = default;
};

/// True unless p is a whole-number repetition of a strictly shorter pattern.
bool is_primitive(std::span<const Symbol> p);

/// The 22 primitive motifs of length 1..4, ordered by (length, code):
/// 2 + 2 + 6 + 12.
const std::vector<Motif>& motif_set();

/// Motifs of length <= max_len (max_len = 2 gives the 6-state machine).
std::vector<Motif> motifs_up_to(int max_len);

}  // namespace subjrand
