#include "core/motifs.hpp"

namespace subjrand {

std::string Motif::str() const {
  std::string out;
  for (int t = 0; t < length; ++t) out.push_back(symbol_char(at(t)));
  return out;
}

bool is_primitive(std::span<const Symbol> p) {
  const int n = static_cast<int>(p.size());
  for (int period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool repeats = true;
    for (int t = period; t < n; ++t) {
      if (p[static_cast<std::size_t>(t)] != p[static_cast<std::size_t>(t % period)]) {
        repeats = false;
        break;
      }
    }
    if (repeats) return false;
  }
  return true;
}

const std::vector<Motif>& motif_set() {
  static const std::vector<Motif> motifs = [] {
    std::vector<Motif> out;
    for (int len = 1; len <= 4; ++len) {
      for (int code = 0; code < (1 << len); ++code) {
        Motif m;
        m.length = static_cast<std::uint8_t>(len);
        for (int t = 0; t < len; ++t)
          m.pattern[static_cast<std::size_t>(t)] = symbol_of_bit((code >> (len - 1 - t)) & 1);
        if (is_primitive(std::span<const Symbol>(m.pattern.data(), static_cast<std::size_t>(len))))
          out.push_back(m);
      }
    }
    return out;
  }();
  return motifs;
}

std::vector<Motif> motifs_up_to(int max_len) {
  std::vector<Motif> out;
  for (const Motif& m : motif_set())
    if (m.length <= max_len) out.push_back(m);
  return out;
}

}  // namespace subjrand
