#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

namespace cesaro {

// Resource caps.  Exceeding one raises ErrorKind::CapExceeded naming the cap;
// caps never silently truncate a computation.  CESARO_CA_CAPS ("name=value,
// name=value") overrides any subset of the defaults.
struct Caps {
  std::size_t table_entries = 10'000'000;     // dense rule tables (compose_power)
  int strip_width = 12;                       // widest strip the certifier may try
  std::size_t strip_sets = 2'000'000;         // abstraction states per certification
  std::size_t falsify_pairs = 1'000'000;      // extension pairs for exhaustive falsify
  int falsify_samples = 256;                  // sampled pairs in randomized mode
  std::size_t rkm_word_len = 13;              // 2(k+m)+1 enumeration width
  std::size_t pushforward_states = 2'000'000; // layered preimage-DFA states
  std::size_t balance_states = 200'000;       // distinct count vectors, surjectivity
  std::size_t sofic_states = 100'000;         // image presentation states
  std::uint64_t seed = 0;                     // all randomized fallbacks

  // Parses "a=1,b=2"; unknown names or junk values are Parse errors.
  void apply_overrides(const std::string& spec);
  std::map<std::string, std::string> as_map() const;
};

// Defaults plus any CESARO_CA_CAPS environment overrides.
Caps caps_from_env();

// Library-wide defaults (no environment consulted).
const Caps& default_caps();

}  // namespace cesaro
