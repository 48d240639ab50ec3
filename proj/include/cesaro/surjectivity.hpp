#pragma once

#include <optional>

#include "cesaro/local_rule.hpp"

namespace cesaro {

// Surjectivity verdict.  On the full shift this is the exact balance test:
// F is onto iff every word u has exactly |A|^{2r} preimage words of length
// |u|+2r.  On SFT domains the verdict is numerical: invariance of the Parry
// measure under preimage summation, checked on short words to 1e-8.
struct SurjectivityResult {
  bool surjective = false;
  bool exact = false;                      // balance test vs numerical verdict
  std::size_t balance_target = 0;          // |A|^{2r} (full-shift mode)
  std::optional<Word> witness;             // word with unbalanced preimage count
  std::optional<long long> witness_count;  // its preimage count
  double max_discrepancy = 0.0;            // numerical mode residual
};

SurjectivityResult is_surjective(const LocalRule& rule,
                                 const Caps& caps = default_caps());

}  // namespace cesaro
