#pragma once

#include "cesaro/local_rule.hpp"

namespace cesaro {

// Presentation of the image F(space) as a sofic shift: edges of the 2r-path
// automaton of the input presentation are relabeled by the local map, then
// the labeled graph is determinized (subset construction) and trimmed.
// `space` defaults to the rule's own domain and may itself be sofic, so the
// construction iterates.
ShiftSpace image_sofic(const LocalRule& rule, const ShiftSpace& space,
                       const Caps& caps = default_caps());
ShiftSpace image_sofic(const LocalRule& rule, const Caps& caps = default_caps());

// [X, F(X), ..., F^n(X)].  Each step asserts the language inclusion
// L(F^{i+1}(X)) subset of L(F^i(X)) on words up to length 6.
std::vector<ShiftSpace> limit_set_approx(const LocalRule& rule, int n,
                                         const Caps& caps = default_caps());

}  // namespace cesaro
