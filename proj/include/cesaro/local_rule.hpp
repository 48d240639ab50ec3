#pragma once

#include <functional>
#include <span>

#include "cesaro/caps.hpp"
#include "cesaro/shift_space.hpp"

namespace cesaro {

// A cellular automaton as its local map: radius r and a dense table over the
// (2r+1)-neighborhoods, indexed mixed-radix with the leftmost cell most
// significant.  On SFT domains, entries for inadmissible neighborhoods hold
// -1 and the constructor verifies both totality on admissible neighborhoods
// and closure F(X) subset of X.
class LocalRule {
 public:
  struct Unchecked {};  // internal factories skip re-validation

  LocalRule(ShiftSpace domain, int radius, std::vector<int> table,
            const Caps& caps = default_caps());
  LocalRule(Unchecked, ShiftSpace domain, int radius, std::vector<int> table);

  const ShiftSpace& domain() const { return domain_; }
  const Alphabet& alphabet() const { return domain_.alphabet; }
  int radius() const { return radius_; }
  int window_size() const { return 2 * radius_ + 1; }
  const std::vector<int>& table() const { return table_; }

  // Value on one neighborhood; Inadmissible when the window is not in the
  // domain's language.
  int local(std::span<const int> neighborhood) const;
  int entry(std::size_t code) const { return table_[code]; }

  bool operator==(const LocalRule& o) const {
    return radius_ == o.radius_ && table_ == o.table_ &&
           domain_.alphabet == o.domain_.alphabet;
  }

 private:
  ShiftSpace domain_;
  int radius_;
  std::vector<int> table_;
};

// Builds the table by evaluating `f` on every admissible neighborhood.
LocalRule make_rule(ShiftSpace domain, int radius,
                    const std::function<int(std::span<const int>)>& f,
                    const Caps& caps = default_caps());

// Slides the local map across u once: result_i = f(u_i .. u_{i+2r}), so the
// result is shorter by 2r.  WindowTooShort when |u| < 2r+1.
Word apply_window(const LocalRule& rule, const Word& u);

// The n-th iterate as a single rule of radius r*n (n >= 1).
LocalRule compose_power(const LocalRule& rule, int n, const Caps& caps = default_caps());

// F composed with the inverse shift sigma^{-k}, as a rule of radius r+|k|.
LocalRule shift_compose(const LocalRule& rule, int k, const Caps& caps = default_caps());

}  // namespace cesaro
