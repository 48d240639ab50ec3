#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cesaro/errors.hpp"
#include "cesaro/local_rule.hpp"
#include "cesaro/periodic.hpp"
#include "cesaro/sofic_image.hpp"
#include "cesaro/surjectivity.hpp"
#include "helpers.hpp"

using namespace cesaro;
using namespace testing_helpers;

namespace {

// Brute-force preimage count of u among words of length |u| + 2r.
long long brute_preimages(const LocalRule& rule, const Word& u) {
  long long count = 0;
  for (const auto& w : all_words(rule.alphabet().size(), (int)u.size() + 2 * rule.radius()))
    if (apply_window(rule, w) == u) ++count;
  return count;
}

LocalRule random_ternary_rule(std::mt19937_64& rng) {
  std::vector<int> table(27);
  for (auto& v : table) v = (int)(rng() % 3);
  return LocalRule(full_shift(ternary()), 1, std::move(table));
}

}  // namespace

TEST_CASE("apply_window slides the local map") {
  Alphabet t = ternary();
  LocalRule wall = wall_xor_rule();
  CHECK(apply_window(wall, t.word_from_string("012")) == t.word_from_string("1"));
  // Oracle: evaluate f on each window by hand.  f(0,1,1)=0, f(1,1,0)=1.
  LocalRule xr = xor_right_rule();
  Alphabet b = binary();
  CHECK(apply_window(xr, b.word_from_string("0110")) == b.word_from_string("01"));
  // Radius 0 keeps the length.
  LocalRule neg = negation_rule();
  CHECK(apply_window(neg, b.word_from_string("0110")) == b.word_from_string("1001"));
  CHECK_THROWS_AS((void)apply_window(xr, b.word_from_string("01")), Error);
}

TEST_CASE("compose_power matches explicit iteration") {
  Alphabet t = ternary();
  LocalRule wall = wall_xor_rule();
  LocalRule wall2 = compose_power(wall, 2);
  CHECK(wall2.radius() == 2);
  CHECK(apply_window(wall2, t.word_from_string("01220")) ==
        apply_window(wall, apply_window(wall, t.word_from_string("01220"))));
  for (const auto& w : all_words(3, 5))
    CHECK(apply_window(wall2, w) == apply_window(wall, apply_window(wall, w)));

  LocalRule xr2 = compose_power(xor_right_rule(), 2);
  for (const auto& w : all_words(2, 5))
    CHECK(apply_window(xr2, w) ==
          apply_window(xor_right_rule(), apply_window(xor_right_rule(), w)));

  LocalRule id5 = compose_power(identity_rule(ternary()), 5);
  CHECK(id5.radius() == 0);
  CHECK(id5.table() == identity_rule(ternary()).table());
}

TEST_CASE("compose_power respects the table cap") {
  Caps tight;
  tight.table_entries = 100;
  CHECK_THROWS_AS((void)compose_power(wall_xor_rule(), 4, tight), Error);
  try {
    (void)compose_power(wall_xor_rule(), 4, tight);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
    CHECK(std::string(e.what()).find("table_entries") != std::string::npos);
  }
}

TEST_CASE("shift_compose produces the shifted block map") {
  // Identity shifted by one reads the left neighbor.
  LocalRule id = identity_rule(binary());
  LocalRule shifted = shift_compose(id, 1);
  CHECK(shifted.radius() == 1);
  Alphabet b = binary();
  for (const auto& w : all_words(2, 3))
    CHECK(shifted.local(std::span<const int>(w.data(), 3)) == w[0]);

  // k = 0 leaves the rule untouched.
  CHECK(shift_compose(xor_right_rule(), 0) == xor_right_rule());

  // Against the sliding oracle on all length-5 words: applying F then
  // shifting left by one equals applying the composed rule.
  LocalRule xr = xor_right_rule();
  LocalRule comp = shift_compose(xr, 1);
  CHECK(comp.radius() == 2);
  for (const auto& w : all_words(2, 5)) {
    Word via_comp = apply_window(comp, w);          // length 1
    Word via_shift = apply_window(xr, w);           // length 3
    CHECK(via_comp[0] == via_shift[0]);             // position -k inside the image
  }
}

TEST_CASE("apply_periodic wraps the generator cyclically") {
  Alphabet b = binary();
  LocalRule xr = xor_right_rule();
  PeriodicConfig x{b.word_from_string("011"), 0};
  // Cells: 0+1, 1+1, 1+0 cyclically.
  CHECK(apply_periodic(xr, x).generator == b.word_from_string("101"));
  // Generator shorter than the window wraps repeatedly.
  PeriodicConfig y{b.word_from_string("1"), 0};
  CHECK(apply_periodic(xr, y).generator == b.word_from_string("0"));
}

TEST_CASE("apply_periodic rejects wrap-inadmissible generators") {
  Alphabet b = binary();
  ShiftSpace gm = build_sft(b, {b.word_from_string("11")});
  LocalRule id = make_rule(gm, 0, [](std::span<const int> w) { return w[0]; });
  CHECK_THROWS_AS((void)apply_periodic(id, {b.word_from_string("1"), 0}), Error);
  CHECK(apply_periodic(id, {b.word_from_string("10"), 0}).generator ==
        b.word_from_string("10"));
}

TEST_CASE("orbit_periodic finds exact preperiod and period") {
  Alphabet t = ternary();
  Alphabet b = binary();

  // Wall rule on 01: 01 -> 11 -> 00 -> 00 (no walls, pure xor collapse).
  OrbitSummary wall = orbit_periodic(wall_xor_rule(), {t.word_from_string("01"), 0}, 64);
  CHECK(wall.preperiod == 2);
  CHECK(wall.period == 1);
  CHECK(wall.cycle.size() == 1);
  CHECK(wall.cycle[0].generator == t.word_from_string("00"));

  OrbitSummary id = orbit_periodic(identity_rule(binary()), {b.word_from_string("01"), 0}, 8);
  CHECK(id.preperiod == 0);
  CHECK(id.period == 1);

  OrbitSummary neg = orbit_periodic(negation_rule(), {b.word_from_string("0"), 0}, 8);
  CHECK(neg.preperiod == 0);
  CHECK(neg.period == 2);
}

TEST_CASE("orbit_periodic raises horizon-exceeded when starved") {
  Alphabet b = binary();
  CHECK_THROWS_AS(
      (void)orbit_periodic(xor_right_rule(), {b.word_from_string("0110"), 0}, 1), Error);
}

TEST_CASE("orbit commutes with generator rotation") {
  // sigma-equivariance: rotating the generator rotates the whole orbit.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    LocalRule rule = random_ternary_rule(rng);
    Word gen(4);
    for (auto& s : gen) s = (int)(rng() % 3);
    Word rotated(gen.begin() + 1, gen.end());
    rotated.push_back(gen[0]);
    PeriodicConfig a{gen, 0}, b{rotated, 0};
    for (int step = 0; step < 6; ++step) {
      Word ga = a.generator, gb = b.generator;
      Word ga_rot(ga.begin() + 1, ga.end());
      ga_rot.push_back(ga[0]);
      CHECK(ga_rot == gb);
      a = apply_periodic(rule, a);
      b = apply_periodic(rule, b);
    }
  }
}

TEST_CASE("balance test: the wall rule is onto with 9 preimages per word") {
  SurjectivityResult res = is_surjective(wall_xor_rule());
  CHECK(res.surjective);
  CHECK(res.exact);
  CHECK(res.balance_target == 9);
  for (int len = 1; len <= 4; ++len)
    for (const auto& u : all_words(3, len))
      CHECK(brute_preimages(wall_xor_rule(), u) == 9);
}

TEST_CASE("balance test: constant rule fails with the deficient witness") {
  SurjectivityResult res = is_surjective(constant_zero_rule());
  CHECK(!res.surjective);
  REQUIRE(res.witness.has_value());
  CHECK(binary().word_to_string(*res.witness) == "1");
  CHECK(res.witness_count == 0);
}

TEST_CASE("balance test agrees with brute-force counting on rule corpora") {
  // All elementary rules, plus random ternary ones.
  for (int number = 0; number < 256; ++number) {
    LocalRule rule = elementary_rule(number);
    SurjectivityResult res = is_surjective(rule);
    if (res.surjective) {
      for (int len = 1; len <= 5; ++len)
        for (const auto& u : all_words(2, len))
          CHECK(brute_preimages(rule, u) == 4);
    } else {
      REQUIRE(res.witness.has_value());
      CHECK(brute_preimages(rule, *res.witness) == *res.witness_count);
      CHECK(*res.witness_count < 4);
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    LocalRule rule = random_ternary_rule(rng);
    SurjectivityResult res = is_surjective(rule);
    if (res.surjective) {
      for (int len = 1; len <= 4; ++len)
        for (const auto& u : all_words(3, len))
          CHECK(brute_preimages(rule, u) == 9);
    } else {
      REQUIRE(res.witness.has_value());
      CHECK(brute_preimages(rule, *res.witness) == *res.witness_count);
    }
  }
}

TEST_CASE("xor-right is surjective") {
  SurjectivityResult res = is_surjective(xor_right_rule());
  CHECK(res.surjective);
  for (int len = 1; len <= 6; ++len)
    for (const auto& u : all_words(2, len))
      CHECK(brute_preimages(xor_right_rule(), u) == 4);
}

TEST_CASE("image_sofic: identity fixes its domain language") {
  ShiftSpace img = image_sofic(identity_rule(binary()));
  for (int len = 0; len <= 6; ++len)
    CHECK(language_words(img, len) == language_words(full_shift(binary()), len));
}

TEST_CASE("image_sofic: constant rule collapses to one fixed point") {
  ShiftSpace img = image_sofic(constant_zero_rule());
  for (int len = 1; len <= 6; ++len) {
    auto words = language_words(img, len);
    REQUIRE(words.size() == 1);
    CHECK(words[0] == Word(len, 0));
  }
}

TEST_CASE("image_sofic matches brute-force image words on a contracting rule") {
  // f(a,b,c) = min(b,c): not onto, the image is a proper sofic shift.  On a
  // full-shift domain every finite block image extends bi-infinitely, so the
  // image language equals the set of block-map outputs.
  LocalRule rule = make_rule(full_shift(binary()), 1, [](std::span<const int> w) {
    return std::min(w[1], w[2]);
  });
  ShiftSpace img = image_sofic(rule);
  for (int len = 1; len <= 8; ++len) {
    std::set<Word> brute;
    for (const auto& w : all_words(2, len + 2)) brute.insert(apply_window(rule, w));
    auto via_graph = language_words(img, len);
    CHECK(std::set<Word>(via_graph.begin(), via_graph.end()) == brute);
  }
}

TEST_CASE("surjective rules have full image") {
  for (int number : {15, 30, 90, 105, 150, 170, 204}) {
    LocalRule rule = elementary_rule(number);
    REQUIRE(is_surjective(rule).surjective);
    ShiftSpace img = image_sofic(rule);
    for (int len = 1; len <= 6; ++len)
      CHECK(language_words(img, len).size() == (std::size_t)(1 << len));
  }
}

TEST_CASE("limit_set_approx produces a descending chain") {
  LocalRule rule = make_rule(full_shift(binary()), 1, [](std::span<const int> w) {
    return std::min(w[1], w[2]);
  });
  auto chain = limit_set_approx(rule, 3);
  REQUIRE(chain.size() == 4);
  // Language sizes can only shrink along the chain.
  for (int len = 1; len <= 6; ++len)
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      CHECK(language_words(chain[i + 1], len).size() <=
            language_words(chain[i], len).size());
}
