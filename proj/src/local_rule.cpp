#include "cesaro/local_rule.hpp"

#include <algorithm>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

int sft_memory(const ShiftSpace& sp) {
  int m = 0;
  for (const auto& e : sp.forbidden) m = std::max(m, (int)e.size() - 1);
  return m;
}

std::vector<Word> neighborhoods(const ShiftSpace& sp, int length) {
  if (sp.is_full()) return all_words(sp.alphabet.size(), length);
  return language_words(sp, length);
}

}  // namespace

LocalRule::LocalRule(Unchecked, ShiftSpace domain, int radius, std::vector<int> table)
    : domain_(std::move(domain)), radius_(radius), table_(std::move(table)) {}

LocalRule::LocalRule(ShiftSpace domain, int radius, std::vector<int> table,
                     const Caps& caps)
    : domain_(std::move(domain)), radius_(radius), table_(std::move(table)) {
  if (radius_ < 0) fail(ErrorKind::BadParam, "negative radius");
  if (domain_.kind == ShiftSpace::Kind::Sofic)
    fail(ErrorKind::Unsupported, "rules on sofic domains");
  const int base = domain_.alphabet.size();
  std::size_t expected =
      checked_power(base, window_size(), caps.table_entries, "table_entries");
  if (table_.size() != expected)
    fail(ErrorKind::BadParam, "table has " + std::to_string(table_.size()) +
                                  " entries, want " + std::to_string(expected));

  if (domain_.is_full()) {
    for (int v : table_)
      if (v < 0 || v >= base)
        fail(ErrorKind::BadParam, "table not total on the full shift");
    return;
  }

  // Totality on admissible neighborhoods; everything else is forced to -1.
  std::vector<char> admissible(table_.size(), 0);
  for (const auto& w : neighborhoods(domain_, window_size()))
    admissible[encode_word(w, base)] = 1;
  for (std::size_t c = 0; c < table_.size(); ++c) {
    if (admissible[c]) {
      if (table_[c] < 0 || table_[c] >= base)
        fail(ErrorKind::BadParam,
             "table undefined on admissible neighborhood code " + std::to_string(c));
    } else {
      table_[c] = -1;
    }
  }

  // Local closure check: every admissible word long enough that its image
  // covers a full forbidden-word window must map into the language.  Image
  // length max(3, memory+1) decides closure completely for this SFT.
  int image_len = std::max(3, sft_memory(domain_) + 1);
  int check_len = image_len + 2 * radius_;
  checked_power(base, check_len, caps.table_entries, "table_entries");
  for (const auto& w : neighborhoods(domain_, check_len)) {
    Word image = apply_window(*this, w);
    if (!contains(domain_, image))
      fail(ErrorKind::BadParam,
           "rule image leaves the domain: F(" + domain_.alphabet.word_to_string(w) +
               ") = " + domain_.alphabet.word_to_string(image));
  }
}

int LocalRule::local(std::span<const int> neighborhood) const {
  const int base = domain_.alphabet.size();
  std::size_t code = 0;
  for (int s : neighborhood) {
    if (s < 0 || s >= base) fail(ErrorKind::Inadmissible, "symbol out of range");
    code = code * base + (std::size_t)s;
  }
  int v = table_[code];
  if (v < 0) fail(ErrorKind::Inadmissible, "neighborhood not in the domain language");
  return v;
}

LocalRule make_rule(ShiftSpace domain, int radius,
                    const std::function<int(std::span<const int>)>& f,
                    const Caps& caps) {
  const int base = domain.alphabet.size();
  std::size_t total =
      checked_power(base, 2 * radius + 1, caps.table_entries, "table_entries");
  std::vector<int> table(total, -1);
  for (const auto& w : neighborhoods(domain, 2 * radius + 1))
    table[encode_word(w, base)] = f(std::span<const int>(w.data(), w.size()));
  return LocalRule(std::move(domain), radius, std::move(table), caps);
}

Word apply_window(const LocalRule& rule, const Word& u) {
  const int span = rule.window_size();
  if ((int)u.size() < span)
    fail(ErrorKind::WindowTooShort, "need at least " + std::to_string(span) +
                                        " symbols, got " + std::to_string(u.size()));
  const int base = rule.alphabet().size();
  Word out(u.size() - (std::size_t)(span - 1));
  // Rolling mixed-radix code over the sliding window.
  std::size_t code = 0, msd = 1;
  for (int i = 0; i < span - 1; ++i) msd *= (std::size_t)base;
  for (int i = 0; i < span; ++i) code = code * base + (std::size_t)u[i];
  for (std::size_t i = 0;; ++i) {
    int v = rule.entry(code);
    if (v < 0) fail(ErrorKind::Inadmissible, "window not in the domain language");
    out[i] = v;
    if (i + 1 == out.size()) break;
    code = (code % msd) * base + (std::size_t)u[i + span];
  }
  return out;
}

LocalRule compose_power(const LocalRule& rule, int n, const Caps& caps) {
  if (n < 1) fail(ErrorKind::BadParam, "compose_power needs n >= 1");
  const int base = rule.alphabet().size();
  const int radius = rule.radius() * n;
  std::size_t total =
      checked_power(base, 2 * radius + 1, caps.table_entries, "table_entries");
  std::vector<int> table(total, -1);
  for (const auto& w : neighborhoods(rule.domain(), 2 * radius + 1)) {
    Word image = w;
    for (int step = 0; step < n; ++step) image = apply_window(rule, image);
    table[encode_word(w, base)] = image[0];
  }
  return LocalRule(LocalRule::Unchecked{}, rule.domain(), radius, std::move(table));
}

LocalRule shift_compose(const LocalRule& rule, int k, const Caps& caps) {
  // (F o sigma^{-k})(x)_i = f(x_{i-k-r} .. x_{i-k+r}): a centered rule of
  // radius r+|k| reading the shifted sub-window.
  const int base = rule.alphabet().size();
  const int radius = rule.radius() + std::abs(k);
  std::size_t total =
      checked_power(base, 2 * radius + 1, caps.table_entries, "table_entries");
  std::vector<int> table(total, -1);
  const int lo = radius - k - rule.radius();  // window offset of x_{i-k-r}
  for (const auto& w : neighborhoods(rule.domain(), 2 * radius + 1)) {
    std::span<const int> sub(w.data() + lo, (std::size_t)rule.window_size());
    table[encode_word(w, base)] = rule.local(sub);
  }
  return LocalRule(LocalRule::Unchecked{}, rule.domain(), radius, std::move(table));
}

}  // namespace cesaro
