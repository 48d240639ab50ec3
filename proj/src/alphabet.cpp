#include "cesaro/alphabet.hpp"

#include <algorithm>

#include "cesaro/errors.hpp"

namespace cesaro {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) fail(ErrorKind::Parse, "alphabet must be nonempty");
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
    fail(ErrorKind::Parse, "alphabet has a repeated symbol");
  for (const auto& n : names_)
    if (n.size() != 1)
      fail(ErrorKind::Parse, "symbol '" + n + "' is not a single character");
}

int Alphabet::index(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return (int)(it - names_.begin());
}

Word Alphabet::word_from_string(const std::string& text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    int s = index(std::string(1, c));
    if (s < 0) fail(ErrorKind::Parse, std::string("symbol '") + c + "' not in alphabet");
    w.push_back(s);
  }
  return w;
}

std::string Alphabet::word_to_string(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (int s : w) out += names_[s];
  return out;
}

std::uint64_t encode_word(const Word& w, int base) {
  std::uint64_t code = 0;
  for (int s : w) code = code * (std::uint64_t)base + (std::uint64_t)s;
  return code;
}

Word decode_word(std::uint64_t code, int length, int base) {
  Word w(length);
  for (int i = length - 1; i >= 0; --i) {
    w[i] = (int)(code % (std::uint64_t)base);
    code /= (std::uint64_t)base;
  }
  return w;
}

std::size_t checked_power(int base, int len, std::size_t cap, const char* cap_name) {
  std::size_t n = 1;
  for (int i = 0; i < len; ++i) {
    if (n > cap / (std::size_t)base)
      fail(ErrorKind::CapExceeded,
           std::string(cap_name) + ": " + std::to_string(base) + "^" +
               std::to_string(len) + " exceeds " + std::to_string(cap));
    n *= (std::size_t)base;
  }
  if (n > cap)
    fail(ErrorKind::CapExceeded,
         std::string(cap_name) + ": " + std::to_string(n) + " exceeds " +
             std::to_string(cap));
  return n;
}

std::vector<Word> all_words(int alphabet_size, int length) {
  std::size_t count = 1;
  for (int i = 0; i < length; ++i) count *= (std::size_t)alphabet_size;
  std::vector<Word> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c)
    out.push_back(decode_word(c, length, alphabet_size));
  return out;
}

}  // namespace cesaro
