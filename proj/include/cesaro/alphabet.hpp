#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cesaro {

// A word is a finite sequence of symbol indices into some Alphabet.
using Word = std::vector<int>;

// Finite ordered alphabet.  Symbol names are single characters so that words
// serialize as bare strings ("2012"); the index order is lexicographic in the
// names, which fixes every enumeration in the library.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return (int)names_.size(); }
  const std::string& name(int symbol) const { return names_[symbol]; }
  int index(const std::string& name) const;         // -1 when unknown
  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

  Word word_from_string(const std::string& text) const;
  std::string word_to_string(const Word& w) const;

 private:
  std::vector<std::string> names_;
};

// Mixed-radix codec, leftmost symbol most significant, so numeric order of
// codes equals lexicographic order of equal-length words.
std::uint64_t encode_word(const Word& w, int base);
Word decode_word(std::uint64_t code, int length, int base);

// base^len as a checked size (fails CapExceeded past `cap`, which callers set
// to the relevant resource cap).
std::size_t checked_power(int base, int len, std::size_t cap, const char* cap_name);

// All words of the given length in lexicographic order.
std::vector<Word> all_words(int alphabet_size, int length);

}  // namespace cesaro
