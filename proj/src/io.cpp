#include "cesaro/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cesaro/errors.hpp"

namespace cesaro {
namespace {

[[noreturn]] void bad_line(int line, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

// Non-blank lines with comments stripped, paired with their line numbers.
std::vector<std::pair<int, std::string>> significant_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = raw.find_last_not_of(" \t\r");
    out.emplace_back(number, raw.substr(first, last - first + 1));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  return {std::istream_iterator<std::string>(in),
          std::istream_iterator<std::string>()};
}

Alphabet parse_alphabet_line(int line, const std::vector<std::string>& toks) {
  if (toks.size() < 2) bad_line(line, "alphabet needs at least one symbol");
  std::vector<std::string> names(toks.begin() + 1, toks.end());
  try {
    return Alphabet(names);
  } catch (const Error& e) {
    bad_line(line, e.what());
  }
}

Rational rational_at(int line, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    bad_line(line, e.what());
  }
}

int symbol_at(int line, const Alphabet& alphabet, const std::string& name) {
  const int idx = alphabet.index(name);
  if (idx < 0) bad_line(line, "unknown symbol '" + name + "'");
  return idx;
}

}  // namespace

ShiftSpace parse_space(const std::string& text) {
  std::optional<Alphabet> alphabet;
  std::vector<Word> forbidden;
  std::set<std::string> seen;
  for (const auto& [line, content] : significant_lines(text)) {
    auto toks = tokens(content);
    if (toks[0] == "alphabet:") {
      if (alphabet) bad_line(line, "alphabet given twice");
      alphabet = parse_alphabet_line(line, toks);
    } else if (toks[0] == "forbid:") {
      if (!alphabet) bad_line(line, "alphabet must come before forbid lines");
      if (toks.size() != 2) bad_line(line, "forbid takes exactly one word");
      if (!seen.insert(toks[1]).second)
        bad_line(line, "duplicate forbidden word '" + toks[1] + "'");
      Word w;
      for (char c : toks[1]) w.push_back(symbol_at(line, *alphabet, {c}));
      if (w.empty()) bad_line(line, "empty forbidden word");
      forbidden.push_back(std::move(w));
    } else {
      bad_line(line, "expected 'alphabet:' or 'forbid:', got '" + toks[0] + "'");
    }
  }
  if (!alphabet) fail(ErrorKind::Parse, "space file has no alphabet line");
  if (forbidden.empty()) return full_shift(*alphabet);
  return build_sft(*alphabet, forbidden);
}

MarkovMeasure parse_measure(const std::string& text) {
  std::optional<Alphabet> alphabet;
  std::optional<std::vector<Rational>> bernoulli;
  std::optional<std::vector<std::vector<Rational>>> markov;
  bool in_matrix = false;
  for (const auto& [line, content] : significant_lines(text)) {
    auto toks = tokens(content);
    if (toks[0] == "alphabet:") {
      if (alphabet) bad_line(line, "alphabet given twice");
      if (bernoulli || markov)
        bad_line(line, "alphabet must come before the distribution");
      alphabet = parse_alphabet_line(line, toks);
      continue;
    }
    if (toks[0] == "bernoulli:") {
      if (bernoulli || markov) bad_line(line, "distribution given twice");
      std::vector<Rational> probs;
      for (std::size_t i = 1; i < toks.size(); ++i)
        probs.push_back(rational_at(line, toks[i]));
      if (probs.empty()) bad_line(line, "bernoulli needs probabilities");
      bernoulli = std::move(probs);
      continue;
    }
    if (toks[0] == "markov:") {
      if (bernoulli || markov) bad_line(line, "distribution given twice");
      if (toks.size() != 1) bad_line(line, "matrix rows go on their own lines");
      markov.emplace();
      in_matrix = true;
      continue;
    }
    if (in_matrix) {
      std::vector<Rational> row;
      for (const auto& t : toks) row.push_back(rational_at(line, t));
      if (!markov->empty() && row.size() != markov->front().size())
        bad_line(line, "matrix rows have different lengths");
      markov->push_back(std::move(row));
      continue;
    }
    bad_line(line, "expected 'bernoulli:' or 'markov:', got '" + toks[0] + "'");
  }
  if (!bernoulli && !markov)
    fail(ErrorKind::Parse, "measure file has no distribution");
  const std::size_t n = bernoulli ? bernoulli->size() : markov->size();
  if (!alphabet) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    alphabet = Alphabet(names);
  }
  if (static_cast<std::size_t>(alphabet->size()) != n)
    fail(ErrorKind::Parse, "distribution size " + std::to_string(n) +
                               " does not match alphabet size " +
                               std::to_string(alphabet->size()));
  if (bernoulli) return MarkovMeasure::bernoulli(*alphabet, *bernoulli);
  if (markov->size() != markov->front().size())
    fail(ErrorKind::Parse, "markov matrix is not square");
  return MarkovMeasure::markov(*alphabet, *markov);
}

namespace {

// Left side of a rule line as per-position candidates; '*' means any symbol.
std::vector<std::vector<int>> parse_pattern(int line, const Alphabet& alphabet,
                                            std::vector<std::string> lhs,
                                            int width) {
  if (lhs.size() == 1 && width > 1 &&
      lhs[0].size() == static_cast<std::size_t>(width)) {
    std::vector<std::string> split;
    for (char c : lhs[0]) split.emplace_back(1, c);
    lhs = std::move(split);
  }
  if (lhs.size() != static_cast<std::size_t>(width))
    bad_line(line, "neighborhood has " + std::to_string(lhs.size()) +
                       " cells, the radius needs " + std::to_string(width));
  std::vector<std::vector<int>> cand;
  for (const auto& t : lhs) {
    if (t == "*") {
      std::vector<int> all(alphabet.size());
      for (int a = 0; a < alphabet.size(); ++a) all[a] = a;
      cand.push_back(std::move(all));
    } else {
      cand.push_back({symbol_at(line, alphabet, t)});
    }
  }
  return cand;
}

}  // namespace

LocalRule parse_rule(const std::string& text, const ShiftSpace& domain) {
  std::optional<Alphabet> alphabet;
  std::optional<int> radius;
  std::vector<int> table;
  std::set<std::vector<std::string>> seen_patterns;
  for (const auto& [line, content] : significant_lines(text)) {
    auto toks = tokens(content);
    if (toks[0] == "alphabet:") {
      if (alphabet) bad_line(line, "alphabet given twice");
      alphabet = parse_alphabet_line(line, toks);
      if (!(*alphabet == domain.alphabet))
        bad_line(line, "rule alphabet does not match the domain space");
      continue;
    }
    if (toks[0] == "radius:") {
      if (radius) bad_line(line, "radius given twice");
      if (!alphabet) bad_line(line, "alphabet must come before radius");
      if (toks.size() != 2) bad_line(line, "radius takes one integer");
      try {
        radius = std::stoi(toks[1]);
      } catch (const std::exception&) {
        bad_line(line, "radius '" + toks[1] + "' is not an integer");
      }
      if (*radius < 0 || *radius > 8)
        bad_line(line, "radius " + toks[1] + " outside 0..8");
      const std::size_t entries = checked_power(
          alphabet->size(), 2 * *radius + 1, default_caps().table_entries,
          "table_entries");
      table.assign(entries, -1);
      continue;
    }
    auto arrow = std::find(toks.begin(), toks.end(), "->");
    if (arrow == toks.end())
      bad_line(line, "expected a header or a '->' rule line");
    if (!radius) bad_line(line, "alphabet and radius must come before rules");
    if (arrow + 2 != toks.end()) bad_line(line, "'->' takes one output symbol");
    std::vector<std::string> lhs(toks.begin(), arrow);
    if (lhs.empty()) bad_line(line, "empty neighborhood");
    if (!seen_patterns.insert(lhs).second)
      bad_line(line, "duplicate neighborhood pattern");
    const int value = symbol_at(line, *alphabet, *(arrow + 1));
    auto cand = parse_pattern(line, *alphabet, std::move(lhs), 2 * *radius + 1);
    // Walk the candidate product with an odometer.
    std::vector<std::size_t> pick(cand.size(), 0);
    for (;;) {
      std::size_t code = 0;
      for (std::size_t i = 0; i < cand.size(); ++i)
        code = code * alphabet->size() + cand[i][pick[i]];
      table[code] = value;
      std::size_t i = cand.size();
      while (i > 0 && ++pick[i - 1] == cand[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  if (!alphabet) fail(ErrorKind::Parse, "rule file has no alphabet line");
  if (!radius) fail(ErrorKind::Parse, "rule file has no radius line");
  return LocalRule(domain, *radius, std::move(table));
}

LocalRule parse_rule(const std::string& text) {
  // Peek at the alphabet so the full-shift domain can be built first.
  for (const auto& [line, content] : significant_lines(text)) {
    auto toks = tokens(content);
    if (toks[0] == "alphabet:")
      return parse_rule(text, full_shift(parse_alphabet_line(line, toks)));
    break;
  }
  fail(ErrorKind::Parse, "rule file must start with an alphabet line");
}

std::string emit_space(const ShiftSpace& space) {
  std::string out = "alphabet:";
  for (int a = 0; a < space.alphabet.size(); ++a)
    out += " " + space.alphabet.name(a);
  out += "\n";
  for (const Word& w : space.forbidden)
    out += "forbid: " + space.alphabet.word_to_string(w) + "\n";
  return out;
}

std::string emit_measure(const MarkovMeasure& mu) {
  std::string out = "alphabet:";
  for (int a = 0; a < mu.alphabet().size(); ++a)
    out += " " + mu.alphabet().name(a);
  out += "\n";
  if (mu.kind() == MarkovMeasure::Kind::Bernoulli) {
    out += "bernoulli:";
    for (const Rational& p : mu.stationary()) out += " " + rational_str(p);
    return out + "\n";
  }
  out += "markov:\n";
  for (const auto& row : mu.transition()) {
    std::string sep;
    for (const Rational& p : row) {
      out += sep + rational_str(p);
      sep = " ";
    }
    out += "\n";
  }
  return out;
}

std::string emit_rule(const LocalRule& rule) {
  const Alphabet& alphabet = rule.alphabet();
  std::string out = "alphabet:";
  for (int a = 0; a < alphabet.size(); ++a) out += " " + alphabet.name(a);
  out += "\nradius: " + std::to_string(rule.radius()) + "\n";
  for (std::size_t code = 0; code < rule.table().size(); ++code) {
    const int value = rule.table()[code];
    if (value < 0) continue;
    const Word w =
        decode_word(code, rule.window_size(), alphabet.size());
    std::string lhs;
    for (int s : w) lhs += (lhs.empty() ? "" : " ") + alphabet.name(s);
    out += lhs + " -> " + alphabet.name(value) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, "cannot write '" + path + "'");
  out << content;
  if (!out) fail(ErrorKind::Parse, "short write to '" + path + "'");
}

namespace {

template <typename F>
auto with_path(const std::string& path, F f) {
  try {
    return f(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse)
      fail(ErrorKind::Parse, path + ": " + e.what());
    throw;
  }
}

}  // namespace

ShiftSpace load_space(const std::string& path) {
  return with_path(path, [](const std::string& t) { return parse_space(t); });
}
MarkovMeasure load_measure(const std::string& path) {
  return with_path(path, [](const std::string& t) { return parse_measure(t); });
}
LocalRule load_rule(const std::string& path) {
  return with_path(path, [](const std::string& t) { return parse_rule(t); });
}
LocalRule load_rule(const std::string& path, const ShiftSpace& domain) {
  return with_path(
      path, [&](const std::string& t) { return parse_rule(t, domain); });
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace cesaro
