#include "cesaro/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

unsigned long long parse_count(const std::string& name, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::Parse, "cap " + name + ": bad value '" + v + "'");
  return std::stoull(v);
}

}  // namespace

void Caps::apply_overrides(const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::Parse, "cap override '" + item + "' is not name=value");
    std::string name = item.substr(0, eq), value = item.substr(eq + 1);
    if (name == "table_entries") table_entries = parse_count(name, value);
    else if (name == "strip_width") strip_width = (int)parse_count(name, value);
    else if (name == "strip_sets") strip_sets = parse_count(name, value);
    else if (name == "falsify_pairs") falsify_pairs = parse_count(name, value);
    else if (name == "falsify_samples") falsify_samples = (int)parse_count(name, value);
    else if (name == "rkm_word_len") rkm_word_len = parse_count(name, value);
    else if (name == "pushforward_states") pushforward_states = parse_count(name, value);
    else if (name == "balance_states") balance_states = parse_count(name, value);
    else if (name == "sofic_states") sofic_states = parse_count(name, value);
    else if (name == "seed") seed = parse_count(name, value);
    else fail(ErrorKind::Parse, "unknown cap '" + name + "'");
  }
}

std::map<std::string, std::string> Caps::as_map() const {
  return {
      {"table_entries", std::to_string(table_entries)},
      {"strip_width", std::to_string(strip_width)},
      {"strip_sets", std::to_string(strip_sets)},
      {"falsify_pairs", std::to_string(falsify_pairs)},
      {"falsify_samples", std::to_string(falsify_samples)},
      {"rkm_word_len", std::to_string(rkm_word_len)},
      {"pushforward_states", std::to_string(pushforward_states)},
      {"balance_states", std::to_string(balance_states)},
      {"sofic_states", std::to_string(sofic_states)},
      {"seed", std::to_string(seed)},
  };
}

Caps caps_from_env() {
  Caps caps;
  if (const char* env = std::getenv("CESARO_CA_CAPS")) caps.apply_overrides(env);
  return caps;
}

const Caps& default_caps() {
  static const Caps caps;
  return caps;
}

}  // namespace cesaro
