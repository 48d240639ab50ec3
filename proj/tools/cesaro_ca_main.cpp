// cesaro-ca: runs the library's experiments from rule/measure/space files and
// emits reproducible reports.  Identical configuration yields byte-identical
// report files; wall time is printed alongside, never into the report.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include "cesaro/blocking.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/io.hpp"
#include "cesaro/pushforward.hpp"
#include "cesaro/rkm.hpp"
#include "cesaro/sofic_image.hpp"
#include "cesaro/surjectivity.hpp"

using json = nlohmann::ordered_json;
using namespace cesaro;

namespace {

// Key=value experiment parameters; every key must be consumed exactly once.
class ParamSet {
 public:
  explicit ParamSet(const std::vector<std::string>& items) {
    for (const auto& item : items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        fail(ErrorKind::BadParam, "--param wants key=value, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      if (!values_.emplace(key, item.substr(eq + 1)).second)
        fail(ErrorKind::BadParam, "parameter '" + key + "' given twice");
    }
  }

  std::optional<std::string> take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string v = it->second;
    values_.erase(it);
    return v;
  }

  std::string require(const std::string& key) {
    auto v = take(key);
    if (!v) fail(ErrorKind::BadParam, "missing required parameter " + key + "=");
    return *v;
  }

  int take_int(const std::string& key, int fallback) {
    auto v = take(key);
    if (!v) return fallback;
    try {
      return std::stoi(*v);
    } catch (const std::exception&) {
      fail(ErrorKind::BadParam, key + "='" + *v + "' is not an integer");
    }
  }

  // "1,2,3" -> ints, in order.
  std::vector<int> take_ints(const std::string& key, std::vector<int> fallback) {
    auto v = take(key);
    if (!v) return fallback;
    std::vector<int> out;
    std::istringstream in(*v);
    std::string piece;
    while (std::getline(in, piece, ',')) {
      try {
        out.push_back(std::stoi(piece));
      } catch (const std::exception&) {
        fail(ErrorKind::BadParam, key + " entry '" + piece + "' is not an integer");
      }
    }
    if (out.empty()) fail(ErrorKind::BadParam, key + "= lists no values");
    return out;
  }

  void done() const {
    if (values_.empty()) return;
    std::string names;
    for (const auto& [k, v] : values_) names += (names.empty() ? "" : ", ") + k;
    fail(ErrorKind::BadParam, "unknown parameter(s): " + names);
  }

 private:
  std::map<std::string, std::string> values_;
};

std::vector<Word> words_of(const Alphabet& alphabet, const std::string& csv) {
  std::vector<Word> out;
  std::istringstream in(csv);
  std::string piece;
  while (std::getline(in, piece, ','))
    out.push_back(alphabet.word_from_string(piece));
  if (out.empty()) fail(ErrorKind::BadParam, "empty word list");
  return out;
}

json rational_json(const Rational& q) { return rational_str(q); }

json series_json(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(rational_json(x));
  return out;
}

json cert_json(const Alphabet& alphabet, const BlockingCertificate& cert) {
  json j;
  j["b"] = alphabet.word_to_string(cert.b);
  j["d"] = cert.d;
  j["w"] = cert.w;
  j["strip_width"] = cert.strip_width;
  j["preperiod"] = cert.preperiod;
  j["period"] = cert.period;
  json column = json::array();
  for (const Word& v : cert.column) column.push_back(alphabet.word_to_string(v));
  j["column"] = column;
  return j;
}

struct SeriesRow {
  long long n = 0;
  std::string u;
  Rational value;
};

std::string series_csv(const std::vector<SeriesRow>& rows) {
  std::string out = "n,u,value_num,value_den\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + row.u + "," +
           row.value.get_num().get_str() + "," + row.value.get_den().get_str() +
           "\n";
  }
  return out;
}

// What one experiment produced: the JSON result block, plus the CSV form for
// experiments that are a single series.
struct Outcome {
  json result;
  std::optional<std::string> csv;
};

struct Loaded {
  LocalRule rule;
  std::optional<MarkovMeasure> measure;
  std::optional<ShiftSpace> space;
};

const MarkovMeasure& need_measure(const Loaded& in) {
  if (!in.measure) fail(ErrorKind::BadParam, "this experiment needs --measure");
  return *in.measure;
}

Outcome run_blocking_search(const Loaded& in, ParamSet& params, int max_len,
                            const CertifySearchOptions& opts, const Caps& caps) {
  params.done();
  const Alphabet& alphabet = in.rule.alphabet();
  auto certs = search_blocking_words(in.rule, max_len, opts, caps);
  json result;
  result["max_len"] = max_len;
  result["count"] = certs.size();
  json list = json::array();
  for (const auto& cert : certs) list.push_back(cert_json(alphabet, cert));
  result["certificates"] = list;
  return {std::move(result), std::nullopt};
}

Outcome run_classify(const Loaded& in, ParamSet& params, int max_len,
                     const CertifySearchOptions& opts, const Caps& caps) {
  params.done();
  const Alphabet& alphabet = in.rule.alphabet();
  auto verdict = classify_equicontinuity(in.rule, max_len, opts, caps);
  json result;
  switch (verdict.cls) {
    case EquicontinuityVerdict::Class::E1: result["class"] = "E1"; break;
    case EquicontinuityVerdict::Class::E2: result["class"] = "E2"; break;
    case EquicontinuityVerdict::Class::NoBlockingWordFound:
      result["class"] = "no-blocking-word-found";
      break;
  }
  result["word_length"] = verdict.word_length;
  result["period"] = verdict.period;
  result["preperiod"] = verdict.preperiod;
  result["max_len_tested"] = verdict.max_len_tested;
  json list = json::array();
  for (const auto& cert : verdict.evidence)
    list.push_back(cert_json(alphabet, cert));
  result["evidence"] = list;
  return {std::move(result), std::nullopt};
}

Outcome run_surjectivity(const Loaded& in, ParamSet& params, const Caps& caps) {
  params.done();
  auto res = is_surjective(in.rule, caps);
  json result;
  result["surjective"] = res.surjective;
  result["exact"] = res.exact;
  if (res.exact) result["balance_target"] = res.balance_target;
  if (res.witness)
    result["witness"] = in.rule.alphabet().word_to_string(*res.witness);
  if (res.witness_count) result["witness_count"] = *res.witness_count;
  if (!res.exact) result["max_discrepancy"] = res.max_discrepancy;
  return {std::move(result), std::nullopt};
}

Outcome run_periodic_points(const Loaded& in, ParamSet& params, const Caps& caps) {
  const Alphabet& alphabet = in.rule.alphabet();
  const int max_period = params.take_int("max-period", 256);
  std::vector<Word> targets;
  if (auto v = params.take("v")) {
    targets = words_of(alphabet, *v);
  } else {
    const int len = params.take_int("len", 2);
    for (int l = 1; l <= len; ++l)
      for (const Word& w : language_words(in.rule.domain(), l))
        targets.push_back(w);
  }
  std::optional<Word> marker;
  if (auto b = params.take("b")) marker = alphabet.word_from_string(*b);
  params.done();

  std::optional<BlockingCertificate> cert;
  if (marker) {
    cert = find_certificate(in.rule, *marker, {}, caps);
  } else {
    auto certs = search_blocking_words(in.rule, 2, {}, caps);
    if (!certs.empty()) cert = certs.front();
  }
  if (!cert)
    fail(ErrorKind::HypothesisNotMet,
         "no certified blocking word to anchor periodic points");

  json result;
  result["blocking_word"] = alphabet.word_to_string(cert->b);
  result["max_period"] = max_period;
  json rows = json::array();
  for (const Word& v : targets) {
    json row;
    row["v"] = alphabet.word_to_string(v);
    try {
      auto pt = construct_f_periodic_point(in.rule, v, *cert, max_period, caps);
      row["generator"] = alphabet.word_to_string(pt.generator);
      row["period"] = pt.period;
      row["status"] = "ok";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HorizonExceeded &&
          e.kind() != ErrorKind::Inadmissible)
        throw;
      row["status"] = e.kind() == ErrorKind::HorizonExceeded
                          ? "horizon-exceeded"
                          : "inadmissible";
      row["detail"] = e.what();
    }
    rows.push_back(std::move(row));
  }
  result["rows"] = rows;
  return {std::move(result), std::nullopt};
}

Outcome run_pushforward(const Loaded& in, ParamSet& params, const Caps& caps) {
  const MarkovMeasure& mu = need_measure(in);
  const Alphabet& alphabet = in.rule.alphabet();
  const Word u = alphabet.word_from_string(params.require("u"));
  const int N = params.take_int("N", 8);
  params.done();
  if (N < 0) fail(ErrorKind::BadParam, "N must be nonnegative");

  std::vector<SeriesRow> rows;
  json list = json::array();
  for (int n = 0; n <= N; ++n) {
    Rational value = pushforward_cylinder(in.rule, mu, u, n, caps);
    json row;
    row["n"] = n;
    row["value"] = rational_json(value);
    list.push_back(std::move(row));
    rows.push_back({n, alphabet.word_to_string(u), std::move(value)});
  }
  json result;
  result["u"] = alphabet.word_to_string(u);
  result["rows"] = list;
  return {std::move(result), series_csv(rows)};
}

Outcome run_cesaro(const Loaded& in, ParamSet& params, const Caps& caps) {
  const MarkovMeasure& mu = need_measure(in);
  const Alphabet& alphabet = in.rule.alphabet();
  const Word u = alphabet.word_from_string(params.require("u"));
  const int N = params.take_int("N", 64);
  const bool raw = params.take_int("raw", 0) != 0;
  params.done();
  if (N <= 0) fail(ErrorKind::BadParam, "N must be positive");

  auto series = cesaro_mean(in.rule, mu, u, N, caps);
  const auto& emitted = raw ? series.raw : series.values;
  std::vector<SeriesRow> rows;
  for (std::size_t i = 0; i < emitted.size(); ++i)
    rows.push_back({static_cast<long long>(i), alphabet.word_to_string(u),
                    emitted[i]});
  json result;
  result["u"] = alphabet.word_to_string(u);
  result["N"] = N;
  result["emitted"] = raw ? "raw" : "averages";
  result["averages"] = series_json(series.values);
  result["raw"] = series_json(series.raw);
  return {std::move(result), series_csv(rows)};
}

Outcome run_formula(const Loaded& in, ParamSet& params, const Caps& caps) {
  const MarkovMeasure& mu = need_measure(in);
  const Alphabet& alphabet = in.rule.alphabet();
  const Word u = alphabet.word_from_string(params.require("u"));
  const std::vector<Word> bs = words_of(alphabet, params.require("b"));
  const std::vector<int> schedule = params.take_ints("m", {1, 2, 3});
  const int N = params.take_int("N", 64);
  const int k = params.take_int("k", (static_cast<int>(u.size()) - 1) / 2);
  params.done();
  if (u.size() != 2 * static_cast<std::size_t>(k) + 1)
    fail(ErrorKind::BadParam, "need |u| = 2k+1");

  bool positive = false;
  for (const Word& b : bs) positive = positive || cylinder_prob(mu, b) > 0;
  if (!positive)
    fail(ErrorKind::HypothesisNotMet, "no positive-measure blocking word");

  auto report = mu_c_estimate(in.rule, mu, u, bs, schedule, N, caps);
  std::vector<SeriesRow> rows;
  for (std::size_t i = 0; i < report.schedule.size(); ++i)
    rows.push_back({report.schedule[i], alphabet.word_to_string(u),
                    report.wm[i]});
  json result;
  result["u"] = alphabet.word_to_string(u);
  result["k"] = report.k;
  json markers = json::array();
  for (const Word& b : report.bs) markers.push_back(alphabet.word_to_string(b));
  result["b"] = markers;
  result["m"] = report.schedule;
  result["wm"] = series_json(report.wm);
  result["slack"] = series_json(report.slack);
  result["p"] = report.p;
  result["pprime"] = report.pprime;
  result["cesaro_N"] = N;
  result["cesaro_last"] = rational_json(report.cesaro.values.back());
  result["gap"] = rational_json(report.gap);
  result["slack_last"] = rational_json(report.slack_last);
  return {std::move(result), series_csv(rows)};
}

Outcome run_support(const Loaded& in, ParamSet& params, const Caps& caps) {
  const MarkovMeasure& mu = need_measure(in);
  const Alphabet& alphabet = in.rule.alphabet();
  const Word b = alphabet.word_from_string(params.require("b"));
  const int depth = params.take_int("depth", 2);
  params.done();

  auto report = support_tests(in.rule, mu, b, depth, caps);
  json result;
  result["b"] = alphabet.word_to_string(report.b);
  result["b_mass"] = rational_json(report.b_mass);
  if (report.cert) result["certificate"] = cert_json(alphabet, *report.cert);
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["y"] = alphabet.word_to_string(row.y);
    r["mass"] = rational_json(row.mass);
    r["in_support"] = row.in_support;
    r["witnessed"] = row.witnessed;
    r["witness"] = rational_json(row.witness);
    r["m_used"] = row.m_used;
    rows.push_back(std::move(r));
  }
  result["rows"] = rows;
  if (report.exchange) {
    json ex;
    ex["b2"] = alphabet.word_to_string(report.exchange->b2);
    ex["k"] = report.exchange->k;
    ex["m"] = report.exchange->m;
    ex["horizon"] = report.exchange->horizon;
    json windows = json::array();
    for (const Word& y : report.exchange->windows)
      windows.push_back(alphabet.word_to_string(y));
    ex["windows"] = windows;
    const auto member_json = [](const std::vector<std::vector<char>>& m) {
      json out = json::array();
      for (const auto& row : m) {
        json r = json::array();
        for (char c : row) r.push_back(c ? 1 : 0);
        out.push_back(std::move(r));
      }
      return out;
    };
    ex["member1"] = member_json(report.exchange->member1);
    ex["member2"] = member_json(report.exchange->member2);
    ex["agree"] = report.exchange->agree;
    result["marker_exchange"] = ex;
  }
  return {std::move(result), std::nullopt};
}

Outcome run_limit_set(const Loaded& in, ParamSet& params, const Caps& caps) {
  const int n = params.take_int("n", 1);
  const int len = params.take_int("len", 4);
  params.done();
  if (n < 0 || len < 1) fail(ErrorKind::BadParam, "need n >= 0 and len >= 1");

  auto levels = limit_set_approx(in.rule, n, caps);
  json result;
  result["steps"] = n;
  json list = json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const ShiftSpace& space = levels[i];
    json level;
    level["step"] = i;
    switch (space.kind) {
      case ShiftSpace::Kind::Full: level["kind"] = "full"; break;
      case ShiftSpace::Kind::Sft: level["kind"] = "sft"; break;
      case ShiftSpace::Kind::Sofic: level["kind"] = "sofic"; break;
    }
    level["vertices"] = space.vertex_count;
    level["edges"] = space.edges.size();
    json words = json::array();
    for (const Word& w : language_words(space, len))
      words.push_back(space.alphabet.word_to_string(w));
    level["words"] = words;
    level["word_length"] = len;
    list.push_back(std::move(level));
  }
  result["levels"] = list;
  return {std::move(result), std::nullopt};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cellular-automaton experiments"};
  app.require_subcommand(1);

  std::string rule_path, measure_path, space_path, out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::vector<std::string> raw_params;
  int max_len = 3;
  CertifySearchOptions opts;

  const auto add_common = [&](CLI::App* sub, bool needs_measure) {
    sub->add_option("--rule", rule_path, "rule file")->required();
    auto* m = sub->add_option("--measure", measure_path, "measure file");
    if (needs_measure) m->required();
    sub->add_option("--space", space_path, "domain space file");
    sub->add_option("--out", out_path, "report path (default stdout)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", seed, "seed for randomized fallbacks");
    sub->add_option("--param", raw_params, "experiment parameter key=value");
    return sub;
  };
  const auto add_search = [&](CLI::App* sub) {
    sub->add_option("--max-len", max_len, "longest candidate word");
    sub->add_option("--strip", opts.strip_cap, "widest strip to try");
    sub->add_option("--horizon", opts.falsify_horizon, "falsifier horizon");
    return sub;
  };

  add_search(add_common(app.add_subcommand("blocking-search",
                                           "certify candidate blocking words"),
                        false));
  add_search(add_common(
      app.add_subcommand("classify", "equicontinuity class from certificates"),
      false));
  add_common(app.add_subcommand("surjectivity", "preimage balance test"), false);
  add_common(app.add_subcommand("periodic-points",
                                "periodic points through a blocking word"),
             false);
  add_common(app.add_subcommand("pushforward", "image measure of a cylinder"),
             true);
  add_common(app.add_subcommand("cesaro", "averaged image-measure series"), true);
  add_common(app.add_subcommand("formula", "window formula vs direct averages"),
             true);
  add_common(app.add_subcommand("support", "support evidence for the limit"),
             true);
  add_common(app.add_subcommand("limit-set", "iterated image presentations"),
             false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string experiment = sub->get_name();

    Caps caps = caps_from_env();
    caps.seed = seed;
    opts.falsify_samples = caps.falsify_samples;

    json inputs;
    const auto record = [&](const char* role, const std::string& path) {
      json entry;
      entry["path"] = path;
      entry["fnv1a64"] = hex64(fnv1a64(read_file(path)));
      inputs[role] = std::move(entry);
    };

    Loaded in{[&] {
      record("rule", rule_path);
      if (!space_path.empty()) {
        record("space", space_path);
        return load_rule(rule_path, load_space(space_path));
      }
      return load_rule(rule_path);
    }(), std::nullopt, std::nullopt};
    if (!measure_path.empty()) {
      record("measure", measure_path);
      in.measure = load_measure(measure_path);
      if (!(in.measure->alphabet() == in.rule.alphabet()))
        fail(ErrorKind::BadParam, "measure alphabet does not match the rule");
    }

    ParamSet params(raw_params);
    Outcome outcome;
    if (experiment == "blocking-search")
      outcome = run_blocking_search(in, params, max_len, opts, caps);
    else if (experiment == "classify")
      outcome = run_classify(in, params, max_len, opts, caps);
    else if (experiment == "surjectivity")
      outcome = run_surjectivity(in, params, caps);
    else if (experiment == "periodic-points")
      outcome = run_periodic_points(in, params, caps);
    else if (experiment == "pushforward")
      outcome = run_pushforward(in, params, caps);
    else if (experiment == "cesaro")
      outcome = run_cesaro(in, params, caps);
    else if (experiment == "formula")
      outcome = run_formula(in, params, caps);
    else if (experiment == "support")
      outcome = run_support(in, params, caps);
    else
      outcome = run_limit_set(in, params, caps);

    std::string payload;
    if (format == "csv") {
      if (!outcome.csv)
        fail(ErrorKind::BadParam,
             experiment + " has no CSV form; use --format json");
      payload = *outcome.csv;
    } else {
      json report;
      report["experiment"] = experiment;
      report["inputs"] = inputs;
      report["seed"] = std::to_string(seed);
      json caps_obj;
      for (const auto& [k, v] : caps.as_map()) caps_obj[k] = v;
      report["caps"] = caps_obj;
      report["params"] = raw_params;
      report["result"] = outcome.result;
      payload = report.dump(2) + "\n";
    }

    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
    if (out_path.empty()) {
      std::cout << payload;
      std::cerr << "wall_ms " << wall << "\n";
    } else {
      write_file(out_path, payload);
      std::cout << "wrote " << out_path << " (wall_ms " << wall << ")\n";
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool hypothesis = e.kind() == ErrorKind::HypothesisNotMet ||
                            e.kind() == ErrorKind::NotE1;
    return hypothesis ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
