#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "cesaro/errors.hpp"
#include "cesaro/io.hpp"
#include "helpers.hpp"

using namespace cesaro;
using namespace testing_helpers;

namespace {

std::string data(const std::string& name) {
  return std::string(TESTS_DATA_DIR) + "/" + name;
}

void check_parse_error(const std::string& text, const std::string& needle,
                       bool rule = true) {
  try {
    if (rule)
      parse_rule(text);
    else
      parse_measure(text);
    CHECK_MESSAGE(false, ("expected a parse error for: " + text));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                  (std::string(e.what()) + " should mention " + needle));
  }
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CESARO_CA_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
    res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("wall rule file parses to the wall rule") {
  auto rule = load_rule(data("wall_rule.txt"));
  auto expect = wall_xor_rule();
  CHECK(rule.radius() == 1);
  CHECK(rule.alphabet() == expect.alphabet());
  CHECK(rule.table() == expect.table());
  CHECK(rule == expect);
}

TEST_CASE("emitted text parses back to the same value") {
  for (const LocalRule& rule :
       {wall_xor_rule(), negation_rule(), constant_zero_rule(),
        elementary_rule(110)}) {
    CHECK(parse_rule(emit_rule(rule)) == rule);
  }

  for (const MarkovMeasure& mu :
       {bernoulli(ternary(), {"1/2", "1/4", "1/4"}),
        MarkovMeasure::markov(binary(),
                              {{parse_rational("0"), parse_rational("1")},
                               {parse_rational("1/2"), parse_rational("1/2")}})}) {
    auto back = parse_measure(emit_measure(mu));
    CHECK(back.kind() == mu.kind());
    CHECK(back.alphabet() == mu.alphabet());
    CHECK(back.stationary() == mu.stationary());
    CHECK(back.transition() == mu.transition());
  }

  auto gm = build_sft(binary(), {binary().word_from_string("11")});
  auto back = parse_space(emit_space(gm));
  CHECK(back.kind == gm.kind);
  CHECK(back.forbidden == gm.forbidden);
  CHECK(back.edges == gm.edges);
  auto full = parse_space("alphabet: 0 1 2\n");
  CHECK(full.is_full());
  CHECK(full.alphabet.size() == 3);
}

TEST_CASE("measure files parse to exact distributions") {
  auto skewed = load_measure(data("skewed_measure.txt"));
  CHECK(skewed.kind() == MarkovMeasure::Kind::Bernoulli);
  CHECK(skewed.symbol_prob(0) == parse_rational("1/2"));
  CHECK(skewed.symbol_prob(2) == parse_rational("1/4"));

  auto chain = load_measure(data("markov_measure.txt"));
  CHECK(chain.kind() == MarkovMeasure::Kind::Markov);
  CHECK(chain.symbol_prob(0) == parse_rational("1/3"));
  CHECK(chain.symbol_prob(1) == parse_rational("2/3"));

  // Measures without an alphabet line name symbols by position.
  auto bare = parse_measure("bernoulli: 1/3 2/3\n");
  CHECK(bare.alphabet() == binary());
}

TEST_CASE("golden mean space file") {
  auto space = load_space(data("golden_mean_space.txt"));
  CHECK(space.kind == ShiftSpace::Kind::Sft);
  CHECK(contains(space, space.alphabet.word_from_string("010")));
  CHECK_FALSE(contains(space, space.alphabet.word_from_string("110")));
}

TEST_CASE("later wildcard lines override earlier ones") {
  auto rule = parse_rule(
      "alphabet: 0 1\nradius: 1\n* * * -> 0\n* 1 * -> 1\n");
  for (std::size_t code = 0; code < 8; ++code)
    CHECK(rule.entry(code) == ((code & 2) ? 1 : 0));
}

TEST_CASE("compact neighborhoods parse like spaced ones") {
  auto spaced = parse_rule("alphabet: 0 1\nradius: 1\n* * * -> 0\n0 1 1 -> 1\n");
  auto compact = parse_rule("alphabet: 0 1\nradius: 1\n*** -> 0\n011 -> 1\n");
  CHECK(spaced == compact);
}

TEST_CASE("parse diagnostics carry line numbers") {
  check_parse_error("alphabet: 0 1\nradius: x\n", "line 2");
  check_parse_error("alphabet: 0 1\nradius: 1\n* * 2 -> 0\n* * * -> 0\n",
                    "unknown symbol '2'");
  check_parse_error(
      "alphabet: 0 1\nradius: 1\n* * * -> 0\n* * * -> 1\n",
      "duplicate neighborhood");
  check_parse_error("alphabet: 0 1\n0 -> 1\n", "radius");
  check_parse_error("alphabet: 0 1\nalphabet: 0 1\n", "twice");
  check_parse_error("alphabet: 0 1\nradius: 1\n* * -> 0\n", "2 cells");
  check_parse_error("radius: 1\n", "alphabet");
  check_parse_error("alphabet: 0 1 2\nbernoulli: 1/2 1/2\n", "match", false);
  check_parse_error("markov:\n1/2 1/2\n1/3\n", "length", false);
  check_parse_error("alphabet: 0 1\nwat: 1\n", "line 2", false);
  check_parse_error("alphabet: 0 1\nbernoulli: 1/2 x\n", "line 2", false);

  try {
    load_rule(data("missing_file.txt"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("missing_file.txt") != std::string::npos);
  }
}

TEST_CASE("space files validate their directives") {
  CHECK_THROWS_AS(parse_space("alphabet: 0 1\nforbid: 2\n"), Error);
  CHECK_THROWS_AS(parse_space("alphabet: 0 1\nforbid: 1\nforbid: 1\n"), Error);
  CHECK_THROWS_AS(parse_space("forbid: 1\n"), Error);
}

TEST_CASE("digests and exact serialization") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
  CHECK(hex64(0) == "0000000000000000");
  CHECK(rational_str(parse_rational("6/8")) == "3/4");
  CHECK(rational_str(Rational(5)) == "5");
  CHECK(rational_str(parse_rational("-1/2")) == "-1/2");
}

TEST_CASE("cli: surjectivity verdict with witness") {
  auto res = run_cli("surjectivity --rule " + data("constant0_rule.txt"));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"surjective\": false") != std::string::npos);
  CHECK(res.output.find("\"witness\": \"1\"") != std::string::npos);
}

TEST_CASE("cli: cesaro csv series is exact") {
  auto res = run_cli("cesaro --rule " + data("wall_rule.txt") + " --measure " +
                     data("skewed_measure.txt") +
                     " --param u=2012 N=4 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("n,u,value_num,value_den\n") != std::string::npos);
  CHECK(res.output.find("0,2012,1,128\n") != std::string::npos);
  CHECK(res.output.find("1,2012,3,512\n") != std::string::npos);
  CHECK(res.output.find("3,2012,3,512\n") != std::string::npos);
}

TEST_CASE("cli: zero-mass marker exits with the hypothesis code") {
  auto res = run_cli("formula --rule " + data("wall_rule.txt") + " --measure " +
                     data("degenerate_measure.txt") + " --param u=2 b=2");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("no positive-measure blocking word") !=
        std::string::npos);
}

TEST_CASE("cli: unknown parameters and symbols exit with errors") {
  CHECK(run_cli("cesaro --rule " + data("wall_rule.txt") + " --measure " +
                data("skewed_measure.txt") + " --param u=2 bogus=1")
            .exit_code == 1);
  CHECK(run_cli("classify --rule " + data("wall_rule.txt") + " --format csv")
            .exit_code == 1);
  CHECK(run_cli("cesaro --rule " + data("wall_rule.txt") + " --measure " +
                data("third_measure.txt") + " --param u=0")
            .exit_code == 1);  // alphabet mismatch
}

TEST_CASE("cli: reports are byte-identical across runs") {
  const std::string out1 = "/tmp/cesaro_cli_test_a.json";
  const std::string out2 = "/tmp/cesaro_cli_test_b.json";
  const std::string args = "classify --rule " + data("wall_rule.txt") +
                           " --max-len 1 --out ";
  CHECK(run_cli(args + out1).exit_code == 0);
  CHECK(run_cli(args + out2).exit_code == 0);
  const std::string a = slurp(out1);
  CHECK(a == slurp(out2));
  CHECK(a.find("\"class\": \"E2\"") != std::string::npos);
  CHECK(a.find("wall_ms") == std::string::npos);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("cli: blocking search reports the wall certificate") {
  auto res = run_cli("blocking-search --rule " + data("wall_rule.txt") +
                     " --max-len 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"b\": \"2\"") != std::string::npos);
  CHECK(res.output.find("\"period\": 1") != std::string::npos);
}
