#pragma once

#include <cstdint>
#include <optional>

#include "cesaro/periodic.hpp"

namespace cesaro {

// Proof that B is a blocking word: for every point of the domain containing
// B, the chosen window of B's span reads the same word v_n at every step
// n >= 1.  The column sequence is eventually periodic; `column` stores
// v_1 .. v_{preperiod+period} and column_at extends it.
//
// Certificates come from a sound (but incomplete) strip abstraction, so a
// certificate is a proof while its absence proves nothing.
struct BlockingCertificate {
  Word b;
  int d = 0;                 // window offset inside B
  int w = 0;                 // window width, at least max(radius, 1)
  int strip_width = 0;       // abstraction width that closed the proof
  int preperiod = 0;         // of the column sequence, minimal
  int period = 1;            // minimal
  std::vector<Word> column;  // v_1 .. v_{preperiod+period}
  std::uint64_t trace_hash = 0;

  const Word& column_at(int n) const;  // n >= 1
};

// Witness that the (d, w) window of B is NOT determined: two extensions of B
// whose evolutions disagree inside the window at some step <= horizon.
struct FalsificationWitness {
  Word left1, right1;
  Word left2, right2;
  int step = 0;
  Word window1, window2;
};

// Strip abstraction at one explicit strip width (normalized up to window
// parity).  nullopt = unknown; never unsound.
std::optional<BlockingCertificate> certify_blocking(const LocalRule& rule,
                                                    const Word& b, int d, int w,
                                                    int strip_width,
                                                    const Caps& caps = default_caps());

// Simulates boundary extensions of length radius*horizon on both sides,
// exhaustively when |A|^{2 r horizon} fits the falsify_pairs cap, otherwise
// sampling falsify_samples seeded extension pairs.
std::optional<FalsificationWitness> falsify_blocking(const LocalRule& rule,
                                                     const Word& b, int d, int w,
                                                     int horizon,
                                                     const Caps& caps = default_caps());

// Direct simulation of one padded configuration's window column; the replay
// oracle certificates are checked against.
std::vector<Word> simulate_column(const LocalRule& rule, const Word& b, int d, int w,
                                  const Word& left, const Word& right, int steps);

struct CertifySearchOptions {
  int strip_cap = 12;        // escalation ladder stops here
  int falsify_horizon = 6;   // cheap pre-filter before certifying
  int falsify_samples = 64;  // sampled pairs in the pre-filter
};

// Canonical window enumeration (narrowest width first, then centered
// offsets) with the +2 strip ladder; first certificate wins.
std::optional<BlockingCertificate> find_certificate(
    const LocalRule& rule, const Word& b,
    const CertifySearchOptions& opts = {}, const Caps& caps = default_caps());

// Certificates for all admissible words up to max_len, sorted by length then
// lexicographically.
std::vector<BlockingCertificate> search_blocking_words(
    const LocalRule& rule, int max_len,
    const CertifySearchOptions& opts = {}, const Caps& caps = default_caps());

// E1: every admissible word of some odd length <= max_len is certified, with
// the global preperiod/period folded from the certificates.  E2: certificates
// exist but no length is fully certified.  Otherwise: nothing found, which
// proves nothing about sensitivity.
struct EquicontinuityVerdict {
  enum class Class { E1, E2, NoBlockingWordFound };
  Class cls = Class::NoBlockingWordFound;
  int word_length = 0;                  // E1: the fully certified odd length
  unsigned long long period = 1;        // E1: lcm of column periods
  unsigned long long preperiod = 0;     // E1: max of column preperiods
  std::vector<BlockingCertificate> evidence;
  int max_len_tested = 0;
};

EquicontinuityVerdict classify_equicontinuity(
    const LocalRule& rule, int max_len,
    const CertifySearchOptions& opts = {}, const Caps& caps = default_caps());

// A strictly F-periodic point whose generator contains B followed by v, via
// orbit iteration of the sigma-periodic point on B (glue) v (glue).  Assumes
// the rule is onto a transitive domain carrying the certificate; raises
// HorizonExceeded (reporting the orbit actually found) when no padding
// reaches preperiod 0 within max_period.
struct PeriodicPointResult {
  PeriodicConfig point;  // phase 0, generator starts with B
  int period = 0;        // F^period fixes the point, period <= max_period
  Word generator;
};

PeriodicPointResult construct_f_periodic_point(const LocalRule& rule, const Word& v,
                                               const BlockingCertificate& cert,
                                               int max_period,
                                               const Caps& caps = default_caps());

}  // namespace cesaro
