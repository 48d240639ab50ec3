#include "cesaro/blocking.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "cesaro/errors.hpp"
#include "cesaro/rational.hpp"

namespace cesaro {

namespace {

std::uint64_t fnv1a64(std::uint64_t value, std::uint64_t h) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

std::string word_text(const ShiftSpace& space, const Word& w) {
  return space.alphabet.word_to_string(w);
}

void check_window(const LocalRule& rule, const Word& b, int d, int w) {
  if (b.empty()) fail(ErrorKind::BadParam, "blocking word must be nonempty");
  if (!contains(rule.domain(), b))
    fail(ErrorKind::Inadmissible,
         "word " + word_text(rule.domain(), b) + " is not in the domain language");
  int wmin = std::max(rule.radius(), 1);
  if (w < wmin)
    fail(ErrorKind::WindowTooShort,
         "window width " + std::to_string(w) + " is below the minimum " +
             std::to_string(wmin));
  if (d < 0 || d + w > static_cast<int>(b.size()))
    fail(ErrorKind::BadParam, "window [" + std::to_string(d) + ", " +
                                  std::to_string(d + w) +
                                  ") does not sit inside the word");
}

}  // namespace

const Word& BlockingCertificate::column_at(int n) const {
  if (n < 1) fail(ErrorKind::BadParam, "column index starts at 1");
  int span = preperiod + period;
  int idx = n <= span ? n : preperiod + 1 + (n - preperiod - 1) % period;
  return column[static_cast<std::size_t>(idx - 1)];
}

// The abstraction tracks, per time step, a superset of the width-W strips
// that can appear around the marked occurrence of b.  Step n+1 extends every
// tracked strip by r admissible symbols on each side and applies the rule,
// so unknown boundary influence is folded in exactly.  If every reachable
// set projects to a single word on the window, the window is determined.
std::optional<BlockingCertificate> certify_blocking(const LocalRule& rule,
                                                    const Word& b, int d, int w,
                                                    int strip_width,
                                                    const Caps& caps) {
  check_window(rule, b, d, w);
  const ShiftSpace& space = rule.domain();
  const bool full = space.kind == ShiftSpace::Kind::Full;
  const int n_sym = static_cast<int>(space.alphabet.size());
  const int r = rule.radius();
  const int len = static_cast<int>(b.size());

  int W = strip_width;
  if (W < w) fail(ErrorKind::BadParam, "strip narrower than the window");
  if ((W - w) % 2 != 0) W += 1;
  if (W > caps.strip_width)
    fail(ErrorKind::CapExceeded,
         "strip_width: " + std::to_string(W) + " exceeds " +
             std::to_string(caps.strip_width));

  const int start = d - (W - w) / 2;  // strip position relative to b
  const int off = (W - w) / 2;        // window position inside the strip

  // Initial set: all admissible strips agreeing with b on the overlap.
  std::vector<int> free_pos;
  Word proto(static_cast<std::size_t>(W), 0);
  for (int i = 0; i < W; ++i) {
    int pos = start + i;
    if (pos >= 0 && pos < len)
      proto[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(pos)];
    else
      free_pos.push_back(i);
  }
  const int lo = std::min(start, 0);
  const int hi = std::max(start + W, len);
  std::size_t n_free = checked_power(n_sym, static_cast<int>(free_pos.size()),
                                     caps.strip_sets, "strip_sets");

  std::vector<std::uint64_t> initial;
  Word joint(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t a = 0; a < n_free; ++a) {
    Word s = proto;
    std::size_t rem = a;
    for (int i : free_pos) {
      s[static_cast<std::size_t>(i)] = static_cast<int>(rem % n_sym);
      rem /= n_sym;
    }
    if (!full) {
      for (int pos = lo; pos < hi; ++pos)
        joint[static_cast<std::size_t>(pos - lo)] =
            (pos >= 0 && pos < len) ? b[static_cast<std::size_t>(pos)]
                                    : s[static_cast<std::size_t>(pos - start)];
      if (!contains(space, joint)) continue;
    }
    initial.push_back(encode_word(s, n_sym));
  }
  std::sort(initial.begin(), initial.end());
  if (initial.empty())
    fail(ErrorKind::Internal, "no strip is compatible with an admissible word");

  const auto extensions = all_words(n_sym, r);
  auto advance = [&](const std::vector<std::uint64_t>& cur) {
    std::vector<std::uint64_t> next;
    Word padded(static_cast<std::size_t>(W + 2 * r), 0);
    for (std::uint64_t code : cur) {
      Word s = decode_word(code, W, n_sym);
      std::copy(s.begin(), s.end(), padded.begin() + r);
      for (const Word& le : extensions) {
        std::copy(le.begin(), le.end(), padded.begin());
        for (const Word& re : extensions) {
          std::copy(re.begin(), re.end(), padded.end() - r);
          if (!full && !contains(space, padded)) continue;
          Word out = apply_window(rule, padded);
          if (!full && !contains(space, out)) continue;
          next.push_back(encode_word(out, n_sym));
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > caps.strip_sets)
      fail(ErrorKind::CapExceeded, "strip_sets: abstraction grew past " +
                                       std::to_string(caps.strip_sets));
    return next;
  };

  // Window projection; nullopt when the set is not determined there.
  auto project = [&](const std::vector<std::uint64_t>& set) -> std::optional<Word> {
    Word first;
    for (std::uint64_t code : set) {
      Word s = decode_word(code, W, n_sym);
      Word win(s.begin() + off, s.begin() + off + w);
      if (first.empty())
        first = std::move(win);
      else if (win != first)
        return std::nullopt;
    }
    return first;
  };

  constexpr int kMaxSteps = 2048;
  std::vector<std::vector<std::uint64_t>> sets{initial};
  std::map<std::vector<std::uint64_t>, int> seen{{initial, 0}};
  std::vector<Word> raw{Word{}};  // raw[n] = window word at step n; raw[0] unused
  int repeat_from = -1;
  int repeat_at = -1;
  for (int n = 1; n <= kMaxSteps; ++n) {
    auto nxt = advance(sets.back());
    auto win = project(nxt);
    if (!win) return std::nullopt;
    raw.push_back(*win);
    auto [it, fresh] = seen.emplace(nxt, n);
    sets.push_back(std::move(nxt));
    if (!fresh) {
      repeat_from = it->second;
      repeat_at = n;
      break;
    }
  }
  if (repeat_at < 0) return std::nullopt;  // no closure within the step budget

  // The column repeats with period repeat_at - repeat_from once n reaches
  // max(repeat_from, 1); reduce to the minimal period and preperiod.
  const int per0 = repeat_at - repeat_from;
  const int base = std::max(repeat_from, 1);
  int period = per0;
  for (int p = 1; p <= per0; ++p) {
    if (per0 % p != 0) continue;
    bool ok = true;
    for (int n = base; n + p <= repeat_at && ok; ++n) ok = raw[n + p] == raw[n];
    if (ok) {
      period = p;
      break;
    }
  }
  int s = base;
  while (s > 1 && raw[s - 1] == raw[s - 1 + period]) --s;
  const int preperiod = s - 1;

  BlockingCertificate cert;
  cert.b = b;
  cert.d = d;
  cert.w = w;
  cert.strip_width = W;
  cert.preperiod = preperiod;
  cert.period = period;
  cert.column.assign(raw.begin() + 1, raw.begin() + 1 + preperiod + period);
  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a64(static_cast<std::uint64_t>(W), h);
  h = fnv1a64(static_cast<std::uint64_t>(d), h);
  for (const auto& set : sets) {
    h = fnv1a64(set.size(), h);
    for (std::uint64_t code : set) h = fnv1a64(code, h);
  }
  cert.trace_hash = h;
  return cert;
}

std::vector<Word> simulate_column(const LocalRule& rule, const Word& b, int d, int w,
                                  const Word& left, const Word& right, int steps) {
  const int r = rule.radius();
  if (static_cast<int>(left.size()) < r * steps ||
      static_cast<int>(right.size()) < r * steps)
    fail(ErrorKind::WindowTooShort,
         "padding must be at least radius*steps on both sides");
  Word cur = left;
  cur.insert(cur.end(), b.begin(), b.end());
  cur.insert(cur.end(), right.begin(), right.end());
  int shift = static_cast<int>(left.size());  // index of b's start in cur
  std::vector<Word> column;
  column.reserve(static_cast<std::size_t>(steps));
  for (int n = 1; n <= steps; ++n) {
    cur = apply_window(rule, cur);
    shift -= r;
    column.emplace_back(cur.begin() + shift + d, cur.begin() + shift + d + w);
  }
  return column;
}

std::optional<FalsificationWitness> falsify_blocking(const LocalRule& rule,
                                                     const Word& b, int d, int w,
                                                     int horizon,
                                                     const Caps& caps) {
  check_window(rule, b, d, w);
  if (horizon < 1) fail(ErrorKind::BadParam, "horizon must be positive");
  const ShiftSpace& space = rule.domain();
  const bool full = space.kind == ShiftSpace::Kind::Full;
  const int n_sym = static_cast<int>(space.alphabet.size());
  const int pad = rule.radius() * horizon;

  std::size_t total = 1;
  bool exhaustive = true;
  for (int i = 0; i < 2 * pad && exhaustive; ++i) {
    total *= static_cast<std::size_t>(n_sym);
    if (total > caps.falsify_pairs) exhaustive = false;
  }

  bool have_ref = false;
  Word ref_left, ref_right;
  std::vector<Word> ref_column;
  auto probe = [&](const Word& le, const Word& re)
      -> std::optional<FalsificationWitness> {
    if (!full) {
      Word joint = le;
      joint.insert(joint.end(), b.begin(), b.end());
      joint.insert(joint.end(), re.begin(), re.end());
      if (!contains(space, joint)) return std::nullopt;
    }
    auto column = simulate_column(rule, b, d, w, le, re, horizon);
    if (!have_ref) {
      have_ref = true;
      ref_left = le;
      ref_right = re;
      ref_column = std::move(column);
      return std::nullopt;
    }
    for (int n = 1; n <= horizon; ++n) {
      const Word& a = ref_column[static_cast<std::size_t>(n - 1)];
      const Word& c = column[static_cast<std::size_t>(n - 1)];
      if (a != c)
        return FalsificationWitness{ref_left, ref_right, le, re, n, a, c};
    }
    return std::nullopt;
  };

  if (exhaustive) {
    std::size_t side = 1;
    for (int i = 0; i < pad; ++i) side *= static_cast<std::size_t>(n_sym);
    for (std::size_t lc = 0; lc < side; ++lc) {
      Word le = decode_word(lc, pad, n_sym);
      for (std::size_t rc = 0; rc < side; ++rc) {
        if (auto hit = probe(le, decode_word(rc, pad, n_sym))) return hit;
      }
    }
    return std::nullopt;
  }

  // Seeded sampling keeps runs reproducible; modulo draw keeps the symbol
  // stream identical across standard library implementations.
  std::mt19937_64 rng(caps.seed);
  auto draw = [&]() {
    Word u(static_cast<std::size_t>(pad));
    for (auto& x : u) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n_sym));
    return u;
  };
  const std::size_t samples =
      static_cast<std::size_t>(std::max(0, caps.falsify_samples));
  std::size_t tries = 0;
  const std::size_t max_tries = 64 * samples + 64;
  for (std::size_t k = 0; k < samples && tries < max_tries;) {
    ++tries;
    Word le = draw();
    Word re = draw();
    if (!full) {
      Word joint = le;
      joint.insert(joint.end(), b.begin(), b.end());
      joint.insert(joint.end(), re.begin(), re.end());
      if (!contains(space, joint)) continue;
    }
    ++k;
    if (auto hit = probe(le, re)) return hit;
  }
  return std::nullopt;
}

std::optional<BlockingCertificate> find_certificate(const LocalRule& rule,
                                                    const Word& b,
                                                    const CertifySearchOptions& opts,
                                                    const Caps& caps) {
  if (b.empty()) fail(ErrorKind::BadParam, "blocking word must be nonempty");
  const int len = static_cast<int>(b.size());
  const int wmin = std::max(rule.radius(), 1);
  if (len < wmin) return std::nullopt;

  Caps probe_caps = caps;
  probe_caps.falsify_samples = opts.falsify_samples;
  const int ladder_top = std::min<int>(opts.strip_cap, static_cast<int>(caps.strip_width));

  for (int w = wmin; w <= len; ++w) {
    std::vector<int> offsets(static_cast<std::size_t>(len - w + 1));
    for (int d = 0; d <= len - w; ++d) offsets[static_cast<std::size_t>(d)] = d;
    // Centered windows first; ties resolve to the leftmost.
    std::stable_sort(offsets.begin(), offsets.end(), [&](int a, int c) {
      return std::abs(2 * a + w - len) < std::abs(2 * c + w - len);
    });
    for (int d : offsets) {
      if (falsify_blocking(rule, b, d, w, opts.falsify_horizon, probe_caps))
        continue;  // provably not determined at this window
      int base = std::max(len, w);
      if ((base - w) % 2 != 0) base += 1;
      for (int width = base; width <= ladder_top; width += 2) {
        std::optional<BlockingCertificate> cert;
        try {
          cert = certify_blocking(rule, b, d, w, width, caps);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::CapExceeded) break;  // wider only grows
          throw;
        }
        if (cert) return cert;
      }
    }
  }
  return std::nullopt;
}

std::vector<BlockingCertificate> search_blocking_words(const LocalRule& rule,
                                                       int max_len,
                                                       const CertifySearchOptions& opts,
                                                       const Caps& caps) {
  if (max_len < 1) fail(ErrorKind::BadParam, "max_len must be positive");
  std::vector<BlockingCertificate> found;
  for (int len = 1; len <= max_len; ++len) {
    for (const Word& b : language_words(rule.domain(), len)) {
      if (auto cert = find_certificate(rule, b, opts, caps))
        found.push_back(std::move(*cert));
    }
  }
  return found;
}

EquicontinuityVerdict classify_equicontinuity(const LocalRule& rule, int max_len,
                                              const CertifySearchOptions& opts,
                                              const Caps& caps) {
  if (max_len < 1) fail(ErrorKind::BadParam, "max_len must be positive");
  EquicontinuityVerdict verdict;
  verdict.max_len_tested = max_len;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<BlockingCertificate> level;
    bool all = true;
    for (const Word& b : language_words(rule.domain(), len)) {
      if (auto cert = find_certificate(rule, b, opts, caps))
        level.push_back(std::move(*cert));
      else
        all = false;
    }
    if (all && len % 2 == 1) {
      // Every point now carries a blocking word of this length, so the whole
      // automaton is eventually periodic on cylinders.
      verdict.cls = EquicontinuityVerdict::Class::E1;
      verdict.word_length = len;
      verdict.period = 1;
      verdict.preperiod = 0;
      for (const auto& cert : level) {
        verdict.period = lcm_u64(verdict.period,
                                 static_cast<unsigned long long>(cert.period));
        verdict.preperiod = std::max(
            verdict.preperiod, static_cast<unsigned long long>(cert.preperiod));
      }
      verdict.evidence = std::move(level);
      return verdict;
    }
    for (auto& cert : level) verdict.evidence.push_back(std::move(cert));
  }
  if (!verdict.evidence.empty()) verdict.cls = EquicontinuityVerdict::Class::E2;
  return verdict;
}

PeriodicPointResult construct_f_periodic_point(const LocalRule& rule, const Word& v,
                                               const BlockingCertificate& cert,
                                               int max_period, const Caps& caps) {
  (void)caps;
  if (max_period < 1) fail(ErrorKind::BadParam, "max_period must be positive");
  const ShiftSpace& space = rule.domain();
  if (!is_transitive(space))
    fail(ErrorKind::NonTransitive, "domain must be transitive");
  if (!v.empty() && !contains(space, v))
    fail(ErrorKind::Inadmissible,
         "word " + word_text(space, v) + " is not in the domain language");
  const bool full = space.kind == ShiftSpace::Kind::Full;
  const int n_sym = static_cast<int>(space.alphabet.size());

  // Shortest generator b (glue) v (glue) whose periodic orbit is admissible.
  Word base;
  if (full) {
    base = cert.b;
    base.insert(base.end(), v.begin(), v.end());
  } else {
    const int glue_cap = 2 * space.vertex_count + 4;
    bool ok = false;
    for (int g = 0; g <= glue_cap && !ok; ++g) {
      for (int lg = 0; lg <= g && !ok; ++lg) {
        for (const Word& mid : all_words(n_sym, lg)) {
          for (const Word& tail : all_words(n_sym, g - lg)) {
            Word u = cert.b;
            u.insert(u.end(), mid.begin(), mid.end());
            u.insert(u.end(), v.begin(), v.end());
            u.insert(u.end(), tail.begin(), tail.end());
            if (admits_periodic(space, u)) {
              base = std::move(u);
              ok = true;
              break;
            }
          }
          if (ok) break;
        }
      }
    }
    if (!ok)
      fail(ErrorKind::Inadmissible,
           "no admissible periodic completion of the marked word");
  }

  const int budget = 4 * max_period + 64;
  OrbitSummary first_orbit;
  bool have_first = false;
  auto attempt = [&](const Word& gen) -> std::optional<PeriodicPointResult> {
    if (!full && !admits_periodic(space, gen)) return std::nullopt;
    OrbitSummary orbit;
    try {
      orbit = orbit_periodic(rule, PeriodicConfig{gen, 0}, budget);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::HorizonExceeded) return std::nullopt;
      throw;
    }
    if (!have_first) {
      have_first = true;
      first_orbit = orbit;
    }
    if (orbit.preperiod == 0 && orbit.period <= max_period)
      return PeriodicPointResult{PeriodicConfig{gen, 0}, orbit.period, gen};
    return std::nullopt;
  };

  if (auto hit = attempt(base)) return *hit;
  // A short tail often lands the orbit on its cycle without moving the
  // marked occurrences, which stay at the front.
  for (int pad_len = 1; pad_len <= 3; ++pad_len) {
    for (const Word& tail : all_words(n_sym, pad_len)) {
      Word gen = base;
      gen.insert(gen.end(), tail.begin(), tail.end());
      if (auto hit = attempt(gen)) return *hit;
    }
  }
  std::ostringstream msg;
  msg << "no strictly periodic point within period " << max_period;
  if (have_first)
    msg << "; generator " << word_text(space, base) << " reached preperiod "
        << first_orbit.preperiod << " and period " << first_orbit.period;
  fail(ErrorKind::HorizonExceeded, msg.str());
}

}  // namespace cesaro
