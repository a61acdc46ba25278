#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cphi/collatz.hpp"
#include "cphi/identities.hpp"
#include "cphi/periodic.hpp"
#include "cphi/phi.hpp"
#include "cphi/pseudoperiod.hpp"
#include "cphi/window.hpp"

// Reproducible property suites. Each suite runs its exhaustive part first and
// then `trials` seeded random instances, recording counterexamples verbatim.

namespace cphi {

struct VerifyReport {
  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;  // first few only

  bool passed() const noexcept { return failures == 0; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (counterexamples.size() < 20) counterexamples.push_back(describe());
  }
};

using Rng = std::mt19937_64;

inline Natural random_bits(Rng& rng, std::size_t bits) {
  Natural x = 0;
  for (std::size_t i = 0; i < bits; ++i) {
    if (rng() & 1) mpz_setbit(x.get_mpz_t(), i);
  }
  return x;
}

inline std::size_t random_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// q = a + 2^k bbar_{v,inf} with k <= max_k and 1 <= v <= max_v.
inline OddRational random_rational(Rng& rng, std::size_t max_k, std::size_t max_v) {
  PeriodicDigits p;
  p.preperiod.resize(random_index(rng, 0, max_k));
  p.period.resize(random_index(rng, 1, max_v));
  for (auto& b : p.preperiod) b = rng() & 1;
  for (auto& b : p.period) b = rng() & 1;
  return periodic_to_rational(p);
}

inline std::string window_str(const Natural& x, std::size_t k) {
  return "x=" + x.get_str() + " K=" + std::to_string(k);
}

constexpr std::size_t kExhaustiveDigits = 14;

/// Phi(sigma(x)) == T(Phi(x)) mod 2^(K-1).
inline VerifyReport verify_conjugacy(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep{"conjugacy", 0, 0, {}};
  auto check = [&](const Natural& x, std::size_t k) {
    const DigitWindow w(x, k);
    rep.record(phi_window(sigma_window(w)) == t_map_window(phi_window(w)), [&] { return window_str(x, k); });
  };
  for (std::size_t k = 1; k <= kExhaustiveDigits; ++k) {
    for (unsigned long x = 0; x < (1UL << k); ++x) check(Natural(x), k);
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t k = random_index(rng, kExhaustiveDigits + 1, 512);
    check(random_bits(rng, k), k);
  }
  return rep;
}

/// Phi permutes residues mod 2^n, and that permutation inverts the one
/// induced by parity vectors (T iteration), an oracle independent of the
/// Bernstein sum.
inline VerifyReport verify_permutation(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep{"permutation", 0, 0, {}};
  for (std::size_t n = 1; n <= kExhaustiveDigits; ++n) {
    const unsigned long size = 1UL << n;
    std::vector<bool> hit(size, false);
    for (unsigned long x = 0; x < size; ++x) {
      const DigitWindow image = phi_window(DigitWindow(x, n));
      const unsigned long y = image.value().get_ui();
      rep.record(!hit[y], [&] { return "collision at " + window_str(Natural(x), n); });
      hit[y] = true;
      const DigitWindow parity = parity_vector(OddRational(Natural(x)), n).window;
      rep.record(phi_window(parity) == DigitWindow(x, n),
                 [&] { return "Phi(parity_vector(x)) != x for " + window_str(Natural(x), n); });
    }
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = random_index(rng, kExhaustiveDigits + 1, 256);
    const Natural x = random_bits(rng, n);
    const DigitWindow parity = parity_vector(OddRational(x), n).window;
    rep.record(phi_window(parity) == DigitWindow(x, n),
               [&] { return "Phi(parity_vector(x)) != x for " + window_str(x, n); });
  }
  return rep;
}

inline VerifyReport verify_pseudohomo(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep{"pseudohomo", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t k = random_index(rng, 0, 24);
    const Natural a = random_bits(rng, k);
    const OddRational x = random_rational(rng, 12, 6);
    rep.record(check_pseudohomo(a, k, x),
               [&] { return "a=" + a.get_str() + " k=" + std::to_string(k) + " x=" + x.str(); });
  }
  return rep;
}

inline VerifyReport verify_lemma3power(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep{"lemma3power", 0, 0, {}};
  for (std::size_t n = 1; n <= 64; ++n) rep.record(check_3power(n), [&] { return "n=" + std::to_string(n); });
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = random_index(rng, 1, 64);
    rep.record(check_3power(n), [&] { return "n=" + std::to_string(n); });
  }
  return rep;
}

inline VerifyReport verify_truncation(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep{"truncation", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t k = random_index(rng, 0, 10);
    const std::size_t v = random_index(rng, 1, 6);
    const std::size_t t = random_index(rng, 1, 12);
    const Natural a = random_bits(rng, k);
    const Natural b = random_bits(rng, v);
    rep.record(check_truncation_identity(a, k, b, v, t), [&] {
      std::ostringstream os;
      os << "a=" << a << " k=" << k << " b=" << b << " v=" << v << " t=" << t;
      return os.str();
    });
  }
  return rep;
}

// Small preperiods and periods keep the period of Phi(q), and with it the
// shifted truncation length k + (t + p 2^H) v, to a few hundred digits.
inline VerifyReport verify_tail_congruence(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep{"tailcongruence", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const OddRational q = random_rational(rng, 6, 4);
    const std::size_t h = random_index(rng, 1, 4);
    const std::size_t t = tail_shape(q).min_t() + random_index(rng, 0, 3);
    rep.record(check_tail_congruence(q, t, h), [&] {
      return "q=" + q.str() + " t=" + std::to_string(t) + " H=" + std::to_string(h);
    });
  }
  return rep;
}

/// One eventually-periodic check of L_H R_n Phi L_n(q): the sequence over
/// n in [0, start + 4 P] must show a period dividing P = p 2^(H-2) v.
inline std::optional<std::string> tail_period_counterexample(const OddRational& q, std::size_t h) {
  const TailPeriodBound bound = tail_period_bound(q, h);
  const auto values = tail_sequence(q, h, 0, bound.start + 4 * bound.period);
  const auto found = detect_period(values, bound.period);
  if (found && bound.period % found->period == 0 && found->offset <= bound.start) return std::nullopt;
  std::ostringstream os;
  os << "q=" << q.str() << " H=" << h << " predicted period " << bound.period << " from n=" << bound.start;
  if (found) {
    os << ", observed period " << found->period << " from n=" << found->offset;
  } else {
    os << ", no period observed";
  }
  return os.str();
}

inline const std::vector<OddRational>& tail_period_corpus() {
  static const std::vector<OddRational> corpus{OddRational(-1), OddRational(1, 3), OddRational(7, 3),
                                               OddRational(5, 7)};
  return corpus;
}

inline VerifyReport verify_tail_period(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep{"tailperiod", 0, 0, {}};
  for (const auto& q : tail_period_corpus()) {
    for (std::size_t h : {3, 4, 5}) {
      const auto bad = tail_period_counterexample(q, h);
      rep.record(!bad, [&] { return *bad; });
    }
  }
  // Random instances are costlier (sequences run to several periods), so
  // only a fraction of `trials` is drawn.
  Rng rng(seed);
  for (std::size_t i = 0; i < trials / 20; ++i) {
    const OddRational q = random_rational(rng, 4, 3);
    const std::size_t h = random_index(rng, 3, 4);
    const auto bad = tail_period_counterexample(q, h);
    rep.record(!bad, [&] { return *bad; });
  }
  return rep;
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"conjugacy", "permutation", "pseudohomo", "lemma3power",
                                              "truncation", "tailcongruence", "tailperiod"};
  return names;
}

inline std::optional<VerifyReport> run_verify_suite(const std::string& name, std::uint64_t seed,
                                                    std::size_t trials) {
  if (name == "conjugacy") return verify_conjugacy(seed, trials);
  if (name == "permutation") return verify_permutation(seed, trials);
  if (name == "pseudohomo") return verify_pseudohomo(seed, trials);
  if (name == "lemma3power") return verify_lemma3power(seed, trials);
  if (name == "truncation") return verify_truncation(seed, trials);
  if (name == "tailcongruence") return verify_tail_congruence(seed, trials);
  if (name == "tailperiod") return verify_tail_period(seed, trials);
  return std::nullopt;
}

}  // namespace cphi
