#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cphi/farpoint.hpp"
#include "cphi/identities.hpp"
#include "cphi/parallel.hpp"
#include "cphi/periodic.hpp"
#include "cphi/phi.hpp"

namespace cphi {

struct PseudoperiodReport {
  std::size_t n = 0;
  Prefix prefix;
  FarPointOutcome farpoint;
  std::optional<Natural> predicted_period;  // only for finite farPoints
  std::size_t confirmed_repetitions = 0;
  std::vector<std::size_t> violations;      // shifted indices whose value differs
};

/// farPoints of one family for every n in [n_from, n_to], computed in parallel.
inline std::map<std::size_t, FarPointOutcome> family_farpoints(Family family, std::size_t n_from, std::size_t n_to,
                                                              const SearchLimits& limits,
                                                              std::size_t workers = default_workers()) {
  std::map<std::size_t, FarPointOutcome> out;
  if (n_from > n_to) return out;
  const std::size_t count = n_to - n_from + 1;
  auto results = parallel_map<FarPointOutcome>(count, workers, [&](std::size_t i) {
    const Prefix p = family_prefix(family, n_from + i);
    return farpoint(p.x, p.k, limits);
  });
  for (std::size_t i = 0; i < count; ++i) out.emplace(n_from + i, results[i]);
  return out;
}

/// Attaches predicted periods and checks them against the other rows.
/// A finite value f at n is confirmed at n+h, n+2h, ... while those indices
/// are present; any shifted row with a different outcome is a violation.
inline std::vector<PseudoperiodReport> build_reports(Family family,
                                                     const std::map<std::size_t, FarPointOutcome>& rows) {
  std::vector<PseudoperiodReport> reports;
  reports.reserve(rows.size());
  for (const auto& [n, outcome] : rows) {
    PseudoperiodReport rep{n, family_prefix(family, n), outcome, std::nullopt, 0, {}};
    if (outcome.finite()) {
      const Natural h = predicted_period(family, outcome.r);
      rep.predicted_period = h;
      if (h.fits_ulong_p()) {
        const std::size_t step = h.get_ui();
        for (std::size_t m = n + step; m > n; m += step) {
          auto it = rows.find(m);
          if (it == rows.end()) break;
          if (it->second.finite() && it->second.r == outcome.r) {
            ++rep.confirmed_repetitions;
          } else {
            rep.violations.push_back(m);
          }
        }
      }
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

inline std::vector<PseudoperiodReport> scan_family(Family family, std::size_t n_from, std::size_t n_to,
                                                   const SearchLimits& limits = {},
                                                   std::size_t workers = default_workers()) {
  return build_reports(family, family_farpoints(family, n_from, n_to, limits, workers));
}

/// L_H R_n Phi L_n(q) for n in [n_from, n_to]: the H digits of Phi of the
/// n-digit truncation that follow position n.
inline std::vector<Natural> tail_sequence(const OddRational& q, std::size_t h, std::size_t n_from,
                                          std::size_t n_to) {
  if (h < 3) throw domain_error("tail_sequence: H must be at least 3");
  std::vector<Natural> values;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    const OddRational image = phi_natural(left_part(q, n));
    Natural w = rational_window(image, n + h).value();
    mpz_fdiv_q_2exp(w.get_mpz_t(), w.get_mpz_t(), n);
    values.push_back(std::move(w));
  }
  return values;
}

/// Where the tail sequence is guaranteed periodic and with which period:
/// from n = k + t v (t the least positive with k + t v >= u) with period
/// p 2^(H-2) v.
struct TailPeriodBound {
  std::size_t start = 0;
  std::size_t period = 0;
};

inline TailPeriodBound tail_period_bound(const OddRational& q, std::size_t h) {
  if (h < 3) throw domain_error("tail_period_bound: H must be at least 3");
  const TailShape s = tail_shape(q);
  const std::size_t t = std::max<std::size_t>(1, s.min_t());
  return {s.k + t * s.v, s.p * (std::size_t{1} << (h - 2)) * s.v};
}

struct DetectedPeriod {
  std::size_t period = 0;
  std::size_t offset = 0;

  friend bool operator==(const DetectedPeriod&, const DetectedPeriod&) = default;
};

/// Smallest h <= max_period for which values[i+h] == values[i] holds for all
/// i >= offset, where the periodic tail starting at offset spans at least two
/// full periods and at least half the list. The half-list requirement keeps a
/// short coincidental repeat at the very end from being reported.
template <typename T>
std::optional<DetectedPeriod> detect_period(const std::vector<T>& values, std::size_t max_period) {
  const std::size_t len = values.size();
  for (std::size_t h = 1; h <= max_period && 2 * h <= len; ++h) {
    // Walk back from the end while the shift-by-h relation holds.
    std::size_t offset = len - h;
    while (offset > 0 && values[offset - 1] == values[offset - 1 + h]) --offset;
    const std::size_t tail = len - offset;
    if (tail >= 2 * h && 2 * tail >= len) return DetectedPeriod{h, offset};
  }
  return std::nullopt;
}

}  // namespace cphi
