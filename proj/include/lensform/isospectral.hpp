#pragma once

#include "lensform/counting.hpp"
#include "lensform/lattice.hpp"
#include "lensform/lens.hpp"
#include "lensform/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lensform {

enum class Verdict { Isospectral, NotIsospectral, Trivial };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Isospectral: return "Isospectral";
    case Verdict::NotIsospectral: return "NotIsospectral";
    case Verdict::Trivial: return "Trivial";
  }
  return "?";
}

/// Shell counts N_L(k) for k = 0..q(n+1)-1. Two lattices with the same q and n
/// agree on every shell iff these vectors agree: the ball counts are degree-n
/// quasi-polynomials of period dividing q, fixed by n+1 samples per class.
inline std::vector<std::int64_t> shell_signature(const LensSpace& lens) {
  return shell_counts(lens, determination_bound(lens.q(), lens.n()) - 1);
}

struct IsospectralityReport {
  Verdict verdict = Verdict::Trivial;
  std::optional<std::int64_t> witness_k;            // NotIsospectral only
  std::pair<std::int64_t, std::int64_t> witness_values{0, 0};
  std::optional<std::pair<QuasiPolynomial, QuasiPolynomial>> certificate;  // Isospectral only
  bool stanley_match = false;
};

/// Multisets of l(u_i) and of heights r_i coincide.
inline bool stanley_certificate(const LensSpace& a, const LensSpace& b) {
  const StanleyData sa = stanley_data(build_lattice(a));
  const StanleyData sb = stanley_data(build_lattice(b));
  auto sorted_l = [](const StanleyData& sd) {
    auto l = sd.dual.l;
    std::sort(l.begin(), l.end());
    return l;
  };
  auto sorted_r = [](const StanleyData& sd) {
    std::vector<Integer> r;
    for (const auto& pt : sd.points) r.push_back(pt.height);
    std::sort(r.begin(), r.end());
    return r;
  };
  return sorted_l(sa) == sorted_l(sb) && sorted_r(sa) == sorted_r(sb);
}

/// Different q or n is reported as Trivial: the Weyl volume term already
/// separates them (volume of the quotient is vol(S^{2n-1}) / q).
inline IsospectralityReport isospectral_test(const LensSpace& a, const LensSpace& b) {
  IsospectralityReport rep;
  rep.stanley_match = stanley_certificate(a, b);
  if (a.q() != b.q() || a.n() != b.n()) return rep;

  const auto sa = shell_signature(a);
  const auto sb = shell_signature(b);
  for (std::size_t k = 0; k < sa.size(); ++k) {
    if (sa[k] != sb[k]) {
      rep.verdict = Verdict::NotIsospectral;
      rep.witness_k = static_cast<std::int64_t>(k);
      rep.witness_values = {sa[k], sb[k]};
      return rep;
    }
  }
  rep.verdict = Verdict::Isospectral;
  rep.certificate.emplace(interpolate_quasipoly(build_lattice(a)), interpolate_quasipoly(build_lattice(b)));
  return rep;
}

/// Sorted parameter lists that are their own canonical form, i.e. one
/// representative per isometry class of L(q; p1..pn).
inline std::vector<LensSpace> canonical_representatives(std::int64_t q, std::size_t n) {
  std::vector<std::int64_t> classes;
  if (q == 1) {
    classes.push_back(0);
  } else {
    for (std::int64_t c = 1; 2 * c <= q; ++c)
      if (std::gcd(c, q) == 1) classes.push_back(c);
  }
  std::vector<LensSpace> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<std::int64_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = classes[idx[i]];
    LensSpace lens = make_lens(q, p);
    if (canonical_form(lens) == lens) out.push_back(std::move(lens));
    // next nondecreasing index tuple
    std::size_t i = n;
    while (i > 0 && idx[i - 1] + 1 == classes.size()) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[i - 1];
  }
  return out;
}

struct SearchOptions {
  unsigned threads = thread_count();
  std::size_t max_representatives = 0;  // 0 = no limit
};

struct IsospectralClass {
  std::vector<LensSpace> members;       // canonical forms, sorted
  std::vector<std::int64_t> shell_vector;
};

/// Buckets the isometry classes of L(q; p1..pn) by shell signature and keeps
/// buckets with at least two members.
inline std::vector<IsospectralClass> search_pairs(std::int64_t q, std::size_t n, const SearchOptions& opts = {}) {
  const std::vector<LensSpace> reps = canonical_representatives(q, n);
  if (opts.max_representatives && reps.size() > opts.max_representatives)
    throw TooLarge(reps.size());
  const auto signatures =
      parallel_map(reps.size(), [&](std::size_t i) { return shell_signature(reps[i]); }, opts.threads);

  std::map<std::vector<std::int64_t>, std::vector<LensSpace>> buckets;
  for (std::size_t i = 0; i < reps.size(); ++i) buckets[signatures[i]].push_back(reps[i]);

  std::vector<IsospectralClass> out;
  for (auto& [sig, members] : buckets) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    out.push_back({std::move(members), sig});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.members.front() < y.members.front(); });
  return out;
}

}  // namespace lensform
