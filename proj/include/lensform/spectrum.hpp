#pragma once

#include "lensform/arith.hpp"
#include "lensform/counting.hpp"
#include "lensform/lattice.hpp"
#include "lensform/lens.hpp"

#include <cstdint>
#include <vector>

namespace lensform {

/// dim P_m(R^{n_vars}) = C(n_vars + m - 1, n_vars - 1).
inline Integer dim_homogeneous(long long n_vars, long long m) {
  if (m < 0) return 0;
  return binomial(n_vars + m - 1, n_vars - 1);
}

/// dim H_m(R^{n_vars}) = dim P_m - dim P_{m-2}.
inline Integer dim_harmonic(long long n_vars, long long m) {
  return dim_homogeneous(n_vars, m) - dim_homogeneous(n_vars, m - 2);
}

/// Eigenvalue of -Laplacian on S^{2n-1} carried by degree-k harmonics.
inline std::int64_t eigenvalue(std::size_t n, std::int64_t k) {
  return k * (k + 2 * static_cast<std::int64_t>(n) - 2);
}

/// f(k) for k = 0..k_max:  sum_{r=0}^{k/2} C(r+n-2, n-2) N_L(k-2r).
inline std::vector<std::int64_t> multiplicities(const LensSpace& lens, std::int64_t k_max) {
  if (!lens.spectral()) throw DimensionTooSmall();
  const auto n = static_cast<long long>(lens.n());
  const std::vector<std::int64_t> shells = shell_counts(lens, k_max);
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    Integer total = 0;
    for (std::int64_t r = 0; 2 * r <= k; ++r) total += binomial(r + n - 2, n - 2) * shells[static_cast<std::size_t>(k - 2 * r)];
    out.push_back(total.convert_to<std::int64_t>());
  }
  return out;
}

inline std::int64_t multiplicity(const LensSpace& lens, std::int64_t k) { return multiplicities(lens, k).back(); }

struct SpectrumEntry {
  std::int64_t k;
  std::int64_t lambda;
  std::int64_t mult;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SpectrumTable {
  LensSpace lens;
  std::vector<SpectrumEntry> entries;
};

inline SpectrumTable spectrum_table(const LensSpace& lens, std::int64_t k_max) {
  SpectrumTable table{lens, {}};
  const std::vector<std::int64_t> mult = multiplicities(lens, k_max);
  for (std::int64_t k = 0; k <= k_max; ++k)
    table.entries.push_back({k, eigenvalue(lens.n(), k), mult[static_cast<std::size_t>(k)]});
  return table;
}

}  // namespace lensform
