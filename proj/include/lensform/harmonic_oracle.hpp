#pragma once

#include "lensform/arith.hpp"
#include "lensform/errors.hpp"
#include "lensform/lens.hpp"
#include "lensform/matrix.hpp"

#include <cstdint>
#include <map>
#include <vector>

// Brute-force dimension of the G-invariant harmonic polynomials of degree k on
// R^{2n}, by exact linear algebra on the monomial basis z^a conj(z)^b.

namespace lensform {

struct ComplexMonomial {
  std::vector<int> a;  // exponents of z_j
  std::vector<int> b;  // exponents of conj(z_j)

  int degree() const {
    int d = 0;
    for (int x : a) d += x;
    for (int x : b) d += x;
    return d;
  }
  friend bool operator==(const ComplexMonomial&, const ComplexMonomial&) = default;
  friend auto operator<=>(const ComplexMonomial&, const ComplexMonomial&) = default;
};

/// The generator multiplies z^a conj(z)^b by exp(2 pi i sum (a_j - b_j) p_j / q).
inline bool is_invariant(const LensSpace& lens, const ComplexMonomial& m) {
  std::int64_t phase = 0;
  for (std::size_t j = 0; j < lens.n(); ++j) phase += (m.a[j] - m.b[j]) * lens.p()[j];
  return mod_floor(phase, lens.q()) == 0;
}

/// Invariant monomials of degree k, lexicographic on (a, b).
inline std::vector<ComplexMonomial> invariant_monomials(const LensSpace& lens, int k) {
  std::vector<ComplexMonomial> out;
  if (k < 0) return out;
  const std::size_t n = lens.n();
  std::vector<int> exps(2 * n, 0);
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == exps.size()) {
      exps[pos] = remaining;
      ComplexMonomial m{{exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(n)},
                        {exps.begin() + static_cast<std::ptrdiff_t>(n), exps.end()}};
      if (is_invariant(lens, m)) out.push_back(std::move(m));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  recurse(recurse, 0, k);
  return out;
}

struct InvariantSubspaceProblem {
  LensSpace lens;
  int degree;
  std::vector<ComplexMonomial> basis;   // degree k
  std::vector<ComplexMonomial> target;  // degree k - 2
};

inline constexpr std::size_t kOracleBasisLimit = 20000;

inline InvariantSubspaceProblem make_problem(const LensSpace& lens, int k) {
  // Roughly a 1/q share of all monomials is invariant; refuse before enumerating
  // far past the limit.
  const Integer all = binomial(k + 2 * static_cast<long long>(lens.n()) - 1, 2 * static_cast<long long>(lens.n()) - 1);
  if (all > Integer(kOracleBasisLimit) * lens.q() * 4)
    throw TooLarge((all / lens.q()).convert_to<std::size_t>());
  InvariantSubspaceProblem prob{lens, k, invariant_monomials(lens, k), invariant_monomials(lens, k - 2)};
  if (prob.basis.size() > kOracleBasisLimit) throw TooLarge(prob.basis.size());
  return prob;
}

/// Laplacian 4 * sum_j d^2/(dz_j dconj(z_j)) from degree k to degree k-2:
/// z^a conj(z)^b  ->  4 sum_j a_j b_j z^{a-e_j} conj(z)^{b-e_j}.
inline Matrix<std::int64_t> laplacian_matrix(const InvariantSubspaceProblem& prob) {
  std::map<ComplexMonomial, std::size_t> row_of;
  for (std::size_t i = 0; i < prob.target.size(); ++i) row_of.emplace(prob.target[i], i);
  Matrix<std::int64_t> lap(prob.target.size(), prob.basis.size());
  for (std::size_t col = 0; col < prob.basis.size(); ++col) {
    const ComplexMonomial& m = prob.basis[col];
    for (std::size_t j = 0; j < m.a.size(); ++j) {
      if (m.a[j] == 0 || m.b[j] == 0) continue;
      ComplexMonomial image = m;
      --image.a[j];
      --image.b[j];
      const auto it = row_of.find(image);
      if (it == row_of.end()) throw Error("laplacian image left the invariant subspace");
      lap(it->second, col) += 4 * static_cast<std::int64_t>(m.a[j]) * m.b[j];
    }
  }
  return lap;
}

/// Rank over Z/p for the prime p = 2^61 - 1. Never exceeds the rational rank.
inline std::size_t rank_mod_prime(const Matrix<std::int64_t>& m) {
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  constexpr u64 P = (u64{1} << 61) - 1;
  auto mul = [](u64 x, u64 y) {
    const u128 z = static_cast<u128>(x) * y;
    u64 r = static_cast<u64>(z & P) + static_cast<u64>(z >> 61);
    return r >= P ? r - P : r;
  };
  auto power = [&](u64 base, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  };
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<u64> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t v = m(i, j) % static_cast<std::int64_t>(P);
      a[i * cols + j] = v < 0 ? static_cast<u64>(v + static_cast<std::int64_t>(P)) : static_cast<u64>(v);
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    const u64 inv = power(a[rank * cols + c], P - 2);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const u64 f = mul(a[i * cols + c], inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const u64 sub = mul(f, a[rank * cols + j]);
        u64& x = a[i * cols + j];
        x = x >= sub ? x - sub : x + P - sub;
      }
    }
    ++rank;
  }
  return rank;
}

/// Exact rank by fraction-free (Bareiss) elimination.
inline std::size_t rank_exact(const Matrix<std::int64_t>& m) {
  IntMatrix a = m.cast<Integer>();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) detail::swap_rows(a, piv, rank);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a(i, j) = (a(rank, c) * a(i, j) - a(i, c) * a(rank, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  return rank;
}

/// Rank over Q. A modular rank equal to min(rows, cols) is already exact
/// (some maximal minor is nonzero mod p, hence nonzero); otherwise falls back
/// to exact elimination.
inline std::size_t rational_rank(const Matrix<std::int64_t>& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (rank_mod_prime(m) == full) return full;
  return rank_exact(m);
}

struct OracleResult {
  std::size_t basis_size;
  std::size_t target_size;
  std::size_t rank;
  std::size_t dimension;  // basis_size - rank
};

inline OracleResult solve_oracle(const LensSpace& lens, int k) {
  const InvariantSubspaceProblem prob = make_problem(lens, k);
  const std::size_t rank = rational_rank(laplacian_matrix(prob));
  return {prob.basis.size(), prob.target.size(), rank, prob.basis.size() - rank};
}

inline std::int64_t invariant_harmonic_dim(const LensSpace& lens, int k) {
  return static_cast<std::int64_t>(solve_oracle(lens, k).dimension);
}

}  // namespace lensform
