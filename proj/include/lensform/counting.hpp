#pragma once

#include "lensform/arith.hpp"
#include "lensform/errors.hpp"
#include "lensform/lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lensform {

// ---------------------------------------------------------------------------
// l1 shells and balls of the congruence lattice
// ---------------------------------------------------------------------------

/// N_L(s) for s = 0..k_max: lattice vectors of l1-norm exactly s.
///
/// Runs a residue dynamic program over coordinates: counts[s][r] is the number
/// of partial vectors with norm s and sum a_j p_j == r (mod q). A coordinate
/// contributes x^{|t|} y^{t p}; the t > 0 and t < 0 tails are accumulated with
/// running sums, so each coordinate costs O(k_max * q).
inline std::vector<std::int64_t> shell_counts(const LensSpace& lens, std::int64_t k_max) {
  if (k_max < 0) return {};
  const std::int64_t q = lens.q();
  const auto K = static_cast<std::size_t>(k_max);
  const auto Q = static_cast<std::size_t>(q);
  std::vector<std::int64_t> cur((K + 1) * Q, 0), next, plus, minus;
  cur[0] = 1;
  for (const std::int64_t p : lens.p()) {
    next = cur;
    plus.assign((K + 1) * Q, 0);
    minus.assign((K + 1) * Q, 0);
    for (std::size_t s = 1; s <= K; ++s) {
      for (std::size_t r = 0; r < Q; ++r) {
        const auto rp = static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(r) - p, q));
        const auto rm = static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(r) + p, q));
        plus[s * Q + r] = cur[(s - 1) * Q + rp] + plus[(s - 1) * Q + rp];
        minus[s * Q + r] = cur[(s - 1) * Q + rm] + minus[(s - 1) * Q + rm];
        next[s * Q + r] += plus[s * Q + r] + minus[s * Q + r];
      }
    }
    cur.swap(next);
  }
  std::vector<std::int64_t> out(K + 1);
  for (std::size_t s = 0; s <= K; ++s) out[s] = cur[s * Q];
  return out;
}

inline std::vector<std::int64_t> shell_counts(const CongruenceLattice& lat, std::int64_t k_max) {
  return shell_counts(lat.lens(), k_max);
}

inline std::int64_t shell_count(const CongruenceLattice& lat, std::int64_t s) {
  if (s < 0) return 0;
  return shell_counts(lat, s).back();
}

/// I(k) = #{ a in L : |a|_1 <= k } for k = 0..k_max.
inline std::vector<std::int64_t> ball_counts(const CongruenceLattice& lat, std::int64_t k_max) {
  std::vector<std::int64_t> out = shell_counts(lat, k_max);
  for (std::size_t k = 1; k < out.size(); ++k) out[k] += out[k - 1];
  return out;
}

inline std::int64_t ball_count(const CongruenceLattice& lat, std::int64_t k) {
  if (k < 0) return 0;
  return ball_counts(lat, k).back();
}

/// Norm histogram of the lattice points in the l1-ball of radius k, found by
/// walking integer combinations of the (upper triangular) basis from the last
/// coordinate up, pruning on the remaining l1 budget.
inline std::vector<std::int64_t> norm_histogram_by_basis(const CongruenceLattice& lat, std::int64_t k) {
  const std::size_t n = lat.n();
  Matrix<std::int64_t> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = lat.basis()(i, j).convert_to<std::int64_t>();

  std::vector<std::int64_t> hist(static_cast<std::size_t>(std::max<std::int64_t>(k, 0)) + 1, 0);
  if (k < 0) return hist;
  std::vector<std::int64_t> offset(n, 0);  // contributions of already chosen c_j to each row

  auto floor_div = [](std::int64_t x, std::int64_t d) {
    std::int64_t r = x / d;
    if ((x % d != 0) && ((x < 0) != (d < 0))) --r;
    return r;
  };
  auto recurse = [&](auto&& self, std::size_t remaining, std::int64_t used) -> void {
    if (remaining == 0) {
      ++hist[static_cast<std::size_t>(used)];
      return;
    }
    const std::size_t i = remaining - 1;
    const std::int64_t budget = k - used;
    const std::int64_t d = a(i, i);
    const std::int64_t lo = -floor_div(budget + offset[i], d);  // ceil((-budget - off)/d)
    const std::int64_t hi = floor_div(budget - offset[i], d);
    for (std::int64_t c = lo; c <= hi; ++c) {
      const std::int64_t value = d * c + offset[i];
      for (std::size_t r = 0; r < i; ++r) offset[r] += a(r, i) * c;
      self(self, i, used + (value < 0 ? -value : value));
      for (std::size_t r = 0; r < i; ++r) offset[r] -= a(r, i) * c;
    }
  };
  recurse(recurse, n, 0);
  return hist;
}

inline std::int64_t ball_count_by_basis(const CongruenceLattice& lat, std::int64_t k) {
  std::int64_t total = 0;
  for (const auto v : norm_histogram_by_basis(lat, k)) total += v;
  return total;
}

// ---------------------------------------------------------------------------
// Polynomial and quasi-polynomial fits
// ---------------------------------------------------------------------------

/// Coefficients (constant first) of the unique polynomial of degree < xs.size()
/// through the given points, by Newton divided differences.
inline std::vector<Rational> fit_polynomial(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  // Horner-style expansion of the Newton form.
  std::vector<Rational> coeffs(m, Rational(0));
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t i = m - 1 - s;
    // coeffs <- coeffs * (x - xs[i]) + dd[i]
    for (std::size_t d = m - 1; d > 0; --d) coeffs[d] = coeffs[d - 1] - xs[i] * coeffs[d];
    coeffs[0] = -xs[i] * coeffs[0] + dd[i];
  }
  return coeffs;
}

inline Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// sum_i c[k mod T][i] k^i, exact.
class QuasiPolynomial {
 public:
  QuasiPolynomial(std::size_t degree, std::vector<std::vector<Rational>> coeffs)
      : degree_(degree), coeffs_(std::move(coeffs)) {}

  std::size_t degree() const noexcept { return degree_; }
  std::int64_t period() const noexcept { return static_cast<std::int64_t>(coeffs_.size()); }
  const std::vector<std::vector<Rational>>& coeffs() const noexcept { return coeffs_; }
  const std::vector<Rational>& constituent(std::int64_t residue) const {
    return coeffs_[static_cast<std::size_t>(mod_floor(residue, period()))];
  }

  Rational operator()(std::int64_t k) const { return evaluate_polynomial(constituent(k), Rational(k)); }

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  std::size_t degree_;
  std::vector<std::vector<Rational>> coeffs_;
};

/// Fits a degree-`degree` quasi-polynomial of the given period to values[k],
/// k = 0..values.size()-1. Class j is fitted through k = j, j+T, ..., j+degree*T;
/// every further sample present in `values` is checked against the fit.
inline QuasiPolynomial fit_quasipolynomial(const std::vector<std::int64_t>& values, std::int64_t period,
                                           std::size_t degree) {
  const auto T = static_cast<std::size_t>(period);
  if (values.size() < T * (degree + 1)) throw Error("not enough samples for quasi-polynomial fit");
  std::vector<std::vector<Rational>> coeffs(T);
  for (std::size_t j = 0; j < T; ++j) {
    std::vector<Rational> xs, ys;
    for (std::size_t m = 0; m <= degree; ++m) {
      xs.emplace_back(static_cast<std::int64_t>(j + m * T));
      ys.emplace_back(values[j + m * T]);
    }
    coeffs[j] = fit_polynomial(xs, ys);
    for (std::size_t k = j + (degree + 1) * T; k < values.size(); k += T)
      if (evaluate_polynomial(coeffs[j], Rational(static_cast<std::int64_t>(k))) != values[k])
        throw InterpolationMismatch(static_cast<long long>(k));
  }
  return QuasiPolynomial(degree, std::move(coeffs));
}

/// Number of samples k = 0..bound-1 that determine a degree-n quasi-polynomial
/// of period dividing q: n+1 per residue class.
inline std::int64_t determination_bound(std::int64_t q, std::size_t n) {
  return q * static_cast<std::int64_t>(n + 1);
}

/// Ehrhart quasi-polynomial of the l1-ball count I(k), period q, fitted through
/// the determining samples and checked on two more per residue class.
inline QuasiPolynomial interpolate_quasipoly(const CongruenceLattice& lat) {
  const std::int64_t q = lat.q();
  const std::size_t n = lat.n();
  return fit_quasipolynomial(ball_counts(lat, q * static_cast<std::int64_t>(n + 3) - 1), q, n);
}

// ---------------------------------------------------------------------------
// Stanley series of the dual simplex
// ---------------------------------------------------------------------------

/// numerator(x) / prod_e (1 - x^e).
struct RationalSeries {
  std::vector<Integer> numerator;  // coefficient of x^i at index i
  std::vector<std::int64_t> denominator_exponents;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

/// (sum_i x^{r_i}) / prod_{j=0}^{n} (1 - x^{l_j}) with l_0 = 1 for the apex.
inline RationalSeries paper_series(const StanleyData& sd) {
  RationalSeries rs;
  for (const auto& pt : sd.points) {
    const auto h = pt.height.convert_to<std::size_t>();
    if (rs.numerator.size() <= h) rs.numerator.resize(h + 1, Integer(0));
    rs.numerator[h] += 1;
  }
  rs.denominator_exponents.push_back(1);
  rs.denominator_exponents.insert(rs.denominator_exponents.end(), sd.dual.l.begin(), sd.dual.l.end());
  return rs;
}

/// Power-series coefficients of x^0..x^k_max.
inline std::vector<Integer> expand_series(const RationalSeries& rs, std::int64_t k_max) {
  const auto len = static_cast<std::size_t>(k_max + 1);
  std::vector<Integer> c(len, Integer(0));
  for (std::size_t i = 0; i < rs.numerator.size() && i < len; ++i) c[i] = rs.numerator[i];
  for (const std::int64_t e : rs.denominator_exponents) {
    const auto step = static_cast<std::size_t>(e);
    for (std::size_t k = step; k < len; ++k) c[k] += c[k - step];
  }
  return c;
}

/// #(k * conv{0, u_1..u_n} ∩ Z^n) for k = 0..k_max, where u_i are the dual
/// vectors of `basis`. A point x = sum lambda_i u_i has lambda = basis^T x, so
/// the scan runs over integer lambda >= 0 with sum <= k_max and keeps those
/// whose image sum lambda_i u_i is integral.
inline std::vector<std::int64_t> simplex_counts_of(const IntMatrix& basis, std::int64_t k_max) {
  const std::size_t n = basis.rows();
  const DualBasis dual = dual_basis_of(basis);
  const Integer det = abs(determinant(basis));
  const std::int64_t D = det.convert_to<std::int64_t>();
  // D * u_i is integral.
  Matrix<std::int64_t> scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = dual.u[i][j] * D;
      scaled(i, j) = mod_floor(boost::multiprecision::numerator(v).convert_to<std::int64_t>(), D);
    }

  std::vector<std::int64_t> hits(static_cast<std::size_t>(k_max + 1), 0);
  std::vector<std::int64_t> acc(n, 0);
  auto recurse = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
    if (i == n) {
      for (const auto v : acc)
        if (v != 0) return;
      ++hits[static_cast<std::size_t>(used)];
      return;
    }
    const std::vector<std::int64_t> saved = acc;
    for (std::int64_t lam = 0; used + lam <= k_max; ++lam) {
      self(self, i + 1, used + lam);
      for (std::size_t j = 0; j < n; ++j) acc[j] = (acc[j] + scaled(i, j)) % D;
    }
    acc = saved;
  };
  recurse(recurse, 0, 0);
  for (std::size_t k = 1; k < hits.size(); ++k) hits[k] += hits[k - 1];
  return hits;
}

inline std::vector<std::int64_t> simplex_counts(const CongruenceLattice& lat, std::int64_t k_max) {
  return simplex_counts_of(lat.basis(), k_max);
}

inline std::int64_t simplex_count(const CongruenceLattice& lat, std::int64_t k) {
  return simplex_counts(lat, k).back();
}

/// Factual comparison of the Stanley series against the l1-ball count and the
/// dual-simplex count.
struct SeriesReport {
  std::int64_t k_max = 0;
  std::vector<Integer> series;
  std::vector<std::int64_t> ball;
  std::vector<std::int64_t> simplex;
  std::optional<std::int64_t> first_ball_mismatch;
  std::optional<std::int64_t> first_simplex_mismatch;
};

inline SeriesReport verify_series(const CongruenceLattice& lat, std::int64_t k_max) {
  if (k_max < 2 * static_cast<std::int64_t>(lat.n())) throw Error("verify_series needs k_max >= 2n");
  SeriesReport rep;
  rep.k_max = k_max;
  rep.series = expand_series(paper_series(stanley_data(lat)), k_max);
  rep.ball = ball_counts(lat, k_max);
  rep.simplex = simplex_counts(lat, k_max);
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (!rep.first_ball_mismatch && rep.series[i] != rep.ball[i]) rep.first_ball_mismatch = k;
    if (!rep.first_simplex_mismatch && rep.series[i] != rep.simplex[i]) rep.first_simplex_mismatch = k;
  }
  return rep;
}

}  // namespace lensform
