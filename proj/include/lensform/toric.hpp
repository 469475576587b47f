#pragma once

#include "lensform/arith.hpp"
#include "lensform/counting.hpp"
#include "lensform/lattice.hpp"
#include "lensform/lens.hpp"

#include <cstdint>
#include <vector>

// Counting shadow of the toric variety attached to a lens space: section
// dimensions of powers of the natural line bundle and the degree. Only the
// lattice-point data is modelled; there are no fans or charts here.

namespace lensform {

/// Integral polytope q * conv(±u_i), vertices ordered +q u_1, -q u_1, +q u_2, ...
/// dilate_factor n is the multiple that is very ample.
struct LensPolytope {
  std::int64_t q = 1;
  std::size_t n = 0;
  std::size_t dilate_factor = 0;
  std::vector<std::vector<Integer>> vertices;
};

inline LensPolytope lens_polytope(const LensSpace& lens) {
  const DualBasis dual = dual_basis(build_lattice(lens));
  LensPolytope poly{lens.q(), lens.n(), lens.n(), {}};
  for (const auto& u : dual.u) {
    std::vector<Integer> plus, minus;
    for (const Rational& x : u) {
      const Rational v = x * lens.q();
      if (boost::multiprecision::denominator(v) != 1) throw Error("q * u_i is not integral");
      plus.push_back(boost::multiprecision::numerator(v));
      minus.push_back(-boost::multiprecision::numerator(v));
    }
    poly.vertices.push_back(std::move(plus));
    poly.vertices.push_back(std::move(minus));
  }
  return poly;
}

/// dim H^0(X, L^k) for k = 1..k_max: lattice points of L in the l1-ball of
/// radius k*n*q (the k-th dilate of the very ample polytope nP).
inline std::vector<std::int64_t> h0_dims(const LensSpace& lens, std::int64_t k_max) {
  const std::int64_t step = static_cast<std::int64_t>(lens.n()) * lens.q();
  const auto balls = ball_counts(build_lattice(lens), k_max * step);
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= k_max; ++k) out.push_back(balls[static_cast<std::size_t>(k * step)]);
  return out;
}

inline std::int64_t h0_dim(const LensSpace& lens, std::int64_t k) {
  if (k < 1) throw Error("h0_dim needs k >= 1");
  return h0_dims(lens, k).back();
}

/// |det| of the generating matrix, the covolume of L.
inline std::int64_t fundamental_volume(const LensSpace& lens) {
  return abs(determinant(build_lattice(lens).basis())).convert_to<std::int64_t>();
}

namespace detail {

// Fits a degree-n polynomial to counts at k = 0..n of radius k*scale and checks
// two more samples.
inline std::vector<Rational> fit_dilate_polynomial(const LensSpace& lens, std::int64_t scale) {
  const std::size_t n = lens.n();
  const auto balls = ball_counts(build_lattice(lens), static_cast<std::int64_t>(n + 2) * scale);
  std::vector<std::int64_t> samples;
  for (std::size_t k = 0; k <= n + 2; ++k) samples.push_back(balls[k * static_cast<std::size_t>(scale)]);
  return fit_quasipolynomial(samples, 1, n).constituent(0);
}

inline Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer power(Integer base, std::size_t e) {
  Integer r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace detail

/// Ehrhart polynomial of the integral dilate q * conv(±A^{-1} e_i), i.e.
/// k -> #{a in L : |a|_1 <= k q}. Coefficients constant first.
inline std::vector<Rational> ehrhart_polynomial_of_qP(const LensSpace& lens) {
  const std::size_t n = lens.n();
  std::vector<Rational> poly = detail::fit_dilate_polynomial(lens, lens.q());
  const Rational expected(detail::power(2, n) * detail::power(lens.q(), n - 1), detail::factorial(n));
  if (poly[n] != expected) throw Error("leading Ehrhart coefficient differs from the volume");
  return poly;
}

/// Second-highest Ehrhart coefficient: half the normalized boundary volume.
inline Rational boundary_invariant(const LensSpace& lens) {
  return ehrhart_polynomial_of_qP(lens)[lens.n() - 1];
}

/// n! vol(nP), from the closed form 2^n n^n q^{n-1} and from the leading
/// coefficient of the counting polynomial of nP; the two must agree.
inline Integer toric_degree(const LensSpace& lens) {
  const std::size_t n = lens.n();
  const Integer closed = detail::power(2, n) * detail::power(n, n) * detail::power(lens.q(), n - 1);
  const std::vector<Rational> poly =
      detail::fit_dilate_polynomial(lens, static_cast<std::int64_t>(n) * lens.q());
  const Rational counted = poly[n] * detail::factorial(n);
  if (counted != Rational(closed)) throw Error("toric degree: volume by counting disagrees with closed form");
  return closed;
}

}  // namespace lensform
