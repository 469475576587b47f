#pragma once

#include "lensform/arith.hpp"
#include "lensform/lens.hpp"
#include "lensform/matrix.hpp"

#include <cstdint>
#include <vector>

namespace lensform {

/// L = { a in Z^n : sum_j a_j p_j == 0 (mod q) }, the sublattice of Z^n
/// indexing the G-invariant monomials. `basis` holds generating columns in
/// Hermite normal form (see hermite_normal_form).
class CongruenceLattice {
 public:
  CongruenceLattice(LensSpace lens, IntMatrix basis) : lens_(std::move(lens)), basis_(std::move(basis)) {}

  const LensSpace& lens() const noexcept { return lens_; }
  const IntMatrix& basis() const noexcept { return basis_; }
  std::int64_t q() const noexcept { return lens_.q(); }
  std::size_t n() const noexcept { return lens_.n(); }

  /// Membership through the defining congruence.
  bool contains(const std::vector<std::int64_t>& a) const {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < a.size(); ++j) acc = mod_floor(acc + mod_floor(a[j], q()) * lens_.p()[j], q());
    return acc == 0;
  }

  /// Membership through the basis: solves basis * c = a by back substitution
  /// and checks that c is integral.
  bool in_span(const std::vector<std::int64_t>& a) const {
    const std::size_t dim = n();
    std::vector<Integer> rhs(a.begin(), a.end());
    for (std::size_t s = 0; s < dim; ++s) {
      const std::size_t i = dim - 1 - s;
      if (rhs[i] % basis_(i, i) != 0) return false;
      const Integer c = rhs[i] / basis_(i, i);
      for (std::size_t r = 0; r <= i; ++r) rhs[r] -= c * basis_(r, i);
    }
    return true;
  }

 private:
  LensSpace lens_;
  IntMatrix basis_;
};

inline CongruenceLattice build_lattice(const LensSpace& lens) {
  const std::size_t n = lens.n();
  const std::int64_t q = lens.q();
  const std::int64_t inv0 = mod_inverse(lens.p()[0], q);
  // q*e_i together with e_i - (p_i / p_0) e_0 for i >= 1 generate L.
  std::vector<std::vector<Integer>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> g(n, 0);
    g[i] = q;
    gens.push_back(std::move(g));
  }
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Integer> g(n, 0);
    g[i] = 1;
    g[0] = -mod_floor(lens.p()[i] * inv0, q);
    gens.push_back(std::move(g));
  }
  return CongruenceLattice(lens, hermite_normal_form(IntMatrix::from_columns(gens, n)));
}

/// Dual basis u_i (rows of basis^{-1}, i.e. columns of its inverse transpose)
/// and l_i, the least positive integer with l_i * u_i integral.
struct DualBasis {
  std::vector<std::vector<Rational>> u;
  std::vector<std::int64_t> l;
};

inline DualBasis dual_basis_of(const IntMatrix& basis) {
  const RationalMatrix inv = inverse(basis);
  DualBasis out;
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    std::vector<Rational> u = inv.row(i);
    Integer l = 1;
    for (const Rational& x : u) {
      const Integer den = boost::multiprecision::denominator(x);
      l = l / gcd(l, den) * den;
    }
    out.u.push_back(std::move(u));
    out.l.push_back(l.convert_to<std::int64_t>());
  }
  return out;
}

inline DualBasis dual_basis(const CongruenceLattice& lat) { return dual_basis_of(lat.basis()); }

/// One integer point (x, r) of the half-open parallelepiped spanned by the
/// gamma_i = (l_i u_i, l_i), with its coefficients in [0, 1).
struct ParallelepipedPoint {
  std::vector<Integer> x;
  Integer height;
  std::vector<Rational> coeffs;
};

struct StanleyData {
  DualBasis dual;
  std::vector<std::vector<Integer>> gammas;  // each of length n + 1
  std::vector<ParallelepipedPoint> points;   // sorted by (height, x)
  Integer s;                                 // gcd of maximal minors of the gamma rows
};

/// Solves sum a_i gamma_i = (x, height) exactly. Returns false when the point
/// is off the span or some a_i falls outside [0, 1).
inline bool parallelepiped_coefficients(const IntMatrix& basis, const DualBasis& dual,
                                        const std::vector<Integer>& x, const Integer& height,
                                        std::vector<Rational>& coeffs) {
  const std::size_t n = x.size();
  // x = sum a_i l_i u_i  =>  a_i l_i = (basis^T x)_i.
  coeffs.assign(n, Rational(0));
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer b = 0;
    for (std::size_t r = 0; r < n; ++r) b += basis(r, i) * x[r];
    coeffs[i] = Rational(b, Integer(dual.l[i]));
    total += b;
  }
  if (total != height) return false;
  for (const Rational& a : coeffs)
    if (a < 0 || a >= 1) return false;
  return true;
}

/// Stanley data of the simplex conv{0, u_1..u_n} for a given generating matrix.
/// Any integer point of the parallelepiped has a_i * l_i integral (u is a basis
/// of L*, which contains Z^n), so the scan runs over the grid c_i in [0, l_i)
/// with a_i = c_i / l_i, and every hit is re-verified by an exact solve.
inline StanleyData stanley_data_of(const IntMatrix& basis) {
  StanleyData sd;
  sd.dual = dual_basis_of(basis);
  const std::size_t n = basis.rows();
  IntMatrix gamma_rows(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> g(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = sd.dual.u[i][j] * sd.dual.l[i];
      g[j] = boost::multiprecision::numerator(v);
    }
    g[n] = sd.dual.l[i];
    for (std::size_t j = 0; j <= n; ++j) gamma_rows(i, j) = g[j];
    sd.gammas.push_back(std::move(g));
  }
  sd.s = maximal_minor_gcd(gamma_rows);

  std::vector<std::int64_t> c(n, 0);
  while (true) {
    std::vector<Rational> w(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] != 0)
        for (std::size_t j = 0; j < n; ++j) w[j] += sd.dual.u[i][j] * c[i];
    bool integral = true;
    for (const Rational& v : w)
      if (boost::multiprecision::denominator(v) != 1) integral = false;
    if (integral) {
      ParallelepipedPoint pt;
      for (const Rational& v : w) pt.x.push_back(boost::multiprecision::numerator(v));
      pt.height = 0;
      for (const auto ci : c) pt.height += ci;
      if (!parallelepiped_coefficients(basis, sd.dual, pt.x, pt.height, pt.coeffs))
        throw Error("parallelepiped point failed exact verification");
      sd.points.push_back(std::move(pt));
    }
    std::size_t i = 0;
    while (i < n && ++c[i] == sd.dual.l[i]) c[i++] = 0;
    if (i == n) break;
  }
  std::sort(sd.points.begin(), sd.points.end(), [](const auto& a, const auto& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.x < b.x;
  });
  return sd;
}

inline StanleyData stanley_data(const CongruenceLattice& lat) { return stanley_data_of(lat.basis()); }

/// Elementary divisors of the basis (ascending, each dividing the next).
inline std::vector<Integer> smith_invariants(const CongruenceLattice& lat) {
  return smith_diagonal(lat.basis());
}

}  // namespace lensform
