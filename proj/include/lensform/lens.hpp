#pragma once

#include "lensform/arith.hpp"
#include "lensform/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lensform {

/// Parameters (q; p1..pn) of the lens space S^{2n-1}/G, where G is cyclic of
/// order q acting by rotation through 2*pi*p_j/q in the j-th complex coordinate.
/// Parameters are stored reduced into [1, q-1]; for q = 1 they are all 0.
class LensSpace {
 public:
  std::int64_t q() const noexcept { return q_; }
  const std::vector<std::int64_t>& p() const noexcept { return p_; }
  std::size_t n() const noexcept { return p_.size(); }

  /// n = 1 (the circle quotient) is representable but has no spectral data here.
  bool spectral() const noexcept { return p_.size() >= 2; }

  std::string literal() const {
    std::string out = std::to_string(q_) + ":";
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p_[i]);
    }
    return out;
  }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
  friend auto operator<=>(const LensSpace&, const LensSpace&) = default;

 private:
  friend LensSpace make_lens(std::int64_t q, std::vector<std::int64_t> p);
  LensSpace(std::int64_t q, std::vector<std::int64_t> p) : q_(q), p_(std::move(p)) {}

  std::int64_t q_ = 1;
  std::vector<std::int64_t> p_;
};

inline LensSpace make_lens(std::int64_t q, std::vector<std::int64_t> p) {
  if (q < 1) throw InvalidOrder();
  if (p.empty()) throw EmptyParameters();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::gcd(p[i], q) != 1) throw NotCoprime(i);
    p[i] = mod_floor(p[i], q);
  }
  return LensSpace(q, std::move(p));
}

/// Parses "q:p1,p2,...,pn".
inline LensSpace parse_lens(std::string_view text) {
  auto parse_int = [](std::string_view token) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
      throw ParseError(std::string(token), "expected an integer");
    return value;
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(std::string(text), "expected q:p1,...,pn");
  const std::int64_t q = parse_int(text.substr(0, colon));
  if (q < 1) throw ParseError(std::string(text.substr(0, colon)), "q must be positive");

  std::vector<std::int64_t> p;
  std::string_view rest = text.substr(colon + 1);
  if (rest.empty()) throw ParseError(std::string(text), "no rotation parameters");
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    const std::int64_t value = parse_int(token);
    if (std::gcd(value, q) != 1) throw ParseError(std::string(token), "not coprime to q");
    p.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return make_lens(q, std::move(p));
}

/// Units modulo q in increasing order; {1} for q = 1.
inline std::vector<std::int64_t> units_mod(std::int64_t q) {
  std::vector<std::int64_t> out;
  if (q == 1) return {1};
  for (std::int64_t t = 1; t < q; ++t)
    if (std::gcd(t, q) == 1) out.push_back(t);
  return out;
}

/// Isometry L(q; p) -> L(q; p'):  p'_i == eps_i * t * p_{sigma(i)} (mod q).
/// sigma is 0-based.
struct IsometryWitness {
  std::int64_t t = 1;
  std::vector<std::size_t> sigma;
  std::vector<int> eps;

  friend bool operator==(const IsometryWitness&, const IsometryWitness&) = default;
};

inline std::vector<std::int64_t> apply_witness(const IsometryWitness& w, const LensSpace& source) {
  const std::int64_t q = source.q();
  std::vector<std::int64_t> out(source.n());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = mod_floor(w.eps[i] * mod_floor(w.t * source.p()[w.sigma[i]], q), q);
  return out;
}

namespace detail {

// Sign class of a residue: min(v, q - v).
inline std::int64_t sign_class(std::int64_t v, std::int64_t q) {
  v = mod_floor(v, q);
  return std::min(v, mod_floor(q - v, q));
}

}  // namespace detail

/// Searches every unit t; for each t, sign and permutation choices only depend
/// on sign classes, so a greedy match decides existence exactly.
inline std::optional<IsometryWitness> isometric(const LensSpace& a, const LensSpace& b) {
  if (a.q() != b.q() || a.n() != b.n()) return std::nullopt;
  const std::int64_t q = a.q();
  const std::size_t n = a.n();
  for (const std::int64_t t : units_mod(q)) {
    std::vector<std::int64_t> scaled(n);
    for (std::size_t j = 0; j < n; ++j) scaled[j] = mod_floor(t * a.p()[j], q);

    IsometryWitness w{t, std::vector<std::size_t>(n), std::vector<int>(n, 1)};
    std::vector<bool> used(n, false);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const std::int64_t target = b.p()[i];
      std::size_t pick = n;
      int sign = 1;
      for (std::size_t j = 0; j < n && pick == n; ++j)
        if (!used[j] && scaled[j] == target) pick = j;
      for (std::size_t j = 0; j < n && pick == n; ++j)
        if (!used[j] && mod_floor(q - scaled[j], q) == target) pick = j, sign = -1;
      if (pick == n) {
        ok = false;
        break;
      }
      used[pick] = true;
      w.sigma[i] = pick;
      w.eps[i] = sign;
    }
    if (ok) return w;
  }
  return std::nullopt;
}

/// Lexicographically least parameter list in the isometry orbit of `a`.
inline LensSpace canonical_form(const LensSpace& a) {
  const std::int64_t q = a.q();
  std::optional<std::vector<std::int64_t>> best;
  for (const std::int64_t t : units_mod(q)) {
    std::vector<std::int64_t> cand(a.n());
    for (std::size_t j = 0; j < a.n(); ++j) cand[j] = detail::sign_class(t * a.p()[j], q);
    std::sort(cand.begin(), cand.end());
    if (!best || cand < *best) best = std::move(cand);
  }
  return make_lens(q, std::move(*best));
}

}  // namespace lensform
