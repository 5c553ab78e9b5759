#include "csobstruct/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace csobstruct {

BigInt quadratic_form(const IntMatrix& m, const IntVector& v) {
  if (!m.is_square() || m.rows() != v.size()) {
    throw std::invalid_argument("quadratic_form: dimension mismatch");
  }
  BigInt s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * m(i, j) * v[j];
  return s;
}

bool is_negative_definite(const IntMatrix& m) {
  if (!m.is_symmetric()) return false;
  const std::size_t n = m.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = -m(i, j);
    if (sgn(determinant(lead)) <= 0) return false;
  }
  return true;
}

namespace {

// -M = L^T D L with L unit upper triangular, so that
// v^T (-M) v = sum_i d_i (v_i + sum_{j>i} mu_ij v_j)^2.
struct Ldl {
  std::vector<Rational> d;
  std::vector<std::vector<Rational>> mu;
};

Ldl factor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(-m(i, j));
  Ldl f{std::vector<Rational>(n), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    f.d[i] = a[i][i];
    for (std::size_t j = i + 1; j < n; ++j) f.mu[i][j] = a[i][j] / f.d[i];
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k) a[j][k] -= f.mu[i][j] * f.d[i] * f.mu[i][k];
  }
  return f;
}

// Integer x with d * (x + c)^2 <= budget, i.e. |x + c| <= sqrt(budget / d).
std::pair<BigInt, BigInt> coordinate_range(const Rational& c, const Rational& budget,
                                           const Rational& d) {
  const Rational t = budget / d;
  auto fits = [&](const BigInt& x) {
    const Rational y = Rational(x) + c;
    return y * y <= t;
  };
  const double approx = std::sqrt(std::max(0.0, t.to_double()));
  BigInt lo = (-c).floor() - BigInt(static_cast<long>(std::ceil(approx))) - 1;
  BigInt hi = (-c).floor() + BigInt(static_cast<long>(std::ceil(approx))) + 2;
  while (lo <= hi && !fits(lo)) ++lo;
  while (hi >= lo && !fits(hi)) --hi;
  return {lo, hi};
}

bool canonical_sign(IntVector& v) {
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    return true;
  }
  return false;
}

}  // namespace

CharClassSet enumerate_char_classes(const IntMatrix& form, const IntVector& e) {
  if (!form.is_square() || !form.is_symmetric()) {
    throw std::invalid_argument("intersection form must be square and symmetric");
  }
  if (e.size() != form.rows()) throw std::invalid_argument("class has the wrong length");
  if (!is_negative_definite(form)) {
    throw std::invalid_argument("intersection form is not negative definite");
  }
  const std::size_t n = form.rows();
  const BigInt target = -quadratic_form(form, e);  // >= 0
  const Ldl f = factor(form);

  std::set<IntVector> found;
  IntVector v(n);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level,
                                                                   const Rational& budget) {
    const std::size_t i = level - 1;
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += f.mu[i][j] * Rational(v[j]);
    const auto [lo, hi] = coordinate_range(c, budget, f.d[i]);
    for (BigInt x = lo; x <= hi; ++x) {
      if (mod_floor(x - e[i], 2) != 0) continue;
      v[i] = x;
      const Rational y = Rational(x) + c;
      const Rational rest = budget - f.d[i] * y * y;
      if (i == 0) {
        if (rest.is_zero()) {
          IntVector w = v;
          canonical_sign(w);
          found.insert(w);
        }
      } else {
        descend(i, rest);
      }
    }
  };
  descend(n, Rational(target));

  CharClassSet out{form, e, {found.begin(), found.end()}};
  for (const auto& w : out.classes) {
    if (quadratic_form(form, w) != -target) throw std::logic_error("lattice enumeration drifted");
  }
  return out;
}

}  // namespace csobstruct
