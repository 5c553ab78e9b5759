#pragma once

// Reference implementations used only by the tests. Each one answers the
// same question as a library routine by a deliberately different method.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Mat = std::vector<std::vector<Int>>;

/// Leibniz expansion over all permutations.
inline Int leibniz_det(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void combinations(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

/// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
/// factor_k = d_k / d_{k-1}. Zero divisors end the list.
inline std::vector<Int> invariant_factors_by_minors(const Mat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Int g = 0;
    combinations(rows, k, [&](const std::vector<std::size_t>& r) {
      combinations(cols, k, [&](const std::vector<std::size_t>& c) {
        Mat sub(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        Int d = leibniz_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Smallest x >= 0 satisfying every congruence, by scanning [0, lcm).
inline std::optional<std::pair<std::int64_t, std::int64_t>> crt_scan(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& system) {
  std::int64_t l = 1;
  for (const auto& c : system) l = std::lcm(l, c.second);
  for (std::int64_t x = 0; x < l; ++x) {
    bool ok = true;
    for (const auto& [r, m] : system)
      if (((x - r) % m + m) % m != 0) ok = false;
    if (ok) return std::make_pair(x, l);
  }
  return std::nullopt;
}

/// Irreducible SU(2) representation test for prescribed rotation numbers on
/// Sigma(a1,a2,a3): x_i must be conjugate to exp(pi l_i/a_i i), satisfy
/// x_i^{a_i} = h^{-b_i} with h = +-1 central, and x1 x2 x3 = 1 with a
/// non-abelian image. The product condition is solved geometrically: fix
/// x1 on the i-axis and x2 at angle phi from it; the trace of x1 x2 must
/// equal the trace of x3^-1.
inline bool rotation_triple_realisable(const std::array<std::int64_t, 3>& a,
                                       const std::array<std::int64_t, 3>& l,
                                       const std::array<Int, 3>& b, int h) {
  for (int i = 0; i < 3; ++i) {
    // (exp(pi l i))^... : x_i^{a_i} = (-1)^{l_i}; h^{-b_i} = h^{b_i}.
    const int lhs = l[i] % 2 == 0 ? 1 : -1;
    const Int bi = b[i];
    const int rhs = (h == 1 || mpz_even_p(bi.get_mpz_t())) ? 1 : -1;
    if (lhs != rhs) return false;
  }
  const long double pi = 3.14159265358979323846264338327950288L;
  const long double t1 = pi * l[0] / a[0], t2 = pi * l[1] / a[1], t3 = pi * l[2] / a[2];
  // tr(x1 x2)/2 = cos t1 cos t2 - sin t1 sin t2 cos phi must equal cos t3.
  const long double c = (std::cos(t1) * std::cos(t2) - std::cos(t3)) / (std::sin(t1) * std::sin(t2));
  return std::fabs(c) < 1.0L - 1e-12L;
}

/// Casson-type count of irreducible classes on Sigma(p, q, pqk +- 1).
inline std::int64_t casson_count(std::int64_t p, std::int64_t q, std::int64_t k) {
  return k * (p * p - 1) * (q * q - 1) / 12;
}

/// All integer vectors in the box |v_i| <= bound_i with v^T diag(d) v = norm
/// and v = e mod 2, up to global sign (first nonzero entry positive).
inline std::vector<std::vector<std::int64_t>> diagonal_box_search(
    const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& e,
    const std::vector<std::int64_t>& bound) {
  std::int64_t target = 0;
  for (std::size_t i = 0; i < d.size(); ++i) target += d[i] * e[i] * e[i];
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(d.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d.size()) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d.size(); ++j) s += d[j] * v[j] * v[j];
      if (s != target) return;
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (v[j] == 0) continue;
        if (v[j] > 0) out.push_back(v);
        return;
      }
      out.push_back(v);  // zero vector
      return;
    }
    for (std::int64_t x = -bound[i]; x <= bound[i]; ++x) {
      if (((x - e[i]) % 2 + 2) % 2 != 0) continue;
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
