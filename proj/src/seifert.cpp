#include "csobstruct/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace csobstruct {

namespace {

constexpr std::int64_t kMaxProduct = 1'000'000'000'000'000;  // keeps 4a in int64

BigInt prod3(const std::array<std::int64_t, 3>& a) { return big(a[0]) * big(a[1]) * big(a[2]); }

}  // namespace

void require_torus_pair(std::int64_t p, std::int64_t q, Mode mode) {
  const std::int64_t lo = mode == Mode::Strict ? 2 : 1;
  if (p < lo || q < lo) {
    throw std::invalid_argument("torus knot parameters must be >= " + std::to_string(lo) +
                                ", got (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("torus knot parameters must be coprime, got (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
  }
}

BrieskornSphere BrieskornSphere::make(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                      int orientation, bool allow_degenerate) {
  if (orientation != 1 && orientation != -1) {
    throw std::invalid_argument("orientation must be +1 or -1");
  }
  std::array<std::int64_t, 3> a{a1, a2, a3};
  std::sort(a.begin(), a.end());
  if (a[0] < 1) throw std::invalid_argument("Seifert multiplicities must be positive");
  if (a[0] == 1 && !allow_degenerate) {
    throw std::invalid_argument("degenerate Seifert multiplicity 1 (lens space case)");
  }
  if (std::gcd(a[0], a[1]) != 1 || std::gcd(a[0], a[2]) != 1 || std::gcd(a[1], a[2]) != 1) {
    throw std::invalid_argument("Seifert multiplicities must be pairwise coprime");
  }
  if (prod3(a) > big(kMaxProduct)) throw std::invalid_argument("Seifert data too large");
  return BrieskornSphere{a, orientation};
}

BigInt BrieskornSphere::order_product() const { return prod3(a); }

BrieskornSphere BrieskornSphere::reversed() const { return BrieskornSphere{a, -orientation}; }

std::string BrieskornSphere::name() const {
  return std::string(orientation < 0 ? "-" : "") + "Sigma(" + std::to_string(a[0]) + "," +
         std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
}

BrieskornSphere surgery_to_brieskorn(std::int64_t p, std::int64_t q, std::int64_t k,
                                     int q_sign) {
  require_torus_pair(p, q);
  if (k <= 0) throw std::invalid_argument("surgery coefficient 1/k needs k >= 1");
  if (q_sign != 1 && q_sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const BigInt third = big(p) * big(q) * big(k) - big(q_sign);
  if (!third.fits_slong_p()) throw std::invalid_argument("Seifert data too large");
  return BrieskornSphere::make(p, q, third.get_si(), -1);
}

std::array<BigInt, 3> seifert_invariants(const BrieskornSphere& y) {
  const BigInt a = y.order_product();
  std::array<BigInt, 3> b;
  BigInt rest = 1;
  for (int i = 0; i < 2; ++i) {
    const BigInt ai = big(y.a[i]);
    const BigInt cofactor = a / ai;
    if (ai == 1) {
      b[i] = 0;
    } else if (mpz_invert(b[i].get_mpz_t(), cofactor.get_mpz_t(), ai.get_mpz_t()) == 0) {
      throw std::logic_error("seifert_invariants: cofactor not invertible");
    }
    rest -= b[i] * cofactor;
  }
  const BigInt c3 = a / big(y.a[2]);
  if (!mpz_divisible_p(rest.get_mpz_t(), c3.get_mpz_t())) {
    throw std::logic_error("seifert_invariants: no integral completion");
  }
  b[2] = rest / c3;
  return b;
}

bool admissible_rotation(const BrieskornSphere& y, const std::array<std::int64_t, 3>& l) {
  for (int i = 0; i < 3; ++i)
    if (l[i] <= 0 || l[i] >= y.a[i]) return false;
  const auto b = seifert_invariants(y);
  const bool all_even = l[0] % 2 == 0 && l[1] % 2 == 0 && l[2] % 2 == 0;
  bool match_b = true;
  for (int i = 0; i < 3; ++i)
    if (mod_floor(big(l[i]) - b[i], 2) != 0) match_b = false;
  if (!all_even && !match_b) return false;

  // Angles pi*l_i/a_i must satisfy the strict spherical triangle inequality.
  const BigInt a = y.order_product();
  std::array<BigInt, 3> t;
  for (int i = 0; i < 3; ++i) t[i] = big(l[i]) * (a / big(y.a[i]));
  const BigInt diff = abs(t[0] - t[1]);
  return diff < t[2] && t[2] < t[0] + t[1] && t[0] + t[1] + t[2] < 2 * a;
}

namespace {

int central_sign_of(const std::array<std::int64_t, 3>& l) {
  return (l[0] % 2 == 0 && l[1] % 2 == 0 && l[2] % 2 == 0) ? 1 : -1;
}

// e mod 2a from the local congruences at each fibre plus one lift.
BigInt lift_congruence(const BrieskornSphere& y, const std::array<std::int64_t, 3>& l, int eps) {
  const BigInt a = y.order_product();
  const auto b = seifert_invariants(y);
  std::vector<Congruence> system;
  int even_index = -1;
  for (int i = 0; i < 3; ++i) {
    const BigInt ai = big(y.a[i]);
    system.push_back({big(l[i]) * (a / ai), ai});
    if (y.a[i] % 2 == 0) even_index = i;
  }
  if (even_index < 0) {
    system.push_back({BigInt(eps == 1 ? 0 : 1), BigInt(2)});
  } else {
    const int k = even_index;
    const BigInt ak = big(y.a[k]);
    BigInt delta = 0;
    if (eps == -1) {
      for (int j = 0; j < 3; ++j)
        if (j != k) delta += b[j];
      delta = mod_floor(delta, 2);
    }
    system.push_back({big(l[k]) * (a / ak) + ak * delta, 2 * ak});
  }
  const auto sol = crt_solve(system);
  if (!sol || sol->modulus != 2 * a) {
    throw std::logic_error("flat connection congruences inconsistent for " + y.name());
  }
  return sol->residue;
}

// Scans every e in [0, 2a) and keeps those matching a signed rotation sum.
Rational search_value(const BrieskornSphere& y, const std::array<std::int64_t, 3>& l) {
  const BigInt a = y.order_product();
  const BigInt two_a = 2 * a;
  std::set<BigInt> targets;
  std::array<BigInt, 3> t;
  for (int i = 0; i < 3; ++i) t[i] = big(l[i]) * (a / big(y.a[i]));
  for (int s = 0; s < 8; ++s) {
    BigInt sum = 0;
    for (int i = 0; i < 3; ++i) sum += (s >> i & 1) ? -t[i] : t[i];
    targets.insert(mod_floor(sum, two_a));
  }
  std::set<Rational> values;
  const std::int64_t limit = two_a.get_si();
  for (std::int64_t e = 0; e < limit; ++e) {
    const BigInt be = big(e);
    if (!targets.count(be)) continue;
    values.insert(normalize_mod(-Rational(be * be, 4 * a), Modulus::Mod1).value);
  }
  if (values.size() != 1) {
    throw std::logic_error("search convention produced an ambiguous value on " + y.name());
  }
  return *values.begin();
}

}  // namespace

CsValue FlatConnectionClass::cs_so3() const {
  return normalize_mod(Rational(-4) * cs_su2.value, Modulus::Mod4);
}

std::vector<FlatConnectionClass> enumerate_flat_connections(const BrieskornSphere& y,
                                                           CsConvention convention) {
  for (auto ai : y.a)
    if (ai < 2) throw std::invalid_argument("degenerate Seifert data " + y.name());
  const BigInt a = y.order_product();
  std::vector<FlatConnectionClass> out;
  std::array<std::int64_t, 3> l{};
  for (l[0] = 1; l[0] < y.a[0]; ++l[0])
    for (l[1] = 1; l[1] < y.a[1]; ++l[1])
      for (l[2] = 1; l[2] < y.a[2]; ++l[2]) {
        if (!admissible_rotation(y, l)) continue;
        const int eps = central_sign_of(l);
        Rational v;
        if (convention == CsConvention::Congruence) {
          const BigInt e = lift_congruence(y, l, eps);
          v = -Rational(e * e, 4 * a);
        } else {
          v = search_value(y, l);
        }
        if (y.orientation < 0) v = -v;
        out.push_back({l, eps, normalize_mod(v, Modulus::Mod1)});
      }
  return out;  // loop order is already lexicographic
}

std::pair<BigInt, BigInt> cs_denominators_whitehead(std::int64_t p, std::int64_t q, Mode mode) {
  require_torus_pair(p, q, mode);
  const BigInt pq = big(p) * big(q);
  return {4 * pq * (2 * pq - 1), 4 * pq * (4 * pq - 1)};
}

const char* to_string(TauKind kind) {
  switch (kind) {
    case TauKind::FromDenominator: return "FromDenominator";
    case TauKind::FromFiniteGroup: return "FromFiniteGroup";
    case TauKind::WhiteheadCover: return "WhiteheadCover";
    case TauKind::LensInput: return "LensInput";
  }
  return "?";
}

TauBound tau_lower_from_denominator(const BigInt& d) {
  if (sgn(d) <= 0) throw std::invalid_argument("denominator must be positive");
  return {Rational(BigInt(1), d), TauKind::FromDenominator};
}

TauBound tau_lower_from_finite_group(const BigInt& order) {
  if (sgn(order) <= 0) throw std::invalid_argument("group order must be positive");
  return {Rational(BigInt(1), order), TauKind::FromFiniteGroup};
}

TauBound tau_lower_whitehead_cover(std::int64_t p, std::int64_t q, int orientation, Mode mode) {
  if (orientation != 1 && orientation != -1) {
    throw std::invalid_argument("orientation must be +1 or -1");
  }
  require_torus_pair(p, q, mode);
  const BigInt pq = big(p) * big(q);
  return {Rational(BigInt(1), pq * (4 * pq - 1)), TauKind::WhiteheadCover};
}

}  // namespace csobstruct
