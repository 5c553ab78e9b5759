#pragma once

// Brieskorn spheres, flat SU(2) connections on them and tau lower bounds.
//
// Seifert data are kept sorted ascending; orientation is a separate sign.
// Rotation numbers follow the convention rho(x_i) ~ exp(pi i l_i / a_i)
// with the canonical Seifert invariants returned by seifert_invariants().

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csobstruct/exactq.hpp"

namespace csobstruct {

enum class Mode { Strict, Permissive };

struct BrieskornSphere {
  std::array<std::int64_t, 3> a{};  // sorted ascending, pairwise coprime
  int orientation = 1;              // +1 or -1

  /// Validates and sorts. Entries equal to 1 are rejected unless
  /// allow_degenerate is set.
  static BrieskornSphere make(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                              int orientation = 1, bool allow_degenerate = false);

  BigInt order_product() const;  // a1 * a2 * a3
  BrieskornSphere reversed() const;
  /// "Sigma(2,3,11)" with a leading '-' for negative orientation.
  std::string name() const;

  friend bool operator==(const BrieskornSphere&, const BrieskornSphere&) = default;
};

/// S^3_{1/(k * q_sign)}(T_{p,q}) = -Sigma(p, q, pqk - q_sign).
BrieskornSphere surgery_to_brieskorn(std::int64_t p, std::int64_t q, std::int64_t k,
                                     int q_sign = 1);

/// Integers b_i with sum b_i * (a / a_i) = 1, where b_1, b_2 are the
/// least non-negative inverses of a/a_1, a/a_2.
std::array<BigInt, 3> seifert_invariants(const BrieskornSphere& y);

enum class CsConvention {
  Congruence,  // solve for e mod 2a by CRT
  Search,      // scan e in [0, 2a) against the signed-sum predicate
};

struct FlatConnectionClass {
  std::array<std::int64_t, 3> rotation{};
  int central_sign = -1;  // image of the central fibre: +1 or -1
  CsValue cs_su2;         // Mod1

  /// SO(3) normalisation -4 * cs_su2, represented in (0,4].
  CsValue cs_so3() const;
  friend bool operator==(const FlatConnectionClass&, const FlatConnectionClass&) = default;
};

/// True when (l1,l2,l3) labels an irreducible flat connection on y.
bool admissible_rotation(const BrieskornSphere& y, const std::array<std::int64_t, 3>& l);

/// One entry per conjugacy class of irreducible SU(2) representations,
/// sorted by rotation numbers.
std::vector<FlatConnectionClass> enumerate_flat_connections(
    const BrieskornSphere& y, CsConvention convention = CsConvention::Congruence);

/// (4pq(2pq-1), 4pq(4pq-1)).
std::pair<BigInt, BigInt> cs_denominators_whitehead(std::int64_t p, std::int64_t q,
                                                    Mode mode = Mode::Strict);

enum class TauKind { FromDenominator, FromFiniteGroup, WhiteheadCover, LensInput };

struct TauBound {
  Rational value;
  TauKind kind = TauKind::FromDenominator;
  friend bool operator==(const TauBound&, const TauBound&) = default;
};

const char* to_string(TauKind kind);

TauBound tau_lower_from_denominator(const BigInt& d);
TauBound tau_lower_from_finite_group(const BigInt& order);
/// 1/(pq(4pq-1)); independent of orientation.
TauBound tau_lower_whitehead_cover(std::int64_t p, std::int64_t q, int orientation = 1,
                                   Mode mode = Mode::Strict);

/// Throws std::invalid_argument unless gcd(p,q) = 1 and (strict) p,q >= 2
/// or (permissive) p,q >= 1.
void require_torus_pair(std::int64_t p, std::int64_t q, Mode mode = Mode::Strict);

}  // namespace csobstruct
