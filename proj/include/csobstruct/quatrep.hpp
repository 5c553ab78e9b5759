#pragma once

// SU(2) as unit quaternions, words in the two meridians of the (2,4) torus
// link, and a numerical solver for the link group relator
//
//   [a^-1, b][a, b^-1] = 1,   a = mu_1, b = mu_2.
//
// An exact integer submode (entries in {0, +-1}) is provided for the
// Lipschitz units so that golden identities can be checked with no rounding.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace csobstruct {

template <typename T>
struct BasicQuaternion {
  T w{}, x{}, y{}, z{};

  static BasicQuaternion one() { return {T(1), T(0), T(0), T(0)}; }

  BasicQuaternion conj() const { return {w, -x, -y, -z}; }
  T norm2() const { return w * w + x * x + y * y + z * z; }

  friend BasicQuaternion operator*(const BasicQuaternion& p, const BasicQuaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }
  friend BasicQuaternion operator+(const BasicQuaternion& p, const BasicQuaternion& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend BasicQuaternion operator-(const BasicQuaternion& p, const BasicQuaternion& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
  }
  BasicQuaternion operator-() const { return {-w, -x, -y, -z}; }
  friend bool operator==(const BasicQuaternion&, const BasicQuaternion&) = default;
};

using Quaternion = BasicQuaternion<double>;
using ExactQuaternion = BasicQuaternion<std::int64_t>;

inline double norm(const Quaternion& q) { return std::sqrt(q.norm2()); }
inline double distance(const Quaternion& p, const Quaternion& q) { return norm(p - q); }
/// min(|q - 1|, |q + 1|): distance to the centre {+-1} of SU(2).
inline double central_defect(const Quaternion& q) {
  return std::min(distance(q, Quaternion::one()), distance(q, -Quaternion::one()));
}
Quaternion normalized(const Quaternion& q);
/// Unit quaternion cos(t) + sin(t) * u for a unit imaginary axis u.
Quaternion exp_imag(double t, double ux = 1, double uy = 0, double uz = 0);
Quaternion to_double(const ExactQuaternion& q);
std::string str(const Quaternion& q);
std::string str(const ExactQuaternion& q);

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GroupWord {
  std::vector<Letter> letters;

  /// Parses tokens such as "a b^-1 A B" where upper case means inverse.
  /// Generators: 'a' -> 0, 'b' -> 1, ... .
  static GroupWord parse(const std::string& text);
  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& u, const GroupWord& v);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

/// Product of assigned values left to right; inverses are conjugates, so the
/// assignment must consist of unit quaternions. Throws std::invalid_argument
/// on an unassigned generator.
template <typename T>
BasicQuaternion<T> eval_word(const GroupWord& w, const std::map<int, BasicQuaternion<T>>& assignment);

namespace words {
GroupWord relator();           // [a^-1,b][a,b^-1]
GroupWord longitude(int i);    // i = 1: a b a^-1 b,  i = 2: b a b^-1 a
GroupWord knot_meridian(int i);  // mu_{A_i}^-2 * longitude(i)
GroupWord central();           // (a b^-1)^2
GroupWord commutator();        // a b a^-1 b^-1
}  // namespace words

struct Tolerances {
  static constexpr double norm = 1e-12;
  static constexpr double rep = 1e-9;
  static constexpr double abelian = 1e-6;
  static constexpr int max_iters = 500;
};

struct LinkRep {
  Quaternion mu1;
  Quaternion mu2;
  double residual = 0;  // |relator - 1|
};

LinkRep make_link_rep(const Quaternion& mu1, const Quaternion& mu2);

struct SolveResult {
  bool converged = false;
  LinkRep rep;
  int iterations = 0;
};

/// Levenberg-Marquardt on the 8 quaternion coordinates with renormalisation
/// after each accepted step. When want_nonabelian is set a barrier keeps the
/// commutator away from 1. Throws std::invalid_argument on a non-unit seed.
SolveResult solve_relator(const Quaternion& seed1, const Quaternion& seed2, bool want_nonabelian,
                          double tol = Tolerances::rep, int max_iters = Tolerances::max_iters);

/// Uniform point on S^3 from normalised Gaussian samples.
Quaternion random_unit(std::mt19937_64& rng);

enum class Label { A, N };
char to_char(Label l);

struct AbelianLabel {
  Label label = Label::A;
  double witness = 0;  // |[mu1, mu2] - 1|
};

AbelianLabel classify_abelian(const LinkRep& rep, double eps = Tolerances::abelian);

struct MechanismReport {
  Quaternion lambda1, lambda2;
  Quaternion knot_meridian1, knot_meridian2;
  Quaternion central;
  bool nonabelian = false;
  double central_defect = 0;
  double meridian_defect1 = 0;
  double meridian_defect2 = 0;
  /// For abelian reps the substitution identities hold; for nonabelian reps
  /// the central word and both knot meridians lie within tol of +-1.
  bool passed = false;
};

/// Throws std::invalid_argument when rep.residual >= tol.
MechanismReport verify_mechanism(const LinkRep& rep, double tol);

struct ExactMechanismReport {
  ExactQuaternion relator, lambda1, lambda2, knot_meridian1, knot_meridian2, central;
};

/// Exact evaluation for Lipschitz units (norm exactly 1).
ExactMechanismReport verify_mechanism_exact(const ExactQuaternion& mu1, const ExactQuaternion& mu2);

/// Labels (k, l), 1 <= k < p, 1 <= l < q, k = l mod 2, of the arcs of
/// irreducible SU(2) characters of the (p,q) torus knot.
std::vector<std::pair<int, int>> torus_knot_irreps(int p, int q);

enum class TripleStatus { Forbidden, TrivialOnly, Allowed };
const char* to_string(TripleStatus s);

TripleStatus label_triple_allowed(Label x1, Label y, Label x2);

struct SeedOutcome {
  std::uint64_t seed = 0;
  SolveResult result;
  AbelianLabel label;
  std::optional<MechanismReport> report;  // present when converged
};

/// Runs solve_relator from seeds base_seed, base_seed+1, ... in parallel and
/// returns outcomes sorted by seed.
std::vector<SeedOutcome> rep_search(int n_seeds, std::uint64_t base_seed, bool want_nonabelian,
                                    double tol = Tolerances::rep, double mechanism_tol = 1e-7);

}  // namespace csobstruct
