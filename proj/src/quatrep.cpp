#include "csobstruct/quatrep.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "csobstruct/parallel.hpp"

namespace csobstruct {

Quaternion normalized(const Quaternion& q) {
  const double n = norm(q);
  if (n == 0) throw std::invalid_argument("cannot normalise the zero quaternion");
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

Quaternion exp_imag(double t, double ux, double uy, double uz) {
  const double s = std::sin(t);
  return {std::cos(t), s * ux, s * uy, s * uz};
}

Quaternion to_double(const ExactQuaternion& q) {
  return {static_cast<double>(q.w), static_cast<double>(q.x), static_cast<double>(q.y),
          static_cast<double>(q.z)};
}

std::string str(const Quaternion& q) {
  std::ostringstream os;
  os << std::setprecision(12) << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
  return os.str();
}

std::string str(const ExactQuaternion& q) {
  return "(" + std::to_string(q.w) + ", " + std::to_string(q.x) + ", " + std::to_string(q.y) +
         ", " + std::to_string(q.z) + ")";
}

// ---------------------------------------------------------------- words

GroupWord GroupWord::parse(const std::string& text) {
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const char c = tok[0];
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad word token '" + tok + "'");
    }
    Letter l{std::tolower(static_cast<unsigned char>(c)) - 'a',
             std::isupper(static_cast<unsigned char>(c)) ? -1 : 1};
    const std::string rest = tok.substr(1);
    if (rest == "^-1") {
      l.exponent = -l.exponent;
    } else if (!rest.empty()) {
      throw std::invalid_argument("bad word token '" + tok + "'");
    }
    w.letters.push_back(l);
  }
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back({it->generator, -it->exponent});
  return w;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  GroupWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

template <typename T>
BasicQuaternion<T> eval_word(const GroupWord& w,
                             const std::map<int, BasicQuaternion<T>>& assignment) {
  auto acc = BasicQuaternion<T>::one();
  for (const auto& l : w.letters) {
    const auto it = assignment.find(l.generator);
    if (it == assignment.end()) {
      throw std::invalid_argument("unassigned generator " + std::to_string(l.generator));
    }
    acc = acc * (l.exponent > 0 ? it->second : it->second.conj());
  }
  return acc;
}

template Quaternion eval_word(const GroupWord&, const std::map<int, Quaternion>&);
template ExactQuaternion eval_word(const GroupWord&, const std::map<int, ExactQuaternion>&);

namespace words {
GroupWord relator() { return GroupWord::parse("A b a B a B A b"); }
GroupWord longitude(int i) {
  if (i == 1) return GroupWord::parse("a b A b");
  if (i == 2) return GroupWord::parse("b a B a");
  throw std::invalid_argument("longitude index must be 1 or 2");
}
GroupWord knot_meridian(int i) {
  const GroupWord m = GroupWord::parse(i == 1 ? "A A" : "B B");
  return m * longitude(i);
}
GroupWord central() { return GroupWord::parse("a B a B"); }
GroupWord commutator() { return GroupWord::parse("a b A B"); }
}  // namespace words

// ---------------------------------------------------------------- solver

namespace {

template <typename T>
std::map<int, BasicQuaternion<T>> assign(const BasicQuaternion<T>& a, const BasicQuaternion<T>& b) {
  return {{0, a}, {1, b}};
}

double relator_residual(const Quaternion& a, const Quaternion& b) {
  return distance(eval_word(words::relator(), assign(a, b)), Quaternion::one());
}

double commutator_norm(const Quaternion& a, const Quaternion& b) {
  return distance(eval_word(words::commutator(), assign(a, b)), Quaternion::one());
}

void require_unit(const Quaternion& q) {
  if (!(std::abs(q.norm2() - 1.0) <= Tolerances::norm)) {
    throw std::invalid_argument("seed is not a unit quaternion: " + str(q));
  }
}

constexpr double kBarrierRadius = 0.1;
constexpr double kBarrierWeight = 1.0;

using Vec8 = Eigen::Matrix<double, 8, 1>;

Vec8 pack(const Quaternion& a, const Quaternion& b) {
  Vec8 v;
  v << a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z;
  return v;
}

std::pair<Quaternion, Quaternion> unpack(const Vec8& v) {
  return {normalized({v[0], v[1], v[2], v[3]}), normalized({v[4], v[5], v[6], v[7]})};
}

Eigen::VectorXd residual_vector(const Vec8& v, bool want_nonabelian) {
  const auto [a, b] = unpack(v);
  const Quaternion r = eval_word(words::relator(), assign(a, b)) - Quaternion::one();
  Eigen::VectorXd out(want_nonabelian ? 5 : 4);
  out[0] = r.w;
  out[1] = r.x;
  out[2] = r.y;
  out[3] = r.z;
  if (want_nonabelian) {
    const double c = std::max(commutator_norm(a, b), 1e-300);
    out[4] = kBarrierWeight * std::max(0.0, kBarrierRadius / c - 1.0);
  }
  return out;
}

}  // namespace

LinkRep make_link_rep(const Quaternion& mu1, const Quaternion& mu2) {
  return {mu1, mu2, relator_residual(mu1, mu2)};
}

SolveResult solve_relator(const Quaternion& seed1, const Quaternion& seed2, bool want_nonabelian,
                          double tol, int max_iters) {
  require_unit(seed1);
  require_unit(seed2);
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");

  const double polish = tol * 1e-3;
  auto done = [&](const Quaternion& a, const Quaternion& b) {
    return relator_residual(a, b) < polish &&
           (!want_nonabelian || commutator_norm(a, b) > kBarrierRadius);
  };

  Vec8 x = pack(seed1, seed2);
  Eigen::VectorXd r = residual_vector(x, want_nonabelian);
  double cost = r.squaredNorm();
  double lambda = 1e-6;
  int it = 0;
  for (; it < max_iters; ++it) {
    const auto [a, b] = unpack(x);
    if (done(a, b)) break;

    Eigen::MatrixXd jac(r.size(), 8);
    const double h = 1e-7;
    for (int k = 0; k < 8; ++k) {
      Vec8 xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      jac.col(k) = (residual_vector(xp, want_nonabelian) - residual_vector(xm, want_nonabelian)) /
                   (2 * h);
    }

    bool accepted = false;
    for (int attempt = 0; attempt < 40 && !accepted; ++attempt) {
      // Damped least squares: minimise |J dx + r|^2 + lambda |dx|^2.
      const Eigen::Index m = r.size();
      Eigen::MatrixXd aug(m + 8, 8);
      aug.topRows(m) = jac;
      aug.bottomRows(8) = std::sqrt(lambda) * Eigen::MatrixXd::Identity(8, 8);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 8);
      rhs.head(m) = -r;
      Vec8 trial = x + aug.householderQr().solve(rhs);
      const auto [ta, tb] = unpack(trial);
      trial = pack(ta, tb);
      const Eigen::VectorXd tr = residual_vector(trial, want_nonabelian);
      const double tcost = tr.squaredNorm();
      if (std::isfinite(tcost) && tcost < cost) {
        x = trial;
        r = tr;
        cost = tcost;
        lambda = std::max(lambda / 10, 1e-14);
        accepted = true;
      } else {
        lambda *= 10;
      }
    }
    if (!accepted) break;  // stalled
  }

  const auto [a, b] = unpack(x);
  SolveResult out;
  out.rep = make_link_rep(a, b);
  out.iterations = it;
  out.converged = out.rep.residual < tol &&
                  (!want_nonabelian || commutator_norm(a, b) > Tolerances::abelian);
  return out;
}

Quaternion random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    const Quaternion q{g(rng), g(rng), g(rng), g(rng)};
    if (norm(q) > 1e-6) return normalized(q);
  }
}

// ---------------------------------------------------------------- labels

char to_char(Label l) { return l == Label::A ? 'A' : 'N'; }

AbelianLabel classify_abelian(const LinkRep& rep, double eps) {
  const double c = commutator_norm(rep.mu1, rep.mu2);
  return {c > eps ? Label::N : Label::A, c};
}

MechanismReport verify_mechanism(const LinkRep& rep, double tol) {
  if (!(rep.residual < tol)) {
    throw std::invalid_argument("representation residual " + std::to_string(rep.residual) +
                                " is not below tolerance");
  }
  const auto as = assign(rep.mu1, rep.mu2);
  MechanismReport m;
  m.lambda1 = eval_word(words::longitude(1), as);
  m.lambda2 = eval_word(words::longitude(2), as);
  m.knot_meridian1 = eval_word(words::knot_meridian(1), as);
  m.knot_meridian2 = eval_word(words::knot_meridian(2), as);
  m.central = eval_word(words::central(), as);
  m.nonabelian = classify_abelian(rep).label == Label::N;
  m.central_defect = csobstruct::central_defect(m.central);
  m.meridian_defect1 = csobstruct::central_defect(m.knot_meridian1);
  m.meridian_defect2 = csobstruct::central_defect(m.knot_meridian2);
  if (m.nonabelian) {
    m.passed = m.central_defect < tol && m.meridian_defect1 < tol && m.meridian_defect2 < tol;
  } else {
    // Commuting substitution: lambda_1 = mu_2^2, mu_K1 = mu_1^-2 mu_2^2.
    const Quaternion b2 = rep.mu2 * rep.mu2;
    const Quaternion a2 = rep.mu1 * rep.mu1;
    m.passed = distance(m.lambda1, b2) < tol && distance(m.lambda2, a2) < tol &&
               distance(m.knot_meridian1, a2.conj() * b2) < tol &&
               distance(m.knot_meridian2, b2.conj() * a2) < tol;
  }
  return m;
}

ExactMechanismReport verify_mechanism_exact(const ExactQuaternion& mu1,
                                            const ExactQuaternion& mu2) {
  if (mu1.norm2() != 1 || mu2.norm2() != 1) {
    throw std::invalid_argument("exact submode needs Lipschitz units");
  }
  const auto as = assign(mu1, mu2);
  return {eval_word(words::relator(), as),       eval_word(words::longitude(1), as),
          eval_word(words::longitude(2), as),    eval_word(words::knot_meridian(1), as),
          eval_word(words::knot_meridian(2), as), eval_word(words::central(), as)};
}

std::vector<std::pair<int, int>> torus_knot_irreps(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) {
    throw std::invalid_argument("torus knot parameters must be coprime and >= 2");
  }
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k < p; ++k)
    for (int l = 1; l < q; ++l)
      if ((k - l) % 2 == 0) out.emplace_back(k, l);
  return out;
}

const char* to_string(TripleStatus s) {
  switch (s) {
    case TripleStatus::Forbidden: return "forbidden";
    case TripleStatus::TrivialOnly: return "trivial-only";
    case TripleStatus::Allowed: return "allowed";
  }
  return "?";
}

TripleStatus label_triple_allowed(Label x1, Label y, Label x2) {
  if (y == Label::N) return TripleStatus::Forbidden;
  if (x1 == Label::A && x2 == Label::A) return TripleStatus::TrivialOnly;
  return TripleStatus::Allowed;
}

std::vector<SeedOutcome> rep_search(int n_seeds, std::uint64_t base_seed, bool want_nonabelian,
                                    double tol, double mechanism_tol) {
  if (n_seeds < 0) throw std::invalid_argument("seed count must be non-negative");
  std::vector<SeedOutcome> out(static_cast<std::size_t>(n_seeds));
  parallel_for(out.size(), [&](std::size_t i) {
    SeedOutcome& o = out[i];
    o.seed = base_seed + i;
    std::mt19937_64 rng(o.seed);
    const Quaternion s1 = random_unit(rng);
    const Quaternion s2 = random_unit(rng);
    o.result = solve_relator(s1, s2, want_nonabelian, tol);
    o.label = classify_abelian(o.result.rep);
    if (o.result.converged) o.report = verify_mechanism(o.result.rep, mechanism_tol);
  });
  return out;  // index order is seed order
}

}  // namespace csobstruct
