#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "csobstruct/quatrep.hpp"

using namespace csobstruct;

namespace {

const ExactQuaternion kOne{1, 0, 0, 0};
const ExactQuaternion kI{0, 1, 0, 0};
const ExactQuaternion kJ{0, 0, 1, 0};
const ExactQuaternion kK{0, 0, 0, 1};

std::vector<ExactQuaternion> lipschitz_units() {
  std::vector<ExactQuaternion> out;
  for (const auto& u : {kOne, kI, kJ, kK}) {
    out.push_back(u);
    out.push_back(-u);
  }
  return out;
}

GroupWord random_word(std::mt19937_64& rng, int gens, int len) {
  GroupWord w;
  for (int i = 0; i < len; ++i)
    w.letters.push_back({static_cast<int>(rng() % gens), rng() % 2 ? 1 : -1});
  return w;
}

}  // namespace

TEST_CASE("quaternion units multiply as i j = k") {
  CHECK(kI * kJ == kK);
  CHECK(kJ * kK == kI);
  CHECK(kK * kI == kJ);
  CHECK(kI * kI == -kOne);
  CHECK(kJ * kI == -kK);
}

TEST_CASE("word evaluation") {
  const std::map<int, ExactQuaternion> ij{{0, kI}, {1, kJ}};
  CHECK(eval_word(GroupWord{}, ij) == kOne);
  CHECK(eval_word(words::relator(), ij) == kOne);
  CHECK(eval_word(words::relator(), std::map<int, ExactQuaternion>{{0, kI}, {1, kK}}) == kOne);

  const Quaternion e1 = exp_imag(0.7), e2 = exp_imag(-2.1);
  CHECK(distance(eval_word(words::relator(), std::map<int, Quaternion>{{0, e1}, {1, e2}}),
                 Quaternion::one()) < 1e-15);
  CHECK_THROWS_AS(eval_word(GroupWord::parse("a c"), ij), std::invalid_argument);
  CHECK(GroupWord::parse("a b^-1 A") == GroupWord{{{0, 1}, {1, -1}, {0, -1}}});
  CHECK_THROWS_AS(GroupWord::parse("a^2"), std::invalid_argument);
}

TEST_CASE("eval_word is a homomorphism (exact submode)") {
  std::mt19937_64 rng(3);
  const auto units = lipschitz_units();
  for (int t = 0; t < 500; ++t) {
    std::map<int, ExactQuaternion> as;
    for (int g = 0; g < 3; ++g) as[g] = units[rng() % units.size()];
    const GroupWord u = random_word(rng, 3, static_cast<int>(rng() % 12));
    const GroupWord v = random_word(rng, 3, static_cast<int>(rng() % 12));
    CHECK(eval_word(u * v, as) == eval_word(u, as) * eval_word(v, as));
    CHECK(eval_word(u * u.inverse(), as) == kOne);
  }
}

TEST_CASE("eval_word is a homomorphism (floating point)") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    std::map<int, Quaternion> as;
    for (int g = 0; g < 3; ++g) as[g] = random_unit(rng);
    const GroupWord u = random_word(rng, 3, static_cast<int>(rng() % 10));
    const GroupWord v = random_word(rng, 3, static_cast<int>(rng() % 10));
    CHECK(distance(eval_word(u * v, as), eval_word(u, as) * eval_word(v, as)) < 1e-12);
  }
}

TEST_CASE("exact mechanism at (i, j)") {
  const ExactMechanismReport r = verify_mechanism_exact(kI, kJ);
  CHECK(r.relator == kOne);
  CHECK(r.lambda1 == kOne);
  CHECK(r.knot_meridian1 == -kOne);
  CHECK(r.central == -kOne);
  CHECK(r.knot_meridian2 == -kOne);
  CHECK_THROWS_AS(verify_mechanism_exact(ExactQuaternion{1, 1, 0, 0}, kJ), std::invalid_argument);
}

TEST_CASE("every Lipschitz pair solving the relator obeys the central identities") {
  const auto units = lipschitz_units();
  for (const auto& a : units)
    for (const auto& b : units) {
      const ExactMechanismReport r = verify_mechanism_exact(a, b);
      if (r.relator != kOne) continue;
      const bool commute = a * b == b * a;
      if (commute) {
        CHECK(r.lambda1 == b * b);
        CHECK(r.knot_meridian1 == a.conj() * a.conj() * b * b);
      } else {
        CHECK((r.central == kOne || r.central == -kOne));
        CHECK((r.knot_meridian1 == kOne || r.knot_meridian1 == -kOne));
        CHECK((r.knot_meridian2 == kOne || r.knot_meridian2 == -kOne));
      }
    }
}

TEST_CASE("classify_abelian") {
  CHECK(classify_abelian(make_link_rep(to_double(kI), to_double(kJ))).label == Label::N);
  CHECK(classify_abelian(make_link_rep(exp_imag(M_PI / 5), exp_imag(M_PI / 3))).label == Label::A);
  CHECK(classify_abelian(make_link_rep(Quaternion::one(), Quaternion::one())).label == Label::A);
}

TEST_CASE("solver from a seed near (i, j)") {
  const Quaternion a = normalized({0.02, 1.0, 0.01, -0.03});
  const Quaternion b = normalized({-0.01, 0.05, 1.0, 0.02});
  const SolveResult s = solve_relator(a, b, true);
  REQUIRE(s.converged);
  CHECK(s.rep.residual < 1e-9);
  CHECK(classify_abelian(s.rep).label == Label::N);
  CHECK(central_defect(eval_word(words::central(), std::map<int, Quaternion>{{0, s.rep.mu1}, {1, s.rep.mu2}})) < 1e-7);
}

TEST_CASE("solver on a commuting seed") {
  const SolveResult s = solve_relator(exp_imag(0.4), exp_imag(1.3), false);
  CHECK(s.converged);
  CHECK(s.iterations == 0);
  CHECK(s.rep.residual < 1e-15);
  CHECK_THROWS_AS(solve_relator({2, 0, 0, 0}, exp_imag(1.0), false), std::invalid_argument);
}

TEST_CASE("random seeds: nonabelian solutions satisfy the forced identities") {
  const auto outcomes = rep_search(120, 1000, true);
  int converged = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    CHECK(o.seed == 1000 + i);
    if (!o.result.converged) continue;
    ++converged;
    REQUIRE(o.report.has_value());
    CHECK(o.result.rep.residual < 1e-9);
    if (o.label.label == Label::N) {
      CHECK(o.report->central_defect < 1e-7);
      CHECK(o.report->meridian_defect1 < 1e-7);
      CHECK(o.report->meridian_defect2 < 1e-7);
    }
    CHECK(o.report->passed);
  }
  CHECK(converged >= 114);
}

TEST_CASE("abelian mode solutions satisfy the substitution identities") {
  for (const auto& o : rep_search(40, 77, false)) {
    if (!o.report || o.report->nonabelian) continue;
    CHECK(o.report->passed);
  }
}

TEST_CASE("rep_search is deterministic") {
  const auto a = rep_search(10, 5, true);
  const auto b = rep_search(10, 5, true);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].result.rep.mu1 == b[i].result.rep.mu1);
    CHECK(a[i].result.rep.mu2 == b[i].result.rep.mu2);
  }
}

TEST_CASE("torus knot irreducible character arcs") {
  CHECK(torus_knot_irreps(2, 3).size() == 1);
  CHECK(torus_knot_irreps(2, 7).size() == 3);
  CHECK(torus_knot_irreps(3, 4).size() == 3);
  CHECK_THROWS_AS(torus_knot_irreps(2, 4), std::invalid_argument);
  for (int p = 2; p <= 200; ++p)
    for (int q = 2; p * q <= 200; ++q) {
      if (std::gcd(p, q) != 1) continue;
      std::size_t brute = 0;
      for (int k = 1; k < p; ++k)
        for (int l = 1; l < q; ++l) brute += (k % 2) == (l % 2);
      const auto labels = torus_knot_irreps(p, q);
      CHECK(labels.size() == brute);
      CHECK(labels.size() == static_cast<std::size_t>((p - 1) * (q - 1) / 2));
    }
}

TEST_CASE("label triples") {
  using L = Label;
  const L ab[2] = {L::A, L::N};
  for (L x1 : ab)
    for (L y : ab)
      for (L x2 : ab) CHECK(label_triple_allowed(x1, y, x2) == label_triple_allowed(x2, y, x1));
  CHECK(label_triple_allowed(L::A, L::N, L::N) == TripleStatus::Forbidden);
  CHECK(label_triple_allowed(L::N, L::A, L::N) == TripleStatus::Allowed);
  CHECK(label_triple_allowed(L::A, L::A, L::A) == TripleStatus::TrivialOnly);
}
