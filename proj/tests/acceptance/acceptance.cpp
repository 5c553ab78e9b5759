// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "csobstruct/certificate.hpp"
#include "csobstruct/cli.hpp"
#include "csobstruct/exactq.hpp"
#include "csobstruct/lattice.hpp"
#include "csobstruct/obstruction.hpp"
#include "csobstruct/quatrep.hpp"
#include "csobstruct/seifert.hpp"
#include "lattice_sweep.hpp"
#include "oracles.hpp"

using namespace csobstruct;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str() + err.str()};
}

// Both sides of the separation inequality, straight from the formulas.
BigInt block_side(std::int64_t p, std::int64_t q) {
  const BigInt pq = big(p * q);
  return pq * (2 * pq - 1);
}
BigInt cover_side(std::int64_t p, std::int64_t q) {
  const BigInt pq = big(p * q);
  return pq * (4 * pq - 1);
}

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<KnotPair> knots{{2, 3}, {2, 7}, {2, 15}, {2, 31}};
  const Certificate c = certify_independence(knots);
  const CliRun run = cli({"certify", "2,3", "2,7", "2,15", "2,31"});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(c.verdict == Verdict::Certified, "verdict is not Certified");
  o.require(run.code == 0, "cli exit code " + std::to_string(run.code));
  o.require(c.checks.size() == 6, "expected 6 pairwise checks");
  for (const auto& r : c.checks) {
    const BigInt lhs = block_side(knots[r.i].p, knots[r.i].q);
    const BigInt rhs = cover_side(knots[r.j].p, knots[r.j].q);
    o.require(r.lhs == lhs && r.rhs == rhs && lhs > rhs && r.pass,
              "check (" + std::to_string(r.i) + "," + std::to_string(r.j) + ") mismatch");
  }
  std::ostringstream d;
  d << "witnesses";
  for (const auto& r : c.checks)
    if (r.i == r.j + 1) d << " " << r.lhs << ">" << r.rhs;
  d << "; " << secs << " s";
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome ac2() {
  Outcome o;
  const Certificate c = certify_independence({{2, 5}, {2, 7}});
  const CliRun run = cli({"certify", "2,5", "2,7"});
  o.require(c.verdict == Verdict::Rejected, "verdict is not Rejected");
  o.require(c.failing_pair == std::make_pair<std::size_t, std::size_t>(1, 0), "failing pair");
  o.require(c.checks.size() == 1 && c.checks[0].lhs == block_side(2, 7) &&
                c.checks[0].rhs == cover_side(2, 5) && c.checks[0].lhs == 378 &&
                c.checks[0].rhs == 390,
            "witness is not (378, 390)");
  o.require(run.code == 1, "cli exit code " + std::to_string(run.code));
  if (o.pass) o.detail = "Rejected at (2,7) vs (2,5): 378 <= 390, exit 1";
  return o;
}

Outcome ac3() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::ostringstream d;
  int done = 0;
  while (done < 10) {
    const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 99);
    const std::int64_t q = 2 + static_cast<std::int64_t>(rng() % 4999);
    if (p * q > 10000 || std::gcd(p, q) != 1) continue;
    const std::int64_t pq = p * q;
    const AbelianGroup g =
        h1_presented(IntMatrix::from_rows({{1 - 2 * pq, 2 * pq}, {2 * pq, 1 - 2 * pq}}));
    o.require(g.is_cyclic() && g.order() == big(4 * pq - 1),
              "(" + std::to_string(p) + "," + std::to_string(q) + ") gave " + g.str());
    d << (done ? " " : "") << "(" << p << "," << q << ")->" << g.str();
    ++done;
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome ac4() {
  Outcome o;
  std::ostringstream d;
  for (auto a : {std::array<std::int64_t, 3>{2, 3, 5}, {2, 3, 7}, {2, 3, 11}}) {
    const BrieskornSphere y = BrieskornSphere::make(a[0], a[1], a[2]);
    const auto cong = enumerate_flat_connections(y, CsConvention::Congruence);
    const auto search = enumerate_flat_connections(y, CsConvention::Search);
    o.require(cong == search, y.name() + ": conventions disagree");
    const BigInt den = 4 * y.order_product();
    for (const auto& c : cong)
      o.require((c.cs_su2.value * Rational(den)).is_integer(), y.name() + ": denominator");
    const auto b = seifert_invariants(y);
    std::vector<std::array<std::int64_t, 3>> brute;
    for (std::int64_t l1 = 1; l1 < a[0]; ++l1)
      for (std::int64_t l2 = 1; l2 < a[1]; ++l2)
        for (std::int64_t l3 = 1; l3 < a[2]; ++l3)
          if (oracle::rotation_triple_realisable(y.a, {l1, l2, l3}, b, 1) ||
              oracle::rotation_triple_realisable(y.a, {l1, l2, l3}, b, -1))
            brute.push_back({l1, l2, l3});
    std::vector<std::array<std::int64_t, 3>> got;
    for (const auto& c : cong) got.push_back(c.rotation);
    o.require(got == brute, y.name() + ": class list differs from the oracle");
    d << y.name() << ":";
    for (const auto& c : cong) d << " " << c.cs_su2.str();
    d << "; ";
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome ac5() {
  Outcome o;
  const Rational t23 = tau_lower_whitehead_cover(2, 3, 1).value;
  o.require(t23 == Rational(BigInt(1), BigInt(138)), "tau(2,3) = " + t23.str());
  o.require(tau_lower_whitehead_cover(2, 3, -1).value == t23, "orientation dependence");
  const Rational t27 = tau_lower_whitehead_cover(2, 7).value;
  const Rational t215 = tau_lower_whitehead_cover(2, 15).value;
  o.require(t23 > t27 && t27 > t215, "not strictly decreasing");
  int blocks = 0;
  for (std::int64_t p = 2; p <= 250; ++p)
    for (std::int64_t q = 2; p * q <= 500; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Block w = whitehead_block(p, q);
      const BigInt pq = big(p * q);
      const Rational energy = -w.e_square;
      o.require(energy == Rational(BigInt(1), pq * (2 * pq - 1)),
                "energy of W(" + std::to_string(p) + "," + std::to_string(q) + ")");
      for (const auto& c : w.boundary)
        if (c.tau_lower) o.require(energy < c.tau_lower->value, "lens bound not above energy");
      ++blocks;
    }
  if (o.pass) {
    o.detail = "1/138 both orientations; " + t23.str() + " > " + t27.str() + " > " +
               t215.str() + "; " + std::to_string(blocks) + " blocks";
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  const ExactQuaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, one{1, 0, 0, 0};
  const ExactMechanismReport ex = verify_mechanism_exact(i, j);
  o.require(ex.relator == one, "relator at (i,j)");
  o.require(ex.central == -one, "(mu1 mu2^-1)^2 at (i,j)");
  o.require(ex.lambda1 == one, "lambda_1 at (i,j)");
  o.require(ex.knot_meridian1 == -one, "mu_K1 at (i,j)");
  const auto runs = rep_search(100, 1, true);
  int converged = 0, nonabelian = 0;
  double worst = 0;
  for (const auto& r : runs) {
    if (!r.result.converged) continue;
    ++converged;
    o.require(r.result.rep.residual < 1e-9, "residual");
    if (r.label.label != Label::N) continue;
    ++nonabelian;
    worst = std::max({worst, r.report->central_defect, r.report->meridian_defect1,
                      r.report->meridian_defect2});
  }
  o.require(converged >= 95, "only " + std::to_string(converged) + " of 100 seeds converged");
  o.require(worst < 1e-7, "central defect " + std::to_string(worst));
  if (o.pass) {
    std::ostringstream d;
    d << "exact (i,j) ok; " << converged << "/100 converged, " << nonabelian
      << " nonabelian, worst defect " << worst;
    o.detail = d.str();
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  const Label ab[2] = {Label::A, Label::N};
  std::string forbidden, allowed, trivial;
  for (Label x1 : ab)
    for (Label y : ab)
      for (Label x2 : ab) {
        const TripleStatus s = label_triple_allowed(x1, y, x2);
        o.require(s == label_triple_allowed(x2, y, x1), "not symmetric");
        const std::string t{to_char(x1), to_char(y), to_char(x2)};
        (s == TripleStatus::Forbidden ? forbidden : s == TripleStatus::Allowed ? allowed : trivial) +=
            t + " ";
      }
  o.require(forbidden == "ANA ANN NNA NNN ", "forbidden set: " + forbidden);
  o.require(allowed == "AAN NAA NAN ", "allowed set: " + allowed);
  o.require(trivial == "AAA ", "trivial set: " + trivial);
  if (o.pass) o.detail = "forbidden {ANA ANN NNA NNN}, trivial-only {AAA}, allowed {AAN NAA NAN}";
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto single = enumerate_char_classes(
      IntMatrix::diagonal({BigInt(-1), BigInt(-1)}), {BigInt(1), BigInt(0)});
  o.require(single.classes.size() == 1, "diag(-1,-1), e=(1,0) gave " +
                                            std::to_string(single.classes.size()) + " classes");
  const sweep::Summary s = sweep::run_lattice_sweep();
  o.require(s.mismatches == 0, std::to_string(s.mismatches) + " mismatches, first at " +
                                   s.first_mismatch);
  if (o.pass) {
    o.detail = std::to_string(s.forms) + " forms, " + std::to_string(s.classes_checked) +
               " classes match box search";
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  o.require(index_leading(Rational(0), std::vector<IndexTerm>{}) == Rational(-3), "e = 0");
  const std::vector<IndexCorrection> six{{Rational(1), Rational(-1)}, {Rational(0), Rational(0)}};
  o.require(index_leading(Rational(-1), six) == Rational(2), "e.e = -1");
  bool threw = false;
  try {
    index_leading(Rational(0), std::vector<IndexTerm>{{"Y", false, std::nullopt}});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  o.require(threw, "missing correction accepted");
  if (o.pass) o.detail = "-3, 2, missing correction rejected";
  return o;
}

Outcome ac10() {
  Outcome o;
  const Block w = whitehead_block(2, 3);
  const Block closed = glue(w, rational_ball_block(2, 3), whitehead_cover_name(2, 3));
  o.require(contradiction_check(closed), "glued block does not contradict");
  o.require(!contradiction_check(w), "unglued block contradicts");
  if (o.pass) o.detail = "glued: true, unglued: false";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    const char* title;
    Outcome (*fn)();
  };
  const Criterion all[] = {
      {"AC1", "main family certificate", ac1},      {"AC2", "negative control", ac2},
      {"AC3", "branched cover homology", ac3},      {"AC4", "CS denominators and conventions", ac4},
      {"AC5", "tau bounds", ac5},                   {"AC6", "representation mechanism", ac6},
      {"AC7", "label classification", ac7},         {"AC8", "lattice oracle", ac8},
      {"AC9", "index formula", ac9},                {"AC10", "contradiction engine", ac10},
  };
  int failures = 0;
  for (const auto& c : all) {
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << c.name << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << ": "
              << o.detail << "\n";
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << (10 - failures) << "/10\n";
  return failures ? 1 : 0;
}
