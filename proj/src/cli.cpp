#include "csobstruct/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "csobstruct/certificate.hpp"
#include "csobstruct/lattice.hpp"
#include "csobstruct/obstruction.hpp"
#include "csobstruct/quatrep.hpp"
#include "csobstruct/seifert.hpp"
#include "csobstruct/sequences.hpp"

namespace csobstruct::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Table, Json, Tsv };

// A command result in a shape every output format can render.
struct Report {
  std::optional<std::string> plain;  // table/tsv: print only this line
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  json doc;
  std::optional<std::string> json_text;  // preformatted document
  int exit_code = kOk;
};

void render(const Report& r, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << (r.json_text ? *r.json_text : r.doc.dump(2) + "\n");
    return;
  }
  if (r.plain) {
    out << *r.plain << "\n";
    return;
  }
  if (f == Format::Tsv) {
    for (const auto& [k, v] : r.summary) out << "# " << k << "\t" << v << "\n";
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
      out << "\n";
    };
    if (!r.headers.empty()) line(r.headers);
    for (const auto& row : r.rows) line(row);
    return;
  }
  std::size_t key_width = 0;
  for (const auto& kv : r.summary) key_width = std::max(key_width, kv.first.size());
  for (const auto& [k, v] : r.summary)
    out << k << ":" << std::string(key_width - k.size() + 1, ' ') << v << "\n";
  if (r.headers.empty()) return;
  if (!r.summary.empty()) out << "\n";
  std::vector<std::size_t> width(r.headers.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], cells[i].size());
  };
  measure(r.headers);
  for (const auto& row : r.rows) measure(row);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(r.headers);
  for (const auto& row : r.rows) line(row);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<BigInt> parse_int_list(const std::string& text) {
  std::vector<BigInt> v;
  for (const auto& t : split_list(text)) v.push_back(parse_bigint(t));
  return v;
}

std::int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::invalid_argument("value out of range: " + v.get_str());
  return v.get_si();
}

json tau_json(const std::optional<TauBound>& t) {
  if (!t) return nullptr;
  return {{"value", t->value.str()}, {"kind", to_string(t->kind)}};
}

// ---------------------------------------------------------------- commands

Report cs_invariants(std::int64_t p, std::int64_t q, std::int64_t k, const std::string& sign,
                     const std::string& convention) {
  if (sign != "+" && sign != "-") throw std::invalid_argument("--sign must be + or -");
  const BrieskornSphere y = surgery_to_brieskorn(p, q, k, sign == "+" ? 1 : -1);
  const CsConvention conv =
      convention == "search" ? CsConvention::Search : CsConvention::Congruence;
  const auto classes = enumerate_flat_connections(y, conv);
  const auto b = seifert_invariants(y);

  Report r;
  r.summary = {{"sphere", y.name()},
               {"seifert invariants", b[0].get_str() + "," + b[1].get_str() + "," + b[2].get_str()},
               {"classes", std::to_string(classes.size())},
               {"denominator bound", BigInt(4 * y.order_product()).get_str()}};
  r.headers = {"l1", "l2", "l3", "central", "cs_su2_mod1", "cs_so3_mod4"};
  r.doc["sphere"] = y.name();
  r.doc["seifert_invariants"] = json::array({b[0].get_str(), b[1].get_str(), b[2].get_str()});
  r.doc["convention"] = conv == CsConvention::Search ? "search" : "congruence";
  r.doc["classes"] = json::array();
  for (const auto& c : classes) {
    r.rows.push_back({std::to_string(c.rotation[0]), std::to_string(c.rotation[1]),
                      std::to_string(c.rotation[2]), c.central_sign > 0 ? "+1" : "-1",
                      c.cs_su2.str(), c.cs_so3().str()});
    r.doc["classes"].push_back({{"rotation", c.rotation},
                                {"central_sign", c.central_sign},
                                {"cs_su2", c.cs_su2.str()},
                                {"cs_so3", c.cs_so3().str()}});
  }
  return r;
}

Report tau_bound(const std::vector<std::int64_t>& whitehead, std::optional<std::string> denom,
                 const std::string& orientation) {
  TauBound t;
  if (!whitehead.empty() == denom.has_value()) {
    throw std::invalid_argument("give exactly one of --whitehead P Q or --denominator D");
  }
  if (!whitehead.empty()) {
    if (orientation != "+" && orientation != "-") {
      throw std::invalid_argument("--orientation must be + or -");
    }
    t = tau_lower_whitehead_cover(whitehead[0], whitehead[1], orientation == "+" ? 1 : -1);
  } else {
    t = tau_lower_from_denominator(parse_bigint(*denom));
  }
  Report r;
  r.plain = t.value.str();
  r.doc = {{"value", t.value.str()}, {"kind", to_string(t.kind)}};
  return r;
}

Report certify(const std::vector<std::string>& tokens) {
  std::vector<KnotPair> knots;
  for (const auto& t : tokens) knots.push_back(KnotPair::parse(t));
  const Certificate c = certify_independence(knots);
  Report r;
  std::string list;
  for (const auto& k : c.knots) list += (list.empty() ? "" : " ") + k.str();
  r.summary = {{"knots", list}, {"verdict", to_string(c.verdict)}};
  if (c.failing_pair) {
    r.summary.push_back({"failing pair", "i=" + std::to_string(c.failing_pair->first) +
                                             " j=" + std::to_string(c.failing_pair->second)});
  }
  r.headers = {"i", "j", "knot_i", "knot_j", "lhs", "rel", "rhs", "pass"};
  for (const auto& ch : c.checks) {
    r.rows.push_back({std::to_string(ch.i), std::to_string(ch.j), c.knots[ch.i].str(),
                      c.knots[ch.j].str(), ch.lhs.get_str(), ch.pass ? ">" : "<=",
                      ch.rhs.get_str(), ch.pass ? "yes" : "no"});
  }
  r.json_text = to_json(c);
  r.exit_code = c.verdict == Verdict::Certified ? kOk : kRejected;
  return r;
}

void family_rows(Report& r, const Family& f) {
  r.headers = {"index", "p", "q", "lhs", "rhs", "step"};
  r.doc["pairs"] = json::array();
  r.doc["steps"] = json::array();
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    std::vector<std::string> row{std::to_string(i), std::to_string(f.pairs[i].p),
                                 std::to_string(f.pairs[i].q), "", "", ""};
    if (i > 0) {
      const StepWitness& w = f.steps[i - 1];
      row[3] = w.lhs.get_str();
      row[4] = w.rhs.get_str();
      row[5] = w.pass ? "pass" : "fail";
      r.doc["steps"].push_back({{"from", i - 1},
                                {"to", i},
                                {"lhs", w.lhs.get_str()},
                                {"rhs", w.rhs.get_str()},
                                {"pass", w.pass}});
    }
    r.rows.push_back(row);
    r.doc["pairs"].push_back(json::array({std::to_string(f.pairs[i].p), std::to_string(f.pairs[i].q)}));
  }
}

Report sequence(std::optional<int> power, std::optional<std::string> kn, std::int64_t n_start) {
  if (power.has_value() == kn.has_value()) {
    throw std::invalid_argument("give exactly one of --power N or --kn K1,K2,...");
  }
  Report r;
  if (power) {
    const Family f = power_family(*power);
    r.summary = {{"family", "(2, 2^n - 1), n = 2.." + std::to_string(*power)},
                 {"status", "verified"}};
    r.doc["family"] = "power";
    r.doc["n_max"] = *power;
    r.doc["status"] = "verified";
    family_rows(r, f);
    return r;
  }
  std::vector<std::int64_t> ks;
  if (!kn->empty())
    for (const auto& v : parse_int_list(*kn)) ks.push_back(to_i64(v));
  const KnFamilyResult res = kn_family(ks, n_start);
  r.summary = {{"family", "(n, n*k_n - 1), n from " + std::to_string(n_start)},
               {"status", res.ok() ? "verified" : "failed"}};
  r.doc["family"] = "kn";
  r.doc["n_start"] = n_start;
  r.doc["status"] = res.ok() ? "verified" : "failed";
  if (res.failure) {
    r.summary.push_back({"failure", "index " + std::to_string(res.failure->index) + ": " +
                                        res.failure->reason});
    r.doc["failure"] = {{"index", res.failure->index}, {"reason", res.failure->reason}};
    r.exit_code = kRejected;
  } else {
    r.doc["failure"] = nullptr;
  }
  family_rows(r, res.family);
  return r;
}

Report rep_search_cmd(int seeds, std::uint64_t seed, bool abelian, double tol) {
  if (seeds < 1) throw std::invalid_argument("--seeds must be positive");
  const auto outcomes = rep_search(seeds, seed, !abelian, tol);
  int converged = 0, nonabelian = 0, passed = 0;
  Report r;
  r.headers = {"seed",    "converged", "iters",   "residual", "label",
               "comm",    "central",   "mu_K1",   "mu_K2",    "mechanism"};
  r.doc["results"] = json::array();
  for (const auto& o : outcomes) {
    converged += o.result.converged;
    const bool nab = o.label.label == Label::N;
    if (o.result.converged && nab) ++nonabelian;
    if (o.report && o.report->passed) ++passed;
    std::vector<std::string> row{std::to_string(o.seed), yes_no(o.result.converged),
                                 std::to_string(o.result.iterations), sci(o.result.rep.residual),
                                 std::string(1, to_char(o.label.label)), sci(o.label.witness)};
    json entry{{"seed", o.seed},
               {"converged", o.result.converged},
               {"iterations", o.result.iterations},
               {"residual", sci(o.result.rep.residual)},
               {"label", std::string(1, to_char(o.label.label))},
               {"commutator", sci(o.label.witness)}};
    if (o.report) {
      row.insert(row.end(), {sci(o.report->central_defect), sci(o.report->meridian_defect1),
                             sci(o.report->meridian_defect2), o.report->passed ? "pass" : "FAIL"});
      entry["central_defect"] = sci(o.report->central_defect);
      entry["meridian_defects"] = json::array(
          {sci(o.report->meridian_defect1), sci(o.report->meridian_defect2)});
      entry["mechanism"] = o.report->passed;
    } else {
      row.insert(row.end(), {"-", "-", "-", "-"});
      entry["mechanism"] = nullptr;
    }
    r.rows.push_back(row);
    r.doc["results"].push_back(entry);
  }
  r.summary = {{"seeds", std::to_string(seeds) + " starting at " + std::to_string(seed)},
               {"converged", std::to_string(converged)},
               {"nonabelian", std::to_string(nonabelian)},
               {"mechanism verified", std::to_string(passed)}};
  json head{{"seeds", seeds},
            {"base_seed", seed},
            {"want_nonabelian", !abelian},
            {"converged", converged},
            {"nonabelian", nonabelian},
            {"mechanism_verified", passed}};
  head["results"] = r.doc["results"];
  r.doc = head;
  if (passed != converged) r.exit_code = kRejected;
  return r;
}

IntMatrix read_matrix(const std::string& path, std::istream& in) {
  if (path == "-") return IntMatrix::parse(in);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return IntMatrix::parse(f);
}

Report snf(const std::string& path, std::istream& in) {
  const IntMatrix m = read_matrix(path, in);
  const SmithForm s = smith_normal_form(m);
  const AbelianGroup g = h1_presented(m);
  Report r;
  std::string factors;
  json jf = json::array();
  for (const auto& d : s.invariant_factors) {
    factors += (factors.empty() ? "" : " ") + d.get_str();
    jf.push_back(d.get_str());
  }
  r.summary = {{"invariant factors", factors.empty() ? "(none)" : factors},
               {"rank", std::to_string(s.rank)},
               {"group", g.str()}};
  r.doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"invariant_factors", jf},
           {"rank", s.rank},   {"group", g.str()}};
  return r;
}

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

Report char_classes(std::optional<std::string> diag, std::optional<std::string> matrix,
                    const std::string& e_text, std::istream& in) {
  if (diag.has_value() == matrix.has_value()) {
    throw std::invalid_argument("give exactly one of --diag or --matrix");
  }
  const IntMatrix form = diag ? IntMatrix::diagonal(parse_int_list(*diag)) : read_matrix(*matrix, in);
  const IntVector e = parse_int_list(e_text);
  const CharClassSet s = enumerate_char_classes(form, e);
  Report r;
  r.summary = {{"e", vec_str(e)},
               {"e.e", quadratic_form(form, e).get_str()},
               {"classes", std::to_string(s.classes.size())}};
  r.headers = {"index", "class"};
  r.doc["e"] = json::array();
  for (const auto& x : e) r.doc["e"].push_back(x.get_str());
  r.doc["e_square"] = quadratic_form(form, e).get_str();
  r.doc["classes"] = json::array();
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    r.rows.push_back({std::to_string(i), vec_str(s.classes[i])});
    json v = json::array();
    for (const auto& x : s.classes[i]) v.push_back(x.get_str());
    r.doc["classes"].push_back(v);
  }
  return r;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s.empty() ? "(empty)" : s;
}

Report block(const std::vector<std::int64_t>& wh, const std::vector<std::int64_t>& br,
             const std::vector<std::int64_t>& db, bool slice_ball) {
  const int chosen = !wh.empty() + !br.empty() + !db.empty();
  if (chosen != 1) {
    throw std::invalid_argument("give exactly one of --whitehead, --brieskorn, --doubling");
  }
  if (slice_ball && wh.empty()) throw std::invalid_argument("--slice-ball needs --whitehead");
  Block b = !wh.empty()   ? whitehead_block(wh[0], wh[1])
            : !br.empty() ? brieskorn_block(br[0], br[1], br[2])
                          : doubling_cobordism_block(db[0], db[1]);
  if (slice_ball) {
    b = glue(b, rational_ball_block(wh[0], wh[1]), whitehead_cover_name(wh[0], wh[1]));
  }
  const bool contradiction = contradiction_check(b);

  Report r;
  r.summary = {{"block", b.label},
               {"e.e", b.e_square.str()},
               {"negative definite", yes_no(b.flags.negative_definite)},
               {"H1(;Z/2) = 0", yes_no(b.flags.h1_mod2_zero)},
               {"property I", yes_no(b.flags.property_I)}};
  for (const auto& rp : b.partitions) {
    r.summary.push_back({"partition[" + rp.e_class + "] bound", rp.bound.str()});
    r.summary.push_back({"partition[" + rp.e_class + "] gl", join(rp.partition.gl)});
    r.summary.push_back({"partition[" + rp.e_class + "] cs", join(rp.partition.cs)});
  }
  r.summary.push_back({"contradiction", yes_no(contradiction)});
  r.headers = {"component", "kind", "tau_lower", "e_restriction"};

  r.doc["block"] = b.label;
  r.doc["e_square"] = b.e_square.str();
  r.doc["flags"] = {{"negative_definite", b.flags.negative_definite},
                    {"h1_mod2_zero", b.flags.h1_mod2_zero},
                    {"property_I", b.flags.property_I}};
  r.doc["boundary"] = json::array();
  for (const auto& c : b.boundary) {
    const bool integral = c.kind == ComponentKind::IntegralHomologySphere;
    r.rows.push_back({c.display(), integral ? "ZHS" : "QHS",
                      c.tau_lower ? c.tau_lower->value.str() : "-",
                      c.e_restriction_trivial ? "trivial" : "nontrivial"});
    r.doc["boundary"].push_back({{"name", c.display()},
                                 {"kind", integral ? "IntegralHomologySphere" : "RationalHomologySphere"},
                                 {"tau_lower", tau_json(c.tau_lower)},
                                 {"e_restriction_trivial", c.e_restriction_trivial}});
  }
  r.doc["partitions"] = json::array();
  for (const auto& rp : b.partitions) {
    r.doc["partitions"].push_back({{"class", rp.e_class},
                                   {"bound", rp.bound.str()},
                                   {"gl", rp.partition.gl},
                                   {"cs", rp.partition.cs}});
  }
  r.doc["provenance"] = b.provenance;
  r.doc["contradiction"] = contradiction;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Chern-Simons obstruction toolkit", "cs-obstruct"};
  app.set_version_flag("--version", std::string(CSOBSTRUCT_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "tsv"}));

  std::function<Report()> action;

  // cs-invariants
  auto* cs = app.add_subcommand("cs-invariants", "Flat SU(2) connections on -Sigma(p,q,pqk-+1)");
  std::int64_t cs_p = 0, cs_q = 0, cs_k = 0;
  std::string cs_sign = "+", cs_conv = "congruence";
  cs->add_option("p", cs_p)->required();
  cs->add_option("q", cs_q)->required();
  cs->add_option("k", cs_k)->required();
  cs->add_option("--sign", cs_sign, "+ for 1/k surgery, - for -1/k")
      ->check(CLI::IsMember({"+", "-"}));
  cs->add_option("--convention", cs_conv)->check(CLI::IsMember({"congruence", "search"}));
  cs->callback([&] { action = [&] { return cs_invariants(cs_p, cs_q, cs_k, cs_sign, cs_conv); }; });

  // tau-bound
  auto* tb = app.add_subcommand("tau-bound", "Lower bound for tau");
  std::vector<std::int64_t> tb_wh;
  std::optional<std::string> tb_den;
  std::string tb_orient = "+";
  tb->add_option("--whitehead", tb_wh, "P Q: branched cover of D(T(P,Q))")->expected(2);
  tb->add_option("--denominator", tb_den, "CS values with denominator dividing D");
  tb->add_option("--orientation", tb_orient)->check(CLI::IsMember({"+", "-"}));
  tb->callback([&] { action = [&] { return tau_bound(tb_wh, tb_den, tb_orient); }; });

  // certify
  auto* ce = app.add_subcommand("certify", "Independence certificate for D(T(p,q)) knots");
  std::vector<std::string> ce_knots;
  ce->add_option("knots", ce_knots, "p,q pairs")->required();
  ce->callback([&] { action = [&] { return certify(ce_knots); }; });

  // sequence
  auto* sq = app.add_subcommand("sequence", "Verify torus knot sequences");
  std::optional<int> sq_power;
  std::optional<std::string> sq_kn;
  std::int64_t sq_start = 2;
  sq->add_option("--power", sq_power, "(2, 2^n - 1) up to n_max");
  sq->add_option("--kn", sq_kn, "k_n values, comma separated");
  sq->add_option("--n-start", sq_start, "first n for --kn");
  sq->callback([&] { action = [&] { return sequence(sq_power, sq_kn, sq_start); }; });

  // rep-search
  auto* rs = app.add_subcommand("rep-search", "Solve the (2,4) torus link relator from random seeds");
  int rs_seeds = 100;
  std::uint64_t rs_seed = 1;
  bool rs_abelian = false;
  double rs_tol = Tolerances::rep;
  rs->add_option("--seeds", rs_seeds, "number of seeds");
  rs->add_option("--seed", rs_seed, "first seed");
  rs->add_flag("--abelian", rs_abelian, "do not push away from abelian solutions");
  rs->add_option("--tol", rs_tol, "relator residual tolerance");
  rs->callback([&] { action = [&] { return rep_search_cmd(rs_seeds, rs_seed, rs_abelian, rs_tol); }; });

  // snf
  auto* sn = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  std::string sn_path = "-";
  sn->add_option("file", sn_path, "matrix file ('rows cols' then entries); - for stdin");
  sn->callback([&] { action = [&] { return snf(sn_path, in); }; });

  // char-classes
  auto* cc = app.add_subcommand("char-classes", "Classes e' with e'.e' = e.e and e' = e mod 2");
  std::optional<std::string> cc_diag, cc_matrix;
  std::string cc_e;
  cc->add_option("--diag", cc_diag, "diagonal of the form, comma separated");
  cc->add_option("--matrix", cc_matrix, "matrix file; - for stdin");
  cc->add_option("--e", cc_e, "class, comma separated")->required();
  cc->callback([&] { action = [&] { return char_classes(cc_diag, cc_matrix, cc_e, in); }; });

  // block
  auto* bl = app.add_subcommand("block", "Cobordism block summary");
  std::vector<std::int64_t> bl_wh, bl_br, bl_db;
  bool bl_ball = false;
  bl->add_option("--whitehead", bl_wh, "P Q")->expected(2);
  bl->add_option("--brieskorn", bl_br, "P Q K")->expected(3);
  bl->add_option("--doubling", bl_db, "P Q")->expected(2);
  bl->add_flag("--slice-ball", bl_ball, "glue a Z/2-homology ball onto the Whitehead block");
  bl->callback([&] { action = [&] { return block(bl_wh, bl_br, bl_db, bl_ball); }; });

  auto usage = [&]() -> std::string {
    for (auto* sub : app.get_subcommands()) return sub->help();
    return app.help();
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << CSOBSTRUCT_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return kUsage;
  }

  const Format fmt = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Table;
  try {
    const Report r = action();
    render(r, fmt, out);
    return r.exit_code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << usage();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRejected;
  }
}

}  // namespace csobstruct::cli
