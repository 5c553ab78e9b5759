#include "csobstruct/certificate.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "csobstruct/parallel.hpp"

namespace csobstruct {

using json = nlohmann::ordered_json;

const char* to_string(Verdict v) { return v == Verdict::Certified ? "Certified" : "Rejected"; }

namespace {

std::vector<KnotPair> sorted_knots(std::vector<KnotPair> knots) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& k : knots) {
    KnotPair::make(k.p, k.q);
    if (!seen.insert({std::min(k.p, k.q), std::max(k.p, k.q)}).second) {
      throw std::invalid_argument("duplicate knot " + k.str());
    }
  }
  std::stable_sort(knots.begin(), knots.end(), [](const KnotPair& a, const KnotPair& b) {
    const BigInt ea = a.energy_denominator();
    const BigInt eb = b.energy_denominator();
    if (ea != eb) return ea < eb;
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  });
  return knots;
}

std::vector<CheckRecord> all_checks(const std::vector<KnotPair>& knots) {
  std::vector<CheckRecord> checks;
  for (std::size_t i = 1; i < knots.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) checks.push_back({i, j, 0, 0, false});
  parallel_for(checks.size(), [&](std::size_t n) {
    CheckRecord& c = checks[n];
    c.lhs = knots[c.i].energy_denominator();
    c.rhs = knots[c.j].cover_denominator();
    c.pass = c.lhs > c.rhs;
  });
  return checks;
}

}  // namespace

Certificate certify_independence(const std::vector<KnotPair>& input) {
  Certificate c;
  c.knots = sorted_knots(input);
  c.checks = all_checks(c.knots);
  c.verdict = Verdict::Certified;
  for (const auto& r : c.checks) {
    if (!r.pass) {
      c.verdict = Verdict::Rejected;
      c.failing_pair = std::make_pair(r.i, r.j);
      break;
    }
  }
  c.toolkit_version = CSOBSTRUCT_VERSION;
  return c;
}

std::string to_json(const Certificate& c) {
  json doc;
  doc["knots"] = json::array();
  for (const auto& k : c.knots)
    doc["knots"].push_back(json::array({std::to_string(k.p), std::to_string(k.q)}));
  doc["checks"] = json::array();
  for (const auto& r : c.checks) {
    doc["checks"].push_back(
        {{"i", r.i}, {"j", r.j}, {"lhs", r.lhs.get_str()}, {"rhs", r.rhs.get_str()}, {"pass", r.pass}});
  }
  doc["verdict"] = to_string(c.verdict);
  doc["failing_pair"] =
      c.failing_pair ? json::array({c.failing_pair->first, c.failing_pair->second}) : json(nullptr);
  doc["toolkit_version"] = c.toolkit_version;
  return doc.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    Certificate c;
    for (const auto& k : doc.at("knots")) {
      const BigInt p = parse_bigint(k.at(0).get<std::string>());
      const BigInt q = parse_bigint(k.at(1).get<std::string>());
      if (!p.fits_slong_p() || !q.fits_slong_p()) throw std::invalid_argument("knot out of range");
      c.knots.push_back(KnotPair::make(p.get_si(), q.get_si()));
    }
    for (const auto& r : doc.at("checks")) {
      c.checks.push_back({r.at("i").get<std::size_t>(), r.at("j").get<std::size_t>(),
                          parse_bigint(r.at("lhs").get<std::string>()),
                          parse_bigint(r.at("rhs").get<std::string>()), r.at("pass").get<bool>()});
    }
    const std::string verdict = doc.at("verdict").get<std::string>();
    if (verdict == "Certified") {
      c.verdict = Verdict::Certified;
    } else if (verdict == "Rejected") {
      c.verdict = Verdict::Rejected;
    } else {
      throw std::invalid_argument("unknown verdict '" + verdict + "'");
    }
    const json& fp = doc.at("failing_pair");
    if (!fp.is_null()) c.failing_pair = std::make_pair(fp.at(0).get<std::size_t>(), fp.at(1).get<std::size_t>());
    c.toolkit_version = doc.at("toolkit_version").get<std::string>();
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

bool recheck_certificate(const Certificate& c) {
  std::vector<KnotPair> resorted;
  try {
    resorted = sorted_knots(c.knots);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (resorted != c.knots) return false;
  const std::vector<CheckRecord> expected = all_checks(c.knots);
  if (expected != c.checks) return false;
  std::optional<std::pair<std::size_t, std::size_t>> first_fail;
  for (const auto& r : expected) {
    if (!r.pass) {
      first_fail = std::make_pair(r.i, r.j);
      break;
    }
  }
  const Verdict v = first_fail ? Verdict::Rejected : Verdict::Certified;
  return v == c.verdict && first_fail == c.failing_pair;
}

}  // namespace csobstruct
