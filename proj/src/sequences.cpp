#include "csobstruct/sequences.hpp"

#include <numeric>
#include <stdexcept>

namespace csobstruct {

KnotPair KnotPair::make(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) {
    throw std::invalid_argument("knot pair (" + std::to_string(p) + "," + std::to_string(q) +
                                ") needs p, q >= 2");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("knot pair (" + std::to_string(p) + "," + std::to_string(q) +
                                ") is not coprime");
  }
  return {p, q};
}

KnotPair KnotPair::parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected p,q but got '" + text + "'");
  const BigInt p = parse_bigint(text.substr(0, comma));
  const BigInt q = parse_bigint(text.substr(comma + 1));
  if (!p.fits_slong_p() || !q.fits_slong_p()) {
    throw std::invalid_argument("knot parameters out of range in '" + text + "'");
  }
  return make(p.get_si(), q.get_si());
}

std::string KnotPair::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

StepWitness admissible_step(const KnotPair& prev, const KnotPair& next) {
  StepWitness w{next.energy_denominator(), prev.cover_denominator(), false};
  w.pass = w.lhs > w.rhs;
  return w;
}

Family power_family(int n_max) {
  if (n_max < 2 || n_max > 62) throw std::invalid_argument("power_family needs 2 <= n_max <= 62");
  Family f;
  for (int n = 2; n <= n_max; ++n) {
    f.pairs.push_back(KnotPair::make(2, (std::int64_t{1} << n) - 1));
    if (f.pairs.size() >= 2) {
      const StepWitness w = admissible_step(f.pairs[f.pairs.size() - 2], f.pairs.back());
      if (!w.pass) {
        throw std::logic_error("power family step " + std::to_string(n) + " failed: " +
                               w.lhs.get_str() + " <= " + w.rhs.get_str());
      }
      f.steps.push_back(w);
    }
  }
  return f;
}

KnFamilyResult kn_family(const std::vector<std::int64_t>& k_values, std::int64_t n_start) {
  if (n_start < 2) throw std::invalid_argument("kn_family needs n_start >= 2");
  KnFamilyResult out;
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    const std::int64_t k = k_values[i];
    if (k < 1) throw std::invalid_argument("k values must be positive");
    const BigInt n = big(n_start) + big(static_cast<std::int64_t>(i));
    const BigInt qv = n * big(k) - 1;
    auto fail = [&](std::string reason) {
      out.failure = FamilyFailure{i, std::move(reason)};
      return out;
    };
    if (!n.fits_slong_p() || !qv.fits_slong_p()) return fail("parameters out of range");
    KnotPair pair;
    try {
      pair = KnotPair::make(n.get_si(), qv.get_si());
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    }
    if (i > 0) {
      const BigInt prev = big(k_values[i - 1]);
      const BigInt lhs = 2 * prev * prev;
      const BigInt rhs = big(k) * big(k);
      if (!(lhs < rhs)) {
        return fail("growth condition 2*k^2 < k'^2 fails: " + lhs.get_str() + " >= " +
                    rhs.get_str());
      }
      const StepWitness w = admissible_step(out.family.pairs.back(), pair);
      if (!w.pass) {
        return fail("step inequality fails: " + w.lhs.get_str() + " <= " + w.rhs.get_str());
      }
      out.family.steps.push_back(w);
    }
    out.family.pairs.push_back(pair);
  }
  return out;
}

ChainReport verify_chain(const std::vector<KnotPair>& pairs) {
  ChainReport r;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    r.consecutive.push_back({i, i - 1, admissible_step(pairs[i - 1], pairs[i])});
    r.consecutive_pass = r.consecutive_pass && r.consecutive.back().witness.pass;
    for (std::size_t j = 0; j < i; ++j) {
      r.pairwise.push_back({i, j, admissible_step(pairs[j], pairs[i])});
      r.pairwise_pass = r.pairwise_pass && r.pairwise.back().witness.pass;
    }
  }
  return r;
}

}  // namespace csobstruct
