#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csobstruct/exactq.hpp"

namespace csobstruct {

struct KnotPair {
  std::int64_t p = 2;
  std::int64_t q = 3;

  /// Throws std::invalid_argument unless p, q >= 2 and gcd(p, q) = 1.
  static KnotPair make(std::int64_t p, std::int64_t q);
  /// Parses "p,q".
  static KnotPair parse(const std::string& text);

  BigInt pq() const { return big(p) * big(q); }
  /// pq(2pq - 1): reciprocal of -e.e for the Whitehead block.
  BigInt energy_denominator() const { return pq() * (2 * pq() - 1); }
  /// pq(4pq - 1): reciprocal of the tau bound on the branched cover.
  BigInt cover_denominator() const { return pq() * (4 * pq() - 1); }

  std::string str() const;
  friend bool operator==(const KnotPair&, const KnotPair&) = default;
};

struct StepWitness {
  BigInt lhs;  // next.energy_denominator()
  BigInt rhs;  // prev.cover_denominator()
  bool pass = false;
};

/// p'q'(2p'q'-1) > pq(4pq-1).
StepWitness admissible_step(const KnotPair& prev, const KnotPair& next);

struct Family {
  std::vector<KnotPair> pairs;
  std::vector<StepWitness> steps;  // steps[i] links pairs[i] -> pairs[i+1]
};

/// (2, 2^n - 1) for n = 2..n_max, every step verified. Throws
/// std::invalid_argument for n_max < 2 or n_max > 62 and std::logic_error if
/// a step fails.
Family power_family(int n_max);

struct FamilyFailure {
  std::size_t index = 0;
  std::string reason;
};

struct KnFamilyResult {
  Family family;  // pairs built up to (excluding) the failing index
  std::optional<FamilyFailure> failure;
  bool ok() const { return !failure; }
};

/// (n, n k_n - 1) for n = n_start, n_start + 1, ...; checks coprimality,
/// 2 k_{n-1}^2 < k_n^2 and the admissible step, reporting the first
/// failing index into k_values.
KnFamilyResult kn_family(const std::vector<std::int64_t>& k_values, std::int64_t n_start = 2);

struct PairRecord {
  std::size_t i = 0;
  std::size_t j = 0;  // j < i
  StepWitness witness;
};

struct ChainReport {
  std::vector<PairRecord> consecutive;  // (i, i-1)
  std::vector<PairRecord> pairwise;     // all j < i
  bool consecutive_pass = true;
  bool pairwise_pass = true;
  bool pass() const { return consecutive_pass && pairwise_pass; }
};

/// Checks the list in the given order.
ChainReport verify_chain(const std::vector<KnotPair>& pairs);

}  // namespace csobstruct
