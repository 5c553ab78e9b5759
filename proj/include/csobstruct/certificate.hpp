#pragma once

// Independence certificates for families of Whitehead doubles of torus
// knots. Knot i (in sorted order) is separated from every earlier knot j
// when the energy of its block, 1/(p_i q_i (2 p_i q_i - 1)), lies strictly
// below the tau bound 1/(p_j q_j (4 p_j q_j - 1)) of the branched cover of
// D(T_{p_j,q_j}); the certificate stores that comparison as two integers.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csobstruct/sequences.hpp"

namespace csobstruct {

enum class Verdict { Certified, Rejected };
const char* to_string(Verdict v);

struct CheckRecord {
  std::size_t i = 0;  // 0-based indices into Certificate::knots, j < i
  std::size_t j = 0;
  BigInt lhs;  // p_i q_i (2 p_i q_i - 1)
  BigInt rhs;  // p_j q_j (4 p_j q_j - 1)
  bool pass = false;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Certificate {
  std::vector<KnotPair> knots;  // sorted by pq(2pq-1), then p, then q
  std::vector<CheckRecord> checks;
  Verdict verdict = Verdict::Rejected;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::string toolkit_version;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Throws std::invalid_argument on invalid pairs or duplicates ((p,q) and
/// (q,p) name the same knot).
Certificate certify_independence(const std::vector<KnotPair>& knots);

/// Pretty-printed JSON with integers as decimal strings.
std::string to_json(const Certificate& c);
/// Throws std::invalid_argument on malformed documents.
Certificate certificate_from_json(const std::string& text);

/// Recomputes every record from the knot list; true iff the stored
/// certificate is internally consistent and complete.
bool recheck_certificate(const Certificate& c);

}  // namespace csobstruct
