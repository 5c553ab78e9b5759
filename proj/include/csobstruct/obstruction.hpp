#pragma once

// Symbolic cobordism blocks. A block records only what the obstruction
// argument consumes: its oriented boundary, the square of the class e,
// three hypothesis flags and any cs-partitions established so far. The
// constructors encode known geometric results as axioms; everything
// downstream is exact bookkeeping.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csobstruct/exactq.hpp"
#include "csobstruct/seifert.hpp"

namespace csobstruct {

enum class ComponentKind { IntegralHomologySphere, RationalHomologySphere };

struct BoundaryComponent {
  std::string name;  // unsigned base name, e.g. "Sigma(2,3,11)"
  int orientation = 1;
  ComponentKind kind = ComponentKind::IntegralHomologySphere;
  std::optional<TauBound> tau_lower;
  bool e_restriction_trivial = true;

  /// Name with a leading '-' for negative orientation.
  std::string display() const;
  friend bool operator==(const BoundaryComponent&, const BoundaryComponent&) = default;
};

struct BlockFlags {
  bool negative_definite = false;
  bool h1_mod2_zero = false;
  bool property_I = false;
  friend bool operator==(const BlockFlags&, const BlockFlags&) = default;
};

/// Split of the boundary into gluable and energy-bounded parts
/// (display names, in boundary order).
struct Partition {
  std::vector<std::string> gl;
  std::vector<std::string> cs;
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct RecordedPartition {
  std::string e_class;  // "e" or "0"
  Rational bound;
  Partition partition;
};

struct Block {
  std::string label;
  std::vector<BoundaryComponent> boundary;
  Rational e_square;  // <= 0
  BlockFlags flags;
  std::vector<RecordedPartition> partitions;
  std::vector<std::string> provenance;

  /// p_1 of the adjoint bundle determined by e: -e.e.
  Rational p1() const { return -e_square; }
  const BoundaryComponent* find(const std::string& name) const;
  /// Throws std::logic_error if a structural invariant is violated.
  void validate() const;
};

/// "Sigma(D(T(p,q)))", with p < q.
std::string whitehead_cover_name(std::int64_t p, std::int64_t q);

Block brieskorn_block(std::int64_t p, std::int64_t q, std::int64_t k);
Block doubling_cobordism_block(std::int64_t p, std::int64_t q, bool positively_unknottable = true);
/// Glues q onto w along the integral homology sphere named y.
Block glue(const Block& w, const Block& q, const std::string& y);
Block whitehead_block(std::int64_t p, std::int64_t q);
/// A Z/2-homology ball bounded by +Sigma(D(T(p,q))), as would exist if the
/// Whitehead double were slice.
Block rational_ball_block(std::int64_t p, std::int64_t q);

struct PartitionCheck {
  bool ok = false;
  Partition partition;
  std::string offender;  // display name of the first component that fails
  std::string reason;
};

/// Greedy assignment at energy level `bound`: components with
/// tau_lower > bound go to cs, the rest must be integral homology spheres.
PartitionCheck check_cs_partition(const Block& b, const Rational& bound);

/// True when the assembled block would carry an odd number of singular
/// points on a compact moduli space.
bool contradiction_check(const Block& b);

struct IndexCorrection {
  Rational h;
  Rational rho;
};

struct IndexTerm {
  std::string component;
  bool restriction_trivial = true;
  std::optional<IndexCorrection> correction;
};

/// -2 e.e - 3 + 1/2 sum(3 - h - rho) over components with nontrivial
/// restriction. Throws std::invalid_argument when a nontrivial component
/// has no correction.
Rational index_leading(const Rational& e_square, const std::vector<IndexTerm>& terms);
Rational index_leading(const Rational& e_square, const std::vector<IndexCorrection>& corrections);
Rational index_leading(const Block& b, const std::map<std::string, IndexCorrection>& corrections);

}  // namespace csobstruct
