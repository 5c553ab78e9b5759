#include "csobstruct/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

namespace csobstruct {

std::string BoundaryComponent::display() const {
  return (orientation < 0 ? "-" : "") + name;
}

const BoundaryComponent* Block::find(const std::string& n) const {
  for (const auto& c : boundary)
    if (c.name == n) return &c;
  return nullptr;
}

void Block::validate() const {
  if (e_square.sign() > 0) throw std::logic_error(label + ": e.e must be <= 0");
  if (flags.property_I && !(-e_square < Rational(2))) {
    throw std::logic_error(label + ": a block with property I needs -e.e < 2");
  }
  for (const auto& rp : partitions) {
    const PartitionCheck c = check_cs_partition(*this, rp.bound);
    if (!c.ok || c.partition != rp.partition) {
      throw std::logic_error(label + ": recorded partition does not hold at bound " +
                             rp.bound.str());
    }
  }
}

std::string whitehead_cover_name(std::int64_t p, std::int64_t q) {
  return "Sigma(D(T(" + std::to_string(std::min(p, q)) + "," + std::to_string(std::max(p, q)) +
         ")))";
}

namespace {

std::string strip_sign(const std::string& n) {
  return (!n.empty() && (n[0] == '-' || n[0] == '+')) ? n.substr(1) : n;
}

BoundaryComponent sphere_component(const BrieskornSphere& y) {
  BrieskornSphere base = y;
  base.orientation = 1;
  return {base.name(), y.orientation, ComponentKind::IntegralHomologySphere, std::nullopt, true};
}

void record(Block& b, const std::string& e_class, const Rational& bound) {
  const PartitionCheck c = check_cs_partition(b, bound);
  if (!c.ok) throw std::logic_error(b.label + ": expected cs-partition failed at " + c.offender);
  b.partitions.push_back({e_class, bound, c.partition});
}

}  // namespace

Block brieskorn_block(std::int64_t p, std::int64_t q, std::int64_t k) {
  require_torus_pair(p, q);
  if (k < 1) throw std::invalid_argument("brieskorn_block needs k >= 1");
  const BrieskornSphere y = surgery_to_brieskorn(p, q, k, 1).reversed();
  const std::int64_t r = p * q * k - 1;
  Block b;
  b.label = "X(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(k) + ")";
  b.boundary.push_back(sphere_component(y));
  const std::int64_t orders[3] = {p, q, r};
  for (int i = 0; i < 3; ++i) {
    BoundaryComponent lens;
    lens.name = "Y" + std::to_string(i + 1) + "[" + y.name() + "]";
    lens.kind = ComponentKind::RationalHomologySphere;
    lens.tau_lower = TauBound{Rational(BigInt(1), big(orders[i])), TauKind::LensInput};
    lens.e_restriction_trivial = false;
    b.boundary.push_back(lens);
  }
  b.e_square = -Rational(BigInt(1), big(p) * big(q) * big(r));
  b.flags = {true, true, true};
  b.provenance.push_back("brieskorn_block(" + std::to_string(p) + "," + std::to_string(q) + "," +
                         std::to_string(k) + ")");
  record(b, "e", -b.e_square);
  record(b, "0", -b.e_square);
  b.validate();
  return b;
}

Block doubling_cobordism_block(std::int64_t p, std::int64_t q, bool positively_unknottable) {
  require_torus_pair(p, q);
  if (!positively_unknottable) {
    throw std::invalid_argument("doubling cobordism needs a knot unknotted by positive-to-negative "
                                "crossing changes");
  }
  Block b;
  b.label = "N(T(" + std::to_string(p) + "," + std::to_string(q) + "))";
  b.boundary.push_back({whitehead_cover_name(p, q), -1, ComponentKind::IntegralHomologySphere,
                        std::nullopt, true});
  b.boundary.push_back(sphere_component(surgery_to_brieskorn(p, q, 2, 1)));
  b.e_square = Rational(0);
  b.flags = {true, true, false};
  b.provenance.push_back("doubling_cobordism_block(" + std::to_string(p) + "," +
                         std::to_string(q) + ")");
  b.validate();
  return b;
}

Block rational_ball_block(std::int64_t p, std::int64_t q) {
  require_torus_pair(p, q);
  Block b;
  b.label = "B(" + whitehead_cover_name(p, q) + ")";
  b.boundary.push_back({whitehead_cover_name(p, q), 1, ComponentKind::IntegralHomologySphere,
                        std::nullopt, true});
  b.e_square = Rational(0);
  b.flags = {true, true, false};
  b.provenance.push_back("rational_ball_block(" + std::to_string(p) + "," + std::to_string(q) +
                         ")");
  return b;
}

Block glue(const Block& w, const Block& q, const std::string& y_name) {
  const std::string y = strip_sign(y_name);
  const BoundaryComponent* yw = w.find(y);
  const BoundaryComponent* yq = q.find(y);
  if (!yw || !yq) throw std::invalid_argument("glue: component " + y + " missing from a block");
  if (yw->orientation != -yq->orientation) {
    throw std::invalid_argument("glue: " + y + " must appear with opposite orientations");
  }
  if (yw->kind != ComponentKind::IntegralHomologySphere ||
      yq->kind != ComponentKind::IntegralHomologySphere) {
    throw std::invalid_argument("glue: " + y + " is not an integral homology sphere");
  }
  if (!q.flags.negative_definite || !q.flags.h1_mod2_zero) {
    throw std::invalid_argument("glue: " + q.label +
                                " must be negative definite with H1(;Z/2) = 0");
  }

  Block out;
  out.label = w.label + " u " + q.label;
  for (const auto& c : w.boundary)
    if (c.name != y) out.boundary.push_back(c);
  for (const auto& c : q.boundary)
    if (c.name != y) out.boundary.push_back(c);
  out.e_square = w.e_square;
  out.flags = {w.flags.negative_definite && q.flags.negative_definite,
               w.flags.h1_mod2_zero && q.flags.h1_mod2_zero, w.flags.property_I};
  out.provenance = w.provenance;
  out.provenance.insert(out.provenance.end(), q.provenance.begin(), q.provenance.end());
  out.provenance.push_back("glue along " + yw->display() + " / " + yq->display());

  for (const auto& rp : w.partitions) {
    const std::string yw_disp = yw->display();
    if (std::find(rp.partition.gl.begin(), rp.partition.gl.end(), yw_disp) ==
        rp.partition.gl.end()) {
      throw std::invalid_argument("glue: " + yw_disp + " is not in the gluing boundary of " +
                                  w.label);
    }
    const PartitionCheck qc = check_cs_partition(q, rp.bound);
    if (!qc.ok) {
      throw std::invalid_argument("glue: " + q.label + " has no cs-partition at bound " +
                                  rp.bound.str() + " (" + qc.offender + ")");
    }
    const std::string yq_disp = yq->display();
    if (std::find(qc.partition.gl.begin(), qc.partition.gl.end(), yq_disp) ==
        qc.partition.gl.end()) {
      throw std::invalid_argument("glue: " + yq_disp + " is not in the gluing boundary of " +
                                  q.label);
    }
    // Merged partition: everything of both sides except the glued copies.
    Partition merged;
    for (const auto* part : {&rp.partition, &qc.partition}) {
      for (const auto& n : part->gl)
        if (strip_sign(n) != y) merged.gl.push_back(n);
      for (const auto& n : part->cs) merged.cs.push_back(n);
    }
    // Keep the boundary ordering used by check_cs_partition.
    Partition ordered;
    for (const auto& c : out.boundary) {
      const std::string d = c.display();
      if (std::count(merged.gl.begin(), merged.gl.end(), d)) ordered.gl.push_back(d);
      if (std::count(merged.cs.begin(), merged.cs.end(), d)) ordered.cs.push_back(d);
    }
    out.partitions.push_back({rp.e_class, rp.bound, ordered});
  }
  out.validate();
  return out;
}

Block whitehead_block(std::int64_t p, std::int64_t q) {
  const Block x = brieskorn_block(p, q, 2);
  const Block n = doubling_cobordism_block(p, q);
  Block w = glue(x, n, surgery_to_brieskorn(p, q, 2, 1).reversed().name());
  w.label = "W(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return w;
}

PartitionCheck check_cs_partition(const Block& b, const Rational& bound) {
  PartitionCheck out;
  for (const auto& c : b.boundary) {
    if (c.tau_lower && c.tau_lower->value > bound) {
      out.partition.cs.push_back(c.display());
    } else if (c.kind == ComponentKind::IntegralHomologySphere) {
      out.partition.gl.push_back(c.display());
    } else {
      out.offender = c.display();
      out.reason = c.tau_lower ? "tau lower bound " + c.tau_lower->value.str() +
                                     " does not exceed " + bound.str() +
                                     " and the component is not an integral homology sphere"
                               : "no tau lower bound and not an integral homology sphere";
      out.partition = {};
      return out;
    }
  }
  out.ok = true;
  return out;
}

bool contradiction_check(const Block& b) {
  if (!b.flags.property_I) return false;
  const Rational energy = -b.e_square;
  if (!(energy.sign() > 0 && energy < Rational(4))) return false;
  const PartitionCheck c = check_cs_partition(b, energy);
  return c.ok && c.partition.gl.empty();
}

Rational index_leading(const Rational& e_square, const std::vector<IndexTerm>& terms) {
  Rational sum = 0;
  for (const auto& t : terms) {
    if (t.restriction_trivial) continue;  // h = 3, rho = 0
    if (!t.correction) {
      throw std::invalid_argument("index_leading: no (h, rho) supplied for " + t.component);
    }
    sum += Rational(3) - t.correction->h - t.correction->rho;
  }
  return Rational(-2) * e_square - Rational(3) + sum / Rational(2);
}

Rational index_leading(const Rational& e_square,
                       const std::vector<IndexCorrection>& corrections) {
  std::vector<IndexTerm> terms;
  for (std::size_t i = 0; i < corrections.size(); ++i)
    terms.push_back({"#" + std::to_string(i), false, corrections[i]});
  return index_leading(e_square, terms);
}

Rational index_leading(const Block& b, const std::map<std::string, IndexCorrection>& corrections) {
  std::vector<IndexTerm> terms;
  for (const auto& c : b.boundary) {
    IndexTerm t{c.display(), c.e_restriction_trivial, std::nullopt};
    auto it = corrections.find(c.display());
    if (it == corrections.end()) it = corrections.find(c.name);
    if (it != corrections.end()) t.correction = it->second;
    terms.push_back(t);
  }
  return index_leading(b.e_square, terms);
}

}  // namespace csobstruct
