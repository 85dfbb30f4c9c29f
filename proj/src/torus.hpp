#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ncf.hpp"

namespace tightcount::torus {

// Dividing set on the boundary torus: 2n parallel curves, each of class
// -p*lambda + q*mu, canonical form (n, -p, q) with 0 < q <= p, gcd(p,q) = 1.
struct DividingSet {
  std::int64_t n;
  ncf::Slope slope;

  DividingSet(std::int64_t n_, ncf::Slope slope_);
  friend bool operator==(const DividingSet&, const DividingSet&) = default;
};

// Canonical form of raw parameters: sign flip (n,p,q) ~ (n,-p,-q) and
// meridian Dehn twists (p,q) ~ (p, q+kp).  p = 0 carries no tight structure
// and is rejected with no_tight_structures_error.
DividingSet normalize(std::int64_t n, std::int64_t p, std::int64_t q);

// Twisting number of the Legendrian-realized meridian boundary:
// -(1/2) * #(boundary ∩ dividing set) = -n*p.
std::int64_t twisting_number(const DividingSet& ds);

enum class Side { exterior, interior };
enum class Orientation { a, b };

// A bypass attachment site on the cut meridian: the attaching arc crosses
// the multicurve at the three consecutive crossing points
// center-1, center, center+1.  `side` and `orientation` together select one
// of the two mirror-image rejoinings (flipping either one mirrors the move,
// so flipping exactly one of them inverts the attachment).
struct BypassSite {
  std::int64_t center = 0;
  Side side = Side::exterior;
  Orientation orientation = Orientation::a;

  // The upside-down bypass: attaching it undoes this one.
  BypassSite inverse() const {
    return {center, side == Side::exterior ? Side::interior : Side::exterior,
            orientation};
  }
  friend bool operator==(const BypassSite&, const BypassSite&) = default;
};

// Homology class of one multicurve component, reported with the canonical
// sign (lambda < 0, or lambda = 0 and mu >= 0).  A fresh component of
// (n, -p, q) reports (-p, q); (0, 0) flags a homotopically trivial curve.
struct ComponentClass {
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  bool is_trivial() const { return lambda == 0 && mu == 0; }
  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

enum class BypassOutcome { trivial, decrease_by_two, increase_by_two, dehn_twist };
std::string to_string(BypassOutcome outcome);

// A multicurve on the torus, cut along the meridian into an annulus with
// `size` marked crossing points (indexed 0..size-1 in the mu direction).
//
// Two layers of bookkeeping are kept in sync:
//
//  * successor(): the site algebra.  Fresh multicurves have
//    successor(i) = i + 2n*e (mod 2np) with e = q, and every attachment
//    composes exactly one 3-cycle on the affected indices.  Attachments at
//    sites with disjoint point triples commute, and attaching a site
//    followed by its inverse cancels, so values are represented by the
//    reduced word of attachments over the fresh curve.
//
//  * the strand diagram: a matching on the 2*size crossing-point germs with
//    exact (lambda, mu) data per strand, rebuilt by replaying the reduced
//    word.  Component structure, homology classes and the wrap vector are
//    computed from this layer; the one-permutation layer cannot carry
//    component homology through direction-reversing rejoinings.
//
// Values are immutable; attach() returns a new multicurve.
class Multicurve {
 public:
  static Multicurve build(const DividingSet& ds);

  // Cut-and-rejoin at the three crossings center-1, center, center+1.
  // Requires size >= 3 (the (1,-1,1) curve admits no bypass).
  Multicurve attach(const BypassSite& site) const;

  const DividingSet& base() const { return base_; }
  std::int64_t size() const { return size_; }
  const std::vector<BypassSite>& sites() const { return word_; }

  // Formal successor permutation (one 3-cycle per attachment).
  const std::vector<std::int64_t>& successor() const { return successor_; }
  // Per-point crossing sign under the canonical traversal of each
  // component; +1 everywhere on a fresh multicurve.
  const std::vector<std::int64_t>& wraps() const { return wraps_; }

  std::int64_t component_count() const {
    return static_cast<std::int64_t>(classes_.size());
  }
  ComponentClass component_class(std::int64_t id) const;
  // Component id of each crossing point (ids ordered by smallest point).
  const std::vector<std::int64_t>& point_components() const {
    return point_component_;
  }
  // Ids of homotopically trivial ((0,0)-class) components.  Non-empty
  // output certifies that no tight structure induces this multicurve.
  std::vector<std::int64_t> trivial_components() const;

  // Canonical text form; bit-exact round trip via parse().
  std::string serialize() const;
  static Multicurve parse(const std::string& text);

  bool operator==(const Multicurve& other) const {
    return base_ == other.base_ && word_ == other.word_;
  }

 private:
  Multicurve(DividingSet base, std::vector<BypassSite> word);
  void replay();

  DividingSet base_;
  std::vector<BypassSite> word_;  // reduced
  std::int64_t size_ = 0;
  std::vector<std::int64_t> successor_;
  std::vector<std::int64_t> wraps_;
  std::vector<std::int64_t> point_component_;
  std::vector<ComponentClass> classes_;
};

// Which of the four possible effects the attachment had.  Throws
// invariant_violation_error with a full report if the pair matches none of
// them (e.g. the result is not a collection of parallel essential curves).
BypassOutcome classify_outcome(const Multicurve& before,
                               const Multicurve& after);

// The dividing set a multicurve of parallel essential curves represents,
// normalizing mu modulo lambda (meridian twists).  Throws
// invariant_violation_error if components are not all parallel and
// essential.
DividingSet as_dividing_set(const Multicurve& mc);

}  // namespace tightcount::torus
