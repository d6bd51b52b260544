#ifndef COMPCAT_PRESHEAF_HPP
#define COMPCAT_PRESHEAF_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compcat/errors.hpp"
#include "compcat/fincat.hpp"

namespace compcat {

using ElemId = std::string;

// Contravariant set-valued functor on a finite category. act is keyed by
// (f: x -> y, e in at(y)) and lands in at(x). Objects with no elements may be
// omitted from `at`; normalize() drops empty entries so equality is stable.
struct FinPresheaf {
  FinCategory base;
  std::map<ObjId, std::vector<ElemId>> at;
  std::map<std::pair<MorId, ElemId>, ElemId> act;

  void normalize();
  const std::vector<ElemId>& elems(const ObjId& o) const;
  bool has_elem(const ObjId& o, const ElemId& e) const;
  ElemId action(const MorId& f, const ElemId& e) const;  // throws UnknownAction
  bool equal(const FinPresheaf& other) const;
};

Checked<FinPresheaf> validate_presheaf(const FinPresheaf& raw);

// Natural transformation between presheaves on the same base.
struct PresheafMap {
  FinPresheaf src;
  FinPresheaf dst;
  std::map<ObjId, std::map<ElemId, ElemId>> components;

  ElemId apply(const ObjId& o, const ElemId& e) const;  // throws UnknownElement
};

Checked<PresheafMap> validate_presheaf_map(const PresheafMap& raw);
bool presheaf_map_is_iso(const PresheafMap& m);
PresheafMap identity_presheaf_map(const FinPresheaf& p);
PresheafMap compose_presheaf_maps(const PresheafMap& g, const PresheafMap& f);  // g after f

// at(x) = hom(x, obj), action by precomposition. Elements reuse MorIds.
FinPresheaf yoneda(const FinCategory& c, const ObjId& obj);

// The map yoneda(obj) -> p classifying e in p(obj): f maps to act(f, e).
PresheafMap yoneda_map(const FinPresheaf& p, const ObjId& obj, const ElemId& e);

// All elements equal to `elems` at every object; morphisms act as identity.
FinPresheaf constant_presheaf(const FinCategory& base, const std::vector<ElemId>& elems);

// Category of elements with its projection. Objects are pairs (x, e in P(x)),
// morphisms over f: x -> y are pairs (f, e in P(y)) from (x, act(f,e)) to
// (y, e). The projection is a discrete fibration by construction.
FinFunctor grothendieck(const FinPresheaf& p);

// Inverse bridge: fiber objects become elements, unique lifts give the action.
// Throws NotDiscrete unless every (f, y) has exactly one lift.
FinPresheaf fibration_to_presheaf(const FinFunctor& p);

struct Representation {
  ObjId obj;
  PresheafMap iso;  // yoneda(obj) -> p, componentwise bijective
};

// Least obj admitting a natural isomorphism yoneda(obj) = p, found by
// exhaustive search over component bijections pruned by naturality. Throws
// BudgetExceeded after `budget` attempted component assignments.
std::optional<Representation> is_representable(const FinPresheaf& p, long long budget = 1000000);

// Pointwise set pullback with its projections; elements are pairs (a, b) with
// f(a) = g(b).
struct PresheafPullback {
  FinPresheaf apex;
  PresheafMap to_left;   // apex -> src f
  PresheafMap to_right;  // apex -> src g
};

PresheafPullback presheaf_pullback(const PresheafMap& f, const PresheafMap& g);

}  // namespace compcat

#endif
