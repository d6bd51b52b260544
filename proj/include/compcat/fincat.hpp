#ifndef COMPCAT_FINCAT_HPP
#define COMPCAT_FINCAT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compcat/errors.hpp"
#include "compcat/ids.hpp"

namespace compcat {

struct Mor {
  MorId id;
  ObjId src;
  ObjId dst;
};

// Finite category as explicit tables. `composition` maps (g, f) to g*f and is
// defined exactly on the composable pairs (dst f = src g). Canonical form keeps
// objects and morphisms sorted by id; all tie-breaking elsewhere relies on it.
struct FinCategory {
  std::vector<ObjId> objects;
  std::vector<Mor> morphisms;
  std::map<ObjId, MorId> identity;
  std::map<std::pair<MorId, MorId>, MorId> composition;

  void normalize();  // sort object/morphism tables by id

  bool has_object(const ObjId& x) const;
  bool has_mor(const MorId& m) const;
  const Mor& mor(const MorId& m) const;
  const MorId& id_of(const ObjId& x) const;
  bool is_identity(const MorId& m) const;

  // g after f; throws NotComposable when dst f != src g or the entry is absent
  const MorId& compose(const MorId& g, const MorId& f) const;

  std::vector<MorId> hom(const ObjId& x, const ObjId& y) const;
  std::vector<MorId> mors_into(const ObjId& y) const;
  std::vector<MorId> mors_from(const ObjId& x) const;

  bool is_iso(const MorId& m) const;
  std::optional<MorId> inverse(const MorId& m) const;
  bool objects_isomorphic(const ObjId& x, const ObjId& y) const;

  bool equal(const FinCategory& other) const;
};

Checked<FinCategory> validate_category(const FinCategory& raw);

// A commuting square (u, v): f => g, i.e. g*u = v*f.
struct Square {
  MorId u;  // dom f -> dom g
  MorId v;  // cod f -> cod g
  MorId f;
  MorId g;
};

struct FinFunctor {
  FinCategory dom;
  FinCategory cod;
  std::map<ObjId, ObjId> obj_map;
  std::map<MorId, MorId> mor_map;

  const ObjId& on_obj(const ObjId& x) const;
  const MorId& on_mor(const MorId& m) const;
  bool equal_tables(const FinFunctor& other) const;  // ignores dom/cod copies
};

Checked<FinFunctor> validate_functor(const FinFunctor& raw);
FinFunctor identity_functor(const FinCategory& c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);  // g after f

struct FunctorReport {
  bool full = false;
  bool faithful = false;
  bool ess_surjective = false;
  bool injective_on_objects = false;
  bool surjective_on_objects = false;
  bool equivalence = false;  // full && faithful && ess_surjective
  bool isomorphism = false;  // bijective on objects and morphisms
};

FunctorReport functor_report(const FinFunctor& f);

std::vector<FinFunctor> enumerate_functors(const FinCategory& dom, const FinCategory& cod,
                                           long long budget = 1000000);

struct FinNatTrans {
  FinFunctor source;  // F
  FinFunctor target;  // G, same dom/cod as F
  std::map<ObjId, MorId> components;

  const MorId& at(const ObjId& x) const;
};

Checked<FinNatTrans> validate_nattrans(const FinNatTrans& raw);
bool nattrans_is_iso(const FinNatTrans& t);

// Arr(C): objects are the morphisms of C, morphisms are commuting squares.
// Square ids derive from (u, v, f, g) so they are stable under re-derivation.
struct ArrowCategory {
  FinCategory cat;
  FinFunctor dom_functor;  // Arr(C) -> C
  FinFunctor cod_functor;  // Arr(C) -> C

  std::map<MorId, Square> squares;  // arrow-category MorId -> components

  const Square& square(const MorId& m) const;
  std::optional<MorId> square_id(const MorId& u, const MorId& v, const MorId& f,
                                 const MorId& g) const;
};

std::string arrow_square_id(const MorId& u, const MorId& v, const MorId& f, const MorId& g);
ArrowCategory arrow_category(const FinCategory& c);

// Functor Arr(F): Arr(C) -> Arr(D) induced on arrow categories.
FinFunctor arrow_functor(const FinFunctor& f, const ArrowCategory& arr_dom,
                         const ArrowCategory& arr_cod);

// Pullback cone for the cospan f: A -> C0 <- B : g. Legs point out of the apex.
struct Cone {
  ObjId apex;
  MorId leg_f;  // apex -> src f
  MorId leg_g;  // apex -> src g
};

bool cone_commutes(const FinCategory& c, const MorId& f, const MorId& g, const Cone& cone);
bool is_pullback_cone(const FinCategory& c, const MorId& f, const MorId& g, const Cone& cone);

// Least limiting cone in (apex, leg_f, leg_g) lexicographic order, if any.
std::optional<Cone> pullback(const FinCategory& c, const MorId& f, const MorId& g);

std::optional<ObjId> terminal_object(const FinCategory& c);

// Terminal object plus all pullbacks; enough for all finite limits.
bool is_lex(const FinCategory& c);

// -- generators ---------------------------------------------------------------

// leq holds the related pairs (x, y) meaning x <= y; must be a partial order
// on `elements` (reflexive pairs may be omitted, they are implied).
FinCategory poset_category(const std::vector<ObjId>& elements,
                           const std::vector<std::pair<ObjId, ObjId>>& leq);

struct DagEdge {
  std::string id;
  ObjId src;
  ObjId dst;
};

FinCategory free_category_on_dag(const std::vector<ObjId>& vertices,
                                 const std::vector<DagEdge>& edges);

// table[(a, b)] = a*b in the monoid; `unit` must be an element.
FinCategory monoid_category(const std::vector<std::string>& elements, const std::string& unit,
                            const std::map<std::pair<std::string, std::string>, std::string>& table);

FinCategory product_category(const FinCategory& c, const FinCategory& d);

// Involution on the nose: opposite(opposite(c)) is table-equal to c.
FinCategory opposite_category(const FinCategory& c);

}  // namespace compcat

#endif
