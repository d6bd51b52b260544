#ifndef COMPCAT_COMPCAT_HPP
#define COMPCAT_COMPCAT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "compcat/errors.hpp"
#include "compcat/fibration.hpp"
#include "compcat/fincat.hpp"

namespace compcat {

// Contexts, a fibration of types over them, and a comprehension functor into
// the arrow category of the base, strictly over the base and sending cartesian
// morphisms to pullback squares. chi.cod must be arrow_category(base).cat.
struct CompCat {
  FinCategory base;
  FinCategory total;
  FinFunctor p;    // total -> base
  FinFunctor chi;  // total -> Arr(base)
  std::optional<ObjId> point;
};

// validate_compcat reads only the obj/mor tables of p and chi and rebuilds
// their endpoint categories from base, total and arrow_category(base).
Checked<CompCat> validate_compcat(const CompCat& raw);

bool compcats_equal(const CompCat& a, const CompCat& b);

// The base of a type object A over ctx extends to src(chi A); the projection
// is chi A itself read as a base morphism.
std::vector<ObjId> fiber(const CompCat& cc, const ObjId& ctx);
ObjId context_extension(const CompCat& cc, const ObjId& type_obj);
MorId projection(const CompCat& cc, const ObjId& type_obj);

// Types = all arrows, comprehension the identity. Pointed at the terminal
// object when one exists.
CompCat trivial_compcat(const FinCategory& c);

struct CompCatFlags {
  bool full = false;
  bool subcategorical = false;
  std::optional<bool> replete;      // nullopt: not subcategorical
  std::optional<bool> comp_closed;  // nullopt: not subcategorical
  bool trivial = false;
  bool discrete = false;
  std::optional<bool> split;  // nullopt: split search budget exhausted
  bool pointed = false;
  std::optional<bool> rooted;      // nullopt: not pointed
  std::optional<bool> contextual;  // nullopt: not pointed
};

// Throws SliceInfinite when deciding rooted/contextual on a pointed instance
// whose extension sequences do not close up.
CompCatFlags classify(const CompCat& cc, long long split_budget = 100000);

// Slice at a context: objects are extension sequences, morphisms are base
// morphisms between total extensions commuting with the projections, types
// restrict along the extension functor. Pointed at the empty sequence.
struct ContextualSlice {
  CompCat slice;
  FinFunctor to_base;   // slice base -> cc base, sequence to total extension
  FinFunctor to_types;  // slice total -> cc total
};

// depth_budget < 0 picks |objects(base)| * |objects(total)| + 1.
ContextualSlice contextual_slice_full(const CompCat& cc, const ObjId& ctx,
                                      long long depth_budget = -1);
CompCat contextual_slice(const CompCat& cc, const ObjId& ctx, long long depth_budget = -1);

// (F, Fbar, phi): Fbar strictly over F preserving cartesian morphisms, phi a
// natural isomorphism chi' Fbar => Arr(F) chi with components over identities.
// point_iso, when present, is an isomorphism F(point) -> point' in dst.base.
struct CompCatMap {
  CompCat src;
  CompCat dst;
  FinFunctor F;
  FinFunctor Fbar;
  FinNatTrans phi;
  std::optional<MorId> point_iso;
};

// validate_map rebuilds phi.source/phi.target from F and Fbar; only the
// component table of the supplied phi is read.
Checked<CompCatMap> validate_map(const CompCatMap& raw, bool require_strict = false);

bool map_is_strict(const CompCatMap& m);
bool map_is_pointed(const CompCatMap& m);
bool map_is_strictly_pointed(const CompCatMap& m);
bool maps_equal(const CompCatMap& a, const CompCatMap& b);
CompCatMap identity_map(const CompCat& cc);
CompCatMap compose_maps(const CompCatMap& g, const CompCatMap& f);  // g after f

// (alpha, alphabar) with alphabar strictly over alpha and the comprehension
// coherence gamma_A . chi'(alphabar_A) = (alpha_{ext A}, alpha_{p A}) . phi_A.
struct CompCatTransformation {
  CompCatMap src;
  CompCatMap dst;
  FinNatTrans alpha;
  FinNatTrans alphabar;
};

Checked<CompCatTransformation> validate_transformation(const CompCatTransformation& raw);
bool transformation_is_pointed(const CompCatTransformation& t);
bool transformation_is_iso(const CompCatTransformation& t);

// Walk every valid map src -> dst in deterministic order: F, then Fbar, then
// phi, then (when pointed) the point isomorphism. strict_only emits only maps
// with identity phi; pointed emits one map per choice of point isomorphism
// and nothing when either side is unpointed. The reference handed to the
// visitor is reused between calls (copy it to keep it) and carries empty phi
// endpoint tables; validate_map rebuilds those from F and Fbar. A false
// return from the visitor stops the walk, and for_each_map then returns
// false.
bool for_each_map(const CompCat& src, const CompCat& dst, bool strict_only, bool pointed,
                  long long budget, const std::function<bool(const CompCatMap&)>& visit);

// The same walk collected into a vector.
std::vector<CompCatMap> enumerate_maps(const CompCat& src, const CompCat& dst, bool strict_only,
                                       bool pointed, long long budget = 1000000);

// All valid transformations f => g between parallel maps, optionally only
// pointed ones (point isos commute with the alpha component at the point).
std::vector<CompCatTransformation> enumerate_transformations(const CompCatMap& f,
                                                             const CompCatMap& g, bool pointed_only,
                                                             long long budget = 1000000);

// Transport a pointed pseudo map out of a pointed contextual compcat to an
// isomorphic strict strictly-pointed map, by induction on extension length.
struct Strictified {
  CompCatMap map;
  CompCatTransformation iso;  // from the input map to the strict map
};

Strictified strictify_contextual_map(const CompCatMap& m);

}  // namespace compcat

#endif
