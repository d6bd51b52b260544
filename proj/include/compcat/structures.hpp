#ifndef COMPCAT_STRUCTURES_HPP
#define COMPCAT_STRUCTURES_HPP

#include <map>
#include <set>
#include <string>
#include <utility>

#include "compcat/errors.hpp"
#include "compcat/fincat.hpp"
#include "compcat/presheaf.hpp"

namespace compcat {

// A class of display maps on a base category. `chosen_pullbacks` is optional
// witness data keyed by (display d, f into dst(d)); validators accept the
// class as long as *some* pullback of d along f has a displayed leg, chosen
// or not. Cone orientation follows fincat: for cospan (f, d), leg_f lands in
// src(f) and is the pulled-back copy of d.
struct DisplayClass {
  FinCategory base;
  std::set<MorId> display;
  std::map<std::pair<MorId, MorId>, Cone> chosen_pullbacks;
};

// Display-map category: every display pulls back along every map, with a
// displayed leg. `require_replete` additionally asks the class to be closed
// under isomorphism in the arrow category. Violations: DanglingRef,
// ChosenPullbackInvalid, PullbackMissing, NotReplete, InvalidBase.
Checked<DisplayClass> validate_dmc(const DisplayClass& raw, bool require_replete);

// Clan: replete DMC that contains the identities, is closed under
// composition, and displays every map to the terminal object. Additional
// violations: IdentityNotDisplay, NotCompClosed, NoTerminal,
// NonDisplayGlobalMap.
Checked<DisplayClass> validate_clan(const DisplayClass& raw);

// Smallest display class containing `seed` and stable under pullback, using
// the canonical pullback choice for each missing leg. Throws
// Error{"PullbackMissing"} when the base lacks a needed pullback and
// Error{"InvalidBase"} / Error{"DanglingRef"} on malformed input.
DisplayClass close_under_pullbacks(const FinCategory& base, const std::set<MorId>& seed);

// Category with attributes: a presheaf of types plus chosen context
// extensions. ext/proj are keyed by (object, type over it); ext_mor by
// (morphism f, type over dst(f)) and gives the top of the chosen cartesian
// square ext(src f, f*A) -> ext(dst f, A).
struct CwA {
  FinCategory base;
  FinPresheaf Ty;
  std::map<std::pair<ObjId, ElemId>, ObjId> ext;
  std::map<std::pair<ObjId, ElemId>, MorId> proj;
  std::map<std::pair<MorId, ElemId>, MorId> ext_mor;
};

// Violations: InvalidBase, InvalidTy, MissingEntry, DanglingRef,
// EndpointMismatch, NotFunctorial (identity or composite law for ext_mor),
// SquareNotPullback (chosen square does not commute or is not limiting).
// validate_cwa reads only the at/act tables of Ty and rebuilds its base.
Checked<CwA> validate_cwa(const CwA& raw);

// Category with families: terms form a presheaf on the category of elements
// of Ty. var(G, A) is the generic term over the extended context, an element
// of Tm at (ext(G,A), p_A*A).
struct CwF {
  CwA cwa;
  FinPresheaf Tm;
  std::map<std::pair<ObjId, ElemId>, ElemId> var;
};

// Violations: InvalidCwA, InvalidTm, MissingEntry, DanglingRef, NotBijective
// (f |-> (p_A . f, f*var) fails to biject hom(D, G.A) with pairs (g, term)).
Checked<CwF> validate_cwf(const CwF& raw);

// Natural model: presheaf map p: TmP -> TyP all of whose fibers are
// representable. chosen_reps optionally names the representing object for
// (G, A); it is checked up to isomorphism against the canonical one.
struct NaturalModel {
  FinCategory base;
  FinPresheaf TyP;
  FinPresheaf TmP;
  PresheafMap p;
  std::map<std::pair<ObjId, ElemId>, ObjId> chosen_reps;
};

// Violations: InvalidBase, InvalidTy, InvalidTm, InvalidPresheafMap,
// DanglingRef, NotRepresentable. validate_natmod reads only the components
// of p and rebuilds its endpoints from TmP/TyP.
Checked<NaturalModel> validate_natmod(const NaturalModel& raw);

// One chosen pullback square in a contextual category: `obj` is the pulled
// back context f*X, `top` the square's top map f*X -> X.
struct CxlSquare {
  ObjId obj;
  MorId top;
};

// Contextual category: tree of contexts over a terminal root, one projection
// per non-root context, and strictly functorial chosen pullbacks keyed by
// (f into parent(X), X).
struct ContextualCategory {
  FinCategory base;
  ObjId root;
  std::map<ObjId, ObjId> parent;
  std::map<ObjId, MorId> proj;
  std::map<std::pair<MorId, ObjId>, CxlSquare> chosen_pb;
};

// Violations: InvalidBase, DanglingRef, RootNotTerminal, NotATree,
// MissingEntry, EndpointMismatch, PullbackMissing, SquareNotPullback,
// StrictFunctorialityFailure.
Checked<ContextualCategory> validate_cxlcat(const ContextualCategory& raw);

}  // namespace compcat

#endif
