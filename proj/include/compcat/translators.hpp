#ifndef COMPCAT_TRANSLATORS_HPP
#define COMPCAT_TRANSLATORS_HPP

#include "compcat/compcat.hpp"
#include "compcat/structures.hpp"

namespace compcat {

// Every operation validates its input first and throws Error with the code of
// the first violation class (InvalidDisplayClass, InvalidCompCat, InvalidCwA,
// InvalidCwF, InvalidNaturalModel, InvalidContextualCategory). Precondition
// failures beyond validity throw the codes noted per operation. All generated
// ids are deterministic functions of input ids.

// Full subcategory of the arrow category on the displayed objects; the
// projection sends a display map to its codomain and the comprehension is the
// inclusion. Type objects reuse display MorIds.
CompCat dmc_to_compcat(const DisplayClass& d);

// Inverse direction: reads the display class off the comprehension image.
// Throws NotSubcategorical unless chi is full, faithful and injective on
// objects. The chosen-pullback table of the result is empty.
DisplayClass compcat_to_dmc(const CompCat& cc);

// An operation on comprehension categories together with the comparison map
// it induces from the input into the output.
struct TransformedCompCat {
  CompCat compcat;
  CompCatMap unit;
};

// Same, for operations that stay in display-class form; the unit compares the
// induced comprehension categories (dmc_to_compcat of input and output).
struct TransformedDisplay {
  DisplayClass display;
  CompCatMap unit;
};

// Replace hom(A, B) in the total category by hom(chi A, chi B), making the
// comprehension fully faithful. New MorIds are ff(A,B,sq); objects and the
// point are unchanged, so the unit is strict and bijective on objects.
TransformedCompCat fullify(const CompCat& cc);

// Corestrict a fully faithful comprehension onto the full subcategory of the
// arrow category spanned by its object image. Throws NotFull unless chi is
// full and faithful. The unit is an equivalence on total categories.
TransformedCompCat subcategorize(const CompCat& cc);

// Close the display class under isomorphism in the arrow category. Chosen
// pullbacks are carried over. The unit is the inclusion of the induced
// comprehension categories.
TransformedDisplay repletion(const DisplayClass& d);

// Same operation through the subcategorical presentation: the display class
// is read off, closed, and re-embedded. Throws NotSubcategorical.
TransformedCompCat repletion(const CompCat& cc);

// Joint closure under identities, composition and isomorphism. Input must be
// a valid replete display class; the closure is replete again.
TransformedDisplay comp_closure(const DisplayClass& d);

// A category with finite limits is a display structure with every map
// displayed. Throws NotLex when a terminal object or a pullback is missing.
DisplayClass lex_to_clan(const FinCategory& c);

// Full subcategory of the base on the objects whose diagonal into the chosen
// self-product (pullback of the two terminal projections) is displayed.
struct SepCore {
  FinCategory core;
  FinFunctor inclusion;  // core -> clan base
};
SepCore sep_core(const DisplayClass& clan);

// Contextual slice at the point, with the projection back into the input.
// Throws PreconditionFailed when no point is designated and SliceInfinite
// when iterated extensions of the point never stop.
struct CxlCore {
  CompCat core;
  CompCatMap counit;  // core -> cc
};
CxlCore cxl_core(const CompCat& cc);

// Category of elements of the type presheaf as total category; types become
// objects pair_id(ctx, type) and the comprehension picks out the projections.
CompCat cwa_to_compcat(const CwA& a);

// Inverse: fibers of p become the type presheaf, comprehension images the
// extension data. Throws NotDiscrete unless p is a discrete fibration.
CwA compcat_to_cwa(const CompCat& cc);

// Terms are sections of the projections, named by their section morphism;
// substitution acts by the universal property of the chosen squares.
CwF cwa_to_cwf(const CwA& a);

// Forget the terms.
CwA cwf_to_cwa(const CwF& w);

// Sum the term sets into one presheaf over the base, elements pair_id(A, t),
// with the fiberwise projection to types; extensions become the chosen
// representing objects.
NaturalModel cwf_to_natmod(const CwF& w);

// Split the term presheaf into fibers and rebuild extension structure from
// the representing isomorphisms. Throws NotRepresentable when some pullback
// of p along a classifying map has no representation.
CwF natmod_to_cwf(const NaturalModel& n);

// Children of a context are its types; substitution, extension and
// projections are read off the chosen squares and the tree.
CwA cxlcat_to_cwa(const ContextualCategory& x);

// Inverse: the terminal object is the root and every other object must be
// the extension of exactly one (context, type) pair, with no cycles. Throws
// NotContextual otherwise.
ContextualCategory cwa_to_cxlcat(const CwA& a);

}  // namespace compcat

#endif
