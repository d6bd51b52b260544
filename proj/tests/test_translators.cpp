#include "doctest.h"

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "compcat/compcat.hpp"
#include "compcat/fincat.hpp"
#include "compcat/ids.hpp"
#include "compcat/instances.hpp"
#include "compcat/structures.hpp"
#include "compcat/translators.hpp"
#include "support/builders.hpp"

using namespace compcat;
using namespace compcat::builders;


TEST_CASE("injections embed as a full subcategory of the arrow category") {
  DisplayClass d;
  d.base = finset2();
  d.display = finset2_injections();
  CompCat cc = dmc_to_compcat(d);
  CHECK(validate_compcat(cc).ok());
  CHECK(cc.total.objects.size() == 8);
  CHECK(cc.p.on_obj("k0") == "2");
  CHECK(cc.p.on_obj("id0") == "0");
  CHECK(cc.chi.on_obj("tau") == "tau");
  CompCatFlags fl = classify(cc);
  CHECK(fl.full);
  CHECK(fl.subcategorical);
  CHECK(fl.replete == true);
}

TEST_CASE("identity displays on a discrete base give a discrete projection") {
  DisplayClass d;
  d.base = discrete_raw(2);
  d.display = {"id_d0", "id_d1"};
  CompCat cc = dmc_to_compcat(d);
  CHECK(validate_compcat(cc).ok());
  CHECK(cc.total.objects.size() == 2);
  CHECK(cc.total.morphisms.size() == 2);
  CHECK(classify(cc).discrete);
}

TEST_CASE("display class round trips through its comprehension category") {
  DisplayClass d;
  d.base = finset2();
  d.display = finset2_injections();
  DisplayClass back = compcat_to_dmc(dmc_to_compcat(d));
  CHECK(back.base.equal(dmc_to_compcat(d).base));
  CHECK(back.display == d.display);
  CHECK(back.chosen_pullbacks.empty());

  DisplayClass lex = lex_to_clan(diamond_poset());
  DisplayClass back2 = compcat_to_dmc(dmc_to_compcat(lex));
  CHECK(back2.display == lex.display);
}

TEST_CASE("the trivial comprehension category reads back every morphism") {
  // cod: Arr(C) -> C is only a fibration over a lex base, so both samples
  // have all pullbacks
  DisplayClass d = compcat_to_dmc(trivial_compcat(chain2_raw()));
  CHECK(d.display == all_mors(chain2_raw()));
  DisplayClass d2 = compcat_to_dmc(trivial_compcat(diamond_poset()));
  CHECK(d2.display == all_mors(diamond_poset()));
}

TEST_CASE("a non-injective comprehension cannot be read as a display class") {
  CHECK(code_of([] { compcat_to_dmc(two_over_terminal()); }) == "NotSubcategorical");
}

TEST_CASE("fullify replaces total homs by squares between comprehension images") {
  CompCat cc = two_over_terminal();
  CHECK_FALSE(classify(cc).full);
  TransformedCompCat out = fullify(cc);
  CHECK(validate_compcat(out.compcat).ok());
  // codiscrete on two objects: one square for each ordered pair
  CHECK(out.compcat.total.objects.size() == 2);
  CHECK(out.compcat.total.morphisms.size() == 4);
  CompCatFlags fl = classify(out.compcat);
  CHECK(fl.full);
  CHECK_FALSE(fl.subcategorical);
  CHECK(validate_map(out.unit).ok());
  CHECK(map_is_strict(out.unit));
}

TEST_CASE("fullify is a bijection on morphisms when the input is already full") {
  DisplayClass d;
  d.base = finset2();
  d.display = finset2_injections();
  CompCat cc = dmc_to_compcat(d);
  TransformedCompCat out = fullify(cc);
  CHECK(validate_compcat(out.compcat).ok());
  CHECK(out.compcat.total.objects == cc.total.objects);
  CHECK(out.compcat.total.morphisms.size() == cc.total.morphisms.size());
  CHECK(classify(out.compcat).full);
  CHECK(validate_map(out.unit).ok());
  CHECK(map_is_strict(out.unit));
}

TEST_CASE("subcategorize merges total objects sharing a comprehension image") {
  TransformedCompCat full = fullify(two_over_terminal());
  TransformedCompCat out = subcategorize(full.compcat);
  CHECK(validate_compcat(out.compcat).ok());
  CHECK(out.compcat.total.objects == std::vector<ObjId>{"id"});
  CompCatFlags fl = classify(out.compcat);
  CHECK(fl.subcategorical);
  CHECK(fl.replete == true);
  CHECK(validate_map(out.unit).ok());
  FunctorReport fr = functor_report(out.unit.Fbar);
  CHECK(fr.full);
  CHECK(fr.faithful);
  CHECK(fr.ess_surjective);

  TransformedCompCat again = subcategorize(out.compcat);
  CHECK(compcats_equal(again.compcat, out.compcat));
}

TEST_CASE("subcategorize refuses a comprehension that is not fully faithful") {
  CHECK(code_of([] { subcategorize(two_over_terminal()); }) == "NotFull");
}

TEST_CASE("repletion closes the doubled-object displays up to all injections") {
  DisplayClass d;
  d.base = finset2prime();
  d.display = finset2prime_displays();
  TransformedDisplay out = repletion(d);
  CHECK(out.display.display == finset2prime_injections());
  CHECK(validate_dmc(out.display, true).ok());
  CHECK(validate_map(out.unit).ok());
  CHECK(map_is_strict(out.unit));

  TransformedDisplay again = repletion(out.display);
  CHECK(again.display.display == out.display.display);
}

TEST_CASE("repletion through the comprehension presentation carries the point") {
  DisplayClass d;
  d.base = finset2prime();
  d.display = finset2prime_displays();
  CompCat cc = dmc_to_compcat(d);
  cc.point = "1";
  TransformedCompCat out = repletion(cc);
  CHECK(compcat_to_dmc(out.compcat).display == finset2prime_injections());
  CHECK(out.compcat.point == "1");
  CHECK(out.unit.point_iso == "id1");
  CHECK(validate_map(out.unit).ok());
}

TEST_CASE("composition closure completes the chain steps to the whole poset") {
  DisplayClass d = chain3_steps();
  d.chosen_pullbacks[{"le(1,2)", "le(0,2)"}] = Cone{"0", "le(0,0)", "le(0,1)"};
  CHECK(validate_dmc(d, true).ok());
  TransformedDisplay out = comp_closure(d);
  CHECK(out.display.display == all_mors(chain3()));
  CHECK(out.display.chosen_pullbacks.count({"le(1,2)", "le(0,2)"}) == 1);
  CHECK(validate_dmc(out.display, true).ok());
  CHECK(validate_map(out.unit).ok());
  CHECK(map_is_strict(out.unit));
}

TEST_CASE("composition closure fixes a class that is already closed") {
  DisplayClass d;
  d.base = finset2();
  d.display = finset2_injections();
  TransformedDisplay out = comp_closure(d);
  CHECK(out.display.display == finset2_injections());
}

TEST_CASE("composition closure requires a replete input") {
  DisplayClass d;
  d.base = finset2prime();
  d.display = finset2prime_displays();
  CHECK(code_of([&] { comp_closure(d); }) == "InvalidDisplayClass");
}

TEST_CASE("a finite-limit category displays everything as a clan") {
  DisplayClass c2 = lex_to_clan(chain2_raw());
  CHECK(c2.display == all_mors(chain2_raw()));
  CHECK(validate_clan(c2).ok());
  DisplayClass dm = lex_to_clan(diamond_poset());
  CHECK(dm.display.size() == 9);
  CHECK(validate_clan(dm).ok());
}

TEST_CASE("missing terminal objects obstruct the clan structure") {
  CHECK(code_of([] { lex_to_clan(discrete_raw(2)); }) == "NotLex");
  CHECK(code_of([] { lex_to_clan(parallel_pair()); }) == "NotLex");
}

TEST_CASE("the separated core of a finite clan is the whole category") {
  // every diagonal is displayed because finite clans display every morphism
  SepCore s = sep_core(lex_to_clan(chain3()));
  CHECK(s.core.equal(chain3()));
  CHECK(is_lex(s.core));
  FunctorReport fr = functor_report(s.inclusion);
  CHECK(fr.full);
  CHECK(fr.faithful);

  SepCore sd = sep_core(lex_to_clan(diamond_poset()));
  CHECK(sd.core.objects.size() == 4);
  CHECK(is_lex(sd.core));
}

TEST_CASE("sep_core rejects display classes that are not clans") {
  DisplayClass d;
  d.base = finset2();
  d.display = finset2_injections();  // the global map from 2 is not displayed
  CHECK(code_of([&] { sep_core(d); }) == "InvalidClan");
}

TEST_CASE("the contextual core at a point with no types is a bare sequence") {
  DisplayClass d;
  d.base = chain2_raw();
  d.display = {"id0"};
  CompCat cc = dmc_to_compcat(d);
  cc.point = "1";
  CxlCore k = cxl_core(cc);
  CHECK(k.core.base.objects == std::vector<ObjId>{join_ids("seq", {})});
  CHECK(k.core.total.objects.empty());
  CHECK(validate_map(k.counit).ok());
  CHECK(map_is_strictly_pointed(k.counit));
  CompCatFlags fl = classify(k.core);
  CHECK(fl.pointed);
  CHECK(fl.contextual == true);
}

TEST_CASE("the contextual core of a one-point contextual instance is an equivalence") {
  DisplayClass d;
  d.base = terminal_raw();
  CompCat cc = dmc_to_compcat(d);
  cc.point = "*";
  CHECK(classify(cc).contextual == true);
  CxlCore k = cxl_core(cc);
  FunctorReport fr = functor_report(k.counit.F);
  CHECK(fr.full);
  CHECK(fr.faithful);
  CHECK(fr.ess_surjective);
  CHECK(k.core.total.objects.empty());
  CHECK(validate_map(k.counit).ok());
}

TEST_CASE("contextual cores need a point and a finite extension walk") {
  DisplayClass d;
  d.base = chain2_raw();
  d.display = {"id0"};
  CompCat cc = dmc_to_compcat(d);
  CHECK(code_of([&] { cxl_core(cc); }) == "PreconditionFailed");

  DisplayClass d2;
  d2.base = chain2_raw();
  d2.display = {"id0", "id1"};
  CompCat cc2 = dmc_to_compcat(d2);
  cc2.point = "1";
  CHECK(code_of([&] { cxl_core(cc2); }) == "SliceInfinite");
}

TEST_CASE("types become a discrete split fibration over the contexts") {
  CwA a = identity_extension_cwa(chain2_raw());
  CompCat cc = cwa_to_compcat(a);
  CHECK(validate_compcat(cc).ok());
  CHECK(cc.total.objects ==
        std::vector<ObjId>{pair_id("0", "*"), pair_id("1", "*")});
  CHECK(cc.chi.on_obj(pair_id("0", "*")) == "id0");
  CompCatFlags fl = classify(cc);
  CHECK(fl.discrete);
  CHECK(fl.split == true);

  CompCat zc = cwa_to_compcat(z2fib_cwa());
  CHECK(validate_compcat(zc).ok());
  CHECK(zc.chi.on_obj(pair_id("c1", "A")) == "a1");
  CHECK(classify(zc).discrete);
}

TEST_CASE("extension structure reads back from a discrete comprehension") {
  CwA a = identity_extension_cwa(chain2_raw());
  CwA b = compcat_to_cwa(cwa_to_compcat(a));
  CHECK(validate_cwa(b).ok());
  CHECK(b.base.equal(a.base));
  // canonical renaming: the type over ctx is now the pair object
  CHECK(b.ext.at({"0", pair_id("0", "*")}) == "0");
  CHECK(b.proj.at({"1", pair_id("1", "*")}) == "id1");
  CHECK(b.ext_mor.at({"a", pair_id("1", "*")}) == "a");

  CwA z = compcat_to_cwa(cwa_to_compcat(z2fib_cwa()));
  CHECK(validate_cwa(z).ok());
  CHECK(z.ext.at({"c1", pair_id("c1", "A")}) == "c0");
  CHECK(z.proj.at({"c1", pair_id("c1", "A")}) == "a1");
  CHECK(z.ext_mor.at({"t1", pair_id("c1", "A")}) == "t0");
}

TEST_CASE("non-discrete projections do not carry extension structure") {
  DisplayClass d;
  d.base = finset2();
  d.display = finset2_injections();
  CHECK(code_of([&] { compcat_to_cwa(dmc_to_compcat(d)); }) == "NotDiscrete");
}

TEST_CASE("terms arise as sections of the projections") {
  CwF w = cwa_to_cwf(identity_extension_cwa(chain2_raw()));
  CHECK(validate_cwf(w).ok());
  CHECK(w.Tm.elems(pair_id("0", "*")) == std::vector<ElemId>{"id0"});
  CHECK(w.Tm.elems(pair_id("1", "*")) == std::vector<ElemId>{"id1"});
  CHECK(w.Tm.action(pair_id("a", "*"), "id1") == "id0");
  CHECK(w.var.at({"0", "*"}) == "id0");
}

TEST_CASE("a type with no sections yields an empty term fiber") {
  CwF z = cwa_to_cwf(z2fib_cwa());
  CHECK(validate_cwf(z).ok());
  CHECK(z.Tm.elems(pair_id("c1", "A")).empty());
  CHECK(z.Tm.elems(pair_id("c0", "B")) == std::vector<ElemId>{"e0"});
  CHECK(z.var.at({"c1", "A"}) == "e0");
  CHECK(z.var.at({"c0", "B"}) == "e0");
  CHECK(cwf_to_cwa(z).base.equal(z2fib_base()));
}

TEST_CASE("summing term fibers over their types gives a natural model") {
  NaturalModel n = cwf_to_natmod(section_cwf());
  CHECK(validate_natmod(n).ok());
  CHECK(n.TmP.elems("0") == std::vector<ElemId>{pair_id("*", "s0")});
  CHECK(n.TmP.action("a", pair_id("*", "s1")) == pair_id("*", "s0"));
  CHECK(n.p.apply("0", pair_id("*", "s0")) == "*");
  CHECK(n.chosen_reps.at({"0", "*"}) == "0");
  CHECK(n.chosen_reps.at({"1", "*"}) == "1");
}

TEST_CASE("representing objects rebuild the extension structure of a model") {
  CwF w = natmod_to_cwf(identity_natmod());
  CHECK(validate_cwf(w).ok());
  CHECK(w.cwa.ext.at({"0", "*"}) == "0");
  CHECK(w.cwa.ext.at({"1", "*"}) == "1");
  CHECK(w.cwa.proj.at({"0", "*"}) == "id0");
  CHECK(w.cwa.ext_mor.at({"a", "*"}) == "a");
  CHECK(w.Tm.elems(pair_id("0", "*")) == std::vector<ElemId>{"*"});
  CHECK(w.var.at({"0", "*"}) == "*");
}

TEST_CASE("a fiber too large to be a hom set is not representable") {
  NaturalModel n;
  n.base = terminal_raw();
  n.TyP.base = n.base;
  n.TyP.at = {{"*", {"T"}}};
  n.TyP.act = {{{"id", "T"}, "T"}};
  n.TmP.base = n.base;
  n.TmP.at = {{"*", {"t1", "t2"}}};
  n.TmP.act = {{{"id", "t1"}, "t1"}, {{"id", "t2"}, "t2"}};
  n.p.components = {{"*", {{"t1", "T"}, {"t2", "T"}}}};
  CHECK(code_of([&] { natmod_to_cwf(n); }) == "NotRepresentable");
}

TEST_CASE("model round trips rename terms by their type prefix") {
  NaturalModel n2 = cwf_to_natmod(natmod_to_cwf(identity_natmod()));
  CHECK(validate_natmod(n2).ok());
  CHECK(n2.TmP.elems("0") == std::vector<ElemId>{pair_id("*", "*")});
  CHECK(n2.chosen_reps.at({"0", "*"}) == "0");

  CwF w2 = natmod_to_cwf(cwf_to_natmod(section_cwf()));
  CHECK(validate_cwf(w2).ok());
  CHECK(w2.cwa.ext.at({"0", "*"}) == "0");
  CHECK(w2.cwa.proj.at({"0", "*"}) == "id0");
  CHECK(w2.Tm.elems(pair_id("0", "*")) == std::vector<ElemId>{pair_id("*", "s0")});
  CHECK(w2.var.at({"0", "*"}) == pair_id("*", "s0"));
  CHECK(w2.Tm.action(pair_id("a", "*"), pair_id("*", "s1")) == pair_id("*", "s0"));
}

TEST_CASE("a bare root carries no types and reads back unchanged") {
  ContextualCategory x;
  x.base = terminal_raw();
  x.root = "*";
  CwA a = cxlcat_to_cwa(x);
  CHECK(validate_cwa(a).ok());
  CHECK(a.Ty.elems("*").empty());
  CHECK(a.ext.empty());

  ContextualCategory x2 = cwa_to_cxlcat(a);
  CHECK(validate_cxlcat(x2).ok());
  CHECK(x2.base.equal(x.base));
  CHECK(x2.root == "*");
  CHECK(x2.parent.empty());
  CHECK(x2.chosen_pb.empty());
}

TEST_CASE("extension trees reject bases that reuse contexts") {
  // the identity extension hits the root and loops every context onto itself
  CHECK(code_of([] { cwa_to_cxlcat(identity_extension_cwa(chain2_raw())); }) ==
        "NotContextual");

  CwA empty_on_discrete;
  empty_on_discrete.base = discrete_raw(2);
  empty_on_discrete.Ty.base = empty_on_discrete.base;
  empty_on_discrete.Ty.at = {{"d0", {}}, {"d1", {}}};
  CHECK(code_of([&] { cwa_to_cxlcat(empty_on_discrete); }) == "NotContextual");
}

TEST_CASE("two types sharing one extension object cannot form a tree") {
  CwA w;
  w.base = chain2_raw();
  w.Ty.base = w.base;
  w.Ty.at = {{"1", {"A", "B"}}, {"0", {"A0", "B0"}}};
  w.Ty.act = {{{"id1", "A"}, "A"},   {{"id1", "B"}, "B"},   {{"id0", "A0"}, "A0"},
              {{"id0", "B0"}, "B0"}, {{"a", "A"}, "A0"},    {{"a", "B"}, "B0"}};
  for (const char* t : {"A", "B"}) {
    w.ext[{"1", t}] = "0";
    w.proj[{"1", t}] = "a";
  }
  for (const char* t : {"A0", "B0"}) {
    w.ext[{"0", t}] = "0";
    w.proj[{"0", t}] = "id0";
  }
  w.ext_mor = {{{"id1", "A"}, "id0"}, {{"id1", "B"}, "id0"}, {{"id0", "A0"}, "id0"},
               {{"id0", "B0"}, "id0"}, {{"a", "A"}, "id0"},  {{"a", "B"}, "id0"}};
  CHECK(validate_cwa(w).ok());
  CHECK(code_of([&] { cwa_to_cxlcat(w); }) == "NotContextual");
}

TEST_CASE("classification flags accumulate along the completion pipeline") {
  CompCat cc = two_over_terminal();
  CompCatFlags f0 = classify(cc);
  CHECK_FALSE(f0.full);
  CHECK_FALSE(f0.subcategorical);

  TransformedCompCat a = fullify(cc);
  CompCatFlags f1 = classify(a.compcat);
  CHECK(f1.full);

  TransformedCompCat b = subcategorize(a.compcat);
  CompCatFlags f2 = classify(b.compcat);
  CHECK(f2.full);
  CHECK(f2.subcategorical);

  TransformedCompCat c = repletion(b.compcat);
  CompCatFlags f3 = classify(c.compcat);
  CHECK(f3.full);
  CHECK(f3.subcategorical);
  CHECK(f3.replete == true);
}
