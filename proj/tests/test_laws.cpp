#include "doctest.h"

#include <string>
#include <vector>

#include "compcat/compcat.hpp"
#include "compcat/fincat.hpp"
#include "compcat/ids.hpp"
#include "compcat/instances.hpp"
#include "compcat/laws.hpp"
#include "compcat/structures.hpp"
#include "compcat/translators.hpp"
#include "support/builders.hpp"

using namespace compcat;
using namespace compcat::builders;

namespace {

// Pointed one-object instance with no types: the only finite shape whose
// extension walk is both closed and bijective on contexts.
CompCat one_point_contextual() {
  DisplayClass d;
  d.base = terminal_raw();
  CompCat cc = dmc_to_compcat(d);
  cc.point = "*";
  return cc;
}

// Pointed with a closed walk but two contexts: not contextual.
CompCat typed_chain_pointed() {
  DisplayClass d;
  d.base = chain2_raw();
  d.display = {"id0"};
  CompCat cc = dmc_to_compcat(d);
  cc.point = "1";
  return cc;
}

CompCat finset2prime_pointed() {
  CompCat cc = dmc_to_compcat(DisplayClass{finset2prime(), finset2prime_displays(), {}});
  cc.point = "1";
  return cc;
}

}  // namespace

TEST_CASE("the subcategorize unit is an equivalence on fully faithful instances") {
  Verdict v = check_unit_equivalence("subcategorize", fullify(two_over_terminal()).compcat);
  CHECK(v.pass);
  CHECK(v.construction == "subcategorize");
  Verdict w = check_unit_equivalence("subcategorize", dmc_to_compcat(lex_to_clan(chain2_raw())));
  CHECK(w.pass);
}

TEST_CASE("subcategorize does not apply without a fully faithful comprehension") {
  CHECK(code_of([] { check_unit_equivalence("subcategorize", two_over_terminal()); }) ==
        "ConstructionInapplicable");
}

TEST_CASE("the fullify unit fails on missing squares and passes once they exist") {
  Verdict v = check_unit_equivalence("fullify", two_over_terminal());
  CHECK_FALSE(v.pass);
  CHECK(v.detail == "total component is not an equivalence");
  Verdict w = check_unit_equivalence("fullify", fullify(two_over_terminal()).compcat);
  CHECK(w.pass);
}

TEST_CASE("the repletion unit is an equivalence because dropped displays stay isomorphic") {
  Verdict v = check_unit_equivalence(
      "repletion", DisplayClass{finset2prime(), finset2prime_displays(), {}});
  CHECK(v.pass);
  CHECK(code_of([] { check_unit_equivalence("repletion", two_over_terminal()); }) ==
        "ConstructionInapplicable");
}

TEST_CASE("the contextual core counit is an equivalence exactly on contextual instances") {
  Verdict v = check_unit_equivalence("cxl_core", one_point_contextual());
  CHECK(v.pass);
  CHECK(code_of([] { check_unit_equivalence("cxl_core", typed_chain_pointed()); }) ==
        "ConstructionInapplicable");
  CHECK(code_of([] { check_unit_equivalence("nonsense", one_point_contextual()); }) ==
        "ConstructionInapplicable");
}

TEST_CASE("fullify is left adjoint to forgetting fullness at a one-square target") {
  CompCat x = two_over_terminal();
  CompCat y = subcategorize(fullify(x).compcat).compcat;
  Verdict v = check_adjunction_hom_bijection("fullify", x, y);
  CHECK(v.pass);
  CHECK(v.lhs_count == 1);
  CHECK(v.rhs_count == 1);
}

TEST_CASE("the fullify adjunction check rejects a non-full target") {
  CompCat x = two_over_terminal();
  CHECK(code_of([&] { check_adjunction_hom_bijection("fullify", x, x); }) ==
        "ConstructionInapplicable");
}

TEST_CASE("the adjunction check surfaces exhausted budgets") {
  CompCat x = two_over_terminal();
  CompCat y = subcategorize(fullify(x).compcat).compcat;
  CHECK(code_of([&] { check_adjunction_hom_bijection("fullify", x, y, 1); }) ==
        "BudgetExceeded");
}

TEST_CASE("the contextual core is right adjoint to inclusion at a pointed target") {
  Verdict v = check_adjunction_hom_bijection("cxl_core", one_point_contextual(),
                                             typed_chain_pointed());
  CHECK(v.pass);
  CHECK(v.lhs_count == 1);
  CHECK(v.rhs_count == 1);
  CHECK(code_of([] {
          check_adjunction_hom_bijection("cxl_core", typed_chain_pointed(),
                                         typed_chain_pointed());
        }) == "ConstructionInapplicable");
}

TEST_CASE("composition closure is left adjoint to inclusion over the three-chain") {
  DisplayClass x = chain3_steps();
  DisplayClass y = lex_to_clan(chain3());
  Verdict v = check_adjunction_hom_bijection("comp_closure", x, y);
  CHECK(v.pass);
  // ten monotone endomaps of the chain on either side
  CHECK(v.lhs_count == 10);
  CHECK(v.rhs_count == 10);
  CHECK(code_of([&] { check_adjunction_hom_bijection("comp_closure", x, x); }) ==
        "ConstructionInapplicable");
}

TEST_CASE("the separated core is right adjoint to viewing a lex category as a clan") {
  Verdict v = check_adjunction_hom_bijection("sep_core", lex_to_clan(terminal_raw()),
                                             lex_to_clan(chain2_raw()));
  CHECK(v.pass);
  CHECK(v.lhs_count == 1);  // terminal preservation pins the image
  CHECK(v.rhs_count == 1);

  Verdict w = check_adjunction_hom_bijection("sep_core", lex_to_clan(chain2_raw()),
                                             lex_to_clan(diamond_poset()));
  CHECK(w.pass);
  CHECK(w.lhs_count == 4);  // top is pinned, the other context is free
  CHECK(w.rhs_count == 4);

  DisplayClass not_clan{finset2(), finset2_injections(), {}};
  CHECK(code_of([&] {
          check_adjunction_hom_bijection("sep_core", not_clan, lex_to_clan(chain2_raw()));
        }) == "ConstructionInapplicable");
}

TEST_CASE("unknown constructions are rejected on both overloads") {
  CHECK(code_of([] {
          check_adjunction_hom_bijection("nonsense", two_over_terminal(), two_over_terminal());
        }) == "ConstructionInapplicable");
  CHECK(code_of([] {
          check_adjunction_hom_bijection("nonsense", lex_to_clan(chain2_raw()),
                                         lex_to_clan(chain2_raw()));
        }) == "ConstructionInapplicable");
}

TEST_CASE("pointed maps out of a contextual instance are rigid") {
  Verdict v = check_contextual_rigidity(one_point_contextual(), finset2prime_pointed());
  CHECK(v.pass);
  // the point lands on either copy of the one-element set
  CHECK(v.lhs_count == 2);
  // exactly one pointed transformation for each ordered pair of maps
  CHECK(v.rhs_count == 4);

  CompCat tiny = dmc_to_compcat(lex_to_clan(terminal_raw()));
  tiny.point = "*";
  Verdict w = check_contextual_rigidity(one_point_contextual(), tiny);
  CHECK(w.pass);
  CHECK(w.lhs_count == 1);
  CHECK(w.rhs_count == 1);
}

TEST_CASE("rigidity preconditions: contextual source, terminal point target") {
  CompCat unpointed = dmc_to_compcat(lex_to_clan(terminal_raw()));
  CHECK(code_of([&] { check_contextual_rigidity(unpointed, finset2prime_pointed()); }) ==
        "ConstructionInapplicable");
  CompCat low = typed_chain_pointed();
  low.point = "0";  // not terminal in the chain
  CHECK(code_of([&] { check_contextual_rigidity(one_point_contextual(), low); }) ==
        "ConstructionInapplicable");
}

TEST_CASE("the display-choice counterexample separates pseudo from strict equivalence") {
  CounterexampleReport r = run_counterexample_sdmc();
  CHECK(r.left_is_sdmc);
  CHECK(r.right_is_sdmc);
  CHECK(r.pseudo_maps > 0);
  CHECK(r.pseudo_equivalences > 0);
  CHECK(r.strict_maps > 0);
  CHECK(r.strict_equivalences == 0);
  CHECK(r.pass);
  CHECK(r.to_string().find("PASS") != std::string::npos);
}

TEST_CASE("the round-trip battery passes on the default instance set") {
  RoundtripReport rep = roundtrip_suite();
  for (const RoundtripCase& c : rep.cases) {
    CAPTURE(c.arrow);
    CAPTURE(c.instance);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass);
  CHECK(rep.first_failure.empty());
  CHECK(rep.cases.size() == 39);
  CHECK(rep.to_string().find("FAIL") == std::string::npos);
  CHECK(code_of([] { roundtrip_suite("bogus"); }) == "UnknownSuite");
}
