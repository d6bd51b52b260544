#ifndef COMPCAT_LAWS_HPP
#define COMPCAT_LAWS_HPP

#include <string>
#include <vector>

#include "compcat/compcat.hpp"
#include "compcat/structures.hpp"
#include "compcat/translators.hpp"

namespace compcat {

// Law checks over concrete instances. Every verdict certifies only the
// instance(s) it was computed on, never the law in general; enumerations are
// exhaustive within an explicit candidate budget and throw BudgetExceeded
// rather than sample.

struct Verdict {
  bool pass = false;
  std::string construction;
  std::string detail;       // reason on failure, sizes on success
  long long lhs_count = -1; // enumerated hom-set sizes where applicable
  long long rhs_count = -1;
};

// Whether the unit of `construction` at `instance` (the counit for
// "cxl_core") is an equivalence: both functor components of the induced map
// are equivalences of categories and the map itself validates. Constructions:
// "fullify" (a false verdict on non-full input is the expected outcome, not
// an error), "subcategorize", "repletion", "cxl_core". Throws
// Error{"ConstructionInapplicable"} when the instance lies outside the
// construction's domain or the name is unknown.
Verdict check_unit_equivalence(const std::string& construction, const CompCat& instance);

// Convenience: embed a display-map category via dmc_to_compcat first.
Verdict check_unit_equivalence(const std::string& construction, const DisplayClass& instance);

// Hom-set bijection witnessing one adjunction triangle at a concrete pair.
// Left adjoints compare Hom(L x, y) with Hom(x, y) by precomposition with the
// unit; right adjoints compare Hom(x, R y) with Hom(x, y) by postcomposition
// with the counit. Constructions on comprehension categories: "fullify"
// (y must be full; pseudo maps) and "cxl_core" (x must be contextual, y
// pointed; pointed pseudo maps). Constructions on display classes:
// "comp_closure" (y must be composition closed; hom = display-preserving
// functors) and "sep_core" (x must be a lex category with every map
// displayed; hom = clan maps: display-, terminal- and display-pullback-
// preserving functors). Throws Error{"ConstructionInapplicable"} or
// BudgetExceeded.
Verdict check_adjunction_hom_bijection(const std::string& construction, const CompCat& x,
                                       const CompCat& y, long long budget = 1000000);
Verdict check_adjunction_hom_bijection(const std::string& construction, const DisplayClass& x,
                                       const DisplayClass& y, long long budget = 1000000);

// Rigidity of contextual instances: enumerate all pointed pseudo maps
// cc -> dd, check (i) every one is isomorphic to its strictification and the
// strictification is strict and strictly pointed, (ii) between any ordered
// pair of such maps there is at most one pointed transformation. cc must be
// contextual, dd pointed with a terminal point. Throws
// Error{"ConstructionInapplicable"} or BudgetExceeded.
Verdict check_contextual_rigidity(const CompCat& cc, const CompCat& dd, long long budget = 1000000);

// The separating example for strict vs pseudo maps of stable display classes:
// the skeleton of two-element sets with injections displayed, against the
// same category with a doubled one-element object carrying the parallel
// display choice. Both validate as stable (non-replete) display classes, a
// pseudo equivalence between the induced comprehension categories exists, and
// no strict map between them is an equivalence. All three legs are checked
// exhaustively; `pass` requires all of them.
struct CounterexampleReport {
  bool left_is_sdmc = false;
  bool right_is_sdmc = false;
  long long pseudo_maps = 0;
  long long pseudo_equivalences = 0;
  long long strict_maps = 0;
  long long strict_equivalences = 0;
  bool pass = false;
  std::string detail;
  std::string to_string() const;
};

CounterexampleReport run_counterexample_sdmc(long long budget = 50000000);

// Round-trip battery over a named instance set ("default"). Each case runs
// one translation arrow there and back on one instance, comparing up to the
// arrow's canonical renaming. Instances are ordered smallest first, so
// `first_failure` names a minimal failing instance for its arrow.
struct RoundtripCase {
  std::string arrow;
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct RoundtripReport {
  std::vector<RoundtripCase> cases;
  bool all_pass = true;
  std::string first_failure;  // "arrow @ instance", empty when all pass
  std::string to_string() const;
};

RoundtripReport roundtrip_suite(const std::string& instance_set = "default");

}  // namespace compcat

#endif
