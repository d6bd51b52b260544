#include "doctest.h"

#include <algorithm>

#include "compcat/fincat.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace compcat;

TEST_CASE("validate_category accepts the 3-chain with its composite") {
  FinCategory c = poset_category({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
  auto checked = validate_category(c);
  CHECK(checked.ok());
  // exactly one non-degenerate composable triple: (2<=2? no) 0->1->2
  CHECK(checked->compose(join_ids("le", {"1", "2"}), join_ids("le", {"0", "1"})) ==
        join_ids("le", {"0", "2"}));
}

TEST_CASE("validate_category accepts the terminal category") {
  CHECK(validate_category(builders::terminal_raw()).ok());
}

TEST_CASE("validate_category reports a broken composite") {
  FinCategory c = builders::chain2_raw();
  c.composition[{"id1", "a"}] = "id1";  // endpoints no longer match
  auto checked = validate_category(c);
  CHECK(!checked.ok());
  CHECK(checked.report.has("CompositeEndpoints"));

  // identity law violation: composite exists but picks the wrong morphism
  FinCategory c2 = builders::chain2_raw();
  c2.composition[{"a", "id0"}] = "a";
  c2.composition[{"id1", "a"}] = "a";
  // swap a's left identity to a distinct parallel arrow
  c2.morphisms.push_back({"b", "0", "1"});
  c2.composition[{"b", "id0"}] = "a";  // right identity broken for b
  c2.composition[{"id1", "b"}] = "b";
  auto checked2 = validate_category(c2);
  CHECK(!checked2.ok());
  CHECK(checked2.report.has("LawViolation"));
}

TEST_CASE("validate_category reports dangling references and duplicates") {
  FinCategory c = builders::chain2_raw();
  c.morphisms.push_back({"z", "0", "7"});
  auto checked = validate_category(c);
  CHECK(!checked.ok());
  CHECK(checked.report.has("DanglingRef"));

  FinCategory d = builders::chain2_raw();
  d.morphisms.push_back({"a", "0", "1"});
  auto cd = validate_category(d);
  CHECK(!cd.ok());
  CHECK(cd.report.has("DuplicateMorphism"));
}

TEST_CASE("arrow_category of the terminal category") {
  ArrowCategory arr = arrow_category(builders::terminal_raw());
  CHECK(arr.cat.objects.size() == 1);
  CHECK(arr.cat.morphisms.size() == 1);
  CHECK(validate_category(arr.cat).ok());
}

TEST_CASE("arrow_category of the 2-chain matches the square-enumeration oracle") {
  FinCategory c = builders::chain2_raw();
  // oracle first: every commuting square, counted from raw tables
  long long expect = oracles::commuting_square_count(c);
  CHECK(expect == 6);  // frozen: 3 identities + id0=>id1, id0=>a, a=>id1

  ArrowCategory arr = arrow_category(c);
  CHECK(arr.cat.objects.size() == 3);
  CHECK((long long)arr.cat.morphisms.size() == expect);
  CHECK(validate_category(arr.cat).ok());
  CHECK(validate_functor(arr.dom_functor).ok());
  CHECK(validate_functor(arr.cod_functor).ok());
}

TEST_CASE("arrow_category object count equals morphism count of the base") {
  std::vector<FinCategory> cats = {
      builders::terminal_raw(), builders::chain2_raw(), builders::discrete_raw(3),
      poset_category({"a", "b", "t"}, {{"a", "t"}, {"b", "t"}})};
  for (const auto& c : cats) {
    ArrowCategory arr = arrow_category(c);
    CHECK(arr.cat.objects.size() == c.morphisms.size());
    CHECK((long long)arr.cat.morphisms.size() == oracles::commuting_square_count(c));
    CHECK(validate_category(arr.cat).ok());
  }
}

TEST_CASE("pullback in a meet-semilattice is the meet") {
  // diamond with bottom: bot <= a, b <= top
  FinCategory c = poset_category(
      {"a", "b", "bot", "top"},
      {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}, {"bot", "top"}});
  MorId f = join_ids("le", {"a", "top"});
  MorId g = join_ids("le", {"b", "top"});
  auto cone = pullback(c, f, g);
  REQUIRE(cone.has_value());
  CHECK(cone->apex == "bot");
  CHECK(oracles::limiting_cone(c, f, g, cone->apex, cone->leg_f, cone->leg_g));
}

TEST_CASE("pullback along an identity is the cospan source") {
  FinCategory c = builders::chain2_raw();
  auto cone = pullback(c, "a", "id1");
  REQUIRE(cone.has_value());
  CHECK(cone->apex == "0");
  CHECK(cone->leg_f == "id0");
  CHECK(cone->leg_g == "a");
  CHECK(oracles::limiting_cone(c, "a", "id1", cone->apex, cone->leg_f, cone->leg_g));
}

TEST_CASE("pullback can be missing, and non-cospans are rejected") {
  // v-shape: a <= top >= b with no meet
  FinCategory c = poset_category({"a", "b", "top"}, {{"a", "top"}, {"b", "top"}});
  CHECK(!pullback(c, join_ids("le", {"a", "top"}), join_ids("le", {"b", "top"})));
  CHECK_THROWS_WITH_AS(pullback(c, join_ids("le", {"a", "top"}), c.id_of("a")),
                       doctest::Contains("NonCospan"), Error);
}

TEST_CASE("terminal_object") {
  CHECK(terminal_object(builders::terminal_raw()) == ObjId{"*"});
  CHECK(terminal_object(builders::chain2_raw()) == ObjId{"1"});
  CHECK(!terminal_object(builders::discrete_raw(2)).has_value());
}

TEST_CASE("is_lex") {
  FinCategory diamond = poset_category(
      {"a", "b", "bot", "top"},
      {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}, {"bot", "top"}});
  CHECK(is_lex(diamond));
  CHECK(is_lex(builders::terminal_raw()));
  CHECK(is_lex(builders::chain2_raw()));
  CHECK(!is_lex(builders::discrete_raw(2)));
  // v-shape has a terminal object but misses a pullback
  CHECK(!is_lex(poset_category({"a", "b", "top"}, {{"a", "top"}, {"b", "top"}})));
}

TEST_CASE("functor_report on identity and inclusion") {
  FinCategory c = builders::chain2_raw();
  FunctorReport idrep = functor_report(identity_functor(c));
  CHECK(idrep.full);
  CHECK(idrep.faithful);
  CHECK(idrep.ess_surjective);
  CHECK(idrep.injective_on_objects);
  CHECK(idrep.equivalence);
  CHECK(idrep.isomorphism);

  // one-object category into 2-object discrete: ff, not essentially surjective
  FinFunctor inc;
  inc.dom = builders::terminal_raw();
  inc.cod = builders::discrete_raw(2);
  inc.obj_map = {{"*", "d0"}};
  inc.mor_map = {{"id", "id_d0"}};
  REQUIRE(validate_functor(inc).ok());
  FunctorReport rep = functor_report(inc);
  CHECK(rep.full);
  CHECK(rep.faithful);
  CHECK(!rep.ess_surjective);
  CHECK(!rep.equivalence);
}

TEST_CASE("functor validation catches endpoint and law failures") {
  FinFunctor f;
  f.dom = builders::chain2_raw();
  f.cod = builders::chain2_raw();
  f.obj_map = {{"0", "0"}, {"1", "1"}};
  f.mor_map = {{"id0", "id0"}, {"id1", "id1"}, {"a", "id0"}};
  auto checked = validate_functor(f);
  CHECK(!checked.ok());
  CHECK(checked.report.has("LawViolation"));
}

TEST_CASE("enumerate_functors counts") {
  FinCategory disc2 = builders::discrete_raw(2);
  CHECK(enumerate_functors(disc2, disc2).size() == 4);
  CHECK(enumerate_functors(builders::chain2_raw(), disc2).size() == 2);
  CHECK(enumerate_functors(builders::terminal_raw(), builders::terminal_raw()).size() == 1);
  CHECK_THROWS_AS(enumerate_functors(disc2, disc2, 3), BudgetExceeded);
}

TEST_CASE("enumerate_functors results validate and compose with identities") {
  FinCategory c = builders::chain2_raw();
  FinCategory d = poset_category({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  auto fs = enumerate_functors(c, d);
  CHECK(fs.size() == 6);  // monotone maps from the 2-chain into the 3-chain
  for (const auto& f : fs) {
    CHECK(validate_functor(f).ok());
    CHECK(compose_functors(identity_functor(d), f).equal_tables(f));
    CHECK(compose_functors(f, identity_functor(c)).equal_tables(f));
  }
}

TEST_CASE("natural transformation validation") {
  FinCategory c = builders::chain2_raw();
  FinFunctor idf = identity_functor(c);
  FinNatTrans t{idf, idf, {{"0", "id0"}, {"1", "id1"}}};
  CHECK(validate_nattrans(t).ok());
  CHECK(nattrans_is_iso(t));

  // component with wrong endpoints
  FinNatTrans bad{idf, idf, {{"0", "a"}, {"1", "id1"}}};
  auto checked = validate_nattrans(bad);
  CHECK(!checked.ok());
  CHECK(checked.report.has("ComponentEndpoints"));
}

TEST_CASE("naturality failure is caught") {
  // two parallel endofunctors on the 2-object discrete category swap vs identity
  FinCategory d = builders::discrete_raw(2);
  FinFunctor idf = identity_functor(d);
  FinFunctor swap;
  swap.dom = d;
  swap.cod = d;
  swap.obj_map = {{"d0", "d1"}, {"d1", "d0"}};
  swap.mor_map = {{"id_d0", "id_d1"}, {"id_d1", "id_d0"}};
  REQUIRE(validate_functor(swap).ok());
  FinNatTrans t{idf, swap, {{"d0", "id_d0"}, {"d1", "id_d1"}}};
  CHECK(!validate_nattrans(t).ok());
}

TEST_CASE("poset_category rejects non-posets") {
  CHECK_THROWS_WITH_AS(poset_category({"x", "y"}, {{"x", "y"}, {"y", "x"}}),
                       doctest::Contains("NotAPartialOrder"), Error);
  CHECK_THROWS_AS(poset_category({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}), Error);
}

TEST_CASE("poset_category matches the handwritten 2-chain") {
  FinCategory p = poset_category({"0", "1"}, {{"0", "1"}});
  CHECK(validate_category(p).ok());
  CHECK(p.objects.size() == 2);
  CHECK(p.morphisms.size() == 3);
  CHECK(terminal_object(p) == ObjId{"1"});
}

TEST_CASE("free_category_on_dag") {
  FinCategory c = free_category_on_dag({"u", "v", "w"}, {{"e", "u", "v"}, {"f", "v", "w"}});
  CHECK(validate_category(c).ok());
  // paths: 3 empty + e, f, ef
  CHECK(c.morphisms.size() == 6);
  MorId e = join_ids("path", {"u", "e"});
  CHECK(c.mor(e).dst == "v");
  CHECK(c.id_of("u") == join_ids("path", {"u"}));
  CHECK(c.compose(join_ids("path", {"v", "f"}), e) == join_ids("path", {"u", "e", "f"}));
  CHECK_THROWS_WITH_AS(free_category_on_dag({"u", "v"}, {{"e", "u", "v"}, {"f", "v", "u"}}),
                       doctest::Contains("CyclicGraph"), Error);
}

TEST_CASE("free category on parallel edges") {
  FinCategory c = free_category_on_dag({"u", "v"}, {{"e1", "u", "v"}, {"e2", "u", "v"}});
  CHECK(validate_category(c).ok());
  CHECK(c.hom("u", "v").size() == 2);
}

TEST_CASE("monoid_category") {
  // Z/2
  std::map<std::pair<std::string, std::string>, std::string> z2 = {
      {{"e", "e"}, "e"}, {{"e", "s"}, "s"}, {{"s", "e"}, "s"}, {{"s", "s"}, "e"}};
  FinCategory c = monoid_category({"e", "s"}, "e", z2);
  CHECK(validate_category(c).ok());
  CHECK(c.objects.size() == 1);
  CHECK(c.is_iso("s"));

  std::map<std::pair<std::string, std::string>, std::string> bad = {
      {{"e", "e"}, "e"}, {{"e", "s"}, "s"}, {{"s", "e"}, "s"}, {{"s", "s"}, "s"}};
  // (s*s)*s = s but s*(s*s) = s: still associative; break the unit instead
  std::map<std::pair<std::string, std::string>, std::string> bad_unit = {
      {{"e", "e"}, "e"}, {{"e", "s"}, "e"}, {{"s", "e"}, "s"}, {{"s", "s"}, "s"}};
  CHECK_THROWS_WITH_AS(monoid_category({"e", "s"}, "e", bad_unit),
                       doctest::Contains("NotAMonoid"), Error);
  CHECK(validate_category(monoid_category({"e", "s"}, "e", bad)).ok());
}

TEST_CASE("product_category") {
  FinCategory c = builders::chain2_raw();
  FinCategory d = builders::discrete_raw(2);
  FinCategory p = product_category(c, d);
  CHECK(validate_category(p).ok());
  CHECK(p.objects.size() == c.objects.size() * d.objects.size());
  CHECK(p.morphisms.size() == c.morphisms.size() * d.morphisms.size());
}

TEST_CASE("opposite_category is an involution on the nose") {
  for (const auto& c : {builders::chain2_raw(), builders::discrete_raw(3),
                        poset_category({"a", "b", "t"}, {{"a", "t"}, {"b", "t"}})}) {
    FinCategory op = opposite_category(c);
    CHECK(validate_category(op).ok());
    CHECK(opposite_category(op).equal(c));
    CHECK(op.mor(c.morphisms.front().id).src == c.morphisms.front().dst);
  }
}

TEST_CASE("iso detection") {
  FinCategory c = builders::chain2_raw();
  CHECK(c.is_iso("id0"));
  CHECK(!c.is_iso("a"));
  // two-object isomorphism pair
  FinCategory iso;
  iso.objects = {"x", "y"};
  iso.morphisms = {{"idx", "x", "x"}, {"idy", "y", "y"}, {"f", "x", "y"}, {"g", "y", "x"}};
  iso.identity = {{"x", "idx"}, {"y", "idy"}};
  iso.composition[{"idx", "idx"}] = "idx";
  iso.composition[{"idy", "idy"}] = "idy";
  iso.composition[{"f", "idx"}] = "f";
  iso.composition[{"idy", "f"}] = "f";
  iso.composition[{"g", "idy"}] = "g";
  iso.composition[{"idx", "g"}] = "g";
  iso.composition[{"g", "f"}] = "idx";
  iso.composition[{"f", "g"}] = "idy";
  REQUIRE(validate_category(iso).ok());
  CHECK(iso.is_iso("f"));
  CHECK(iso.inverse("f") == MorId{"g"});
  CHECK(iso.objects_isomorphic("x", "y"));
}
