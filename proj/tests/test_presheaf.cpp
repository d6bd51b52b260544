#include "doctest.h"

#include <algorithm>

#include "compcat/fibration.hpp"
#include "compcat/fincat.hpp"
#include "compcat/ids.hpp"
#include "compcat/presheaf.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace compcat;

namespace {

FinCategory diamond() {
  return poset_category(
      {"a", "b", "bot", "top"},
      {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}, {"bot", "top"}});
}

// one object, one non-trivial involution s with s*s = id
FinCategory z2_monoid() {
  return monoid_category({"1", "s"}, "1",
                         {{{"1", "1"}, "1"}, {{"1", "s"}, "s"}, {{"s", "1"}, "s"}, {{"s", "s"}, "1"}});
}

}  // namespace

TEST_CASE("yoneda on the terminal category is the constant singleton") {
  FinPresheaf p = yoneda(builders::terminal_raw(), "*");
  REQUIRE(validate_presheaf(p).ok());
  CHECK(p.equal(constant_presheaf(builders::terminal_raw(), {"id"})));
}

TEST_CASE("yoneda at the top of the 2-chain has singleton fibers") {
  FinCategory c = builders::chain2_raw();
  FinPresheaf p = yoneda(c, "1");
  REQUIRE(validate_presheaf(p).ok());
  CHECK(p.elems("0") == std::vector<ElemId>{"a"});
  CHECK(p.elems("1") == std::vector<ElemId>{"id1"});
  CHECK(p.action("a", "id1") == "a");  // precomposition
}

TEST_CASE("yoneda fiber sizes equal hom-set sizes everywhere") {
  FinCategory c = diamond();
  for (const auto& obj : c.objects) {
    FinPresheaf p = yoneda(c, obj);
    REQUIRE(validate_presheaf(p).ok());
    for (const auto& x : c.objects) CHECK(p.elems(x).size() == c.hom(x, obj).size());
  }
}

TEST_CASE("yoneda rejects unknown objects") {
  CHECK_THROWS_WITH_AS(yoneda(builders::terminal_raw(), "nope"),
                       doctest::Contains("UnknownObject"), Error);
}

TEST_CASE("validate_presheaf catches missing and misplaced actions") {
  FinCategory c = builders::chain2_raw();
  FinPresheaf p = constant_presheaf(c, {"e"});
  p.act.erase({"a", "e"});
  CHECK(validate_presheaf(p).report.has("MissingAction"));

  FinPresheaf q;
  q.base = c;
  q.at = {{"0", {"x0"}}, {"1", {"x1"}}};
  q.act = {{{"id0", "x0"}, "x0"}, {{"id1", "x1"}, "x1"}, {{"a", "x1"}, "zz"}};
  CHECK(validate_presheaf(q).report.has("ActionEndpoints"));

  q.act[{"a", "x1"}] = "x0";
  q.act[{"a", "x0"}] = "x0";  // x0 does not live at dst(a)
  CHECK(validate_presheaf(q).report.has("SpuriousAction"));
}

TEST_CASE("validate_presheaf catches identity and composition failures") {
  FinPresheaf p = constant_presheaf(builders::terminal_raw(), {"u", "v"});
  p.act[{"id", "u"}] = "v";
  p.act[{"id", "v"}] = "u";
  CHECK(validate_presheaf(p).report.has("IdentityAction"));

  // act on b*a disagrees with act(a) after act(b); identities stay lawful
  FinCategory c3 = poset_category({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
  FinPresheaf q = constant_presheaf(c3, {"u", "v"});
  MorId b = join_ids("le", {"1", "2"});
  q.act[{b, "u"}] = "v";
  q.act[{b, "v"}] = "u";
  CHECK(validate_presheaf(q).report.has("ActionComposition"));
}

TEST_CASE("validate_presheaf catches duplicates and bad bases") {
  FinPresheaf p = constant_presheaf(builders::terminal_raw(), {"e"});
  p.at["*"] = {"e", "e"};
  CHECK(validate_presheaf(p).report.has("DuplicateElement"));

  FinPresheaf q;
  q.base.objects = {"x"};  // no identity
  CHECK(validate_presheaf(q).report.has("InvalidBase"));

  FinPresheaf r = constant_presheaf(builders::terminal_raw(), {"e"});
  r.at["ghost"] = {"e"};
  CHECK(validate_presheaf(r).report.has("DanglingRef"));
}

TEST_CASE("grothendieck of the constant singleton projects isomorphically") {
  for (const FinCategory& c : {builders::chain2_raw(), diamond()}) {
    FinFunctor p = grothendieck(constant_presheaf(c, {"e"}));
    CHECK(p.dom.objects.size() == c.objects.size());
    CHECK(p.dom.morphisms.size() == c.morphisms.size());
    CHECK(functor_report(p).isomorphism);
  }
}

TEST_CASE("grothendieck of a yoneda presheaf is the slice") {
  FinCategory c = diamond();
  FinFunctor p = grothendieck(yoneda(c, "top"));
  // object count = sum over x of |hom(x, top)| = 4; morphism count = sum over
  // f: x -> y of |hom(y, top)| = 9 since top is terminal
  CHECK(p.dom.objects.size() == 4);
  CHECK(p.dom.morphisms.size() == 9);
  FibrationReport rep = fibration_report(p);
  CHECK(rep.fibration);
  CHECK(rep.discrete);
  CHECK(rep.splittable == std::optional<bool>(true));
}

TEST_CASE("every morphism of a category of elements is cartesian") {
  FinFunctor p = grothendieck(yoneda(diamond(), "top"));
  for (const auto& m : p.dom.morphisms) {
    CHECK(is_cartesian(p, m.id));
    CHECK(oracles::cartesian_by_definition(p, m.id));
  }
  FinFunctor q = grothendieck(constant_presheaf(builders::chain2_raw(), {"u", "v"}));
  for (const auto& m : q.dom.morphisms) CHECK(is_cartesian(q, m.id));
}

TEST_CASE("grothendieck names objects and morphisms by pairing") {
  FinFunctor p = grothendieck(constant_presheaf(builders::terminal_raw(), {"e"}));
  CHECK(p.dom.objects == std::vector<ObjId>{pair_id("*", "e")});
  CHECK(p.dom.morphisms.front().id == pair_id("id", "e"));
}

TEST_CASE("fibration_to_presheaf of the identity fibration is fiberwise singleton") {
  FinCategory c = builders::chain2_raw();
  FinPresheaf p = fibration_to_presheaf(identity_functor(c));
  REQUIRE(validate_presheaf(p).ok());
  CHECK(p.elems("0") == std::vector<ElemId>{"0"});
  CHECK(p.elems("1") == std::vector<ElemId>{"1"});
  CHECK(p.action("a", "1") == "0");
}

TEST_CASE("fibration_to_presheaf rejects non-discrete fibrations") {
  ArrowCategory arr = arrow_category(diamond());
  CHECK_THROWS_WITH_AS(fibration_to_presheaf(arr.cod_functor), doctest::Contains("NotDiscrete"),
                       Error);
}

TEST_CASE("round trip: presheaf -> elements -> presheaf is naturally isomorphic") {
  for (const FinPresheaf& p :
       {yoneda(diamond(), "top"), constant_presheaf(builders::chain2_raw(), {"u", "v"})}) {
    FinPresheaf q = fibration_to_presheaf(grothendieck(p));
    // explicit iso: the element (x, e) of the rebuilt presheaf maps back to e
    PresheafMap iso;
    iso.src = q;
    iso.dst = p;
    for (const auto& x : p.base.objects)
      for (const auto& e : p.elems(x)) iso.components[x][pair_id(x, e)] = e;
    REQUIRE(validate_presheaf_map(iso).ok());
    CHECK(presheaf_map_is_iso(iso));
  }
}

TEST_CASE("round trip: fibration -> presheaf -> fibration is isomorphic over the base") {
  FinFunctor disc;
  disc.dom = builders::discrete_raw(2);
  disc.cod = builders::terminal_raw();
  disc.obj_map = {{"d0", "*"}, {"d1", "*"}};
  disc.mor_map = {{"id_d0", "id"}, {"id_d1", "id"}};

  for (const FinFunctor& p : {disc, grothendieck(yoneda(builders::chain2_raw(), "1"))}) {
    FinFunctor q = grothendieck(fibration_to_presheaf(p));
    // explicit comparison functor over the base: y maps to (p(y), y)
    FinFunctor h;
    h.dom = p.dom;
    h.cod = q.dom;
    for (const auto& y : p.dom.objects) h.obj_map[y] = pair_id(p.on_obj(y), y);
    for (const auto& m : p.dom.morphisms) h.mor_map[m.id] = pair_id(p.on_mor(m.id), m.dst);
    REQUIRE(validate_functor(h).ok());
    CHECK(functor_report(h).isomorphism);
    CHECK(compose_functors(q, h).equal_tables(p));
  }
}

TEST_CASE("is_representable recovers the representing object of a yoneda presheaf") {
  FinCategory c = diamond();
  for (const auto& obj : c.objects) {
    auto r = is_representable(yoneda(c, obj));
    REQUIRE(r.has_value());
    CHECK(r->obj == obj);
    REQUIRE(validate_presheaf_map(r->iso).ok());
    CHECK(presheaf_map_is_iso(r->iso));
    CHECK(oracles::representing_object(yoneda(c, obj)) == obj);
  }
}

TEST_CASE("is_representable finds the terminal object for constant singletons") {
  auto r = is_representable(constant_presheaf(builders::chain2_raw(), {"e"}));
  REQUIRE(r.has_value());
  CHECK(r->obj == "1");  // hom(-, 1) is a singleton everywhere, hom(1, 0) is empty
  CHECK(oracles::representing_object(constant_presheaf(builders::chain2_raw(), {"e"})) == "1");
}

TEST_CASE("is_representable refuses cardinality mismatches and empty presheaves") {
  FinPresheaf two = constant_presheaf(builders::terminal_raw(), {"u", "v"});
  CHECK(!is_representable(two).has_value());
  CHECK(!oracles::representing_object(two).has_value());

  FinPresheaf empty;
  empty.base = builders::chain2_raw();
  CHECK(!is_representable(empty).has_value());  // identities make every hom(x, x) nonempty
  CHECK(!oracles::representing_object(empty).has_value());
}

TEST_CASE("is_representable rejects a size-matched presheaf with the wrong action") {
  // over the involution monoid, hom(*, *) has the swap action; the constant
  // 2-element presheaf matches its size but forces a constant component
  FinPresheaf p = constant_presheaf(z2_monoid(), {"u", "v"});
  CHECK(!is_representable(p).has_value());
  CHECK(!oracles::representing_object(p).has_value());
  auto self = is_representable(yoneda(z2_monoid(), "*"));
  REQUIRE(self.has_value());
  CHECK(self->obj == "*");
}

TEST_CASE("is_representable search respects its budget") {
  FinPresheaf p = constant_presheaf(builders::chain2_raw(), {"e"});
  CHECK_THROWS_AS(is_representable(p, 1), BudgetExceeded);
}

TEST_CASE("representability agrees with the element-route oracle on a batch") {
  std::vector<FinPresheaf> batch;
  for (const auto& obj : diamond().objects) batch.push_back(yoneda(diamond(), obj));
  batch.push_back(constant_presheaf(diamond(), {"e"}));
  batch.push_back(constant_presheaf(diamond(), {"u", "v"}));
  batch.push_back(yoneda(z2_monoid(), "*"));
  for (const auto& p : batch) {
    auto got = is_representable(p);
    auto want = oracles::representing_object(p);
    CHECK(got.has_value() == want.has_value());
    if (got && want) CHECK(got->obj == *want);
  }
}

TEST_CASE("yoneda_map classifies an element") {
  FinPresheaf p = constant_presheaf(builders::chain2_raw(), {"u", "v"});
  PresheafMap m = yoneda_map(p, "1", "v");
  REQUIRE(validate_presheaf_map(m).ok());
  CHECK(m.apply("1", "id1") == "v");  // counit: the identity picks the element back out
  CHECK(m.apply("0", "a") == "v");    // constant action transports v to v
  CHECK_THROWS_WITH_AS(yoneda_map(p, "1", "zz"), doctest::Contains("UnknownElement"), Error);
}

TEST_CASE("validate_presheaf_map catches structural failures") {
  FinCategory c = builders::chain2_raw();
  FinPresheaf p = constant_presheaf(c, {"u", "v"});

  PresheafMap swap_at_0;  // breaks naturality at a: 0 -> 1
  swap_at_0.src = p;
  swap_at_0.dst = p;
  swap_at_0.components = {{"0", {{"u", "v"}, {"v", "u"}}}, {"1", {{"u", "u"}, {"v", "v"}}}};
  CHECK(validate_presheaf_map(swap_at_0).report.has("NaturalityFailure"));

  PresheafMap base_mismatch;
  base_mismatch.src = p;
  base_mismatch.dst = constant_presheaf(builders::terminal_raw(), {"u"});
  CHECK(validate_presheaf_map(base_mismatch).report.has("BaseMismatch"));

  PresheafMap partial = identity_presheaf_map(p);
  partial.components["0"].erase("u");
  CHECK(validate_presheaf_map(partial).report.has("MissingComponent"));

  PresheafMap spurious = identity_presheaf_map(p);
  spurious.components["0"]["zz"] = "u";
  CHECK(validate_presheaf_map(spurious).report.has("SpuriousComponent"));

  PresheafMap escape = identity_presheaf_map(p);
  escape.components["0"]["u"] = "zz";
  CHECK(validate_presheaf_map(escape).report.has("ComponentEndpoints"));
}

TEST_CASE("presheaf map composition and iso detection") {
  FinPresheaf p = constant_presheaf(builders::terminal_raw(), {"u", "v"});
  PresheafMap swap;
  swap.src = p;
  swap.dst = p;
  swap.components = {{"*", {{"u", "v"}, {"v", "u"}}}};
  REQUIRE(validate_presheaf_map(swap).ok());
  CHECK(presheaf_map_is_iso(swap));
  PresheafMap twice = compose_presheaf_maps(swap, swap);
  CHECK(twice.components == identity_presheaf_map(p).components);

  PresheafMap collapse;
  collapse.src = p;
  collapse.dst = p;
  collapse.components = {{"*", {{"u", "u"}, {"v", "u"}}}};
  REQUIRE(validate_presheaf_map(collapse).ok());
  CHECK(!presheaf_map_is_iso(collapse));
}

TEST_CASE("presheaf_pullback along the identity is isomorphic to the source") {
  FinPresheaf p = yoneda(builders::chain2_raw(), "1");
  FinPresheaf q = constant_presheaf(builders::chain2_raw(), {"e"});
  PresheafMap to_q;
  to_q.src = p;
  to_q.dst = q;
  for (const auto& x : p.base.objects)
    for (const auto& e : p.elems(x)) to_q.components[x][e] = "e";
  REQUIRE(validate_presheaf_map(to_q).ok());

  PresheafPullback pb = presheaf_pullback(to_q, identity_presheaf_map(q));
  REQUIRE(validate_presheaf(pb.apex).ok());
  REQUIRE(validate_presheaf_map(pb.to_left).ok());
  REQUIRE(validate_presheaf_map(pb.to_right).ok());
  CHECK(presheaf_map_is_iso(pb.to_left));
}

TEST_CASE("presheaf_pullback of disjoint fibers is empty") {
  FinCategory c = builders::terminal_raw();
  FinPresheaf two = constant_presheaf(c, {"0", "1"});
  PresheafMap pick0 = yoneda_map(two, "*", "0");
  PresheafMap pick1 = yoneda_map(two, "*", "1");
  // both sources are singleton yonedas, hitting different elements of `two`
  PresheafPullback pb = presheaf_pullback(pick0, pick1);
  CHECK(validate_presheaf(pb.apex).ok());
  CHECK(pb.apex.elems("*").empty());
}

TEST_CASE("presheaf_pullback cardinality matches the pointwise pair count") {
  FinCategory c = builders::chain2_raw();
  FinPresheaf p = constant_presheaf(c, {"u", "v"});
  FinPresheaf q = constant_presheaf(c, {"x", "y", "z"});
  FinPresheaf t = constant_presheaf(c, {"s", "t"});
  PresheafMap f;  // u,v -> s,t
  f.src = p;
  f.dst = t;
  for (const auto& o : c.objects) f.components[o] = {{"u", "s"}, {"v", "t"}};
  PresheafMap g;  // x,y -> s; z -> t
  g.src = q;
  g.dst = t;
  for (const auto& o : c.objects) g.components[o] = {{"x", "s"}, {"y", "s"}, {"z", "t"}};
  REQUIRE(validate_presheaf_map(f).ok());
  REQUIRE(validate_presheaf_map(g).ok());

  PresheafPullback pb = presheaf_pullback(f, g);
  for (const auto& o : c.objects) {
    long long want = 0;  // independent pointwise count
    for (const auto& a : p.elems(o))
      for (const auto& b : q.elems(o))
        if (f.apply(o, a) == g.apply(o, b)) ++want;
    CHECK((long long)pb.apex.elems(o).size() == want);
    CHECK(want == 3);  // (u,x), (u,y), (v,z)
  }
}

TEST_CASE("pullback of representables along a representable map is representable") {
  FinCategory c = diamond();
  FinPresheaf ytop = yoneda(c, "top");
  PresheafMap from_a = yoneda_map(ytop, "a", join_ids("le", {"a", "top"}));
  PresheafMap from_b = yoneda_map(ytop, "b", join_ids("le", {"b", "top"}));
  REQUIRE(validate_presheaf_map(from_a).ok());
  REQUIRE(validate_presheaf_map(from_b).ok());
  PresheafPullback pb = presheaf_pullback(from_a, from_b);
  auto r = is_representable(pb.apex);
  REQUIRE(r.has_value());
  CHECK(r->obj == "bot");  // the base pullback of a -> top <- b is the meet
}

TEST_CASE("presheaf_pullback rejects mismatched targets") {
  FinPresheaf p = constant_presheaf(builders::terminal_raw(), {"e"});
  FinPresheaf q = constant_presheaf(builders::terminal_raw(), {"u", "v"});
  CHECK_THROWS_WITH_AS(presheaf_pullback(identity_presheaf_map(p), identity_presheaf_map(q)),
                       doctest::Contains("EndpointMismatch"), Error);
}
