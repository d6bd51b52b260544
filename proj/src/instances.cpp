#include "compcat/instances.hpp"

namespace compcat {

namespace {

void add_mor(FinCategory& c, const MorId& id, const ObjId& src, const ObjId& dst) {
  c.morphisms.push_back({id, src, dst});
}

// Fills every composite with an identity; the caller supplies the rest.
void close_identities(FinCategory& c) {
  for (const auto& m : c.morphisms) {
    c.composition[{c.identity.at(m.dst), m.id}] = m.id;
    c.composition[{m.id, c.identity.at(m.src)}] = m.id;
  }
}

}  // namespace

FinCategory finset2() {
  FinCategory c;
  c.objects = {"0", "1", "2"};
  c.identity = {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}};
  add_mor(c, "id0", "0", "0");
  add_mor(c, "id1", "1", "1");
  add_mor(c, "id2", "2", "2");
  add_mor(c, "i01", "0", "1");
  add_mor(c, "i02", "0", "2");
  add_mor(c, "k0", "1", "2");
  add_mor(c, "k1", "1", "2");
  add_mor(c, "bang", "2", "1");
  add_mor(c, "tau", "2", "2");
  add_mor(c, "c0", "2", "2");
  add_mor(c, "c1", "2", "2");
  close_identities(c);
  auto& t = c.composition;
  // out of 0: every composite is the unique empty map
  t[{"k0", "i01"}] = "i02";
  t[{"k1", "i01"}] = "i02";
  t[{"bang", "i02"}] = "i01";
  t[{"tau", "i02"}] = "i02";
  t[{"c0", "i02"}] = "i02";
  t[{"c1", "i02"}] = "i02";
  // through 1
  t[{"bang", "k0"}] = "id1";
  t[{"bang", "k1"}] = "id1";
  t[{"k0", "bang"}] = "c0";
  t[{"k1", "bang"}] = "c1";
  // 2 -> 2 -> 1
  t[{"bang", "tau"}] = "bang";
  t[{"bang", "c0"}] = "bang";
  t[{"bang", "c1"}] = "bang";
  // 1 -> 2 -> 2
  t[{"tau", "k0"}] = "k1";
  t[{"tau", "k1"}] = "k0";
  t[{"c0", "k0"}] = "k0";
  t[{"c0", "k1"}] = "k0";
  t[{"c1", "k0"}] = "k1";
  t[{"c1", "k1"}] = "k1";
  // endomorphisms of 2
  t[{"tau", "tau"}] = "id2";
  t[{"tau", "c0"}] = "c1";
  t[{"tau", "c1"}] = "c0";
  t[{"c0", "tau"}] = "c0";
  t[{"c1", "tau"}] = "c1";
  t[{"c0", "c0"}] = "c0";
  t[{"c0", "c1"}] = "c0";
  t[{"c1", "c0"}] = "c1";
  t[{"c1", "c1"}] = "c1";
  c.normalize();
  return c;
}

std::set<MorId> finset2_injections() {
  return {"id0", "id1", "id2", "i01", "i02", "k0", "k1", "tau"};
}

FinCategory finset2prime() {
  FinCategory c;
  c.objects = {"0", "1", "1p", "2"};
  c.identity = {{"0", "id0"}, {"1", "id1"}, {"1p", "id1p"}, {"2", "id2"}};
  add_mor(c, "id0", "0", "0");
  add_mor(c, "id1", "1", "1");
  add_mor(c, "id1p", "1p", "1p");
  add_mor(c, "id2", "2", "2");
  add_mor(c, "i01", "0", "1");
  add_mor(c, "i01p", "0", "1p");
  add_mor(c, "i02", "0", "2");
  add_mor(c, "u", "1", "1p");
  add_mor(c, "v", "1p", "1");
  add_mor(c, "k0", "1", "2");
  add_mor(c, "k1", "1", "2");
  add_mor(c, "k0p", "1p", "2");
  add_mor(c, "k1p", "1p", "2");
  add_mor(c, "bang", "2", "1");
  add_mor(c, "bangp", "2", "1p");
  add_mor(c, "tau", "2", "2");
  add_mor(c, "c0", "2", "2");
  add_mor(c, "c1", "2", "2");
  close_identities(c);
  auto& t = c.composition;
  // out of 0
  t[{"u", "i01"}] = "i01p";
  t[{"k0", "i01"}] = "i02";
  t[{"k1", "i01"}] = "i02";
  t[{"v", "i01p"}] = "i01";
  t[{"k0p", "i01p"}] = "i02";
  t[{"k1p", "i01p"}] = "i02";
  t[{"bang", "i02"}] = "i01";
  t[{"bangp", "i02"}] = "i01p";
  t[{"tau", "i02"}] = "i02";
  t[{"c0", "i02"}] = "i02";
  t[{"c1", "i02"}] = "i02";
  // the connecting isomorphism
  t[{"v", "u"}] = "id1";
  t[{"u", "v"}] = "id1p";
  t[{"k0p", "u"}] = "k0";
  t[{"k1p", "u"}] = "k1";
  t[{"k0", "v"}] = "k0p";
  t[{"k1", "v"}] = "k1p";
  // through 2 from the one-element sets
  t[{"bang", "k0"}] = "id1";
  t[{"bang", "k1"}] = "id1";
  t[{"bangp", "k0"}] = "u";
  t[{"bangp", "k1"}] = "u";
  t[{"tau", "k0"}] = "k1";
  t[{"tau", "k1"}] = "k0";
  t[{"c0", "k0"}] = "k0";
  t[{"c0", "k1"}] = "k0";
  t[{"c1", "k0"}] = "k1";
  t[{"c1", "k1"}] = "k1";
  t[{"bang", "k0p"}] = "v";
  t[{"bang", "k1p"}] = "v";
  t[{"bangp", "k0p"}] = "id1p";
  t[{"bangp", "k1p"}] = "id1p";
  t[{"tau", "k0p"}] = "k1p";
  t[{"tau", "k1p"}] = "k0p";
  t[{"c0", "k0p"}] = "k0p";
  t[{"c0", "k1p"}] = "k0p";
  t[{"c1", "k0p"}] = "k1p";
  t[{"c1", "k1p"}] = "k1p";
  // out of 2 through the one-element sets
  t[{"u", "bang"}] = "bangp";
  t[{"k0", "bang"}] = "c0";
  t[{"k1", "bang"}] = "c1";
  t[{"v", "bangp"}] = "bang";
  t[{"k0p", "bangp"}] = "c0";
  t[{"k1p", "bangp"}] = "c1";
  // endomorphisms of 2 (and their composites with bang/bangp)
  t[{"bang", "tau"}] = "bang";
  t[{"bang", "c0"}] = "bang";
  t[{"bang", "c1"}] = "bang";
  t[{"bangp", "tau"}] = "bangp";
  t[{"bangp", "c0"}] = "bangp";
  t[{"bangp", "c1"}] = "bangp";
  t[{"tau", "tau"}] = "id2";
  t[{"tau", "c0"}] = "c1";
  t[{"tau", "c1"}] = "c0";
  t[{"c0", "tau"}] = "c0";
  t[{"c1", "tau"}] = "c1";
  t[{"c0", "c0"}] = "c0";
  t[{"c0", "c1"}] = "c0";
  t[{"c1", "c0"}] = "c1";
  t[{"c1", "c1"}] = "c1";
  c.normalize();
  return c;
}

std::set<MorId> finset2prime_injections() {
  return {"id0", "id1", "id1p", "id2", "i01", "i01p", "i02",
          "u",   "v",   "k0",   "k1",  "k0p", "k1p",  "tau"};
}

std::set<MorId> finset2prime_displays() {
  auto d = finset2prime_injections();
  d.erase("k1");
  d.erase("k0p");
  return d;
}

FinCategory diamond_poset() {
  return poset_category({"bot", "x", "y", "top"}, {{"bot", "x"},
                                                   {"bot", "y"},
                                                   {"bot", "top"},
                                                   {"x", "top"},
                                                   {"y", "top"}});
}

}  // namespace compcat
