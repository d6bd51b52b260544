#include "compcat/laws.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

#include "compcat/errors.hpp"
#include "compcat/ids.hpp"
#include "compcat/instances.hpp"
#include "compcat/presheaf.hpp"

namespace compcat {

namespace {

bool map_is_equivalence(const CompCatMap& m) {
  return functor_report(m.F).equivalence && functor_report(m.Fbar).equivalence;
}

Verdict equivalence_verdict(const std::string& construction, const CompCatMap& m) {
  Verdict v;
  v.construction = construction;
  Checked<CompCatMap> chk = validate_map(m);
  if (!chk.ok()) {
    v.detail = "induced map does not validate: " + chk.report.to_string();
    return v;
  }
  FunctorReport base = functor_report(m.F);
  FunctorReport total = functor_report(m.Fbar);
  v.pass = base.equivalence && total.equivalence;
  if (v.pass)
    v.detail = "base and total components are equivalences";
  else if (!base.equivalence)
    v.detail = "base component is not an equivalence";
  else
    v.detail = "total component is not an equivalence";
  return v;
}

// Shared bijection audit: transport every lhs element into rhs, demand the
// image exists, is never repeated, and covers rhs.
template <typename T, typename Eq, typename Tr>
Verdict bijection_verdict(const std::string& construction, const std::vector<T>& lhs,
                          const std::vector<T>& rhs, Eq eq, Tr transport) {
  Verdict v;
  v.construction = construction;
  v.lhs_count = static_cast<long long>(lhs.size());
  v.rhs_count = static_cast<long long>(rhs.size());
  std::vector<bool> hit(rhs.size(), false);
  for (const T& m : lhs) {
    T img = transport(m);
    size_t at = rhs.size();
    for (size_t j = 0; j < rhs.size(); ++j)
      if (eq(img, rhs[j])) {
        at = j;
        break;
      }
    if (at == rhs.size()) {
      v.detail = "transported map lands outside the comparison hom-set";
      return v;
    }
    if (hit[at]) {
      v.detail = "transport identifies two distinct maps";
      return v;
    }
    hit[at] = true;
  }
  for (size_t j = 0; j < rhs.size(); ++j)
    if (!hit[j]) {
      v.detail = "transport misses a map in the comparison hom-set";
      return v;
    }
  v.pass = true;
  v.detail = "bijective on " + std::to_string(lhs.size()) + " maps";
  return v;
}

[[noreturn]] void inapplicable(const std::string& msg) {
  throw Error("ConstructionInapplicable", msg);
}

bool is_contextual(const CompCat& cc) {
  if (!cc.point) return false;
  CompCatFlags flags = classify(cc);
  return flags.contextual && *flags.contextual;
}

// Every (display, map-into-its-codomain) cospan with its canonical pullback;
// clan maps must carry each of these to a pullback cone.
std::vector<std::tuple<MorId, MorId, Cone>> clan_cospans(const DisplayClass& a) {
  std::vector<std::tuple<MorId, MorId, Cone>> out;
  for (const MorId& d : a.display)
    for (const Mor& m : a.base.morphisms) {
      if (m.dst != a.base.mor(d).dst) continue;
      std::optional<Cone> cone = pullback(a.base, d, m.id);
      if (!cone) throw Error("PullbackMissing", "clan lacks a pullback of a display map");
      out.emplace_back(d, m.id, *cone);
    }
  return out;
}

bool clan_map_ok(const DisplayClass& a, const std::vector<std::tuple<MorId, MorId, Cone>>& cospans,
                 const ObjId& terminal_a, const DisplayClass& b, const FinFunctor& f) {
  for (const MorId& d : a.display)
    if (!b.display.count(f.on_mor(d))) return false;
  ObjId ft = f.on_obj(terminal_a);
  for (const ObjId& o : b.base.objects)
    if (b.base.hom(o, ft).size() != 1) return false;
  for (const auto& [d, g, cone] : cospans) {
    Cone img{f.on_obj(cone.apex), f.on_mor(cone.leg_f), f.on_mor(cone.leg_g)};
    if (!is_pullback_cone(b.base, f.on_mor(d), f.on_mor(g), img)) return false;
  }
  return true;
}

}  // namespace

Verdict check_unit_equivalence(const std::string& construction, const CompCat& instance) {
  if (construction == "fullify") return equivalence_verdict(construction, fullify(instance).unit);
  if (construction == "subcategorize") {
    try {
      return equivalence_verdict(construction, subcategorize(instance).unit);
    } catch (const Error& e) {
      if (e.code == "NotFull")
        inapplicable("subcategorize needs a fully faithful comprehension functor");
      throw;
    }
  }
  if (construction == "repletion") {
    try {
      return equivalence_verdict(construction, repletion(instance).unit);
    } catch (const Error& e) {
      if (e.code == "NotSubcategorical")
        inapplicable("repletion of an instance needs a subcategorical comprehension");
      throw;
    }
  }
  if (construction == "cxl_core") {
    if (!instance.point) inapplicable("cxl_core needs a pointed instance");
    if (!is_contextual(instance))
      inapplicable("the cxl_core counit is an equivalence only on contextual instances");
    return equivalence_verdict(construction, cxl_core(instance).counit);
  }
  inapplicable("unknown construction '" + construction + "'");
}

Verdict check_unit_equivalence(const std::string& construction, const DisplayClass& instance) {
  return check_unit_equivalence(construction, dmc_to_compcat(instance));
}

Verdict check_adjunction_hom_bijection(const std::string& construction, const CompCat& x,
                                       const CompCat& y, long long budget) {
  if (construction == "fullify") {
    if (!classify(y).full) inapplicable("fullify adjunction needs a full right-hand instance");
    TransformedCompCat lx = fullify(x);
    std::vector<CompCatMap> lhs = enumerate_maps(lx.compcat, y, false, false, budget);
    std::vector<CompCatMap> rhs = enumerate_maps(x, y, false, false, budget);
    return bijection_verdict(construction, lhs, rhs, maps_equal,
                             [&](const CompCatMap& m) { return compose_maps(m, lx.unit); });
  }
  if (construction == "cxl_core") {
    if (!is_contextual(x)) inapplicable("cxl_core adjunction needs a contextual left-hand instance");
    if (!y.point) inapplicable("cxl_core adjunction needs a pointed right-hand instance");
    CxlCore ry = cxl_core(y);
    std::vector<CompCatMap> lhs = enumerate_maps(x, ry.core, false, true, budget);
    std::vector<CompCatMap> rhs = enumerate_maps(x, y, false, true, budget);
    return bijection_verdict(construction, lhs, rhs, maps_equal,
                             [&](const CompCatMap& m) { return compose_maps(ry.counit, m); });
  }
  inapplicable("construction '" + construction +
               "' does not act on comprehension-category pairs");
}

Verdict check_adjunction_hom_bijection(const std::string& construction, const DisplayClass& x,
                                       const DisplayClass& y, long long budget) {
  auto tables_eq = [](const FinFunctor& a, const FinFunctor& b) { return a.equal_tables(b); };
  if (construction == "comp_closure") {
    if (comp_closure(y).display.display != y.display)
      inapplicable("comp_closure adjunction needs a composition-closed right-hand instance");
    TransformedDisplay lx = comp_closure(x);
    std::vector<FinFunctor> lhs;
    std::vector<FinFunctor> rhs;
    for (const FinFunctor& f : enumerate_functors(x.base, y.base, budget)) {
      auto preserves = [&](const std::set<MorId>& displays) {
        for (const MorId& d : displays)
          if (!y.display.count(f.on_mor(d))) return false;
        return true;
      };
      if (preserves(lx.display.display)) lhs.push_back(f);
      if (preserves(x.display)) rhs.push_back(f);
    }
    // the unit is the identity on the base, so transport is the identity
    return bijection_verdict(construction, lhs, rhs, tables_eq,
                             [](const FinFunctor& f) { return f; });
  }
  if (construction == "sep_core") {
    Checked<DisplayClass> xv = validate_clan(x);
    if (!xv.ok() || !is_lex(x.base))
      inapplicable("sep_core adjunction needs a lex left-hand instance with every map displayed");
    if (x.display.size() != x.base.morphisms.size())
      inapplicable("sep_core adjunction needs every left-hand map displayed");
    if (!validate_clan(y).ok()) inapplicable("sep_core adjunction needs a clan on the right");
    SepCore ry = sep_core(y);
    DisplayClass core_clan = lex_to_clan(ry.core);
    std::optional<ObjId> tx = terminal_object(x.base);
    std::vector<std::tuple<MorId, MorId, Cone>> cospans = clan_cospans(x);
    std::vector<FinFunctor> lhs;
    std::vector<FinFunctor> rhs;
    for (const FinFunctor& f : enumerate_functors(x.base, ry.core, budget))
      if (clan_map_ok(x, cospans, *tx, core_clan, f)) lhs.push_back(f);
    for (const FinFunctor& f : enumerate_functors(x.base, y.base, budget))
      if (clan_map_ok(x, cospans, *tx, y, f)) rhs.push_back(f);
    return bijection_verdict(construction, lhs, rhs, tables_eq, [&](const FinFunctor& f) {
      return compose_functors(ry.inclusion, f);
    });
  }
  inapplicable("construction '" + construction + "' does not act on display-class pairs");
}

Verdict check_contextual_rigidity(const CompCat& cc, const CompCat& dd, long long budget) {
  if (!is_contextual(cc)) inapplicable("rigidity needs a contextual source");
  if (!dd.point) inapplicable("rigidity needs a pointed target");
  for (const ObjId& o : dd.base.objects)
    if (dd.base.hom(o, *dd.point).size() != 1)
      inapplicable("rigidity needs the target point to be terminal");

  Verdict v;
  v.construction = "rigidity";
  std::vector<CompCatMap> maps = enumerate_maps(cc, dd, false, true, budget);
  v.lhs_count = static_cast<long long>(maps.size());
  for (const CompCatMap& m : maps) {
    Strictified s = strictify_contextual_map(m);
    if (!map_is_strict(s.map) || !map_is_strictly_pointed(s.map)) {
      v.detail = "strictification is not strict and strictly pointed";
      return v;
    }
    if (!validate_transformation(s.iso).ok() || !transformation_is_iso(s.iso)) {
      v.detail = "strictification witness is not an isomorphism";
      return v;
    }
  }
  long long transformations = 0;
  for (const CompCatMap& m1 : maps)
    for (const CompCatMap& m2 : maps) {
      std::vector<CompCatTransformation> ts = enumerate_transformations(m1, m2, true, budget);
      transformations += static_cast<long long>(ts.size());
      if (ts.size() > 1) {
        v.detail = "two pointed transformations between one ordered pair of maps";
        return v;
      }
    }
  v.rhs_count = transformations;
  v.pass = true;
  v.detail = std::to_string(maps.size()) + " pointed maps, at most one pointed transformation per ordered pair";
  return v;
}

std::string CounterexampleReport::to_string() const {
  std::ostringstream os;
  os << "left sdmc: " << (left_is_sdmc ? "ok" : "FAIL")
     << "; right sdmc: " << (right_is_sdmc ? "ok" : "FAIL")
     << "; pseudo equivalences: " << pseudo_equivalences << "/" << pseudo_maps
     << "; strict equivalences: " << strict_equivalences << "/" << strict_maps << "; "
     << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) os << " (" << detail << ")";
  return os.str();
}

CounterexampleReport run_counterexample_sdmc(long long budget) {
  CounterexampleReport r;
  DisplayClass left{finset2(), finset2_injections(), {}};
  DisplayClass right{finset2prime(), finset2prime_displays(), {}};
  r.left_is_sdmc = validate_dmc(left, false).ok();
  r.right_is_sdmc = validate_dmc(right, false).ok();
  bool right_replete = validate_dmc(right, true).ok();

  CompCat cl = dmc_to_compcat(left);
  CompCat cr = dmc_to_compcat(right);
  for_each_map(cl, cr, false, false, budget, [&](const CompCatMap& m) {
    ++r.pseudo_maps;
    if (map_is_equivalence(m)) ++r.pseudo_equivalences;
    return true;
  });
  for_each_map(cl, cr, true, false, budget, [&](const CompCatMap& m) {
    ++r.strict_maps;
    if (map_is_equivalence(m)) ++r.strict_equivalences;
    return true;
  });
  r.pass = r.left_is_sdmc && r.right_is_sdmc && r.pseudo_equivalences > 0 &&
           r.strict_equivalences == 0;
  std::ostringstream os;
  os << "right display class is " << (right_replete ? "replete" : "stable but not replete")
     << "; pseudo maps reach an equivalence, strict maps do not";
  r.detail = os.str();
  return r;
}

namespace {

struct CaseResult {
  bool pass = false;
  std::string detail;
};

void add_case(RoundtripReport& rep, const std::string& arrow, const std::string& instance,
              const std::function<CaseResult()>& run) {
  RoundtripCase rc;
  rc.arrow = arrow;
  rc.instance = instance;
  try {
    CaseResult r = run();
    rc.pass = r.pass;
    rc.detail = r.detail;
  } catch (const std::exception& e) {
    rc.pass = false;
    rc.detail = e.what();
  }
  if (!rc.pass && rep.all_pass) {
    rep.all_pass = false;
    rep.first_failure = arrow + " @ " + instance;
  }
  rep.cases.push_back(std::move(rc));
}

CaseResult verdict_case(bool pass, const std::string& why) {
  CaseResult r;
  r.pass = pass;
  if (!pass) r.detail = why;
  return r;
}

FinCategory terminal_poset() { return poset_category({"0"}, {}); }

FinCategory chain2_poset() { return poset_category({"0", "1"}, {{"0", "1"}}); }

// Identity extension: one type everywhere, extension by it changes nothing.
CwA id_ext_cwa(const FinCategory& c) {
  CwA a;
  a.base = c;
  a.Ty.base = c;
  for (const ObjId& o : c.objects) a.Ty.at[o] = {"*"};
  for (const Mor& m : c.morphisms) a.Ty.act[{m.id, "*"}] = "*";
  a.Ty.normalize();
  for (const ObjId& o : c.objects) {
    a.ext[{o, "*"}] = o;
    a.proj[{o, "*"}] = c.id_of(o);
  }
  for (const Mor& m : c.morphisms) a.ext_mor[{m.id, "*"}] = m.id;
  return a;
}

// One type per object with distinct names, so renaming arrows are exercised.
CwA two_name_cwa() {
  FinCategory c = chain2_poset();
  CwA a;
  a.base = c;
  a.Ty.base = c;
  a.Ty.at["1"] = {"A"};
  a.Ty.at["0"] = {"A0"};
  a.Ty.act[{"le(1,1)", "A"}] = "A";
  a.Ty.act[{"le(0,0)", "A0"}] = "A0";
  a.Ty.act[{"le(0,1)", "A"}] = "A0";
  a.Ty.normalize();
  a.ext[{"1", "A"}] = "1";
  a.proj[{"1", "A"}] = "le(1,1)";
  a.ext[{"0", "A0"}] = "0";
  a.proj[{"0", "A0"}] = "le(0,0)";
  a.ext_mor[{"le(1,1)", "A"}] = "le(1,1)";
  a.ext_mor[{"le(0,0)", "A0"}] = "le(0,0)";
  a.ext_mor[{"le(0,1)", "A"}] = "le(0,1)";
  return a;
}

ContextualCategory root_only_cxlcat() {
  ContextualCategory x;
  x.base = terminal_poset();
  x.root = "0";
  return x;
}

bool cwa_equal(const CwA& a, const CwA& b) {
  return a.base.equal(b.base) && a.Ty.equal(b.Ty) && a.ext == b.ext && a.proj == b.proj &&
         a.ext_mor == b.ext_mor;
}

bool cwf_equal(const CwF& a, const CwF& b) {
  return cwa_equal(a.cwa, b.cwa) && a.Tm.equal(b.Tm) && a.var == b.var;
}

bool natmod_equal(const NaturalModel& a, const NaturalModel& b) {
  return a.base.equal(b.base) && a.TyP.equal(b.TyP) && a.TmP.equal(b.TmP) &&
         a.p.components == b.p.components && a.chosen_reps == b.chosen_reps;
}

bool cxlcat_equal(const ContextualCategory& a, const ContextualCategory& b) {
  if (!(a.base.equal(b.base) && a.root == b.root && a.parent == b.parent && a.proj == b.proj))
    return false;
  if (a.chosen_pb.size() != b.chosen_pb.size()) return false;
  for (const auto& [key, sq] : a.chosen_pb) {
    auto it = b.chosen_pb.find(key);
    if (it == b.chosen_pb.end() || it->second.obj != sq.obj || it->second.top != sq.top)
      return false;
  }
  return true;
}

// Element e of p at o becomes pair_id(o, e) after a category-of-elements
// round trip.
FinPresheaf rename_presheaf_elems(const FinPresheaf& p) {
  FinPresheaf q;
  q.base = p.base;
  for (const auto& [o, es] : p.at)
    for (const ElemId& e : es) q.at[o].push_back(pair_id(o, e));
  for (const auto& [key, val] : p.act) {
    const Mor& m = p.base.mor(key.first);
    q.act[{key.first, pair_id(m.dst, key.second)}] = pair_id(m.src, val);
  }
  q.normalize();
  return q;
}

// Type A over g becomes pair_id(g, A) after a compcat round trip.
CwA rename_cwa_types(const CwA& a) {
  CwA b;
  b.base = a.base;
  b.Ty = rename_presheaf_elems(a.Ty);
  for (const auto& [key, val] : a.ext) b.ext[{key.first, pair_id(key.first, key.second)}] = val;
  for (const auto& [key, val] : a.proj) b.proj[{key.first, pair_id(key.first, key.second)}] = val;
  for (const auto& [key, val] : a.ext_mor)
    b.ext_mor[{key.first, pair_id(a.base.mor(key.first).dst, key.second)}] = val;
  return b;
}

// Total object x over g becomes pair_id(g, x); a total morphism of a discrete
// fibration is determined by its image and target, so m becomes
// pair_id(p(m), dst(m)).
CompCat rename_discrete_total(const CompCat& cc) {
  auto ro = [&](const ObjId& x) { return pair_id(cc.p.on_obj(x), x); };
  auto rm = [&](const MorId& m) { return pair_id(cc.p.on_mor(m), cc.total.mor(m).dst); };
  CompCat b;
  b.base = cc.base;
  b.point = cc.point;
  for (const ObjId& x : cc.total.objects) b.total.objects.push_back(ro(x));
  for (const Mor& m : cc.total.morphisms)
    b.total.morphisms.push_back({rm(m.id), ro(m.src), ro(m.dst)});
  for (const auto& [x, i] : cc.total.identity) b.total.identity[ro(x)] = rm(i);
  for (const auto& [pr, c] : cc.total.composition)
    b.total.composition[{rm(pr.first), rm(pr.second)}] = rm(c);
  b.total.normalize();
  b.p.dom = b.total;
  b.p.cod = cc.p.cod;
  b.chi.dom = b.total;
  b.chi.cod = cc.chi.cod;
  for (const ObjId& x : cc.total.objects) {
    b.p.obj_map[ro(x)] = cc.p.on_obj(x);
    b.chi.obj_map[ro(x)] = cc.chi.on_obj(x);
  }
  for (const Mor& m : cc.total.morphisms) {
    b.p.mor_map[rm(m.id)] = cc.p.on_mor(m.id);
    b.chi.mor_map[rm(m.id)] = cc.chi.on_mor(m.id);
  }
  return b;
}

// Term s of type A becomes pair_id(A, s) after a natural-model round trip.
CwF rename_cwf_terms(const CwF& w) {
  std::map<ObjId, ElemId> type_of;  // category-of-elements object -> its type
  for (const auto& [g, ts] : w.cwa.Ty.at)
    for (const ElemId& t : ts) type_of[pair_id(g, t)] = t;
  CwF b;
  b.cwa = w.cwa;
  b.Tm.base = w.Tm.base;
  for (const auto& [o, es] : w.Tm.at)
    for (const ElemId& e : es) b.Tm.at[o].push_back(pair_id(type_of.at(o), e));
  for (const auto& [key, val] : w.Tm.act) {
    const Mor& m = w.Tm.base.mor(key.first);
    b.Tm.act[{key.first, pair_id(type_of.at(m.dst), key.second)}] =
        pair_id(type_of.at(m.src), val);
  }
  b.Tm.normalize();
  for (const auto& [key, val] : w.var) {
    ElemId over = w.cwa.Ty.action(w.cwa.proj.at(key), key.second);
    b.var[key] = pair_id(over, val);
  }
  return b;
}

// Term m over g becomes pair_id(p(m), m) after a families round trip.
NaturalModel rename_natmod_terms(const NaturalModel& n) {
  NaturalModel b = n;
  b.TmP.at.clear();
  b.TmP.act.clear();
  for (const auto& [g, ms] : n.TmP.at)
    for (const ElemId& m : ms) b.TmP.at[g].push_back(pair_id(n.p.apply(g, m), m));
  for (const auto& [key, val] : n.TmP.act) {
    const Mor& f = n.base.mor(key.first);
    b.TmP.act[{key.first, pair_id(n.p.apply(f.dst, key.second), key.second)}] =
        pair_id(n.p.apply(f.src, val), val);
  }
  b.TmP.normalize();
  b.p.components.clear();
  for (const auto& [g, comp] : n.p.components) {
    auto& out = b.p.components[g];
    for (const auto& [m, t] : comp) out[pair_id(t, m)] = t;
  }
  b.p.src = b.TmP;
  b.p.dst = n.TyP;
  return b;
}

}  // namespace

std::string RoundtripReport::to_string() const {
  std::ostringstream os;
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, std::string>> agg;  // arrow -> (count, first failure)
  for (const RoundtripCase& c : cases) {
    if (!agg.count(c.arrow)) {
      order.push_back(c.arrow);
      agg[c.arrow] = {0, ""};
    }
    auto& a = agg[c.arrow];
    ++a.first;
    if (!c.pass && a.second.empty()) a.second = c.instance;
  }
  for (const std::string& arrow : order) {
    const auto& a = agg.at(arrow);
    os << arrow << ": " << (a.second.empty() ? "pass" : "FAIL @ " + a.second) << " ("
       << a.first << " instances)\n";
  }
  return os.str();
}

RoundtripReport roundtrip_suite(const std::string& instance_set) {
  if (instance_set != "default")
    throw Error("UnknownSuite", "no instance set named '" + instance_set + "'");
  RoundtripReport rep;

  std::vector<std::pair<std::string, DisplayClass>> dmcs;
  dmcs.emplace_back("terminal-clan", lex_to_clan(terminal_poset()));
  dmcs.emplace_back("chain2-clan", lex_to_clan(chain2_poset()));
  dmcs.emplace_back("diamond-clan", lex_to_clan(diamond_poset()));
  dmcs.emplace_back("finset2-injections", DisplayClass{finset2(), finset2_injections(), {}});
  dmcs.emplace_back("finset2prime-displays",
                    DisplayClass{finset2prime(), finset2prime_displays(), {}});

  for (const auto& [name, d] : dmcs) {
    add_case(rep, "dmc->compcat->dmc", name, [&d = d]() {
      DisplayClass back = compcat_to_dmc(dmc_to_compcat(d));
      if (!back.base.equal(d.base)) return verdict_case(false, "base category changed");
      return verdict_case(back.display == d.display, "display class changed");
    });
    add_case(rep, "compcat->dmc->compcat", name, [&d = d]() {
      CompCat cc = dmc_to_compcat(d);
      return verdict_case(compcats_equal(dmc_to_compcat(compcat_to_dmc(cc)), cc),
                          "comprehension category changed");
    });
  }

  std::vector<std::pair<std::string, FinPresheaf>> presheaves;
  {
    FinPresheaf point_on_0;
    point_on_0.base = chain2_poset();
    point_on_0.at["0"] = {"x"};
    point_on_0.act[{"le(0,0)", "x"}] = "x";
    point_on_0.normalize();
    presheaves.emplace_back("point-on-0", point_on_0);
    presheaves.emplace_back("yoneda-chain2-1", yoneda(chain2_poset(), "1"));
    presheaves.emplace_back("constant-two-diamond",
                            constant_presheaf(diamond_poset(), {"a", "b"}));
  }
  for (const auto& [name, p] : presheaves)
    add_case(rep, "presheaf->elements->presheaf", name, [&p = p]() {
      FinPresheaf back = fibration_to_presheaf(grothendieck(p));
      return verdict_case(back.equal(rename_presheaf_elems(p)), "presheaf changed");
    });

  std::vector<std::pair<std::string, CwA>> cwas;
  cwas.emplace_back("idext-terminal", id_ext_cwa(terminal_poset()));
  cwas.emplace_back("idext-chain2", id_ext_cwa(chain2_poset()));
  cwas.emplace_back("two-name-chain2", two_name_cwa());
  cwas.emplace_back("idext-diamond", id_ext_cwa(diamond_poset()));

  for (const auto& [name, a] : cwas) {
    add_case(rep, "cwa->compcat->cwa", name, [&a = a]() {
      CwA back = compcat_to_cwa(cwa_to_compcat(a));
      return verdict_case(cwa_equal(back, rename_cwa_types(a)), "attributes changed");
    });
    add_case(rep, "compcat->cwa->compcat", name, [&a = a]() {
      CompCat cc = cwa_to_compcat(a);
      CompCat back = cwa_to_compcat(compcat_to_cwa(cc));
      return verdict_case(compcats_equal(back, rename_discrete_total(cc)),
                          "comprehension category changed");
    });
    add_case(rep, "cwa->cwf->cwa", name, [&a = a]() {
      return verdict_case(cwa_equal(cwf_to_cwa(cwa_to_cwf(a)), a), "attributes changed");
    });
    add_case(rep, "cwf->cwa->cwf", name, [&a = a]() {
      CwF w = cwa_to_cwf(a);
      return verdict_case(cwf_equal(cwa_to_cwf(cwf_to_cwa(w)), w), "families changed");
    });
    add_case(rep, "cwf->natmod->cwf", name, [&a = a]() {
      CwF w = cwa_to_cwf(a);
      CwF back = natmod_to_cwf(cwf_to_natmod(w));
      return verdict_case(cwf_equal(back, rename_cwf_terms(w)), "families changed");
    });
    add_case(rep, "natmod->cwf->natmod", name, [&a = a]() {
      NaturalModel n = cwf_to_natmod(cwa_to_cwf(a));
      NaturalModel back = cwf_to_natmod(natmod_to_cwf(n));
      return verdict_case(natmod_equal(back, rename_natmod_terms(n)), "natural model changed");
    });
  }

  add_case(rep, "cxlcat->cwa->cxlcat", "root-only", []() {
    ContextualCategory x = root_only_cxlcat();
    return verdict_case(cxlcat_equal(cwa_to_cxlcat(cxlcat_to_cwa(x)), x),
                        "contextual category changed");
  });
  add_case(rep, "cwa->cxlcat->cwa", "empty-over-root", []() {
    CwA a = cxlcat_to_cwa(root_only_cxlcat());
    return verdict_case(cwa_equal(cxlcat_to_cwa(cwa_to_cxlcat(a)), a), "attributes changed");
  });

  return rep;
}

}  // namespace compcat
