#include "compcat/document.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <utility>

#include "compcat/presheaf.hpp"

namespace compcat {

namespace {

using nlohmann::json;

[[noreturn]] void syntax(const std::string& where, const std::string& what) {
  throw Error("SyntaxError", where + ": " + what);
}

const json& field(const json& j, const std::string& where, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) syntax(where, "missing field " + key);
  return *it;
}

void expect_keys(const json& j, const std::string& where,
                 std::initializer_list<const char*> keys) {
  if (!j.is_object()) syntax(where, "expected an object");
  for (const char* k : keys) (void)field(j, where, k);
  for (const auto& item : j.items()) {
    bool known = std::any_of(keys.begin(), keys.end(),
                             [&](const char* k) { return item.key() == k; });
    if (!known) syntax(where, "unknown field " + item.key());
  }
}

std::string get_str(const json& j, const std::string& where) {
  if (!j.is_string()) syntax(where, "expected a string");
  return j.get<std::string>();
}

std::optional<std::string> get_str_or_null(const json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  return get_str(j, where);
}

const json& get_array(const json& j, const std::string& where) {
  if (!j.is_array()) syntax(where, "expected an array");
  return j;
}

// Arrays carry map-like tables; their key order is part of the canonical form.
template <typename K>
struct OrderGuard {
  std::optional<K> prev;
  void step(const K& k, const std::string& where) {
    if (prev) {
      if (*prev == k) syntax(where, "duplicate entry");
      if (!(*prev < k)) syntax(where, "not in canonical order");
    }
    prev = k;
  }
};

std::map<std::string, std::string> to_str_map(const json& j, const std::string& where) {
  if (!j.is_object()) syntax(where, "expected an object");
  std::map<std::string, std::string> out;
  for (const auto& item : j.items()) out[item.key()] = get_str(item.value(), where + "." + item.key());
  return out;
}

json from_str_map(const std::map<std::string, std::string>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

// -- category -----------------------------------------------------------------

FinCategory body_to_category(const json& b, const std::string& where) {
  expect_keys(b, where, {"composition", "identity", "morphisms", "objects"});
  FinCategory c;

  OrderGuard<std::string> oo;
  for (const json& o : get_array(field(b, where, "objects"), where + ".objects")) {
    ObjId x = get_str(o, where + ".objects");
    oo.step(x, where + ".objects");
    c.objects.push_back(x);
  }

  OrderGuard<std::string> om;
  for (const json& m : get_array(field(b, where, "morphisms"), where + ".morphisms")) {
    const std::string at = where + ".morphisms";
    expect_keys(m, at, {"dst", "id", "src"});
    Mor mor{get_str(m.at("id"), at + ".id"), get_str(m.at("src"), at + ".src"),
            get_str(m.at("dst"), at + ".dst")};
    om.step(mor.id, at);
    c.morphisms.push_back(mor);
  }

  for (auto& [o, i] : to_str_map(field(b, where, "identity"), where + ".identity"))
    c.identity[o] = i;

  OrderGuard<std::pair<std::string, std::string>> oc;
  for (const json& e : get_array(field(b, where, "composition"), where + ".composition")) {
    const std::string at = where + ".composition";
    expect_keys(e, at, {"f", "g", "gf"});
    std::pair<MorId, MorId> key{get_str(e.at("g"), at + ".g"), get_str(e.at("f"), at + ".f")};
    oc.step(key, at);
    c.composition[key] = get_str(e.at("gf"), at + ".gf");
  }
  return c;
}

json category_to_body(const FinCategory& c) {
  json b = json::object();
  std::vector<ObjId> objs = c.objects;
  std::sort(objs.begin(), objs.end());
  b["objects"] = objs;

  std::vector<Mor> mors = c.morphisms;
  std::sort(mors.begin(), mors.end(), [](const Mor& x, const Mor& y) { return x.id < y.id; });
  json jm = json::array();
  for (const Mor& m : mors) jm.push_back({{"dst", m.dst}, {"id", m.id}, {"src", m.src}});
  b["morphisms"] = jm;

  b["identity"] = from_str_map(c.identity);

  json jc = json::array();
  for (const auto& [key, gf] : c.composition)
    jc.push_back({{"f", key.second}, {"g", key.first}, {"gf", gf}});
  b["composition"] = jc;
  return b;
}

// -- functor tables -----------------------------------------------------------

void tables_from_body(const json& b, const std::string& where, FinFunctor& f) {
  expect_keys(b, where, {"mor_map", "obj_map"});
  for (auto& [k, v] : to_str_map(field(b, where, "obj_map"), where + ".obj_map"))
    f.obj_map[k] = v;
  for (auto& [k, v] : to_str_map(field(b, where, "mor_map"), where + ".mor_map"))
    f.mor_map[k] = v;
}

json tables_to_body(const FinFunctor& f) {
  return {{"mor_map", from_str_map(f.mor_map)}, {"obj_map", from_str_map(f.obj_map)}};
}

// -- presheaf -----------------------------------------------------------------

FinPresheaf body_to_presheaf(const json& b, const std::string& where) {
  expect_keys(b, where, {"act", "at"});
  FinPresheaf p;
  const json& at = field(b, where, "at");
  if (!at.is_object()) syntax(where + ".at", "expected an object");
  for (const auto& item : at.items()) {
    OrderGuard<std::string> oe;
    std::vector<ElemId> es;
    for (const json& e : get_array(item.value(), where + ".at." + item.key())) {
      ElemId x = get_str(e, where + ".at." + item.key());
      oe.step(x, where + ".at." + item.key());
      es.push_back(x);
    }
    p.at[item.key()] = es;
  }
  OrderGuard<std::pair<std::string, std::string>> oa;
  for (const json& e : get_array(field(b, where, "act"), where + ".act")) {
    const std::string at2 = where + ".act";
    expect_keys(e, at2, {"elem", "mor", "to"});
    std::pair<MorId, ElemId> key{get_str(e.at("mor"), at2 + ".mor"),
                                 get_str(e.at("elem"), at2 + ".elem")};
    oa.step(key, at2);
    p.act[key] = get_str(e.at("to"), at2 + ".to");
  }
  return p;
}

json presheaf_to_body(const FinPresheaf& p) {
  json at = json::object();
  for (const auto& [o, es] : p.at) {
    std::vector<ElemId> sorted = es;
    std::sort(sorted.begin(), sorted.end());
    at[o] = sorted;
  }
  json act = json::array();
  for (const auto& [key, to] : p.act)
    act.push_back({{"elem", key.second}, {"mor", key.first}, {"to", to}});
  return {{"act", act}, {"at", at}};
}

// -- compcat ------------------------------------------------------------------

struct RawCompCat {
  FinCategory base;
  FinCategory total;
  std::map<ObjId, ObjId> p_obj, chi_obj;
  std::map<MorId, MorId> p_mor, chi_mor;
  std::optional<ObjId> point;
};

RawCompCat body_to_rawcc(const json& b, const std::string& where) {
  expect_keys(b, where, {"base", "chi", "p", "point", "total"});
  RawCompCat r;
  r.base = body_to_category(field(b, where, "base"), where + ".base");
  r.total = body_to_category(field(b, where, "total"), where + ".total");
  FinFunctor p, chi;
  tables_from_body(field(b, where, "p"), where + ".p", p);
  tables_from_body(field(b, where, "chi"), where + ".chi", chi);
  r.p_obj = p.obj_map;
  r.p_mor = p.mor_map;
  r.chi_obj = chi.obj_map;
  r.chi_mor = chi.mor_map;
  r.point = get_str_or_null(field(b, where, "point"), where + ".point");
  return r;
}

// chi.cod is derived data; rebuilding it needs a lawful base.
CompCat finish_compcat(RawCompCat&& r) {
  Checked<FinCategory> base = validate_category(r.base);
  if (!base.ok())
    throw Error("InvalidBase", "cannot rebuild the arrow category: " +
                                   base.report.violations.front().code);
  CompCat cc;
  cc.base = std::move(r.base);
  cc.total = std::move(r.total);
  cc.p.dom = cc.total;
  cc.p.cod = cc.base;
  cc.p.obj_map = std::move(r.p_obj);
  cc.p.mor_map = std::move(r.p_mor);
  cc.chi.dom = cc.total;
  cc.chi.cod = arrow_category(cc.base).cat;
  cc.chi.obj_map = std::move(r.chi_obj);
  cc.chi.mor_map = std::move(r.chi_mor);
  cc.point = std::move(r.point);
  return cc;
}

json compcat_to_body(const CompCat& cc) {
  json b = json::object();
  b["base"] = category_to_body(cc.base);
  b["total"] = category_to_body(cc.total);
  b["p"] = tables_to_body(cc.p);
  b["chi"] = tables_to_body(cc.chi);
  b["point"] = cc.point ? json(*cc.point) : json(nullptr);
  return b;
}

// -- display class ------------------------------------------------------------

struct RawDisplay {
  DisplayClass d;
};

DisplayClass body_to_display(const json& b, const std::string& where) {
  expect_keys(b, where, {"base", "chosen_pullbacks", "display"});
  DisplayClass d;
  d.base = body_to_category(field(b, where, "base"), where + ".base");
  OrderGuard<std::string> od;
  for (const json& m : get_array(field(b, where, "display"), where + ".display")) {
    MorId x = get_str(m, where + ".display");
    od.step(x, where + ".display");
    d.display.insert(x);
  }
  OrderGuard<std::pair<std::string, std::string>> oc;
  for (const json& e :
       get_array(field(b, where, "chosen_pullbacks"), where + ".chosen_pullbacks")) {
    const std::string at = where + ".chosen_pullbacks";
    expect_keys(e, at, {"along", "apex", "display", "pulled", "top"});
    std::pair<MorId, MorId> key{get_str(e.at("display"), at + ".display"),
                                get_str(e.at("along"), at + ".along")};
    oc.step(key, at);
    Cone cone{get_str(e.at("apex"), at + ".apex"), get_str(e.at("pulled"), at + ".pulled"),
              get_str(e.at("top"), at + ".top")};
    d.chosen_pullbacks[key] = cone;
  }
  return d;
}

json display_to_body(const DisplayClass& d) {
  json b = json::object();
  b["base"] = category_to_body(d.base);
  b["display"] = std::vector<MorId>(d.display.begin(), d.display.end());
  json jc = json::array();
  for (const auto& [key, cone] : d.chosen_pullbacks)
    jc.push_back({{"along", key.second},
                  {"apex", cone.apex},
                  {"display", key.first},
                  {"pulled", cone.leg_f},
                  {"top", cone.leg_g}});
  b["chosen_pullbacks"] = jc;
  return b;
}

// -- cwa / cwf / natmod / cxlcat ----------------------------------------------

CwA body_to_cwa(const json& b, const std::string& where) {
  expect_keys(b, where, {"base", "ext", "ext_mor", "proj", "ty"});
  CwA a;
  a.base = body_to_category(field(b, where, "base"), where + ".base");
  a.Ty = body_to_presheaf(field(b, where, "ty"), where + ".ty");
  a.Ty.base = a.base;

  OrderGuard<std::pair<std::string, std::string>> oe;
  for (const json& e : get_array(field(b, where, "ext"), where + ".ext")) {
    const std::string at = where + ".ext";
    expect_keys(e, at, {"ctx", "obj", "ty"});
    std::pair<ObjId, ElemId> key{get_str(e.at("ctx"), at + ".ctx"),
                                 get_str(e.at("ty"), at + ".ty")};
    oe.step(key, at);
    a.ext[key] = get_str(e.at("obj"), at + ".obj");
  }
  OrderGuard<std::pair<std::string, std::string>> op;
  for (const json& e : get_array(field(b, where, "proj"), where + ".proj")) {
    const std::string at = where + ".proj";
    expect_keys(e, at, {"ctx", "mor", "ty"});
    std::pair<ObjId, ElemId> key{get_str(e.at("ctx"), at + ".ctx"),
                                 get_str(e.at("ty"), at + ".ty")};
    op.step(key, at);
    a.proj[key] = get_str(e.at("mor"), at + ".mor");
  }
  OrderGuard<std::pair<std::string, std::string>> om;
  for (const json& e : get_array(field(b, where, "ext_mor"), where + ".ext_mor")) {
    const std::string at = where + ".ext_mor";
    expect_keys(e, at, {"mor", "top", "ty"});
    std::pair<MorId, ElemId> key{get_str(e.at("mor"), at + ".mor"),
                                 get_str(e.at("ty"), at + ".ty")};
    om.step(key, at);
    a.ext_mor[key] = get_str(e.at("top"), at + ".top");
  }
  return a;
}

json cwa_to_body(const CwA& a) {
  json b = json::object();
  b["base"] = category_to_body(a.base);
  b["ty"] = presheaf_to_body(a.Ty);
  json je = json::array();
  for (const auto& [key, obj] : a.ext)
    je.push_back({{"ctx", key.first}, {"obj", obj}, {"ty", key.second}});
  b["ext"] = je;
  json jp = json::array();
  for (const auto& [key, mor] : a.proj)
    jp.push_back({{"ctx", key.first}, {"mor", mor}, {"ty", key.second}});
  b["proj"] = jp;
  json jm = json::array();
  for (const auto& [key, top] : a.ext_mor)
    jm.push_back({{"mor", key.first}, {"top", top}, {"ty", key.second}});
  b["ext_mor"] = jm;
  return b;
}

struct RawCwF {
  CwA cwa;
  FinPresheaf tm;  // base left empty
  std::map<std::pair<ObjId, ElemId>, ElemId> var;
};

RawCwF body_to_rawcwf(const json& b, const std::string& where) {
  expect_keys(b, where, {"cwa", "tm", "var"});
  RawCwF r;
  r.cwa = body_to_cwa(field(b, where, "cwa"), where + ".cwa");
  r.tm = body_to_presheaf(field(b, where, "tm"), where + ".tm");
  OrderGuard<std::pair<std::string, std::string>> ov;
  for (const json& e : get_array(field(b, where, "var"), where + ".var")) {
    const std::string at = where + ".var";
    expect_keys(e, at, {"ctx", "elem", "ty"});
    std::pair<ObjId, ElemId> key{get_str(e.at("ctx"), at + ".ctx"),
                                 get_str(e.at("ty"), at + ".ty")};
    ov.step(key, at);
    r.var[key] = get_str(e.at("elem"), at + ".elem");
  }
  return r;
}

// The term presheaf lives on the category of elements of Ty; rebuilding that
// base needs a lawful base category and type presheaf.
CwF finish_cwf(RawCwF&& r) {
  if (!validate_category(r.cwa.base).ok() || !validate_presheaf(r.cwa.Ty).ok())
    throw Error("InvalidTy", "cannot rebuild the term presheaf base");
  CwF w;
  w.cwa = std::move(r.cwa);
  w.Tm = std::move(r.tm);
  w.Tm.base = grothendieck(w.cwa.Ty).dom;
  w.var = std::move(r.var);
  return w;
}

json cwf_to_body(const CwF& w) {
  json b = json::object();
  b["cwa"] = cwa_to_body(w.cwa);
  b["tm"] = presheaf_to_body(w.Tm);
  json jv = json::array();
  for (const auto& [key, elem] : w.var)
    jv.push_back({{"ctx", key.first}, {"elem", elem}, {"ty", key.second}});
  b["var"] = jv;
  return b;
}

NaturalModel body_to_natmod(const json& b, const std::string& where) {
  expect_keys(b, where, {"base", "chosen_reps", "p", "tm", "ty"});
  NaturalModel n;
  n.base = body_to_category(field(b, where, "base"), where + ".base");
  n.TyP = body_to_presheaf(field(b, where, "ty"), where + ".ty");
  n.TyP.base = n.base;
  n.TmP = body_to_presheaf(field(b, where, "tm"), where + ".tm");
  n.TmP.base = n.base;
  const json& p = field(b, where, "p");
  if (!p.is_object()) syntax(where + ".p", "expected an object");
  for (const auto& item : p.items())
    for (auto& [e, v] : to_str_map(item.value(), where + ".p." + item.key()))
      n.p.components[item.key()][e] = v;
  // keep explicitly-written empty component rows
  for (const auto& item : p.items())
    if (!n.p.components.count(item.key())) n.p.components[item.key()] = {};
  n.p.src = n.TmP;
  n.p.dst = n.TyP;
  OrderGuard<std::pair<std::string, std::string>> oc;
  for (const json& e : get_array(field(b, where, "chosen_reps"), where + ".chosen_reps")) {
    const std::string at = where + ".chosen_reps";
    expect_keys(e, at, {"ctx", "obj", "ty"});
    std::pair<ObjId, ElemId> key{get_str(e.at("ctx"), at + ".ctx"),
                                 get_str(e.at("ty"), at + ".ty")};
    oc.step(key, at);
    n.chosen_reps[key] = get_str(e.at("obj"), at + ".obj");
  }
  return n;
}

json natmod_to_body(const NaturalModel& n) {
  json b = json::object();
  b["base"] = category_to_body(n.base);
  b["ty"] = presheaf_to_body(n.TyP);
  b["tm"] = presheaf_to_body(n.TmP);
  json jp = json::object();
  for (const auto& [o, comp] : n.p.components) jp[o] = from_str_map(comp);
  b["p"] = jp;
  json jc = json::array();
  for (const auto& [key, obj] : n.chosen_reps)
    jc.push_back({{"ctx", key.first}, {"obj", obj}, {"ty", key.second}});
  b["chosen_reps"] = jc;
  return b;
}

ContextualCategory body_to_cxlcat(const json& b, const std::string& where) {
  expect_keys(b, where, {"base", "chosen_pb", "parent", "proj", "root"});
  ContextualCategory x;
  x.base = body_to_category(field(b, where, "base"), where + ".base");
  x.root = get_str(field(b, where, "root"), where + ".root");
  for (auto& [k, v] : to_str_map(field(b, where, "parent"), where + ".parent"))
    x.parent[k] = v;
  for (auto& [k, v] : to_str_map(field(b, where, "proj"), where + ".proj")) x.proj[k] = v;
  OrderGuard<std::pair<std::string, std::string>> oc;
  for (const json& e : get_array(field(b, where, "chosen_pb"), where + ".chosen_pb")) {
    const std::string at = where + ".chosen_pb";
    expect_keys(e, at, {"along", "obj", "of", "top"});
    std::pair<MorId, ObjId> key{get_str(e.at("along"), at + ".along"),
                                get_str(e.at("of"), at + ".of")};
    oc.step(key, at);
    x.chosen_pb[key] = CxlSquare{get_str(e.at("obj"), at + ".obj"),
                                 get_str(e.at("top"), at + ".top")};
  }
  return x;
}

json cxlcat_to_body(const ContextualCategory& x) {
  json b = json::object();
  b["base"] = category_to_body(x.base);
  b["root"] = x.root;
  json jp = json::object();
  for (const auto& [k, v] : x.parent) jp[k] = v;
  b["parent"] = jp;
  json jr = json::object();
  for (const auto& [k, v] : x.proj) jr[k] = v;
  b["proj"] = jr;
  json jc = json::array();
  for (const auto& [key, sq] : x.chosen_pb)
    jc.push_back(
        {{"along", key.first}, {"obj", sq.obj}, {"of", key.second}, {"top", sq.top}});
  b["chosen_pb"] = jc;
  return b;
}

// -- map / transformation -----------------------------------------------------

struct RawMap {
  RawCompCat src, dst;
  std::map<ObjId, ObjId> f_obj, fbar_obj;
  std::map<MorId, MorId> f_mor, fbar_mor;
  std::map<ObjId, MorId> phi;
  std::optional<MorId> point_iso;
};

RawMap body_to_rawmap(const json& b, const std::string& where) {
  expect_keys(b, where, {"dst", "f", "fbar", "phi", "point_iso", "src"});
  RawMap r;
  r.src = body_to_rawcc(field(b, where, "src"), where + ".src");
  r.dst = body_to_rawcc(field(b, where, "dst"), where + ".dst");
  FinFunctor f, fbar;
  tables_from_body(field(b, where, "f"), where + ".f", f);
  tables_from_body(field(b, where, "fbar"), where + ".fbar", fbar);
  r.f_obj = f.obj_map;
  r.f_mor = f.mor_map;
  r.fbar_obj = fbar.obj_map;
  r.fbar_mor = fbar.mor_map;
  for (auto& [k, v] : to_str_map(field(b, where, "phi"), where + ".phi")) r.phi[k] = v;
  r.point_iso = get_str_or_null(field(b, where, "point_iso"), where + ".point_iso");
  return r;
}

// phi endpoints stay empty, matching the enumeration contract: validate_map
// rebuilds them from F and Fbar.
CompCatMap finish_map(RawMap&& r) {
  CompCatMap m;
  m.src = finish_compcat(std::move(r.src));
  m.dst = finish_compcat(std::move(r.dst));
  m.F.dom = m.src.base;
  m.F.cod = m.dst.base;
  m.F.obj_map = std::move(r.f_obj);
  m.F.mor_map = std::move(r.f_mor);
  m.Fbar.dom = m.src.total;
  m.Fbar.cod = m.dst.total;
  m.Fbar.obj_map = std::move(r.fbar_obj);
  m.Fbar.mor_map = std::move(r.fbar_mor);
  m.phi.components = std::move(r.phi);
  m.point_iso = std::move(r.point_iso);
  return m;
}

json map_to_body(const CompCatMap& m) {
  json b = json::object();
  b["src"] = compcat_to_body(m.src);
  b["dst"] = compcat_to_body(m.dst);
  b["f"] = tables_to_body(m.F);
  b["fbar"] = tables_to_body(m.Fbar);
  b["phi"] = from_str_map(m.phi.components);
  b["point_iso"] = m.point_iso ? json(*m.point_iso) : json(nullptr);
  return b;
}

struct RawTransformation {
  RawMap src, dst;
  std::map<ObjId, MorId> alpha, alphabar;
};

RawTransformation body_to_rawtrans(const json& b, const std::string& where) {
  expect_keys(b, where, {"alpha", "alphabar", "dst", "src"});
  RawTransformation r;
  r.src = body_to_rawmap(field(b, where, "src"), where + ".src");
  r.dst = body_to_rawmap(field(b, where, "dst"), where + ".dst");
  for (auto& [k, v] : to_str_map(field(b, where, "alpha"), where + ".alpha"))
    r.alpha[k] = v;
  for (auto& [k, v] : to_str_map(field(b, where, "alphabar"), where + ".alphabar"))
    r.alphabar[k] = v;
  return r;
}

CompCatTransformation finish_transformation(RawTransformation&& r) {
  CompCatTransformation t;
  t.src = finish_map(std::move(r.src));
  t.dst = finish_map(std::move(r.dst));
  t.alpha.components = std::move(r.alpha);
  t.alphabar.components = std::move(r.alphabar);
  return t;
}

json transformation_to_body(const CompCatTransformation& t) {
  json b = json::object();
  b["src"] = map_to_body(t.src);
  b["dst"] = map_to_body(t.dst);
  b["alpha"] = from_str_map(t.alpha.components);
  b["alphabar"] = from_str_map(t.alphabar.components);
  return b;
}

// Shape check only: no derived endpoints are rebuilt, so a lawless but
// well-formed document still parses and fails in its validator instead.
void check_body(const std::string& kind, const json& body) {
  if (kind == "category")
    (void)body_to_category(body, "body");
  else if (kind == "functor") {
    expect_keys(body, "body", {"cod", "dom", "mor_map", "obj_map"});
    (void)body_to_category(field(body, "body", "dom"), "body.dom");
    (void)body_to_category(field(body, "body", "cod"), "body.cod");
    (void)to_str_map(field(body, "body", "obj_map"), "body.obj_map");
    (void)to_str_map(field(body, "body", "mor_map"), "body.mor_map");
  } else if (kind == "compcat")
    (void)body_to_rawcc(body, "body");
  else if (kind == "dmc" || kind == "sdmc" || kind == "clan")
    (void)body_to_display(body, "body");
  else if (kind == "cwa")
    (void)body_to_cwa(body, "body");
  else if (kind == "cwf")
    (void)body_to_rawcwf(body, "body");
  else if (kind == "natmod")
    (void)body_to_natmod(body, "body");
  else if (kind == "cxlcat")
    (void)body_to_cxlcat(body, "body");
  else if (kind == "map")
    (void)body_to_rawmap(body, "body");
  else if (kind == "transformation")
    (void)body_to_rawtrans(body, "body");
  else
    throw Error("UnknownKind", kind);
}

void require_kind(const Document& d, const std::string& kind) {
  if (d.kind != kind)
    throw Error("KindMismatch", "expected a " + kind + " document, got " + d.kind);
}

Document wrap(const std::string& kind, json body) {
  return Document{kind, document_version, std::move(body)};
}

}  // namespace

const std::vector<std::string>& document_kinds() {
  static const std::vector<std::string> kinds = {
      "category", "functor", "compcat", "dmc",    "sdmc", "clan",
      "cwa",      "cwf",     "natmod",  "cxlcat", "map",  "transformation"};
  return kinds;
}

bool is_document_kind(const std::string& kind) {
  const auto& ks = document_kinds();
  return std::find(ks.begin(), ks.end(), kind) != ks.end();
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("SyntaxError", e.what());  // message carries line and column
  }
  if (!j.is_object()) syntax("document", "expected a top-level object");
  expect_keys(j, "document", {"body", "kind", "version"});
  Document d;
  d.kind = get_str(j.at("kind"), "document.kind");
  if (!is_document_kind(d.kind)) throw Error("UnknownKind", d.kind);
  d.version = get_str(j.at("version"), "document.version");
  if (d.version != document_version)
    throw Error("VersionMismatch",
                "expected version " + std::string(document_version) + ", got " + d.version);
  if (!j.at("body").is_object()) syntax("document.body", "expected an object");
  d.body = j.at("body");
  check_body(d.kind, d.body);
  return d;
}

std::string emit_document(const Document& d) {
  if (!is_document_kind(d.kind)) throw Error("UnknownKind", d.kind);
  if (d.version != document_version)
    throw Error("VersionMismatch",
                "expected version " + std::string(document_version) + ", got " + d.version);
  check_body(d.kind, d.body);
  json j = {{"body", d.body}, {"kind", d.kind}, {"version", d.version}};
  return j.dump(2) + "\n";
}

Document encode_category(const FinCategory& c) { return wrap("category", category_to_body(c)); }

FinCategory decode_category(const Document& d) {
  require_kind(d, "category");
  return body_to_category(d.body, "body");
}

Document encode_functor(const FinFunctor& f) {
  json b = json::object();
  b["dom"] = category_to_body(f.dom);
  b["cod"] = category_to_body(f.cod);
  json tables = tables_to_body(f);
  b["obj_map"] = tables["obj_map"];
  b["mor_map"] = tables["mor_map"];
  return wrap("functor", std::move(b));
}

FinFunctor decode_functor(const Document& d) {
  require_kind(d, "functor");
  check_body("functor", d.body);
  FinFunctor f;
  f.dom = body_to_category(d.body.at("dom"), "body.dom");
  f.cod = body_to_category(d.body.at("cod"), "body.cod");
  for (auto& [k, v] : to_str_map(d.body.at("obj_map"), "body.obj_map")) f.obj_map[k] = v;
  for (auto& [k, v] : to_str_map(d.body.at("mor_map"), "body.mor_map")) f.mor_map[k] = v;
  return f;
}

Document encode_compcat(const CompCat& cc) { return wrap("compcat", compcat_to_body(cc)); }

CompCat decode_compcat(const Document& d) {
  require_kind(d, "compcat");
  return finish_compcat(body_to_rawcc(d.body, "body"));
}

Document encode_display(const DisplayClass& d, const std::string& kind) {
  if (kind != "dmc" && kind != "sdmc" && kind != "clan")
    throw Error("KindMismatch", "display documents are dmc, sdmc or clan, got " + kind);
  return wrap(kind, display_to_body(d));
}

DisplayClass decode_display(const Document& d) {
  if (d.kind != "dmc" && d.kind != "sdmc" && d.kind != "clan")
    throw Error("KindMismatch", "expected a dmc, sdmc or clan document, got " + d.kind);
  return body_to_display(d.body, "body");
}

Document encode_cwa(const CwA& a) { return wrap("cwa", cwa_to_body(a)); }

CwA decode_cwa(const Document& d) {
  require_kind(d, "cwa");
  return body_to_cwa(d.body, "body");
}

Document encode_cwf(const CwF& w) { return wrap("cwf", cwf_to_body(w)); }

CwF decode_cwf(const Document& d) {
  require_kind(d, "cwf");
  return finish_cwf(body_to_rawcwf(d.body, "body"));
}

Document encode_natmod(const NaturalModel& n) { return wrap("natmod", natmod_to_body(n)); }

NaturalModel decode_natmod(const Document& d) {
  require_kind(d, "natmod");
  return body_to_natmod(d.body, "body");
}

Document encode_cxlcat(const ContextualCategory& x) { return wrap("cxlcat", cxlcat_to_body(x)); }

ContextualCategory decode_cxlcat(const Document& d) {
  require_kind(d, "cxlcat");
  return body_to_cxlcat(d.body, "body");
}

Document encode_map(const CompCatMap& m) { return wrap("map", map_to_body(m)); }

CompCatMap decode_map(const Document& d) {
  require_kind(d, "map");
  return finish_map(body_to_rawmap(d.body, "body"));
}

Document encode_transformation(const CompCatTransformation& t) {
  return wrap("transformation", transformation_to_body(t));
}

CompCatTransformation decode_transformation(const Document& d) {
  require_kind(d, "transformation");
  return finish_transformation(body_to_rawtrans(d.body, "body"));
}

}  // namespace compcat
