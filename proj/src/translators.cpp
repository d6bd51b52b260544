#include "compcat/translators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace compcat {

namespace {

// Full subcategory on `objs` with its inclusion. Composites of kept morphisms
// stay kept because their endpoints do.
std::pair<FinCategory, FinFunctor> full_subcategory(const FinCategory& c,
                                                    const std::set<ObjId>& objs) {
  FinCategory sub;
  sub.objects.assign(objs.begin(), objs.end());
  std::set<MorId> kept;
  for (const Mor& m : c.morphisms)
    if (objs.count(m.src) && objs.count(m.dst)) {
      sub.morphisms.push_back(m);
      kept.insert(m.id);
    }
  for (const ObjId& o : objs) sub.identity[o] = c.id_of(o);
  for (const auto& [pair, h] : c.composition)
    if (kept.count(pair.first) && kept.count(pair.second)) sub.composition[pair] = h;
  sub.normalize();
  FinFunctor incl;
  incl.dom = sub;
  incl.cod = c;
  for (const ObjId& o : sub.objects) incl.obj_map[o] = o;
  for (const Mor& m : sub.morphisms) incl.mor_map[m.id] = m.id;
  return {sub, incl};
}

// Unique-by-limiting factorization of the legs (l1, l2) through a cone.
std::optional<MorId> cone_mediator(const FinCategory& c, const Cone& cone, const MorId& l1,
                                   const MorId& l2) {
  const ObjId& x = c.mor(l1).src;
  for (const MorId& m : c.hom(x, cone.apex))
    if (c.compose(cone.leg_f, m) == l1 && c.compose(cone.leg_g, m) == l2) return m;
  return std::nullopt;
}

MorId require_mediator(const FinCategory& c, const Cone& cone, const MorId& l1, const MorId& l2,
                       const std::string& where) {
  auto m = cone_mediator(c, cone, l1, l2);
  if (!m) throw Error("InternalError", "no mediator for " + where);
  return *m;
}

DisplayClass checked_display(const DisplayClass& raw, bool require_replete) {
  Checked<DisplayClass> v = validate_dmc(raw, require_replete);
  if (!v.ok()) throw Error("InvalidDisplayClass", v.report.to_string());
  return *v;
}

CompCat checked_compcat(const CompCat& raw) {
  Checked<CompCat> v = validate_compcat(raw);
  if (!v.ok()) throw Error("InvalidCompCat", v.report.to_string());
  return *v;
}

CwA checked_cwa(const CwA& raw) {
  Checked<CwA> v = validate_cwa(raw);
  if (!v.ok()) throw Error("InvalidCwA", v.report.to_string());
  return *v;
}

// Inclusion-shaped unit between the comprehension categories induced by a
// display class and an enlargement of it: both totals are full subcategories
// of the same arrow category, so all tables are identities.
CompCatMap display_inclusion_unit(const DisplayClass& small, const DisplayClass& big) {
  CompCatMap u;
  u.src = dmc_to_compcat(small);
  u.dst = dmc_to_compcat(big);
  u.F = identity_functor(small.base);
  u.Fbar.dom = u.src.total;
  u.Fbar.cod = u.dst.total;
  for (const ObjId& a : u.src.total.objects) u.Fbar.obj_map[a] = a;
  for (const Mor& m : u.src.total.morphisms) u.Fbar.mor_map[m.id] = m.id;
  ArrowCategory arr = arrow_category(small.base);
  for (const ObjId& a : u.src.total.objects) u.phi.components[a] = arr.cat.id_of(a);
  return u;
}

}  // namespace

CompCat dmc_to_compcat(const DisplayClass& raw) {
  DisplayClass d = checked_display(raw, false);
  ArrowCategory arr = arrow_category(d.base);
  auto [total, incl] = full_subcategory(arr.cat, d.display);
  CompCat cc;
  cc.base = d.base;
  cc.total = total;
  cc.chi = incl;
  cc.p.dom = total;
  cc.p.cod = d.base;
  for (const ObjId& a : total.objects) cc.p.obj_map[a] = d.base.mor(a).dst;
  for (const Mor& m : total.morphisms) cc.p.mor_map[m.id] = arr.square(m.id).v;
  return cc;
}

DisplayClass compcat_to_dmc(const CompCat& raw) {
  CompCat cc = checked_compcat(raw);
  FunctorReport fr = functor_report(cc.chi);
  if (!(fr.full && fr.faithful && fr.injective_on_objects))
    throw Error("NotSubcategorical", "comprehension is not a subcategory inclusion");
  DisplayClass d;
  d.base = cc.base;
  for (const ObjId& a : cc.total.objects) d.display.insert(cc.chi.on_obj(a));
  return d;
}

TransformedCompCat fullify(const CompCat& raw) {
  CompCat cc = checked_compcat(raw);
  ArrowCategory arr = arrow_category(cc.base);
  auto name = [](const ObjId& a, const ObjId& b, const MorId& sq) {
    return join_ids("ff", {a, b, sq});
  };

  FinCategory tot;
  tot.objects = cc.total.objects;
  // new id -> (source object, target object, underlying square)
  std::map<MorId, std::tuple<ObjId, ObjId, MorId>> data;
  for (const ObjId& a : tot.objects)
    for (const ObjId& b : tot.objects)
      for (const MorId& sq : arr.cat.hom(cc.chi.on_obj(a), cc.chi.on_obj(b))) {
        MorId id = name(a, b, sq);
        tot.morphisms.push_back({id, a, b});
        data[id] = {a, b, sq};
      }
  for (const ObjId& a : tot.objects)
    tot.identity[a] = name(a, a, arr.cat.id_of(cc.chi.on_obj(a)));
  for (const auto& [m1, d1] : data)
    for (const auto& [m2, d2] : data) {
      if (std::get<1>(d1) != std::get<0>(d2)) continue;
      MorId sq = arr.cat.compose(std::get<2>(d2), std::get<2>(d1));
      tot.composition[{m2, m1}] = name(std::get<0>(d1), std::get<1>(d2), sq);
    }
  tot.normalize();

  TransformedCompCat out;
  out.compcat.base = cc.base;
  out.compcat.total = tot;
  out.compcat.point = cc.point;
  out.compcat.chi.dom = tot;
  out.compcat.chi.cod = arr.cat;
  out.compcat.p.dom = tot;
  out.compcat.p.cod = cc.base;
  for (const ObjId& a : tot.objects) {
    out.compcat.chi.obj_map[a] = cc.chi.on_obj(a);
    out.compcat.p.obj_map[a] = cc.p.on_obj(a);
  }
  for (const auto& [id, d] : data) {
    out.compcat.chi.mor_map[id] = std::get<2>(d);
    out.compcat.p.mor_map[id] = arr.square(std::get<2>(d)).v;
  }

  CompCatMap u;
  u.src = cc;
  u.dst = out.compcat;
  u.F = identity_functor(cc.base);
  u.Fbar.dom = cc.total;
  u.Fbar.cod = tot;
  for (const ObjId& a : cc.total.objects) u.Fbar.obj_map[a] = a;
  for (const Mor& m : cc.total.morphisms)
    u.Fbar.mor_map[m.id] = name(m.src, m.dst, cc.chi.on_mor(m.id));
  for (const ObjId& a : cc.total.objects)
    u.phi.components[a] = arr.cat.id_of(cc.chi.on_obj(a));
  if (cc.point) u.point_iso = cc.base.id_of(*cc.point);
  out.unit = u;
  return out;
}

TransformedCompCat subcategorize(const CompCat& raw) {
  CompCat cc = checked_compcat(raw);
  FunctorReport fr = functor_report(cc.chi);
  if (!(fr.full && fr.faithful))
    throw Error("NotFull", "comprehension is not fully faithful");
  ArrowCategory arr = arrow_category(cc.base);
  std::set<ObjId> image;
  for (const ObjId& a : cc.total.objects) image.insert(cc.chi.on_obj(a));
  auto [tot, incl] = full_subcategory(arr.cat, image);

  TransformedCompCat out;
  out.compcat.base = cc.base;
  out.compcat.total = tot;
  out.compcat.chi = incl;
  out.compcat.point = cc.point;
  out.compcat.p.dom = tot;
  out.compcat.p.cod = cc.base;
  for (const ObjId& a : tot.objects) out.compcat.p.obj_map[a] = cc.base.mor(a).dst;
  for (const Mor& m : tot.morphisms) out.compcat.p.mor_map[m.id] = arr.square(m.id).v;

  CompCatMap u;
  u.src = cc;
  u.dst = out.compcat;
  u.F = identity_functor(cc.base);
  u.Fbar.dom = cc.total;
  u.Fbar.cod = tot;
  for (const ObjId& a : cc.total.objects) u.Fbar.obj_map[a] = cc.chi.on_obj(a);
  for (const Mor& m : cc.total.morphisms) u.Fbar.mor_map[m.id] = cc.chi.on_mor(m.id);
  for (const ObjId& a : cc.total.objects)
    u.phi.components[a] = arr.cat.id_of(cc.chi.on_obj(a));
  if (cc.point) u.point_iso = cc.base.id_of(*cc.point);
  out.unit = u;
  return out;
}

TransformedDisplay repletion(const DisplayClass& raw) {
  DisplayClass d = checked_display(raw, false);
  ArrowCategory arr = arrow_category(d.base);
  DisplayClass big = d;
  for (const Mor& m : d.base.morphisms) {
    if (big.display.count(m.id)) continue;
    for (const MorId& x : d.display)
      if (arr.cat.objects_isomorphic(m.id, x)) {
        big.display.insert(m.id);
        break;
      }
  }
  TransformedDisplay out;
  out.display = big;
  out.unit = display_inclusion_unit(d, big);
  return out;
}

TransformedCompCat repletion(const CompCat& raw) {
  CompCat cc = checked_compcat(raw);
  DisplayClass d = compcat_to_dmc(cc);
  TransformedDisplay r = repletion(d);
  TransformedCompCat out;
  out.compcat = dmc_to_compcat(r.display);
  out.compcat.point = cc.point;
  ArrowCategory arr = arrow_category(cc.base);
  CompCatMap u;
  u.src = cc;
  u.dst = out.compcat;
  u.F = identity_functor(cc.base);
  u.Fbar.dom = cc.total;
  u.Fbar.cod = out.compcat.total;
  for (const ObjId& a : cc.total.objects) u.Fbar.obj_map[a] = cc.chi.on_obj(a);
  for (const Mor& m : cc.total.morphisms) u.Fbar.mor_map[m.id] = cc.chi.on_mor(m.id);
  for (const ObjId& a : cc.total.objects)
    u.phi.components[a] = arr.cat.id_of(cc.chi.on_obj(a));
  if (cc.point) u.point_iso = cc.base.id_of(*cc.point);
  out.unit = u;
  return out;
}

TransformedDisplay comp_closure(const DisplayClass& raw) {
  DisplayClass d = checked_display(raw, true);
  const FinCategory& c = d.base;
  ArrowCategory arr = arrow_category(c);
  std::set<MorId> D = d.display;
  for (const ObjId& o : c.objects) D.insert(c.id_of(o));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<MorId> add;
    for (const MorId& f : D)
      for (const MorId& g : D) {
        if (c.mor(f).dst != c.mor(g).src) continue;
        MorId h = c.compose(g, f);
        if (!D.count(h)) add.push_back(h);
      }
    for (const Mor& m : c.morphisms) {
      if (D.count(m.id)) continue;
      for (const MorId& x : D)
        if (arr.cat.objects_isomorphic(m.id, x)) {
          add.push_back(m.id);
          break;
        }
    }
    for (const MorId& h : add)
      if (D.insert(h).second) changed = true;
  }
  DisplayClass big = d;
  big.display = D;
  TransformedDisplay out;
  out.display = big;
  out.unit = display_inclusion_unit(d, big);
  return out;
}

DisplayClass lex_to_clan(const FinCategory& raw) {
  Checked<FinCategory> v = validate_category(raw);
  if (!v.ok()) throw Error("InvalidBase", v.report.to_string());
  if (!is_lex(*v))
    throw Error("NotLex", "category lacks a terminal object or some pullback");
  DisplayClass d;
  d.base = *v;
  for (const Mor& m : d.base.morphisms) d.display.insert(m.id);
  return d;
}

SepCore sep_core(const DisplayClass& raw) {
  Checked<DisplayClass> vc = validate_clan(raw);
  if (!vc.ok()) throw Error("InvalidClan", vc.report.to_string());
  const DisplayClass& d = *vc;
  const FinCategory& c = d.base;
  ObjId t = *terminal_object(c);
  std::set<ObjId> objs;
  for (const ObjId& y : c.objects) {
    MorId bang = c.hom(y, t)[0];
    std::optional<Cone> self = pullback(c, bang, bang);
    if (!self) throw Error("InternalError", "no self-product for " + y);
    MorId diag = require_mediator(c, *self, c.id_of(y), c.id_of(y), "diagonal of " + y);
    if (d.display.count(diag)) objs.insert(y);
  }
  auto [core, incl] = full_subcategory(c, objs);
  return {core, incl};
}

CxlCore cxl_core(const CompCat& raw) {
  CompCat cc = checked_compcat(raw);
  if (!cc.point)
    throw Error("PreconditionFailed", "cxl_core needs a pointed comprehension category");
  ContextualSlice s = contextual_slice_full(cc, *cc.point);
  CxlCore out;
  out.core = s.slice;
  CompCatMap u;
  u.src = s.slice;
  u.dst = cc;
  u.F = s.to_base;
  u.Fbar = s.to_types;
  ArrowCategory arr = arrow_category(cc.base);
  for (const ObjId& x : s.slice.total.objects)
    u.phi.components[x] = arr.cat.id_of(cc.chi.on_obj(s.to_types.on_obj(x)));
  u.point_iso = cc.base.id_of(*cc.point);
  out.counit = u;
  return out;
}

CompCat cwa_to_compcat(const CwA& raw) {
  CwA a = checked_cwa(raw);
  FinFunctor gr = grothendieck(a.Ty);
  ArrowCategory arr = arrow_category(a.base);
  CompCat cc;
  cc.base = a.base;
  cc.total = gr.dom;
  cc.p = gr;
  cc.chi.dom = gr.dom;
  cc.chi.cod = arr.cat;
  for (const ObjId& g : a.base.objects)
    for (const ElemId& t : a.Ty.elems(g))
      cc.chi.obj_map[pair_id(g, t)] = a.proj.at({g, t});
  for (const Mor& f : a.base.morphisms)
    for (const ElemId& t : a.Ty.elems(f.dst)) {
      ElemId ft = a.Ty.action(f.id, t);
      cc.chi.mor_map[pair_id(f.id, t)] = arrow_square_id(
          a.ext_mor.at({f.id, t}), f.id, a.proj.at({f.src, ft}), a.proj.at({f.dst, t}));
    }
  return cc;
}

CwA compcat_to_cwa(const CompCat& raw) {
  CompCat cc = checked_compcat(raw);
  if (!is_discrete_fibration(cc.p))
    throw Error("NotDiscrete", "types do not form a discrete fibration");
  ArrowCategory arr = arrow_category(cc.base);
  CwA a;
  a.base = cc.base;
  a.Ty = fibration_to_presheaf(cc.p);
  for (const ObjId& x : cc.total.objects) {
    ObjId g = cc.p.on_obj(x);
    a.ext[{g, x}] = cc.base.mor(cc.chi.on_obj(x)).src;
    a.proj[{g, x}] = cc.chi.on_obj(x);
  }
  for (const Mor& f : cc.base.morphisms)
    for (const ObjId& x : cc.total.objects) {
      if (cc.p.on_obj(x) != f.dst) continue;
      MorId lift = cartesian_lifts(cc.p, f.id, x)[0];
      a.ext_mor[{f.id, x}] = arr.square(cc.chi.on_mor(lift)).u;
    }
  return a;
}

CwF cwa_to_cwf(const CwA& raw) {
  CwF w;
  w.cwa = checked_cwa(raw);
  const CwA& a = w.cwa;
  const FinCategory& c = a.base;
  w.Tm.base = grothendieck(a.Ty).dom;
  for (const ObjId& g : c.objects)
    for (const ElemId& t : a.Ty.elems(g)) {
      std::vector<ElemId> sections;
      const MorId& pr = a.proj.at({g, t});
      for (const MorId& s : c.hom(g, a.ext.at({g, t})))
        if (c.compose(pr, s) == c.id_of(g)) sections.push_back(s);
      w.Tm.at[pair_id(g, t)] = sections;
    }
  for (const Mor& f : c.morphisms)
    for (const ElemId& t : a.Ty.elems(f.dst)) {
      ElemId ft = a.Ty.action(f.id, t);
      // the chosen square over (f, proj) seen as a limiting cone
      Cone sq{a.ext.at({f.src, ft}), a.proj.at({f.src, ft}), a.ext_mor.at({f.id, t})};
      for (const ElemId& s : w.Tm.at.at(pair_id(f.dst, t)))
        w.Tm.act[{pair_id(f.id, t), s}] = require_mediator(
            c, sq, c.id_of(f.src), c.compose(s, f.id), "substitution of " + s);
    }
  for (const ObjId& g : c.objects)
    for (const ElemId& t : a.Ty.elems(g)) {
      const MorId& pr = a.proj.at({g, t});
      ElemId pt = a.Ty.action(pr, t);
      const ObjId& e = a.ext.at({g, t});
      Cone sq{a.ext.at({e, pt}), a.proj.at({e, pt}), a.ext_mor.at({pr, t})};
      w.var[{g, t}] = require_mediator(c, sq, c.id_of(e), c.id_of(e), "generic term of " + t);
    }
  return w;
}

CwA cwf_to_cwa(const CwF& raw) {
  Checked<CwF> v = validate_cwf(raw);
  if (!v.ok()) throw Error("InvalidCwF", v.report.to_string());
  return v->cwa;
}

NaturalModel cwf_to_natmod(const CwF& raw) {
  Checked<CwF> v = validate_cwf(raw);
  if (!v.ok()) throw Error("InvalidCwF", v.report.to_string());
  const CwF& w = *v;
  const FinCategory& c = w.cwa.base;
  NaturalModel n;
  n.base = c;
  n.TyP = w.cwa.Ty;
  n.TmP.base = c;
  for (const ObjId& g : c.objects) {
    std::vector<ElemId>& tms = n.TmP.at[g];
    auto& comp = n.p.components[g];
    for (const ElemId& t : w.cwa.Ty.elems(g))
      for (const ElemId& s : w.Tm.elems(pair_id(g, t))) {
        tms.push_back(pair_id(t, s));
        comp[pair_id(t, s)] = t;
      }
  }
  for (const Mor& f : c.morphisms)
    for (const ElemId& t : w.cwa.Ty.elems(f.dst)) {
      ElemId ft = w.cwa.Ty.action(f.id, t);
      for (const ElemId& s : w.Tm.elems(pair_id(f.dst, t)))
        n.TmP.act[{f.id, pair_id(t, s)}] =
            pair_id(ft, w.Tm.action(pair_id(f.id, t), s));
    }
  n.TmP.normalize();
  n.p.src = n.TmP;
  n.p.dst = n.TyP;
  for (const auto& [key, obj] : w.cwa.ext) n.chosen_reps[key] = obj;
  return n;
}

CwF natmod_to_cwf(const NaturalModel& raw) {
  Checked<NaturalModel> v = validate_natmod(raw);
  if (!v.ok()) {
    if (v.report.has("NotRepresentable"))
      throw Error("NotRepresentable", v.report.to_string());
    throw Error("InvalidNaturalModel", v.report.to_string());
  }
  const NaturalModel& n = *v;
  const FinCategory& c = n.base;

  // Per (context, type): representing object with a normalized application of
  // the representing isomorphism re-anchored at the chosen object.
  struct Rep {
    ObjId obj;        // extension object
    MorId proj;       // its projection to the context
    ElemId var;       // generic term over obj
    PresheafPullback pb;
    Representation canonical;
    MorId align;      // iso obj -> canonical.obj
  };
  std::map<std::pair<ObjId, ElemId>, Rep> reps;

  auto rep_elem = [&c](const Rep& r, const ObjId& x, const MorId& e) {
    return r.canonical.iso.apply(x, c.compose(r.align, e));
  };

  for (const ObjId& g : c.objects)
    for (const ElemId& t : n.TyP.elems(g)) {
      PresheafMap cls = yoneda_map(n.TyP, g, t);
      PresheafPullback pb = presheaf_pullback(cls, n.p);
      std::optional<Representation> r = is_representable(pb.apex);
      if (!r) throw Error("InternalError", "validated model lost representability");
      Rep rep{ObjId{}, MorId{}, ElemId{}, pb, *r, MorId{}};
      auto it = n.chosen_reps.find({g, t});
      rep.obj = it != n.chosen_reps.end() ? it->second : r->obj;
      if (rep.obj == r->obj) {
        rep.align = c.id_of(rep.obj);
      } else {
        std::optional<MorId> best;
        for (const MorId& m : c.hom(rep.obj, r->obj))
          if (c.is_iso(m) && (!best || m < *best)) best = m;
        if (!best) throw Error("InternalError", "chosen context not isomorphic");
        rep.align = *best;
      }
      ElemId at_id = rep_elem(rep, rep.obj, c.id_of(rep.obj));
      rep.proj = rep.pb.to_left.apply(rep.obj, at_id);
      rep.var = rep.pb.to_right.apply(rep.obj, at_id);
      reps.emplace(std::make_pair(g, t), std::move(rep));
    }

  CwA a;
  a.base = c;
  a.Ty = n.TyP;
  for (const auto& [key, r] : reps) {
    a.ext[key] = r.obj;
    a.proj[key] = r.proj;
  }
  for (const Mor& f : c.morphisms)
    for (const ElemId& t : n.TyP.elems(f.dst)) {
      const Rep& r = reps.at({f.dst, t});
      const Rep& rf = reps.at({f.src, n.TyP.action(f.id, t)});
      ElemId target = pair_id(c.compose(f.id, rf.proj), rf.var);
      std::optional<MorId> found;
      for (const MorId& e : c.hom(rf.obj, r.obj))
        if (rep_elem(r, rf.obj, e) == target) {
          found = e;
          break;
        }
      if (!found) throw Error("InternalError", "no classifying extension morphism");
      a.ext_mor[{f.id, t}] = *found;
    }

  CwF w;
  w.cwa = a;
  w.Tm.base = grothendieck(a.Ty).dom;
  for (const ObjId& g : c.objects)
    for (const ElemId& t : n.TyP.elems(g)) {
      std::vector<ElemId> fiber;
      for (const ElemId& m : n.TmP.elems(g))
        if (n.p.apply(g, m) == t) fiber.push_back(m);
      w.Tm.at[pair_id(g, t)] = fiber;
    }
  for (const Mor& f : c.morphisms)
    for (const ElemId& t : n.TyP.elems(f.dst))
      for (const ElemId& m : w.Tm.at.at(pair_id(f.dst, t)))
        w.Tm.act[{pair_id(f.id, t), m}] = n.TmP.action(f.id, m);
  for (const auto& [key, r] : reps) w.var[key] = r.var;
  return w;
}

CwA cxlcat_to_cwa(const ContextualCategory& raw) {
  Checked<ContextualCategory> v = validate_cxlcat(raw);
  if (!v.ok()) throw Error("InvalidContextualCategory", v.report.to_string());
  const ContextualCategory& x = *v;
  CwA a;
  a.base = x.base;
  a.Ty.base = x.base;
  for (const ObjId& g : x.base.objects) {
    std::vector<ElemId>& tys = a.Ty.at[g];
    for (const auto& [child, par] : x.parent)
      if (par == g) tys.push_back(child);
  }
  for (const Mor& f : x.base.morphisms)
    for (const ElemId& child : a.Ty.elems(f.dst))
      a.Ty.act[{f.id, child}] = x.chosen_pb.at({f.id, child}).obj;
  a.Ty.normalize();
  for (const auto& [child, par] : x.parent) {
    a.ext[{par, child}] = child;
    a.proj[{par, child}] = x.proj.at(child);
  }
  for (const Mor& f : x.base.morphisms)
    for (const ElemId& child : a.Ty.elems(f.dst))
      a.ext_mor[{f.id, child}] = x.chosen_pb.at({f.id, child}).top;
  return a;
}

ContextualCategory cwa_to_cxlcat(const CwA& raw) {
  CwA a = checked_cwa(raw);
  std::optional<ObjId> root = terminal_object(a.base);
  if (!root) throw Error("NotContextual", "base has no terminal object");

  std::map<ObjId, std::pair<ObjId, ElemId>> expr;
  for (const auto& [key, obj] : a.ext) {
    if (expr.count(obj))
      throw Error("NotContextual", obj + " is the extension of two different pairs");
    expr[obj] = key;
  }
  if (expr.count(*root))
    throw Error("NotContextual", "the terminal object is itself an extension");
  for (const ObjId& o : a.base.objects)
    if (o != *root && !expr.count(o))
      throw Error("NotContextual", o + " is not a context extension");
  for (const ObjId& o : a.base.objects) {
    std::set<ObjId> seen;
    ObjId cur = o;
    while (cur != *root) {
      if (!seen.insert(cur).second)
        throw Error("NotContextual", "extension chain through " + o + " has a cycle");
      cur = expr.at(cur).first;
    }
  }

  ContextualCategory x;
  x.base = a.base;
  x.root = *root;
  for (const auto& [obj, key] : expr) {
    x.parent[obj] = key.first;
    x.proj[obj] = a.proj.at(key);
  }
  for (const Mor& f : a.base.morphisms)
    for (const ElemId& t : a.Ty.elems(f.dst)) {
      ObjId child = a.ext.at({f.dst, t});
      ElemId ft = a.Ty.action(f.id, t);
      x.chosen_pb[{f.id, child}] =
          CxlSquare{a.ext.at({f.src, ft}), a.ext_mor.at({f.id, t})};
    }
  return x;
}

}  // namespace compcat
