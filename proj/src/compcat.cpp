#include "compcat/compcat.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "compcat/ids.hpp"

namespace compcat {

std::vector<ObjId> fiber(const CompCat& cc, const ObjId& ctx) {
  std::vector<ObjId> out;
  for (const auto& a : cc.total.objects)
    if (cc.p.on_obj(a) == ctx) out.push_back(a);
  return out;
}

ObjId context_extension(const CompCat& cc, const ObjId& type_obj) {
  return cc.base.mor(cc.chi.on_obj(type_obj)).src;
}

MorId projection(const CompCat& cc, const ObjId& type_obj) {
  return cc.chi.on_obj(type_obj);
}

CompCat trivial_compcat(const FinCategory& c) {
  CompCat cc;
  cc.base = c;
  cc.base.normalize();
  ArrowCategory arr = arrow_category(cc.base);
  cc.total = arr.cat;
  cc.p = arr.cod_functor;
  cc.chi = identity_functor(arr.cat);
  cc.point = terminal_object(cc.base);
  return cc;
}

bool compcats_equal(const CompCat& a, const CompCat& b) {
  return a.base.equal(b.base) && a.total.equal(b.total) && a.p.equal_tables(b.p) &&
         a.chi.equal_tables(b.chi) && a.point == b.point;
}

namespace {

void absorb(ValidationReport& rep, const ValidationReport& sub, const std::string& code,
            const std::string& where) {
  for (const auto& v : sub.violations) rep.add(code, where + ": " + v.code + ": " + v.detail);
}

}  // namespace

Checked<CompCat> validate_compcat(const CompCat& raw) {
  ValidationReport rep;
  Checked<FinCategory> base = validate_category(raw.base);
  Checked<FinCategory> total = validate_category(raw.total);
  if (!base.ok()) absorb(rep, base.report, "InvalidBase", "base");
  if (!total.ok()) absorb(rep, total.report, "InvalidTotal", "total");
  if (!rep.ok()) return checked_fail<CompCat>(rep);

  CompCat cc;
  cc.base = *base;
  cc.total = *total;
  cc.point = raw.point;
  ArrowCategory arr = arrow_category(cc.base);

  cc.p = raw.p;
  cc.p.dom = cc.total;
  cc.p.cod = cc.base;
  cc.chi = raw.chi;
  cc.chi.dom = cc.total;
  cc.chi.cod = arr.cat;
  Checked<FinFunctor> p = validate_functor(cc.p);
  Checked<FinFunctor> chi = validate_functor(cc.chi);
  if (!p.ok()) absorb(rep, p.report, "InvalidProjection", "p");
  if (!chi.ok()) absorb(rep, chi.report, "InvalidComprehension", "chi");
  if (cc.point && !cc.base.has_object(*cc.point))
    rep.add("DanglingRef", "point " + *cc.point);
  if (!rep.ok()) return checked_fail<CompCat>(rep);

  // cod . chi = p on the nose
  FinFunctor cod_chi = compose_functors(arr.cod_functor, cc.chi);
  for (const auto& a : cc.total.objects)
    if (cod_chi.on_obj(a) != cc.p.on_obj(a))
      rep.add("NotOverBase", "object " + a + ": cod chi = " + cod_chi.on_obj(a) + ", p = " +
                                 cc.p.on_obj(a));
  for (const auto& m : cc.total.morphisms)
    if (cod_chi.on_mor(m.id) != cc.p.on_mor(m.id)) rep.add("NotOverBase", "morphism " + m.id);
  if (!rep.ok()) return checked_fail<CompCat>(rep);

  for (const auto& f : cc.base.morphisms)
    for (const auto& y : cc.total.objects) {
      if (cc.p.on_obj(y) != f.dst) continue;
      if (cartesian_lifts(cc.p, f.id, y).empty())
        rep.add("NotAFibration", "no cartesian lift of " + f.id + " into " + y);
    }
  if (!rep.ok()) return checked_fail<CompCat>(rep);

  // chi sends cartesian morphisms to pullback squares
  for (const auto& m : cc.total.morphisms) {
    if (!is_cartesian(cc.p, m.id)) continue;
    const Square& s = arr.square(cc.chi.on_mor(m.id));
    Cone cone{cc.base.mor(s.f).src, s.f, s.u};
    if (!is_pullback_cone(cc.base, s.v, s.g, cone))
      rep.add("CartesianNotPullback", "chi square of " + m.id);
  }
  if (!rep.ok()) return checked_fail<CompCat>(rep);
  return checked_ok(std::move(cc));
}

CompCatFlags classify(const CompCat& ccraw, long long split_budget) {
  Checked<CompCat> v = validate_compcat(ccraw);
  if (!v.ok()) throw Error("InvalidCompCat", v.report.to_string());
  const CompCat& cc = *v;
  ArrowCategory arr = arrow_category(cc.base);

  CompCatFlags fl;
  FunctorReport fr = functor_report(cc.chi);
  fl.full = fr.full && fr.faithful;
  fl.subcategorical = fl.full && fr.injective_on_objects;
  if (fl.subcategorical) {
    std::set<ObjId> image;
    for (const auto& a : cc.total.objects) image.insert(cc.chi.on_obj(a));
    bool replete = true;
    for (const auto& x : image)
      for (const auto& y : arr.cat.objects)
        if (!image.count(y) && arr.cat.objects_isomorphic(x, y)) replete = false;
    fl.replete = replete;

    bool closed = true;
    for (const auto& o : cc.base.objects)
      if (!image.count(cc.base.id_of(o))) closed = false;
    for (const auto& d : image)
      for (const auto& e : image)
        if (cc.base.mor(e).src == cc.base.mor(d).dst && !image.count(cc.base.compose(e, d)))
          closed = false;
    fl.comp_closed = closed;
  }
  fl.trivial = cc.total.equal(arr.cat) && cc.chi.equal_tables(identity_functor(arr.cat));
  fl.discrete = is_discrete_fibration(cc.p);
  fl.split = fibration_report(cc.p, split_budget).splittable;
  fl.pointed = cc.point.has_value();
  if (fl.pointed) {
    ContextualSlice sl = contextual_slice_full(cc, *cc.point);
    bool terminal = true;
    for (const auto& x : cc.base.objects)
      if (cc.base.hom(x, *cc.point).size() != 1) terminal = false;

    bool ess_surjective = true;
    for (const auto& y : cc.base.objects) {
      bool hit = false;
      for (const auto& s : sl.slice.base.objects)
        if (cc.base.objects_isomorphic(sl.to_base.on_obj(s), y)) {
          hit = true;
          break;
        }
      if (!hit) ess_surjective = false;
    }
    std::set<ObjId> extensions;
    bool injective = true;
    for (const auto& s : sl.slice.base.objects)
      if (!extensions.insert(sl.to_base.on_obj(s)).second) injective = false;
    bool bijective = injective && extensions.size() == cc.base.objects.size();

    fl.rooted = terminal && ess_surjective;
    fl.contextual = terminal && bijective;
  }
  return fl;
}

ContextualSlice contextual_slice_full(const CompCat& ccraw, const ObjId& ctx,
                                      long long depth_budget) {
  Checked<CompCat> vcc = validate_compcat(ccraw);
  if (!vcc.ok()) throw Error("InvalidCompCat", vcc.report.to_string());
  const CompCat& cc = *vcc;
  if (!cc.base.has_object(ctx)) throw Error("UnknownObject", ctx);
  if (depth_budget < 0)
    depth_budget =
        (long long)cc.base.objects.size() * (long long)cc.total.objects.size() + 1;

  // reachable cycle in the extension graph means sequences of every length
  {
    std::set<ObjId> visiting, done;
    std::function<void(const ObjId&)> dfs = [&](const ObjId& x) {
      if (done.count(x)) return;
      if (visiting.count(x)) throw Error("SliceInfinite", "extension cycle through " + x);
      visiting.insert(x);
      for (const auto& a : fiber(cc, x)) dfs(context_extension(cc, a));
      visiting.erase(x);
      done.insert(x);
    };
    dfs(ctx);
  }

  struct Seq {
    ObjId id;
    std::vector<ObjId> types;
    ObjId ext;
    MorId proj;  // ext -> ctx in the base
  };
  std::vector<Seq> seqs;
  seqs.push_back({join_ids("seq", {}), {}, ctx, cc.base.id_of(ctx)});
  long long depth = 0;
  for (size_t level_start = 0; level_start < seqs.size();) {
    if (++depth > depth_budget + 1) throw Error("SliceInfinite", "no closure within depth budget");
    size_t level_end = seqs.size();
    for (size_t i = level_start; i < level_end; ++i) {
      const Seq s = seqs[i];
      for (const auto& a : fiber(cc, s.ext)) {
        Seq t;
        t.types = s.types;
        t.types.push_back(a);
        t.id = join_ids("seq", t.types);
        t.ext = context_extension(cc, a);
        t.proj = cc.base.compose(s.proj, projection(cc, a));
        seqs.push_back(t);
      }
    }
    level_start = level_end;
  }

  FinCategory s_base;
  FinFunctor to_base;
  std::map<ObjId, std::vector<ObjId>> types_of;
  std::map<ObjId, MorId> proj_of;
  for (const auto& s : seqs) {
    s_base.objects.push_back(s.id);
    to_base.obj_map[s.id] = s.ext;
    types_of[s.id] = s.types;
    proj_of[s.id] = s.proj;
  }
  // morphisms: base maps between total extensions commuting with projections
  for (const auto& s : seqs)
    for (const auto& t : seqs)
      for (const auto& m : cc.base.hom(s.ext, t.ext)) {
        if (cc.base.compose(t.proj, m) != s.proj) continue;
        MorId id = join_ids("sl", {s.id, t.id, m});
        s_base.morphisms.push_back({id, s.id, t.id});
        to_base.mor_map[id] = m;
        if (s.id == t.id && cc.base.is_identity(m)) s_base.identity[s.id] = id;
      }
  for (const auto& m1 : s_base.morphisms)
    for (const auto& m2 : s_base.morphisms) {
      if (m2.dst != m1.src) continue;  // m1 after m2
      MorId u = cc.base.compose(to_base.mor_map.at(m1.id), to_base.mor_map.at(m2.id));
      s_base.composition[{m1.id, m2.id}] =
          join_ids("sl", {m2.src, m1.dst, u});
    }
  s_base.normalize();
  to_base.dom = s_base;
  to_base.cod = cc.base;

  PullbackFibration pf = pullback_fibration(cc.p, to_base);

  ArrowCategory arr_s = arrow_category(s_base);
  ArrowCategory arr_c = arrow_category(cc.base);
  FinFunctor chi_s;
  chi_s.dom = pf.total;
  chi_s.cod = arr_s.cat;
  std::map<ObjId, ObjId> extended;  // slice type object -> extended sequence id
  for (const auto& o : pf.total.objects) {
    ObjId s = pf.proj.on_obj(o);
    ObjId x = pf.to_fiber.on_obj(o);
    std::vector<ObjId> types = types_of.at(s);
    types.push_back(x);
    extended[o] = join_ids("seq", types);
    chi_s.obj_map[o] = join_ids("sl", {extended[o], s, projection(cc, x)});
  }
  for (const auto& mo : pf.total.morphisms) {
    MorId u = pf.proj.on_mor(mo.id);
    MorId mbar = pf.to_fiber.on_mor(mo.id);
    const Square& sq = arr_c.square(cc.chi.on_mor(mbar));
    MorId top = join_ids("sl", {extended.at(mo.src), extended.at(mo.dst), sq.u});
    auto sid = arr_s.square_id(top, u, chi_s.obj_map.at(mo.src), chi_s.obj_map.at(mo.dst));
    if (!sid) throw Error("PostconditionFailure", "slice comprehension square missing for " + mo.id);
    chi_s.mor_map[mo.id] = *sid;
  }

  ContextualSlice out;
  out.slice.base = s_base;
  out.slice.total = pf.total;
  out.slice.p = pf.proj;
  out.slice.chi = chi_s;
  out.slice.point = join_ids("seq", {});
  Checked<CompCat> post = validate_compcat(out.slice);
  if (!post.ok()) throw Error("PostconditionFailure", post.report.to_string());
  out.slice = *post;
  out.to_base = to_base;
  out.to_types = pf.to_fiber;
  return out;
}

CompCat contextual_slice(const CompCat& cc, const ObjId& ctx, long long depth_budget) {
  return contextual_slice_full(cc, ctx, depth_budget).slice;
}

namespace {

// both composites chi' Fbar and Arr(F) chi as table functors total -> Arr(C')
std::pair<FinFunctor, FinFunctor> phi_endpoints(const CompCatMap& m, const ArrowCategory& arr_src,
                                                const ArrowCategory& arr_dst) {
  FinFunctor chi_fbar = compose_functors(m.dst.chi, m.Fbar);
  FinFunctor arr_f = arrow_functor(m.F, arr_src, arr_dst);
  FinFunctor f_chi = compose_functors(arr_f, m.src.chi);
  return {chi_fbar, f_chi};
}

}  // namespace

bool map_is_strict(const CompCatMap& m) {
  ArrowCategory arr_src = arrow_category(m.src.base);
  ArrowCategory arr_dst = arrow_category(m.dst.base);
  auto [chi_fbar, f_chi] = phi_endpoints(m, arr_src, arr_dst);
  if (!chi_fbar.equal_tables(f_chi)) return false;
  for (const auto& a : m.src.total.objects)
    if (!arr_dst.cat.is_identity(m.phi.at(a))) return false;
  return true;
}

bool map_is_pointed(const CompCatMap& m) { return m.point_iso.has_value(); }

bool map_is_strictly_pointed(const CompCatMap& m) {
  return m.point_iso.has_value() && m.dst.base.is_identity(*m.point_iso);
}

bool maps_equal(const CompCatMap& a, const CompCatMap& b) {
  return a.F.equal_tables(b.F) && a.Fbar.equal_tables(b.Fbar) &&
         a.phi.components == b.phi.components && a.point_iso == b.point_iso;
}

CompCatMap identity_map(const CompCat& cc) {
  CompCatMap m;
  m.src = cc;
  m.dst = cc;
  m.F = identity_functor(cc.base);
  m.Fbar = identity_functor(cc.total);
  ArrowCategory arr = arrow_category(cc.base);
  auto [chi_fbar, f_chi] = phi_endpoints(m, arr, arr);
  m.phi.source = chi_fbar;
  m.phi.target = f_chi;
  for (const auto& a : cc.total.objects)
    m.phi.components[a] = arr.cat.id_of(cc.chi.on_obj(a));
  if (cc.point) m.point_iso = cc.base.id_of(*cc.point);
  return m;
}

CompCatMap compose_maps(const CompCatMap& g, const CompCatMap& f) {
  CompCatMap m;
  m.src = f.src;
  m.dst = g.dst;
  m.F = compose_functors(g.F, f.F);
  m.Fbar = compose_functors(g.Fbar, f.Fbar);
  ArrowCategory arr_src = arrow_category(m.src.base);
  ArrowCategory arr_mid = arrow_category(g.src.base);
  ArrowCategory arr_dst = arrow_category(m.dst.base);
  FinFunctor arr_g = arrow_functor(g.F, arr_mid, arr_dst);
  auto [chi_fbar, f_chi] = phi_endpoints(m, arr_src, arr_dst);
  m.phi.source = chi_fbar;
  m.phi.target = f_chi;
  for (const auto& a : m.src.total.objects)
    m.phi.components[a] =
        arr_dst.cat.compose(arr_g.on_mor(f.phi.at(a)), g.phi.at(f.Fbar.on_obj(a)));
  if (f.point_iso && g.point_iso)
    m.point_iso = g.dst.base.compose(*g.point_iso, g.F.on_mor(*f.point_iso));
  return m;
}

Checked<CompCatMap> validate_map(const CompCatMap& raw, bool require_strict) {
  ValidationReport rep;
  Checked<CompCat> src = validate_compcat(raw.src);
  Checked<CompCat> dst = validate_compcat(raw.dst);
  if (!src.ok()) absorb(rep, src.report, "InvalidCompCat", "source");
  if (!dst.ok()) absorb(rep, dst.report, "InvalidCompCat", "target");
  if (!rep.ok()) return checked_fail<CompCatMap>(rep);

  CompCatMap m = raw;
  m.src = *src;
  m.dst = *dst;
  m.F.dom = m.src.base;
  m.F.cod = m.dst.base;
  m.Fbar.dom = m.src.total;
  m.Fbar.cod = m.dst.total;
  Checked<FinFunctor> f = validate_functor(m.F);
  Checked<FinFunctor> fbar = validate_functor(m.Fbar);
  if (!f.ok()) absorb(rep, f.report, "InvalidFunctor", "F");
  if (!fbar.ok()) absorb(rep, fbar.report, "InvalidFunctor", "Fbar");
  if (!rep.ok()) return checked_fail<CompCatMap>(rep);

  // p' Fbar = F p on the nose
  FinFunctor over_lhs = compose_functors(m.dst.p, m.Fbar);
  FinFunctor over_rhs = compose_functors(m.F, m.src.p);
  for (const auto& a : m.src.total.objects)
    if (over_lhs.on_obj(a) != over_rhs.on_obj(a)) rep.add("NotOverF", "object " + a);
  for (const auto& mm : m.src.total.morphisms)
    if (over_lhs.on_mor(mm.id) != over_rhs.on_mor(mm.id)) rep.add("NotOverF", "morphism " + mm.id);
  if (!rep.ok()) return checked_fail<CompCatMap>(rep);

  for (const auto& mm : m.src.total.morphisms)
    if (is_cartesian(m.src.p, mm.id) && !is_cartesian(m.dst.p, m.Fbar.on_mor(mm.id)))
      rep.add("CartesianNotPreserved", mm.id);
  if (!rep.ok()) return checked_fail<CompCatMap>(rep);

  ArrowCategory arr_src = arrow_category(m.src.base);
  ArrowCategory arr_dst = arrow_category(m.dst.base);
  auto [chi_fbar, f_chi] = phi_endpoints(m, arr_src, arr_dst);
  FinNatTrans phi;
  phi.source = chi_fbar;
  phi.target = f_chi;
  phi.components = raw.phi.components;
  Checked<FinNatTrans> vphi = validate_nattrans(phi);
  if (!vphi.ok()) {
    absorb(rep, vphi.report, "InvalidPhi", "phi");
    return checked_fail<CompCatMap>(rep);
  }
  m.phi = *vphi;
  for (const auto& a : m.src.total.objects) {
    if (!arr_dst.cat.is_iso(m.phi.at(a))) rep.add("PhiNotIso", "component at " + a);
    const Square& sq = arr_dst.square(m.phi.at(a));
    if (!m.dst.base.is_identity(sq.v)) rep.add("PhiNotOverIdentity", "component at " + a);
  }
  if (!rep.ok()) return checked_fail<CompCatMap>(rep);

  if (m.point_iso) {
    if (!m.src.point || !m.dst.point)
      rep.add("PointIsoInvalid", "point isomorphism given for unpointed compcats");
    else if (!m.dst.base.has_mor(*m.point_iso))
      rep.add("PointIsoInvalid", "unknown morphism " + *m.point_iso);
    else {
      const Mor& pm = m.dst.base.mor(*m.point_iso);
      if (pm.src != m.F.on_obj(*m.src.point) || pm.dst != *m.dst.point)
        rep.add("PointIsoInvalid", "endpoints of " + *m.point_iso);
      else if (!m.dst.base.is_iso(*m.point_iso))
        rep.add("PointIsoInvalid", *m.point_iso + " is not invertible");
    }
  }
  if (!rep.ok()) return checked_fail<CompCatMap>(rep);

  if (require_strict && !map_is_strict(m)) {
    rep.add("NotStrict", "comprehension is preserved only up to isomorphism");
    return checked_fail<CompCatMap>(rep);
  }
  return checked_ok(std::move(m));
}

Checked<CompCatTransformation> validate_transformation(const CompCatTransformation& raw) {
  ValidationReport rep;
  Checked<CompCatMap> f = validate_map(raw.src);
  Checked<CompCatMap> g = validate_map(raw.dst);
  if (!f.ok()) absorb(rep, f.report, "InvalidMap", "source");
  if (!g.ok()) absorb(rep, g.report, "InvalidMap", "target");
  if (!rep.ok()) return checked_fail<CompCatTransformation>(rep);
  if (!compcats_equal(f->src, g->src) || !compcats_equal(f->dst, g->dst)) {
    rep.add("NotParallel", "maps do not share source and target compcats");
    return checked_fail<CompCatTransformation>(rep);
  }

  CompCatTransformation t;
  t.src = *f;
  t.dst = *g;
  t.alpha.source = t.src.F;
  t.alpha.target = t.dst.F;
  t.alpha.components = raw.alpha.components;
  t.alphabar.source = t.src.Fbar;
  t.alphabar.target = t.dst.Fbar;
  t.alphabar.components = raw.alphabar.components;
  Checked<FinNatTrans> va = validate_nattrans(t.alpha);
  Checked<FinNatTrans> vb = validate_nattrans(t.alphabar);
  if (!va.ok()) absorb(rep, va.report, "InvalidAlpha", "alpha");
  if (!vb.ok()) absorb(rep, vb.report, "InvalidAlphaBar", "alphabar");
  if (!rep.ok()) return checked_fail<CompCatTransformation>(rep);

  const CompCat& dst_cc = t.src.dst;
  for (const auto& a : t.src.src.total.objects)
    if (dst_cc.p.on_mor(t.alphabar.at(a)) != t.alpha.at(t.src.src.p.on_obj(a)))
      rep.add("NotOverAlpha", "component at " + a);
  if (!rep.ok()) return checked_fail<CompCatTransformation>(rep);

  // gamma_A . chi'(alphabar_A) = (alpha_{ext A}, alpha_{p A}) . phi_A
  ArrowCategory arr_dst = arrow_category(dst_cc.base);
  for (const auto& a : t.src.src.total.objects) {
    MorId lhs = arr_dst.cat.compose(t.dst.phi.at(a), dst_cc.chi.on_mor(t.alphabar.at(a)));
    MorId proj_a = projection(t.src.src, a);
    auto sq = arr_dst.square_id(t.alpha.at(context_extension(t.src.src, a)),
                                t.alpha.at(t.src.src.p.on_obj(a)), t.src.F.on_mor(proj_a),
                                t.dst.F.on_mor(proj_a));
    if (!sq) {
      rep.add("CoherenceFailure", "naturality square of alpha at " + proj_a + " does not exist");
      continue;
    }
    MorId rhs = arr_dst.cat.compose(*sq, t.src.phi.at(a));
    if (lhs != rhs) rep.add("CoherenceFailure", "at type " + a);
  }
  if (!rep.ok()) return checked_fail<CompCatTransformation>(rep);
  return checked_ok(std::move(t));
}

bool transformation_is_pointed(const CompCatTransformation& t) {
  if (!t.src.point_iso || !t.dst.point_iso || !t.src.src.point) return false;
  const FinCategory& base = t.src.dst.base;
  return base.compose(*t.dst.point_iso, t.alpha.at(*t.src.src.point)) == *t.src.point_iso;
}

bool transformation_is_iso(const CompCatTransformation& t) {
  for (const auto& [o, m] : t.alpha.components)
    if (!t.src.dst.base.is_iso(m)) return false;
  for (const auto& [o, m] : t.alphabar.components)
    if (!t.src.dst.total.is_iso(m)) return false;
  return true;
}

bool for_each_map(const CompCat& srcraw, const CompCat& dstraw, bool strict_only, bool pointed,
                  long long budget, const std::function<bool(const CompCatMap&)>& visit) {
  Checked<CompCat> vs = validate_compcat(srcraw);
  Checked<CompCat> vd = validate_compcat(dstraw);
  if (!vs.ok()) throw Error("InvalidCompCat", vs.report.to_string());
  if (!vd.ok()) throw Error("InvalidCompCat", vd.report.to_string());
  const CompCat& src = *vs;
  const CompCat& dst = *vd;

  if (pointed && (!src.point || !dst.point)) return true;

  long long counter = 0;
  auto spend = [&]() {
    if (++counter > budget) throw BudgetExceeded(counter, "map enumeration");
  };

  ArrowCategory arr_src = arrow_category(src.base);
  ArrowCategory arr_dst = arrow_category(dst.base);
  std::set<MorId> cart_src, cart_dst;
  for (const auto& mm : src.total.morphisms)
    if (is_cartesian(src.p, mm.id)) cart_src.insert(mm.id);
  for (const auto& mm : dst.total.morphisms)
    if (is_cartesian(dst.p, mm.id)) cart_dst.insert(mm.id);

  // Hom tables and the vertical-iso squares of the target, precomputed: the
  // inner walk must not rescan morphism lists.
  std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> tot_hom;
  for (const auto& mm : dst.total.morphisms) tot_hom[{mm.src, mm.dst}].push_back(mm.id);
  static const std::vector<MorId> no_moves;
  auto dst_hom = [&](const ObjId& i, const ObjId& j) -> const std::vector<MorId>& {
    auto it = tot_hom.find({i, j});
    return it == tot_hom.end() ? no_moves : it->second;
  };
  // iso squares over an identity, keyed by endpoints: exactly the shapes a
  // phi component may take
  std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> vih;
  auto vert_iso_hom = [&](const ObjId& xx, const ObjId& yy) -> const std::vector<MorId>& {
    auto key = std::make_pair(xx, yy);
    auto it = vih.find(key);
    if (it != vih.end()) return it->second;
    std::vector<MorId> ws;
    for (const auto& w : arr_dst.cat.hom(xx, yy)) {
      if (!arr_dst.cat.is_iso(w)) continue;
      if (!dst.base.is_identity(arr_dst.square(w).v)) continue;
      ws.push_back(w);
    }
    return vih.emplace(key, std::move(ws)).first->second;
  };

  // One emission buffer for the whole walk: the reference handed to the
  // visitor is reused between calls. phi endpoints stay empty, validate_map
  // rebuilds them from F and Fbar.
  bool stopped = false;
  CompCatMap m;
  m.src = src;
  m.dst = dst;
  m.Fbar.dom = src.total;
  m.Fbar.cod = dst.total;

  for (const FinFunctor& F : enumerate_functors(src.base, dst.base, budget)) {
    if (stopped) break;
    FinFunctor arr_f = arrow_functor(F, arr_src, arr_dst);
    FinFunctor f_chi = compose_functors(arr_f, src.chi);
    m.F = F;

    // Fbar object images over F, then morphism images, functorial and over F
    std::map<ObjId, ObjId> fbar_obj;
    std::map<MorId, MorId> fbar_mor;
    const auto& tobjs = src.total.objects;
    const auto& tmors = src.total.morphisms;

    // A valid map needs a phi component at every type object: an iso square
    // over an identity into f_chi(a), or equality on the nose when strict.
    // Filtering Fbar object candidates by that now collapses the search.
    std::map<ObjId, std::vector<ObjId>> cand;
    bool feasible = true;
    for (const auto& a : tobjs) {
      std::vector<ObjId> cs;
      for (const auto& b : dst.total.objects) {
        spend();
        if (dst.p.on_obj(b) != F.on_obj(src.p.on_obj(a))) continue;
        if (strict_only) {
          if (dst.chi.on_obj(b) != f_chi.on_obj(a)) continue;
        } else if (vert_iso_hom(dst.chi.on_obj(b), f_chi.on_obj(a)).empty()) {
          continue;
        }
        cs.push_back(b);
      }
      if (cs.empty()) {
        feasible = false;
        break;
      }
      cand[a] = std::move(cs);
    }
    if (!feasible) continue;

    auto chi_fbar_obj = [&](const ObjId& a) { return dst.chi.on_obj(fbar_obj.at(a)); };
    auto chi_fbar_mor = [&](const MorId& u) { return dst.chi.on_mor(fbar_mor.at(u)); };

    std::function<void(size_t)> assign_mor;
    std::function<void(size_t)> assign_obj;

    auto emit_with_phi = [&]() {
      m.Fbar.obj_map = fbar_obj;
      m.Fbar.mor_map = fbar_mor;

      auto finish = [&](const std::map<ObjId, MorId>& comps) {
        m.phi.components = comps;
        if (!pointed) {
          if (!visit(m)) stopped = true;
          return;
        }
        for (const auto& iota : dst.base.hom(F.on_obj(*src.point), *dst.point)) {
          if (stopped) return;
          spend();
          if (!dst.base.is_iso(iota)) continue;
          m.point_iso = iota;
          if (!visit(m)) {
            stopped = true;
            break;
          }
        }
        m.point_iso.reset();
      };

      if (strict_only) {
        for (const auto& a : tobjs)
          if (chi_fbar_obj(a) != f_chi.on_obj(a)) return;
        for (const auto& u : tmors)
          if (chi_fbar_mor(u.id) != f_chi.on_mor(u.id)) return;
        std::map<ObjId, MorId> comps;
        for (const auto& a : tobjs) comps[a] = arr_dst.cat.id_of(chi_fbar_obj(a));
        finish(comps);
        return;
      }

      // phi components per type object, naturality-pruned as assigned
      std::map<ObjId, MorId> comps;
      std::function<void(size_t)> assign_phi = [&](size_t idx) {
        if (stopped) return;
        if (idx == tobjs.size()) {
          finish(comps);
          return;
        }
        const ObjId& a = tobjs[idx];
        for (const auto& w : vert_iso_hom(chi_fbar_obj(a), f_chi.on_obj(a))) {
          if (stopped) return;
          spend();
          comps[a] = w;
          bool ok = true;
          for (const auto& u : tmors) {
            if (!comps.count(u.src) || !comps.count(u.dst)) continue;
            if (u.src != a && u.dst != a) continue;
            if (arr_dst.cat.compose(comps.at(u.dst), chi_fbar_mor(u.id)) !=
                arr_dst.cat.compose(f_chi.on_mor(u.id), comps.at(u.src))) {
              ok = false;
              break;
            }
          }
          if (ok) assign_phi(idx + 1);
          comps.erase(a);
        }
      };
      assign_phi(0);
    };

    assign_mor = [&](size_t idx) {
      if (stopped) return;
      if (idx == tmors.size()) {
        // the incremental pruning misses composites assigned after both
        // factors, so recheck every composable pair before emitting
        for (const auto& [pair, comp] : src.total.composition)
          if (dst.total.compose(fbar_mor.at(pair.first), fbar_mor.at(pair.second)) !=
              fbar_mor.at(comp))
            return;
        emit_with_phi();
        return;
      }
      const Mor& u = tmors[idx];
      for (const auto& w : dst_hom(fbar_obj.at(u.src), fbar_obj.at(u.dst))) {
        if (stopped) return;
        spend();
        if (dst.p.on_mor(w) != F.on_mor(src.p.on_mor(u.id))) continue;
        if (strict_only && dst.chi.on_mor(w) != f_chi.on_mor(u.id)) continue;
        if (src.total.is_identity(u.id) && !dst.total.is_identity(w)) continue;
        if (cart_src.count(u.id) && !cart_dst.count(w)) continue;
        fbar_mor[u.id] = w;
        bool ok = true;
        for (const auto& v : tmors) {
          if (!fbar_mor.count(v.id)) continue;
          // composites in both orders against every assigned partner
          if (v.dst == u.src) {
            MorId uv = src.total.compose(u.id, v.id);
            if (fbar_mor.count(uv) &&
                fbar_mor.at(uv) != dst.total.compose(w, fbar_mor.at(v.id))) {
              ok = false;
              break;
            }
          }
          if (u.dst == v.src) {
            MorId vu = src.total.compose(v.id, u.id);
            if (fbar_mor.count(vu) &&
                fbar_mor.at(vu) != dst.total.compose(fbar_mor.at(v.id), w)) {
              ok = false;
              break;
            }
          }
        }
        if (ok) assign_mor(idx + 1);
        fbar_mor.erase(u.id);
      }
    };

    assign_obj = [&](size_t idx) {
      if (stopped) return;
      if (idx == tobjs.size()) {
        assign_mor(0);
        return;
      }
      const ObjId& a = tobjs[idx];
      for (const auto& b : cand.at(a)) {
        if (stopped) return;
        spend();
        fbar_obj[a] = b;
        assign_obj(idx + 1);
        fbar_obj.erase(a);
      }
    };

    assign_obj(0);
  }
  return !stopped;
}

std::vector<CompCatMap> enumerate_maps(const CompCat& srcraw, const CompCat& dstraw,
                                       bool strict_only, bool pointed, long long budget) {
  std::vector<CompCatMap> out;
  for_each_map(srcraw, dstraw, strict_only, pointed, budget, [&](const CompCatMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<CompCatTransformation> enumerate_transformations(const CompCatMap& fraw,
                                                             const CompCatMap& graw,
                                                             bool pointed_only, long long budget) {
  Checked<CompCatMap> vf = validate_map(fraw);
  Checked<CompCatMap> vg = validate_map(graw);
  if (!vf.ok()) throw Error("InvalidMap", vf.report.to_string());
  if (!vg.ok()) throw Error("InvalidMap", vg.report.to_string());
  const CompCatMap& f = *vf;
  const CompCatMap& g = *vg;
  if (!compcats_equal(f.src, g.src) || !compcats_equal(f.dst, g.dst))
    throw Error("NotParallel", "maps do not share source and target compcats");

  std::vector<CompCatTransformation> out;
  long long counter = 0;
  auto spend = [&]() {
    if (++counter > budget) throw BudgetExceeded(counter, "transformation enumeration");
  };

  const FinCategory& cb = f.src.base;
  const FinCategory& ct = f.src.total;
  const FinCategory& db = f.dst.base;
  const FinCategory& dt = f.dst.total;
  ArrowCategory arr_dst = arrow_category(db);

  std::map<ObjId, MorId> alpha, alphabar;

  auto coherent_at = [&](const ObjId& a) {
    MorId lhs = arr_dst.cat.compose(g.phi.at(a), f.dst.chi.on_mor(alphabar.at(a)));
    MorId proj_a = projection(f.src, a);
    auto sq = arr_dst.square_id(alpha.at(context_extension(f.src, a)),
                                alpha.at(f.src.p.on_obj(a)), f.F.on_mor(proj_a),
                                g.F.on_mor(proj_a));
    if (!sq) return false;
    return lhs == arr_dst.cat.compose(*sq, f.phi.at(a));
  };

  std::function<void(size_t)> assign_bar = [&](size_t idx) {
    if (idx == ct.objects.size()) {
      CompCatTransformation t;
      t.src = f;
      t.dst = g;
      t.alpha.source = f.F;
      t.alpha.target = g.F;
      t.alpha.components = alpha;
      t.alphabar.source = f.Fbar;
      t.alphabar.target = g.Fbar;
      t.alphabar.components = alphabar;
      if (pointed_only && !transformation_is_pointed(t)) return;
      out.push_back(t);
      return;
    }
    const ObjId& a = ct.objects[idx];
    for (const auto& w : dt.hom(f.Fbar.on_obj(a), g.Fbar.on_obj(a))) {
      spend();
      if (f.dst.p.on_mor(w) != alpha.at(f.src.p.on_obj(a))) continue;
      alphabar[a] = w;
      bool ok = coherent_at(a);
      for (const auto& u : ct.morphisms) {
        if (!ok) break;
        if (!alphabar.count(u.src) || !alphabar.count(u.dst)) continue;
        if (u.src != a && u.dst != a) continue;
        if (dt.compose(alphabar.at(u.dst), f.Fbar.on_mor(u.id)) !=
            dt.compose(g.Fbar.on_mor(u.id), alphabar.at(u.src)))
          ok = false;
      }
      if (ok) assign_bar(idx + 1);
      alphabar.erase(a);
    }
  };

  std::function<void(size_t)> assign_alpha = [&](size_t idx) {
    if (idx == cb.objects.size()) {
      assign_bar(0);
      return;
    }
    const ObjId& x = cb.objects[idx];
    for (const auto& w : db.hom(f.F.on_obj(x), g.F.on_obj(x))) {
      spend();
      alpha[x] = w;
      bool ok = true;
      for (const auto& u : cb.morphisms) {
        if (!alpha.count(u.src) || !alpha.count(u.dst)) continue;
        if (u.src != x && u.dst != x) continue;
        if (db.compose(alpha.at(u.dst), f.F.on_mor(u.id)) !=
            db.compose(g.F.on_mor(u.id), alpha.at(u.src))) {
          ok = false;
          break;
        }
      }
      if (ok) assign_alpha(idx + 1);
      alpha.erase(x);
    }
  };

  assign_alpha(0);
  return out;
}

Strictified strictify_contextual_map(const CompCatMap& mraw) {
  Checked<CompCatMap> vm = validate_map(mraw);
  if (!vm.ok()) throw Error("InvalidMap", vm.report.to_string());
  const CompCatMap& m = *vm;
  if (!map_is_pointed(m)) throw Error("PreconditionFailed", "map carries no point isomorphism");
  CompCatFlags fl = classify(m.src);
  if (!fl.contextual.value_or(false))
    throw Error("PreconditionFailed", "source is not contextual");
  for (const auto& x : m.dst.base.objects)
    if (m.dst.base.hom(x, *m.dst.point).size() != 1)
      throw Error("PreconditionFailed", "target point is not terminal");

  const FinCategory& db = m.dst.base;
  const FinCategory& dt = m.dst.total;
  ArrowCategory arr_src = arrow_category(m.src.base);
  ArrowCategory arr_dst = arrow_category(db);
  Cleaving cl = compute_cleaving(m.dst.p);

  auto inv = [&](const FinCategory& c, const MorId& w) {
    auto i = c.inverse(w);
    if (!i) throw Error("PostconditionFailure", w + " is not invertible");
    return *i;
  };

  // transport along the point isomorphism, context by context in extension
  // order; contextuality makes the traversal visit each context exactly once
  std::map<ObjId, ObjId> g_obj;
  std::map<ObjId, MorId> psi;      // F(x) -> G(x), iso in the target base
  std::map<ObjId, ObjId> gbar_obj;
  std::map<ObjId, MorId> kappa;    // Gbar(A) -> Fbar(A), cartesian over psi^{-1}
  g_obj[*m.src.point] = *m.dst.point;
  psi[*m.src.point] = *m.point_iso;

  std::vector<ObjId> frontier{*m.src.point};
  while (!frontier.empty()) {
    std::vector<ObjId> next;
    for (const auto& ctx : frontier) {
      for (const auto& a : fiber(m.src, ctx)) {
        MorId k = cl.at(inv(db, psi.at(ctx)), m.Fbar.on_obj(a));
        kappa[a] = k;
        gbar_obj[a] = dt.mor(k).src;
        MorId rho = arr_dst.cat.compose(m.phi.at(a), m.dst.chi.on_mor(k));
        const Square& sq = arr_dst.square(rho);
        ObjId ext = context_extension(m.src, a);
        g_obj[ext] = db.mor(sq.u).src;
        psi[ext] = inv(db, sq.u);
        next.push_back(ext);
      }
    }
    frontier = next;
  }

  CompCatMap out;
  out.src = m.src;
  out.dst = m.dst;
  out.F.dom = m.src.base;
  out.F.cod = db;
  out.F.obj_map = g_obj;
  for (const auto& u : m.src.base.morphisms)
    out.F.mor_map[u.id] = db.compose(
        psi.at(u.dst), db.compose(m.F.on_mor(u.id), inv(db, psi.at(u.src))));
  out.Fbar.dom = m.src.total;
  out.Fbar.cod = dt;
  out.Fbar.obj_map = gbar_obj;
  for (const auto& u : m.src.total.morphisms)
    out.Fbar.mor_map[u.id] = dt.compose(
        inv(dt, kappa.at(u.dst)), dt.compose(m.Fbar.on_mor(u.id), kappa.at(u.src)));
  FinFunctor chi_gbar = compose_functors(m.dst.chi, out.Fbar);
  out.phi.source = chi_gbar;
  out.phi.target = compose_functors(arrow_functor(out.F, arr_src, arr_dst), m.src.chi);
  for (const auto& a : m.src.total.objects)
    out.phi.components[a] = arr_dst.cat.id_of(chi_gbar.on_obj(a));
  out.point_iso = db.id_of(*m.dst.point);

  CompCatTransformation tr;
  tr.src = m;
  tr.dst = out;
  tr.alpha.source = m.F;
  tr.alpha.target = out.F;
  tr.alpha.components = psi;
  tr.alphabar.source = m.Fbar;
  tr.alphabar.target = out.Fbar;
  for (const auto& [a, k] : kappa) tr.alphabar.components[a] = inv(dt, k);

  Checked<CompCatMap> vout = validate_map(out, true);
  if (!vout.ok()) throw Error("PostconditionFailure", vout.report.to_string());
  Checked<CompCatTransformation> vtr = validate_transformation(tr);
  if (!vtr.ok()) throw Error("PostconditionFailure", vtr.report.to_string());
  if (!transformation_is_iso(*vtr))
    throw Error("PostconditionFailure", "strictification witness is not invertible");
  Strictified s;
  s.map = *vout;
  s.iso = *vtr;
  return s;
}

}  // namespace compcat
