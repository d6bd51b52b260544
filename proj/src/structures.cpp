#include "compcat/structures.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace compcat {

namespace {

void absorb(ValidationReport& rep, const ValidationReport& sub, const std::string& code,
            const std::string& where) {
  for (const auto& v : sub.violations) rep.add(code, where + ": " + v.code + ": " + v.detail);
}

// Some pullback of d along f whose pulled-back leg is displayed.
bool has_displayed_pullback(const FinCategory& c, const std::set<MorId>& display, const MorId& f,
                            const MorId& d) {
  const ObjId& a = c.mor(f).src;
  const ObjId& b = c.mor(d).src;
  for (const auto& apex : c.objects) {
    for (const MorId& lf : c.hom(apex, a)) {
      if (!display.count(lf)) continue;
      for (const MorId& lg : c.hom(apex, b)) {
        if (is_pullback_cone(c, f, d, Cone{apex, lf, lg})) return true;
      }
    }
  }
  return false;
}

}  // namespace

Checked<DisplayClass> validate_dmc(const DisplayClass& raw, bool require_replete) {
  ValidationReport rep;
  Checked<FinCategory> vbase = validate_category(raw.base);
  if (!vbase.ok()) {
    absorb(rep, vbase.report, "InvalidBase", "base");
    return checked_fail<DisplayClass>(rep);
  }
  DisplayClass d;
  d.base = *vbase;
  d.display = raw.display;
  d.chosen_pullbacks = raw.chosen_pullbacks;
  const FinCategory& c = d.base;

  for (const auto& m : d.display)
    if (!c.has_mor(m)) rep.add("DanglingRef", "display morphism " + m + " is not in the base");
  if (!rep.ok()) return checked_fail<DisplayClass>(rep);

  // Chosen witnesses are audited first; a good entry settles its (d, f) pair.
  std::set<std::pair<MorId, MorId>> good_chosen;
  for (const auto& [key, cone] : d.chosen_pullbacks) {
    const auto& [dm, f] = key;
    const std::string where = "chosen pullback of " + dm + " along " + f;
    if (!d.display.count(dm) || !c.has_mor(f) || c.mor(f).dst != c.mor(dm).dst) {
      rep.add("ChosenPullbackInvalid", where + ": key is not (display, map into its target)");
      continue;
    }
    if (!c.has_object(cone.apex) || !c.has_mor(cone.leg_f) || !c.has_mor(cone.leg_g)) {
      rep.add("ChosenPullbackInvalid", where + ": cone names unknown ids");
      continue;
    }
    if (!is_pullback_cone(c, f, dm, cone)) {
      rep.add("ChosenPullbackInvalid", where + ": cone is not a pullback");
      continue;
    }
    if (!d.display.count(cone.leg_f)) {
      rep.add("ChosenPullbackInvalid", where + ": pulled-back leg " + cone.leg_f + " is not displayed");
      continue;
    }
    good_chosen.insert(key);
  }

  for (const auto& dm : d.display) {
    const ObjId& target = c.mor(dm).dst;
    for (const auto& fm : c.morphisms) {
      if (fm.dst != target) continue;
      if (good_chosen.count({dm, fm.id})) continue;
      if (!has_displayed_pullback(c, d.display, fm.id, dm))
        rep.add("PullbackMissing",
                "no pullback of " + dm + " along " + fm.id + " with a displayed leg");
    }
  }

  if (require_replete) {
    ArrowCategory arr = arrow_category(c);
    for (const auto& m : c.morphisms) {
      if (d.display.count(m.id)) continue;
      for (const auto& dm : d.display) {
        if (arr.cat.objects_isomorphic(m.id, dm)) {
          rep.add("NotReplete",
                  m.id + " is isomorphic to the displayed " + dm + " but is not displayed");
          break;
        }
      }
    }
  }

  if (!rep.ok()) return checked_fail<DisplayClass>(rep);
  return checked_ok(std::move(d));
}

Checked<DisplayClass> validate_clan(const DisplayClass& raw) {
  Checked<DisplayClass> vd = validate_dmc(raw, true);
  ValidationReport rep = vd.report;
  if (rep.has("InvalidBase") || rep.has("DanglingRef")) return checked_fail<DisplayClass>(rep);

  // Stability or repleteness failures carry over, but the clan axioms are
  // still checkable on the well-formed tables.
  DisplayClass d;
  if (vd.ok()) {
    d = *vd;
  } else {
    d.base = *validate_category(raw.base);
    d.display = raw.display;
    d.chosen_pullbacks = raw.chosen_pullbacks;
  }
  const FinCategory& c = d.base;

  for (const auto& x : c.objects)
    if (!d.display.count(c.id_of(x)))
      rep.add("IdentityNotDisplay", "identity of " + x + " is not displayed");

  for (const auto& g : d.display) {
    for (const auto& f : d.display) {
      if (c.mor(f).dst != c.mor(g).src) continue;
      const MorId& gf = c.compose(g, f);
      if (!d.display.count(gf))
        rep.add("NotCompClosed", g + " after " + f + " = " + gf + " is not displayed");
    }
  }

  std::optional<ObjId> t = terminal_object(c);
  if (!t) {
    rep.add("NoTerminal", "base has no terminal object");
  } else {
    for (const auto& x : c.objects) {
      const MorId m = c.hom(x, *t)[0];
      if (!d.display.count(m))
        rep.add("NonDisplayGlobalMap", "unique map " + m + " from " + x + " is not displayed");
    }
  }

  if (!rep.ok()) return checked_fail<DisplayClass>(rep);
  return checked_ok(std::move(d));
}

DisplayClass close_under_pullbacks(const FinCategory& base, const std::set<MorId>& seed) {
  Checked<FinCategory> vbase = validate_category(base);
  if (!vbase.ok()) throw Error("InvalidBase", vbase.report.to_string());
  FinCategory c = *vbase;
  for (const auto& m : seed)
    if (!c.has_mor(m)) throw Error("DanglingRef", "seed morphism " + m + " is not in the base");

  std::set<MorId> display = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::set<MorId> snapshot = display;
    for (const auto& dm : snapshot) {
      const ObjId& target = c.mor(dm).dst;
      for (const auto& fm : c.morphisms) {
        if (fm.dst != target) continue;
        if (has_displayed_pullback(c, display, fm.id, dm)) continue;
        std::optional<Cone> cone = pullback(c, fm.id, dm);
        if (!cone)
          throw Error("PullbackMissing", "base has no pullback of " + dm + " along " + fm.id);
        display.insert(cone->leg_f);
        changed = true;
      }
    }
  }

  DisplayClass out;
  out.base = std::move(c);
  out.display = std::move(display);
  return out;
}

Checked<CwA> validate_cwa(const CwA& raw) {
  ValidationReport rep;
  Checked<FinCategory> vbase = validate_category(raw.base);
  if (!vbase.ok()) {
    absorb(rep, vbase.report, "InvalidBase", "base");
    return checked_fail<CwA>(rep);
  }
  CwA c;
  c.base = *vbase;
  c.Ty = raw.Ty;
  c.Ty.base = c.base;
  Checked<FinPresheaf> vty = validate_presheaf(c.Ty);
  if (!vty.ok()) {
    absorb(rep, vty.report, "InvalidTy", "Ty");
    return checked_fail<CwA>(rep);
  }
  c.Ty = *vty;
  c.ext = raw.ext;
  c.proj = raw.proj;
  c.ext_mor = raw.ext_mor;
  const FinCategory& b = c.base;

  for (const auto& [k, v] : c.ext)
    if (!b.has_object(k.first) || !c.Ty.has_elem(k.first, k.second))
      rep.add("DanglingRef", "ext entry for unknown (" + k.first + ", " + k.second + ")");
  for (const auto& [k, v] : c.proj)
    if (!b.has_object(k.first) || !c.Ty.has_elem(k.first, k.second))
      rep.add("DanglingRef", "proj entry for unknown (" + k.first + ", " + k.second + ")");
  for (const auto& [k, v] : c.ext_mor)
    if (!b.has_mor(k.first) || !c.Ty.has_elem(b.mor(k.first).dst, k.second))
      rep.add("DanglingRef", "ext_mor entry for unknown (" + k.first + ", " + k.second + ")");

  for (const auto& G : b.objects) {
    for (const auto& A : c.Ty.elems(G)) {
      auto eit = c.ext.find({G, A});
      if (eit == c.ext.end())
        rep.add("MissingEntry", "ext(" + G + ", " + A + ")");
      else if (!b.has_object(eit->second))
        rep.add("DanglingRef", "ext(" + G + ", " + A + ") = " + eit->second);
      auto pit = c.proj.find({G, A});
      if (pit == c.proj.end())
        rep.add("MissingEntry", "proj(" + G + ", " + A + ")");
      else if (!b.has_mor(pit->second))
        rep.add("DanglingRef", "proj(" + G + ", " + A + ") = " + pit->second);
    }
  }
  if (!rep.ok()) return checked_fail<CwA>(rep);

  for (const auto& G : b.objects) {
    for (const auto& A : c.Ty.elems(G)) {
      const Mor& pm = b.mor(c.proj.at({G, A}));
      if (pm.src != c.ext.at({G, A}) || pm.dst != G)
        rep.add("EndpointMismatch",
                "proj(" + G + ", " + A + ") is " + pm.id + ": " + pm.src + " -> " + pm.dst);
    }
  }
  for (const auto& fm : b.morphisms) {
    for (const auto& A : c.Ty.elems(fm.dst)) {
      auto it = c.ext_mor.find({fm.id, A});
      if (it == c.ext_mor.end()) {
        rep.add("MissingEntry", "ext_mor(" + fm.id + ", " + A + ")");
        continue;
      }
      if (!b.has_mor(it->second)) {
        rep.add("DanglingRef", "ext_mor(" + fm.id + ", " + A + ") = " + it->second);
        continue;
      }
      const ElemId fA = c.Ty.action(fm.id, A);
      const Mor& mm = b.mor(it->second);
      if (mm.src != c.ext.at({fm.src, fA}) || mm.dst != c.ext.at({fm.dst, A}))
        rep.add("EndpointMismatch",
                "ext_mor(" + fm.id + ", " + A + ") is " + mm.id + ": " + mm.src + " -> " + mm.dst);
    }
  }
  if (!rep.ok()) return checked_fail<CwA>(rep);

  for (const auto& G : b.objects)
    for (const auto& A : c.Ty.elems(G))
      if (c.ext_mor.at({b.id_of(G), A}) != b.id_of(c.ext.at({G, A})))
        rep.add("NotFunctorial", "ext_mor(" + b.id_of(G) + ", " + A + ") is not the identity");
  for (const auto& fm : b.morphisms) {
    for (const auto& gm : b.morphisms) {
      if (gm.dst != fm.src) continue;
      for (const auto& A : c.Ty.elems(fm.dst)) {
        const ElemId fA = c.Ty.action(fm.id, A);
        const MorId& lhs = c.ext_mor.at({b.compose(fm.id, gm.id), A});
        const MorId rhs = b.compose(c.ext_mor.at({fm.id, A}), c.ext_mor.at({gm.id, fA}));
        if (lhs != rhs)
          rep.add("NotFunctorial", "ext_mor(" + fm.id + " . " + gm.id + ", " + A +
                                       ") != ext_mor(" + fm.id + ", " + A + ") . ext_mor(" +
                                       gm.id + ", " + fA + ")");
      }
    }
  }

  for (const auto& fm : b.morphisms) {
    for (const auto& A : c.Ty.elems(fm.dst)) {
      const ElemId fA = c.Ty.action(fm.id, A);
      const MorId& pA = c.proj.at({fm.dst, A});
      const MorId& pfA = c.proj.at({fm.src, fA});
      const MorId& top = c.ext_mor.at({fm.id, A});
      if (b.compose(pA, top) != b.compose(fm.id, pfA)) {
        rep.add("SquareNotPullback",
                "chosen square for (" + fm.id + ", " + A + ") does not commute");
        continue;
      }
      Cone cone{c.ext.at({fm.src, fA}), pfA, top};
      if (!is_pullback_cone(b, fm.id, pA, cone))
        rep.add("SquareNotPullback", "chosen square for (" + fm.id + ", " + A + ") is not limiting");
    }
  }

  if (!rep.ok()) return checked_fail<CwA>(rep);
  return checked_ok(std::move(c));
}

Checked<CwF> validate_cwf(const CwF& raw) {
  ValidationReport rep;
  Checked<CwA> vcwa = validate_cwa(raw.cwa);
  if (!vcwa.ok()) {
    absorb(rep, vcwa.report, "InvalidCwA", "cwa");
    return checked_fail<CwF>(rep);
  }
  CwF c;
  c.cwa = *vcwa;
  FinFunctor gr = grothendieck(c.cwa.Ty);
  c.Tm = raw.Tm;
  c.Tm.base = gr.dom;
  Checked<FinPresheaf> vtm = validate_presheaf(c.Tm);
  if (!vtm.ok()) {
    absorb(rep, vtm.report, "InvalidTm", "Tm");
    return checked_fail<CwF>(rep);
  }
  c.Tm = *vtm;
  c.var = raw.var;
  const FinCategory& b = c.cwa.base;
  const FinPresheaf& ty = c.cwa.Ty;

  for (const auto& [k, v] : c.var)
    if (!b.has_object(k.first) || !ty.has_elem(k.first, k.second))
      rep.add("DanglingRef", "var entry for unknown (" + k.first + ", " + k.second + ")");
  for (const auto& G : b.objects) {
    for (const auto& A : ty.elems(G)) {
      auto it = c.var.find({G, A});
      if (it == c.var.end()) {
        rep.add("MissingEntry", "var(" + G + ", " + A + ")");
        continue;
      }
      const ObjId& ext = c.cwa.ext.at({G, A});
      const ElemId pAstar = ty.action(c.cwa.proj.at({G, A}), A);
      if (!c.Tm.has_elem(pair_id(ext, pAstar), it->second))
        rep.add("DanglingRef",
                "var(" + G + ", " + A + ") = " + it->second + " is not a term over " +
                    pair_id(ext, pAstar));
    }
  }
  if (!rep.ok()) return checked_fail<CwF>(rep);

  // f |-> (p_A . f, f* var) must biject maps into the extension with
  // (substitution, term) pairs; naturality in D follows from Tm being a
  // presheaf, so counting injectivity per D suffices.
  for (const auto& G : b.objects) {
    for (const auto& A : ty.elems(G)) {
      const ObjId& extObj = c.cwa.ext.at({G, A});
      const MorId& pA = c.cwa.proj.at({G, A});
      const ElemId pAstar = ty.action(pA, A);
      const ElemId& v = c.var.at({G, A});
      for (const auto& D : b.objects) {
        const std::vector<MorId> lhs = b.hom(D, extObj);
        std::set<std::pair<MorId, ElemId>> image;
        for (const auto& f : lhs)
          image.insert({b.compose(pA, f), c.Tm.action(pair_id(f, pAstar), v)});
        std::size_t pairs = 0;
        for (const auto& g : b.hom(D, G)) pairs += c.Tm.elems(pair_id(D, ty.action(g, A))).size();
        if (image.size() != lhs.size() || lhs.size() != pairs)
          rep.add("NotBijective", "(" + G + ", " + A + ", " + D + "): " +
                                      std::to_string(lhs.size()) + " maps into the extension vs " +
                                      std::to_string(pairs) + " (substitution, term) pairs");
      }
    }
  }

  if (!rep.ok()) return checked_fail<CwF>(rep);
  return checked_ok(std::move(c));
}

Checked<NaturalModel> validate_natmod(const NaturalModel& raw) {
  ValidationReport rep;
  Checked<FinCategory> vbase = validate_category(raw.base);
  if (!vbase.ok()) {
    absorb(rep, vbase.report, "InvalidBase", "base");
    return checked_fail<NaturalModel>(rep);
  }
  NaturalModel n;
  n.base = *vbase;
  n.TyP = raw.TyP;
  n.TyP.base = n.base;
  n.TmP = raw.TmP;
  n.TmP.base = n.base;
  Checked<FinPresheaf> vty = validate_presheaf(n.TyP);
  Checked<FinPresheaf> vtm = validate_presheaf(n.TmP);
  if (!vty.ok()) absorb(rep, vty.report, "InvalidTy", "TyP");
  if (!vtm.ok()) absorb(rep, vtm.report, "InvalidTm", "TmP");
  if (!rep.ok()) return checked_fail<NaturalModel>(rep);
  n.TyP = *vty;
  n.TmP = *vtm;

  PresheafMap q;
  q.src = n.TmP;
  q.dst = n.TyP;
  q.components = raw.p.components;
  Checked<PresheafMap> vq = validate_presheaf_map(q);
  if (!vq.ok()) {
    absorb(rep, vq.report, "InvalidPresheafMap", "p");
    return checked_fail<NaturalModel>(rep);
  }
  n.p = *vq;
  n.chosen_reps = raw.chosen_reps;

  for (const auto& [k, obj] : n.chosen_reps) {
    if (!n.TyP.has_elem(k.first, k.second))
      rep.add("DanglingRef", "chosen representation for unknown (" + k.first + ", " + k.second + ")");
    if (!n.base.has_object(obj))
      rep.add("DanglingRef", "chosen representation names unknown object " + obj);
  }
  if (!rep.ok()) return checked_fail<NaturalModel>(rep);

  for (const auto& G : n.base.objects) {
    for (const auto& A : n.TyP.elems(G)) {
      PresheafMap cls = yoneda_map(n.TyP, G, A);
      PresheafPullback pb = presheaf_pullback(cls, n.p);
      std::optional<Representation> r = is_representable(pb.apex);
      if (!r) {
        rep.add("NotRepresentable", "fiber of p over (" + G + ", " + A + ")");
        continue;
      }
      auto it = n.chosen_reps.find({G, A});
      if (it != n.chosen_reps.end() && !n.base.objects_isomorphic(it->second, r->obj))
        rep.add("NotRepresentable", "chosen context " + it->second + " for (" + G + ", " + A +
                                        ") is not isomorphic to the representing object " + r->obj);
    }
  }

  if (!rep.ok()) return checked_fail<NaturalModel>(rep);
  return checked_ok(std::move(n));
}

Checked<ContextualCategory> validate_cxlcat(const ContextualCategory& raw) {
  ValidationReport rep;
  Checked<FinCategory> vbase = validate_category(raw.base);
  if (!vbase.ok()) {
    absorb(rep, vbase.report, "InvalidBase", "base");
    return checked_fail<ContextualCategory>(rep);
  }
  ContextualCategory x;
  x.base = *vbase;
  x.root = raw.root;
  x.parent = raw.parent;
  x.proj = raw.proj;
  x.chosen_pb = raw.chosen_pb;
  const FinCategory& c = x.base;

  if (!c.has_object(x.root)) {
    rep.add("DanglingRef", "root " + x.root + " is not an object");
    return checked_fail<ContextualCategory>(rep);
  }
  for (const auto& o : c.objects) {
    const std::size_t n = c.hom(o, x.root).size();
    if (n != 1)
      rep.add("RootNotTerminal", "hom(" + o + ", " + x.root + ") has " + std::to_string(n) + " maps");
  }

  if (x.parent.count(x.root)) rep.add("NotATree", "root has a parent");
  for (const auto& [o, par] : x.parent)
    if (!c.has_object(o) || !c.has_object(par))
      rep.add("DanglingRef", "parent entry (" + o + ", " + par + ") names unknown objects");
  for (const auto& o : c.objects) {
    if (o == x.root) continue;
    if (!x.parent.count(o)) {
      rep.add("NotATree", o + " has no parent");
      continue;
    }
    std::set<ObjId> seen{o};
    ObjId cur = o;
    bool reached = false;
    while (true) {
      auto it = x.parent.find(cur);
      if (it == x.parent.end()) {
        reached = (cur == x.root);
        break;
      }
      cur = it->second;
      if (!c.has_object(cur) || !seen.insert(cur).second) break;
    }
    if (!reached) rep.add("NotATree", "ancestor chain of " + o + " does not reach the root");
  }

  for (const auto& o : c.objects) {
    if (o == x.root || !x.parent.count(o)) continue;
    auto it = x.proj.find(o);
    if (it == x.proj.end()) {
      rep.add("MissingEntry", "no projection for " + o);
      continue;
    }
    if (!c.has_mor(it->second)) {
      rep.add("DanglingRef", "projection of " + o + " names unknown morphism " + it->second);
      continue;
    }
    const Mor& pm = c.mor(it->second);
    if (pm.src != o || pm.dst != x.parent.at(o))
      rep.add("EndpointMismatch",
              "projection of " + o + " is " + pm.id + ": " + pm.src + " -> " + pm.dst);
  }
  if (!rep.ok()) return checked_fail<ContextualCategory>(rep);

  for (const auto& [key, sq] : x.chosen_pb) {
    const auto& [f, X] = key;
    const std::string where = "chosen pullback of " + X + " along " + f;
    if (!c.has_mor(f) || !c.has_object(X) || !x.parent.count(X) ||
        c.mor(f).dst != x.parent.at(X)) {
      rep.add("DanglingRef", where + ": key is not (map into the parent, non-root context)");
      continue;
    }
    if (!c.has_object(sq.obj) || !c.has_mor(sq.top)) {
      rep.add("DanglingRef", where + ": square names unknown ids");
      continue;
    }
    if (c.is_identity(f)) {
      if (sq.obj != X || sq.top != c.id_of(X))
        rep.add("StrictFunctorialityFailure",
                where + ": identity must pull back to (" + X + ", " + c.id_of(X) + "), got (" +
                    sq.obj + ", " + sq.top + ")");
      continue;
    }
    auto pit = x.parent.find(sq.obj);
    if (pit == x.parent.end() || pit->second != c.mor(f).src) {
      rep.add("EndpointMismatch", where + ": context " + sq.obj + " does not sit over " + c.mor(f).src);
      continue;
    }
    const Mor& top = c.mor(sq.top);
    if (top.src != sq.obj || top.dst != X) {
      rep.add("EndpointMismatch", where + ": top map " + sq.top + " has wrong endpoints");
      continue;
    }
    if (!is_pullback_cone(c, f, x.proj.at(X), Cone{sq.obj, x.proj.at(sq.obj), sq.top}))
      rep.add("SquareNotPullback", where);
  }

  for (const auto& o : c.objects) {
    if (o == x.root) continue;
    const ObjId& par = x.parent.at(o);
    for (const auto& fm : c.morphisms) {
      if (fm.dst != par) continue;
      if (!x.chosen_pb.count({fm.id, o}))
        rep.add("PullbackMissing", "no chosen pullback of " + o + " along " + fm.id);
    }
  }

  // Composite strictness wherever both sides were supplied; gaps are already
  // reported above.
  for (const auto& [key, sq] : x.chosen_pb) {
    const auto& [f, X] = key;
    if (!c.has_mor(f) || !x.parent.count(X) || c.mor(f).dst != x.parent.at(X)) continue;
    if (!c.has_object(sq.obj) || !c.has_mor(sq.top)) continue;
    if (c.mor(sq.top).src != sq.obj || c.mor(sq.top).dst != X) continue;
    for (const auto& gm : c.morphisms) {
      if (gm.dst != c.mor(f).src) continue;
      auto comp = x.chosen_pb.find({c.compose(f, gm.id), X});
      auto inner = x.chosen_pb.find({gm.id, sq.obj});
      if (comp == x.chosen_pb.end() || inner == x.chosen_pb.end()) continue;
      if (!c.has_mor(inner->second.top) || !c.has_mor(comp->second.top)) continue;
      if (c.mor(inner->second.top).dst != sq.obj) continue;
      if (comp->second.obj != inner->second.obj ||
          comp->second.top != c.compose(sq.top, inner->second.top))
        rep.add("StrictFunctorialityFailure",
                "pullback of " + X + " along " + c.compose(f, gm.id) +
                    " disagrees with the two-step pullback through " + sq.obj);
    }
  }

  if (!rep.ok()) return checked_fail<ContextualCategory>(rep);
  return checked_ok(std::move(x));
}

}  // namespace compcat
