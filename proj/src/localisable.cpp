#include "tensorloc/localisable.hpp"

#include <algorithm>

namespace tensorloc {

std::string AxiomReport::summary() const {
  std::string s;
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (i) s += "; ";
    s += "eq" + std::to_string(i + 1) + ": ";
    if (!axioms[i].passed())
      s += "FAIL (" + axioms[i].first_failure + ")";
    else
      s += "ok";
    if (axioms[i].strictified) s += " [strictified]";
  }
  return s;
}

namespace {

// Strength at an arbitrary identification-class member (udom, umor),
// transported from the class representative along an identification witness.
Mor strength_at_member(const SmcStructure& s, const ZiSemilattice& zi,
                       const MonadData& m, const StrengthFamily& str, Obj a,
                       int cls, Obj udom, Mor umor) {
  const FinCategory& c = s.base();
  const auto& rep = zi.elements[cls];
  Mor base = str.at(a, cls);
  if (base == kNoMor) return kNoMor;
  if (rep.dom == udom && rep.mor == umor) return base;
  for (Mor w : c.hom(udom, rep.dom)) {
    if (c.compose_or_none(rep.mor, w) != umor) continue;
    Mor winv = kNoMor;
    for (Mor x : c.hom(rep.dom, udom))
      if (c.compose_or_none(x, w) == c.identity(udom) &&
          c.compose_or_none(w, x) == c.identity(rep.dom)) {
        winv = x;
        break;
      }
    if (winv == kNoMor) continue;
    Obj ta = m.carrier.on_object(a);
    if (ta == kNoObj) return kNoMor;
    Mor push = s.tensor_mor(c.identity(ta), w);  // T(A)⊗member -> T(A)⊗rep
    Mor back = s.tensor_mor(c.identity(a), winv);
    Mor pull = back == kNoMor ? kNoMor : m.carrier.on_morphism(back);
    if (push == kNoMor || pull == kNoMor) return kNoMor;
    Mor mid = c.compose_or_none(base, push);
    return mid == kNoMor ? kNoMor : c.compose_or_none(pull, mid);
  }
  return kNoMor;
}

void record(AxiomStatus& st, bool ok, const std::string& instance) {
  st.checked++;
  if (!ok && st.first_failure.empty()) st.first_failure = instance;
}

}  // namespace

AxiomReport check_localisable(const SmcStructure& s, const ZiSemilattice& zi,
                              const MonadData& m, const StrengthFamily& str) {
  AxiomReport rep;
  const char* names[6] = {"unitor", "associator", "unit", "multiplication",
                          "natural-in-u", "natural-in-A"};
  for (int i = 0; i < 6; ++i) rep.axioms[i].name = names[i];
  rep.axioms[0].strictified = true;
  rep.axioms[1].strictified = true;

  const FinCategory& c = s.base();
  const int nz = zi.size();
  auto t_obj = [&](Obj a) { return a == kNoObj ? kNoObj : m.carrier.on_object(a); };
  auto t_mor = [&](Mor f) { return f == kNoMor ? kNoMor : m.carrier.on_morphism(f); };

  // typing of every materialized entry
  for (Obj a = 0; a < c.object_count(); ++a)
    for (int ui = 0; ui < nz; ++ui) {
      Mor e = str.at(a, ui);
      if (e == kNoMor) continue;
      Obj ta = t_obj(a);
      Obj au = s.tensor_obj(a, zi.elements[ui].dom);
      Obj tau = ta == kNoObj ? kNoObj : s.tensor_obj(ta, zi.elements[ui].dom);
      Obj t_au = au == kNoObj ? kNoObj : t_obj(au);
      if (tau == kNoObj || t_au == kNoObj || c.dom(e) != tau || c.cod(e) != t_au)
        throw IllTypedStrength("strength entry at (A=" + c.object_name(a) +
                               ", u=" + c.object_name(zi.elements[ui].dom) +
                               ") has wrong endpoints");
    }

  const int top = zi.top();
  // eq (1), strictified: str_{A,I} = id_{T(A)}
  for (Obj a = 0; a < c.object_count(); ++a) {
    Mor e = str.at(a, top);
    Obj ta = t_obj(a);
    if (e == kNoMor || ta == kNoObj) {
      rep.axioms[0].skipped++;
      continue;
    }
    record(rep.axioms[0], e == c.identity(ta), "A=" + c.object_name(a));
  }

  // eq (2), strictified: str_{A,U⊗V} = str_{A⊗U,V} ∘ (str_{A,U} ⊗ V)
  for (Obj a = 0; a < c.object_count(); ++a)
    for (int ui = 0; ui < nz; ++ui)
      for (int vi = 0; vi < nz; ++vi) {
        const auto& u = zi.elements[ui];
        const auto& v = zi.elements[vi];
        Obj uv = s.tensor_obj(u.dom, v.dom);
        Obj au = s.tensor_obj(a, u.dom);
        if (uv == kNoObj || au == kNoObj) {
          rep.axioms[1].skipped++;
          continue;
        }
        Mor uv_mor = s.tensor_mor(u.mor, v.mor);
        int cls = uv_mor == kNoMor ? -1 : zi.class_of(s, uv, uv_mor);
        if (cls < 0) {
          rep.axioms[1].skipped++;
          continue;
        }
        Mor lhs = strength_at_member(s, zi, m, str, a, cls, uv, uv_mor);
        Mor str_au_v = str.at(au, vi);
        Mor str_a_u = str.at(a, ui);
        if (lhs == kNoMor || str_au_v == kNoMor || str_a_u == kNoMor) {
          rep.axioms[1].skipped++;
          continue;
        }
        Mor leg = s.tensor_mor(str_a_u, c.identity(v.dom));
        Mor rhs = leg == kNoMor ? kNoMor : c.compose_or_none(str_au_v, leg);
        if (rhs == kNoMor) {
          rep.axioms[1].skipped++;
          continue;
        }
        record(rep.axioms[1], lhs == rhs,
               "A=" + c.object_name(a) + ", u=" + c.object_name(u.dom) +
                   ", v=" + c.object_name(v.dom));
      }

  // eq (3): η_{A⊗U} = str_{A,U} ∘ (η_A ⊗ U)
  for (Obj a = 0; a < c.object_count(); ++a)
    for (int ui = 0; ui < nz; ++ui) {
      const auto& u = zi.elements[ui];
      Obj au = s.tensor_obj(a, u.dom);
      Mor e = str.at(a, ui);
      if (au == kNoObj || e == kNoMor || m.unit[a] == kNoMor ||
          m.unit[au] == kNoMor) {
        rep.axioms[2].skipped++;
        continue;
      }
      Mor leg = s.tensor_mor(m.unit[a], c.identity(u.dom));
      Mor rhs = leg == kNoMor ? kNoMor : c.compose_or_none(e, leg);
      if (rhs == kNoMor) {
        rep.axioms[2].skipped++;
        continue;
      }
      record(rep.axioms[2], m.unit[au] == rhs,
             "A=" + c.object_name(a) + ", u=" + c.object_name(u.dom));
    }

  // eq (4): μ_{A⊗U} ∘ T(str_{A,U}) ∘ str_{T(A),U} = str_{A,U} ∘ (μ_A ⊗ U)
  for (Obj a = 0; a < c.object_count(); ++a)
    for (int ui = 0; ui < nz; ++ui) {
      const auto& u = zi.elements[ui];
      Obj au = s.tensor_obj(a, u.dom);
      Obj ta = t_obj(a);
      Mor e = str.at(a, ui);
      if (au == kNoObj || ta == kNoObj || e == kNoMor || m.mult[a] == kNoMor ||
          m.mult[au] == kNoMor) {
        rep.axioms[3].skipped++;
        continue;
      }
      Mor str_ta = str.at(ta, ui);
      Mor t_str = t_mor(e);
      if (str_ta == kNoMor || t_str == kNoMor) {
        rep.axioms[3].skipped++;
        continue;
      }
      Mor lhs = c.compose_or_none(t_str, str_ta);
      lhs = lhs == kNoMor ? kNoMor : c.compose_or_none(m.mult[au], lhs);
      Mor leg = s.tensor_mor(m.mult[a], c.identity(u.dom));
      Mor rhs = leg == kNoMor ? kNoMor : c.compose_or_none(e, leg);
      if (lhs == kNoMor || rhs == kNoMor) {
        rep.axioms[3].skipped++;
        continue;
      }
      record(rep.axioms[3], lhs == rhs,
             "A=" + c.object_name(a) + ", u=" + c.object_name(u.dom));
    }

  // eq (5): str_{A,V} ∘ (T(A) ⊗ m) = T(A ⊗ m) ∘ str_{A,U}, all witnesses m
  for (Obj a = 0; a < c.object_count(); ++a) {
    Obj ta = t_obj(a);
    if (ta == kNoObj) {
      rep.axioms[4].skipped++;
      continue;
    }
    for (int ui = 0; ui < nz; ++ui)
      for (int vi = 0; vi < nz; ++vi) {
        const auto& u = zi.elements[ui];
        const auto& v = zi.elements[vi];
        for (Mor w : c.hom(u.dom, v.dom)) {
          if (c.compose_or_none(v.mor, w) != u.mor) continue;
          Mor str_u = str.at(a, ui);
          Mor str_v = str.at(a, vi);
          if (str_u == kNoMor || str_v == kNoMor) {
            rep.axioms[4].skipped++;
            continue;
          }
          Mor push = s.tensor_mor(c.identity(ta), w);
          Mor t_push = t_mor(s.tensor_mor(c.identity(a), w));
          if (push == kNoMor || t_push == kNoMor) {
            rep.axioms[4].skipped++;
            continue;
          }
          Mor lhs = c.compose_or_none(str_v, push);
          Mor rhs = c.compose_or_none(t_push, str_u);
          if (lhs == kNoMor || rhs == kNoMor) {
            rep.axioms[4].skipped++;
            continue;
          }
          record(rep.axioms[4], lhs == rhs,
                 "A=" + c.object_name(a) + ", u=" + c.object_name(u.dom) +
                     ", v=" + c.object_name(v.dom) + ", m=" + c.morphism_name(w));
        }
      }
  }

  // eq (6): str_{B,U} ∘ (T(f) ⊗ U) = T(f ⊗ U) ∘ str_{A,U} for all morphisms f
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Obj a = c.dom(f), b = c.cod(f);
    Mor tf = t_mor(f);
    if (tf == kNoMor) {
      rep.axioms[5].skipped++;
      continue;
    }
    for (int ui = 0; ui < nz; ++ui) {
      const auto& u = zi.elements[ui];
      Mor str_a = str.at(a, ui);
      Mor str_b = str.at(b, ui);
      if (str_a == kNoMor || str_b == kNoMor) {
        rep.axioms[5].skipped++;
        continue;
      }
      Mor push = s.tensor_mor(tf, c.identity(u.dom));
      Mor fu = s.tensor_mor(f, c.identity(u.dom));
      Mor t_fu = t_mor(fu);
      if (push == kNoMor || t_fu == kNoMor) {
        rep.axioms[5].skipped++;
        continue;
      }
      Mor lhs = c.compose_or_none(str_b, push);
      Mor rhs = c.compose_or_none(t_fu, str_a);
      if (lhs == kNoMor || rhs == kNoMor) {
        rep.axioms[5].skipped++;
        continue;
      }
      record(rep.axioms[5], lhs == rhs,
             "f=" + c.morphism_name(f) + ", u=" + c.object_name(u.dom));
    }
  }
  return rep;
}

LocalisableMonad make_localisable(const SmcStructure& s, const ZiSemilattice& zi,
                                  MonadData monad, StrengthFamily strength) {
  LocalisableMonad lm;
  lm.smc = &s;
  lm.zi = &zi;
  lm.monad = std::move(monad);
  lm.strength = std::move(strength);
  lm.report = check_localisable(s, zi, lm.monad, lm.strength);
  return lm;
}

std::variant<StrengthFamily, std::pair<int, int>> strength_from_closure(
    const SmcStructure& s, const ZiSemilattice& zi, const MonadData& closure) {
  const FinCategory& c = s.base();
  const int nz = zi.size();
  // criterion: closure(u) ∧ v ≤ closure(u ∧ v) for all u, v
  for (int ui = 0; ui < nz; ++ui)
    for (int vi = 0; vi < nz; ++vi) {
      Obj cu = closure.carrier.on_object(zi.elements[ui].dom);
      Obj uv = s.tensor_obj(zi.elements[ui].dom, zi.elements[vi].dom);
      Obj lhs = s.tensor_obj(cu, zi.elements[vi].dom);
      Obj rhs = closure.carrier.on_object(uv);
      if (c.hom(lhs, rhs).empty()) return std::make_pair(ui, vi);
    }
  StrengthFamily str(c.object_count(), nz);
  for (Obj a = 0; a < c.object_count(); ++a)
    for (int ui = 0; ui < nz; ++ui) {
      Obj ta = closure.carrier.on_object(a);
      Obj au = s.tensor_obj(a, zi.elements[ui].dom);
      Obj dom = s.tensor_obj(ta, zi.elements[ui].dom);
      Obj cod = closure.carrier.on_object(au);
      const auto& h = c.hom(dom, cod);
      if (h.size() != 1)
        throw MalformedTable("poset strength is not unique at (A=" +
                             c.object_name(a) + ", u=" +
                             c.object_name(zi.elements[ui].dom) + ")");
      str.set(a, ui, h[0]);
    }
  return str;
}

CommutativityResult check_commutative(const LocalisableMonad& lm) {
  const SmcStructure& s = *lm.smc;
  const ZiSemilattice& zi = *lm.zi;
  const FinCategory& c = s.base();
  const MonadData& m = lm.monad;
  for (Obj a = 0; a < c.object_count(); ++a)
    for (int ui = 0; ui < zi.size(); ++ui)
      for (int vi = 0; vi < zi.size(); ++vi) {
        const auto& u = zi.elements[ui];
        const auto& v = zi.elements[vi];
        Obj ta = m.carrier.on_object(a);
        Obj au = s.tensor_obj(a, u.dom);
        Obj av = s.tensor_obj(a, v.dom);
        if (ta == kNoObj || au == kNoObj || av == kNoObj) continue;
        Mor str_au = lm.strength.at(a, ui);
        Mor str_av = lm.strength.at(a, vi);
        Mor str_au_v = lm.strength.at(au, vi);
        Mor str_av_u = lm.strength.at(av, ui);
        if (str_au == kNoMor || str_av == kNoMor || str_au_v == kNoMor ||
            str_av_u == kNoMor)
          continue;
        Mor top1 = s.tensor_mor(str_au, c.identity(v.dom));
        if (top1 == kNoMor) continue;
        Mor top = c.compose_or_none(str_au_v, top1);
        Mor sw = s.symmetry(u.dom, v.dom);
        Mor sw_back = s.symmetry(v.dom, u.dom);
        if (sw == kNoMor || sw_back == kNoMor) continue;
        Mor b0 = s.tensor_mor(c.identity(ta), sw);
        Mor b1 = s.tensor_mor(str_av, c.identity(u.dom));
        Mor fix = s.tensor_mor(c.identity(a), sw_back);
        Mor t_fix = fix == kNoMor ? kNoMor : m.carrier.on_morphism(fix);
        if (b0 == kNoMor || b1 == kNoMor || t_fix == kNoMor) continue;
        Mor bot = c.compose_or_none(b1, b0);
        bot = bot == kNoMor ? kNoMor : c.compose_or_none(str_av_u, bot);
        bot = bot == kNoMor ? kNoMor : c.compose_or_none(t_fix, bot);
        if (top == kNoMor || bot == kNoMor) continue;
        if (top != bot)
          return {false, "A=" + c.object_name(a) + ", u=" + c.object_name(u.dom) +
                             ", v=" + c.object_name(v.dom)};
      }
  return {true, ""};
}

MonadData restrict_monad(const LocalisableMonad& lm, int u_index,
                         const RestrictionCategory& cu) {
  const SmcStructure& s = *lm.smc;
  const FinCategory& c = s.base();
  const FinCategory& d = cu.cat();
  const auto& u = lm.zi->elements[u_index];
  MonadData r(&d);
  for (Obj a = 0; a < d.object_count(); ++a) {
    Obj ta = lm.monad.carrier.on_object(a);
    if (ta != kNoObj) r.carrier.map_object(a, ta);
  }
  for (Mor f = 0; f < d.morphism_count(); ++f) {
    Obj a = d.dom(f), b = d.cod(f);
    Mor tf = lm.monad.carrier.on_morphism(cu.base_of[f]);
    Mor str = lm.strength.at(a, u_index);
    if (tf == kNoMor || str == kNoMor) continue;
    Mor base = c.compose_or_none(tf, str);
    if (base == kNoMor) continue;
    Obj ta = lm.monad.carrier.on_object(a);
    Obj tb = lm.monad.carrier.on_object(b);
    if (ta == kNoObj || tb == kNoObj) continue;
    Mor g = cu.restricted(ta, tb, base);
    if (g != kNoMor) r.carrier.map_morphism(f, g);
  }
  for (Obj a = 0; a < d.object_count(); ++a) {
    Obj ta = lm.monad.carrier.on_object(a);
    if (ta == kNoObj) continue;
    if (lm.monad.unit[a] != kNoMor) {
      Mor base = s.tensor_mor(lm.monad.unit[a], u.mor);
      if (base != kNoMor) {
        Mor g = cu.restricted(a, ta, base);
        if (g != kNoMor) r.unit[a] = g;
      }
    }
    Obj tta = lm.monad.carrier.on_object(ta);
    if (lm.monad.mult[a] != kNoMor && tta != kNoObj) {
      Mor base = s.tensor_mor(lm.monad.mult[a], u.mor);
      if (base != kNoMor) {
        Mor g = cu.restricted(tta, ta, base);
        if (g != kNoMor) r.mult[a] = g;
      }
    }
  }
  return r;
}

StrengthFamily restrict_strength(const LocalisableMonad& lm, int u_index,
                                 const RestrictionCategory& cu,
                                 const ZiSemilattice& zi_cu,
                                 const MonadData& tu) {
  const SmcStructure& s = *lm.smc;
  const FinCategory& c = s.base();
  const FinCategory& d = cu.cat();
  StrengthFamily out(d.object_count(), zi_cu.size());
  // str|u_{A,w} : T(A)⊗W -> T(A⊗W) in C|u. The C|u idempotent w has domain W
  // and base morphism w0 : W⊗U -> I, itself a base central idempotent. The
  // base strength at its class, followed by T(A⊗W⊗u), is the candidate:
  //   (T(A)⊗W)⊗U = T(A)⊗(W⊗U) --str--> T(A⊗W⊗U) --T(A⊗W⊗u)--> T(A⊗W)
  for (Obj a = 0; a < d.object_count(); ++a) {
    Obj ta = tu.carrier.on_object(a);
    if (ta == kNoObj) continue;
    for (int wi = 0; wi < zi_cu.size(); ++wi) {
      const auto& w = zi_cu.elements[wi];
      Obj wdom = w.dom;
      Mor w_base = cu.base_of[w.mor];
      Obj wu = s.tensor_obj(wdom, cu.u.dom);
      if (wu == kNoObj) continue;
      int base_cls = lm.zi->class_of(s, wu, w_base);
      if (base_cls < 0) continue;
      Mor str = strength_at_member(s, *lm.zi, lm.monad, lm.strength, a, base_cls,
                                   wu, w_base);
      if (str == kNoMor) continue;
      Obj aw = s.tensor_obj(a, wdom);
      if (aw == kNoObj) continue;
      Mor collapse = s.tensor_mor(c.identity(aw), cu.u.mor);  // A⊗W⊗U -> A⊗W
      Mor t_collapse = collapse == kNoMor ? kNoMor
                                          : lm.monad.carrier.on_morphism(collapse);
      if (t_collapse == kNoMor) continue;
      Mor base = c.compose_or_none(t_collapse, str);
      if (base == kNoMor) continue;
      Obj dom_obj = s.tensor_obj(ta, wdom);
      Obj cod_obj = lm.monad.carrier.on_object(aw);
      if (dom_obj == kNoObj || cod_obj == kNoObj) continue;
      Mor g = cu.restricted(dom_obj, cod_obj, base);
      if (g != kNoMor) out.set(a, wi, g);
    }
  }
  return out;
}

RestrictionMonadMorphisms restriction_monad_morphism(
    const LocalisableMonad& lm, int u_index, int v_index,
    const RestrictionCategory& cu, const RestrictionCategory& cv,
    const MonadData& tu, const MonadData& tv, const RestrictionFunctors& adj) {
  const SmcStructure& s = *lm.smc;
  const FinCategory& c = s.base();
  RestrictionMonadMorphisms out;

  // lax: lower : C|v -> C|u with φ_A = T(A)⊗u : T|u(A) -> T|v(A) in C|u
  out.lax.source = &tv;
  out.lax.target = &tu;
  out.lax.functor = adj.lower;
  out.lax.lax = true;
  const FinCategory& dv = cv.cat();
  out.lax.transform.assign(dv.object_count(), kNoMor);
  for (Obj a = 0; a < dv.object_count(); ++a) {
    Obj ta = lm.monad.carrier.on_object(a);
    if (ta == kNoObj) continue;
    Mor base = s.tensor_mor(c.identity(ta), lm.zi->elements[u_index].mor);
    if (base == kNoMor) continue;
    Mor g = cu.restricted(ta, ta, base);
    if (g != kNoMor) out.lax.transform[a] = g;
  }

  // oplax: upper : C|u -> C|v with ψ_A = str_{A,U} : T|u(A)⊗U -> T|v(A⊗U)
  out.oplax.source = &tu;
  out.oplax.target = &tv;
  out.oplax.functor = adj.upper;
  out.oplax.lax = false;
  const FinCategory& du = cu.cat();
  out.oplax.transform.assign(du.object_count(), kNoMor);
  for (Obj a = 0; a < du.object_count(); ++a) {
    Mor str = lm.strength.at(a, u_index);
    if (str == kNoMor) continue;
    Obj ta = lm.monad.carrier.on_object(a);
    Obj au = s.tensor_obj(a, lm.zi->elements[u_index].dom);
    if (ta == kNoObj || au == kNoObj) continue;
    Obj tau = s.tensor_obj(ta, lm.zi->elements[u_index].dom);
    Obj t_au = lm.monad.carrier.on_object(au);
    if (tau == kNoObj || t_au == kNoObj) continue;
    // embed str into C|v: precompose with (T(A)⊗U)⊗v
    Mor eat_v = s.tensor_mor(c.identity(tau), lm.zi->elements[v_index].mor);
    if (eat_v == kNoMor) continue;
    Mor base = c.compose_or_none(str, eat_v);
    if (base == kNoMor) continue;
    Mor g = cv.restricted(tau, t_au, base);
    if (g != kNoMor) out.oplax.transform[a] = g;
  }

  // morphism-of-localisable-monads square for the lax one, with the lower
  // functor's strict monoidal structure (θ identities):
  //   F(str^v_{A,W}) ∘ φ_{A⊗W} ... in strict form:
  //   φ_{A⊗W} ∘ str^u_{F A, F W} = F(str^v_{A,W}) ∘ (φ_A ⊗ W)
  // where F = lower is the identity on objects and θ = id.
  out.localisable_square_ok = true;
  {
    ZiSemilattice zi_v = zi_semilattice(cv.smc());
    StrengthFamily str_v = restrict_strength(lm, v_index, cv, zi_v, tv);
    ZiSemilattice zi_u = zi_semilattice(cu.smc());
    StrengthFamily str_u = restrict_strength(lm, u_index, cu, zi_u, tu);
    const FinCategory& ducat = cu.cat();
    for (Obj a = 0; a < dv.object_count() && out.localisable_square_ok; ++a)
      for (int wi = 0; wi < zi_v.size() && out.localisable_square_ok; ++wi) {
        // match the C|v idempotent w with a C|u idempotent along lower
        const auto& w = zi_v.elements[wi];
        Mor lowered = adj.lower.defined_on_morphism(w.mor)
                          ? adj.lower.on_morphism(w.mor)
                          : kNoMor;
        if (lowered == kNoMor) continue;
        int wi_u = zi_u.class_of(cu.smc(), w.dom, lowered);
        if (wi_u < 0) continue;
        Mor str_v_aw = str_v.at(a, wi);
        Mor phi_a = out.lax.transform[a];
        Obj aw = cv.smc().tensor_obj(a, w.dom);
        if (str_v_aw == kNoMor || phi_a == kNoMor || aw == kNoObj) continue;
        Mor phi_aw = out.lax.transform[aw];
        Mor str_u_aw = strength_at_member(cu.smc(), zi_u, tu, str_u, a, wi_u,
                                          w.dom, lowered);
        if (phi_aw == kNoMor || str_u_aw == kNoMor) continue;
        Mor f_strv = adj.lower.defined_on_morphism(str_v_aw)
                         ? adj.lower.on_morphism(str_v_aw)
                         : kNoMor;
        Mor phi_a_w = cu.smc().tensor_mor(phi_a, ducat.identity(w.dom));
        if (f_strv == kNoMor || phi_a_w == kNoMor) continue;
        Mor lhs = ducat.compose_or_none(phi_aw, str_u_aw);
        Mor rhs = ducat.compose_or_none(f_strv, phi_a_w);
        if (lhs == kNoMor || rhs == kNoMor) continue;
        if (lhs != rhs) {
          out.localisable_square_ok = false;
          out.detail = "localisable-morphism square fails at (A=" +
                       dv.object_name(a) + ", w=" + dv.object_name(w.dom) + ")";
        }
      }
  }
  return out;
}

StalkMonad stalk_monad(const LocalisableMonad& lm, int point_generator,
                       const std::vector<RestrictionCategory>& restrictions,
                       const std::vector<MonadData>& restricted_monads) {
  const ZiSemilattice& zi = *lm.zi;
  const SmcStructure& s = *lm.smc;
  const FinCategory& c = s.base();
  StalkMonad out;
  out.least_open = point_generator;
  out.monad = restricted_monads.at(point_generator);
  for (int u = 0; u < zi.size(); ++u)
    if (zi.leq(point_generator, u)) out.opens.push_back(u);
  for (int u : out.opens) {
    RestrictionFunctors adj = build_adjunction(
        s, restrictions.at(point_generator), restrictions.at(u),
        zi.leq_witness[point_generator][u]);
    MonadMorphism mm;
    mm.source = &restricted_monads.at(u);
    mm.target = &out.monad;
    mm.functor = adj.lower;
    mm.lax = true;
    const FinCategory& dx = restrictions.at(point_generator).cat();
    mm.transform.assign(restrictions.at(u).cat().object_count(), kNoMor);
    for (Obj a = 0; a < restrictions.at(u).cat().object_count(); ++a) {
      Obj ta = lm.monad.carrier.on_object(a);
      if (ta == kNoObj) continue;
      Mor base = s.tensor_mor(c.identity(ta), zi.elements[point_generator].mor);
      if (base == kNoMor) continue;
      Mor g = restrictions.at(point_generator).restricted(ta, ta, base);
      if (g != kNoMor) mm.transform[a] = g;
    }
    (void)dx;
    out.into_stalk.push_back(std::move(mm));
  }
  return out;
}

}  // namespace tensorloc
