#include "tensorloc/monoidal.hpp"

#include <array>

namespace tensorloc {

void SmcStructure::set_tensor_obj(Obj a, Obj b, Obj ab) {
  if (a < 0 || b < 0 || ab < 0 || a >= base_->object_count() ||
      b >= base_->object_count() || ab >= base_->object_count())
    throw MalformedTable("tensor_obj entry references unknown object");
  auto [it, fresh] = tensor_obj_.emplace(key(a, b), ab);
  if (!fresh && it->second != ab)
    throw MalformedTable("conflicting tensor_obj entries for (" +
                         base_->object_name(a) + ", " + base_->object_name(b) + ")");
}

void SmcStructure::set_tensor_mor(Mor f, Mor g, Mor fg) {
  Obj d = tensor_obj(base_->dom(f), base_->dom(g));
  Obj c = tensor_obj(base_->cod(f), base_->cod(g));
  if (d == kNoObj || c == kNoObj || base_->dom(fg) != d || base_->cod(fg) != c)
    throw MalformedTable("tensor_mor entry (" + base_->morphism_name(f) + ", " +
                         base_->morphism_name(g) + ") has wrong endpoints");
  auto [it, fresh] = tensor_mor_.emplace(key(f, g), fg);
  if (!fresh && it->second != fg)
    throw MalformedTable("conflicting tensor_mor entries for (" +
                         base_->morphism_name(f) + ", " + base_->morphism_name(g) + ")");
}

void SmcStructure::set_symmetry(Obj a, Obj b, Mor s) {
  Obj ab = tensor_obj(a, b), ba = tensor_obj(b, a);
  if (ab == kNoObj || ba == kNoObj || base_->dom(s) != ab || base_->cod(s) != ba)
    throw MalformedTable("symmetry entry (" + base_->object_name(a) + ", " +
                         base_->object_name(b) + ") has wrong endpoints");
  symmetry_[key(a, b)] = s;
}

Obj SmcStructure::tensor_obj(Obj a, Obj b) const {
  auto it = tensor_obj_.find(key(a, b));
  return it == tensor_obj_.end() ? kNoObj : it->second;
}

Mor SmcStructure::tensor_mor(Mor f, Mor g) const {
  auto it = tensor_mor_.find(key(f, g));
  return it == tensor_mor_.end() ? kNoMor : it->second;
}

Mor SmcStructure::symmetry(Obj a, Obj b) const {
  auto it = symmetry_.find(key(a, b));
  return it == symmetry_.end() ? kNoMor : it->second;
}

Obj SmcStructure::require_tensor_obj(Obj a, Obj b) const {
  Obj r = tensor_obj(a, b);
  if (r == kNoObj)
    throw MalformedTable("tensor_obj(" + base_->object_name(a) + ", " +
                         base_->object_name(b) + ") is not materialized");
  return r;
}

Mor SmcStructure::require_tensor_mor(Mor f, Mor g) const {
  Mor r = tensor_mor(f, g);
  if (r == kNoMor)
    throw MalformedTable("tensor_mor(" + base_->morphism_name(f) + ", " +
                         base_->morphism_name(g) + ") is not materialized");
  return r;
}

Mor SmcStructure::require_symmetry(Obj a, Obj b) const {
  Mor r = symmetry(a, b);
  if (r == kNoMor)
    throw MalformedTable("symmetry(" + base_->object_name(a) + ", " +
                         base_->object_name(b) + ") is not materialized");
  return r;
}

Mor SmcStructure::tensor_mor_right(Mor f, Obj b) const {
  return tensor_mor(f, base_->identity(b));
}

Mor SmcStructure::tensor_mor_left(Obj a, Mor g) const {
  return tensor_mor(base_->identity(a), g);
}

Obj SmcStructure::tensor_word(std::span<const Obj> objects) const {
  if (objects.empty()) throw MalformedTable("tensor_word of empty list");
  Obj acc = objects[0];
  for (std::size_t i = 1; i < objects.size(); ++i)
    acc = require_tensor_obj(acc, objects[i]);
  return acc;
}

Mor SmcStructure::tensor_word_mor(std::span<const Mor> mors) const {
  if (mors.empty()) throw MalformedTable("tensor_word_mor of empty list");
  Mor acc = mors[0];
  for (std::size_t i = 1; i < mors.size(); ++i)
    acc = require_tensor_mor(acc, mors[i]);
  return acc;
}

ValidationReport SmcStructure::validate() const {
  ValidationReport rep;
  const FinCategory& c = *base_;
  const bool frag = c.is_fragment();
  const int n = c.object_count();
  if (unit_ == kNoObj) {
    rep.fail("smc/unit", "no unit object");
    return rep;
  }

  // strict unitality on objects
  for (Obj a = 0; a < n; ++a) {
    Obj l = tensor_obj(unit_, a), r = tensor_obj(a, unit_);
    if (l == kNoObj || r == kNoObj)
      frag ? rep.skip("smc/unit-obj")
           : rep.fail("smc/unit-obj",
                      "missing unit tensor for '" + c.object_name(a) + "'");
    else if (l != a || r != a)
      rep.fail("smc/unit-obj", "I⊗A or A⊗I differs from A at '" +
                                   c.object_name(a) + "'");
    else
      rep.pass("smc/unit-obj");
  }
  // strict unitality on morphisms
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Mor l = tensor_mor(c.identity(unit_), f), r = tensor_mor(f, c.identity(unit_));
    if (l == kNoMor || r == kNoMor)
      frag ? rep.skip("smc/unit-mor")
           : rep.fail("smc/unit-mor", "missing unit tensor for " + c.describe(f));
    else if (l != f || r != f)
      rep.fail("smc/unit-mor", "id_I⊗f or f⊗id_I differs from f at " + c.describe(f));
    else
      rep.pass("smc/unit-mor");
  }
  // strict associativity on objects over materialized entries
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      Obj ab = tensor_obj(a, b);
      if (ab == kNoObj) {
        if (!frag) rep.fail("smc/assoc-obj", "tensor_obj missing at (" +
                                                 c.object_name(a) + ", " +
                                                 c.object_name(b) + ")");
        continue;
      }
      for (Obj d = 0; d < n; ++d) {
        Obj bc = tensor_obj(b, d);
        Obj lhs = tensor_obj(ab, d);
        Obj rhs = bc == kNoObj ? kNoObj : tensor_obj(a, bc);
        if (lhs == kNoObj || rhs == kNoObj) {
          frag ? rep.skip("smc/assoc-obj")
               : rep.fail("smc/assoc-obj", "tensor_obj not total at (" +
                                               c.object_name(a) + ", " +
                                               c.object_name(b) + ", " +
                                               c.object_name(d) + ")");
          continue;
        }
        if (lhs != rhs)
          rep.fail("smc/assoc-obj", "(A⊗B)⊗C ≠ A⊗(B⊗C) at (" + c.object_name(a) +
                                        ", " + c.object_name(b) + ", " +
                                        c.object_name(d) + ")");
        else
          rep.pass("smc/assoc-obj");
      }
    }
  // id⊗id = id over materialized pairs
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      Obj ab = tensor_obj(a, b);
      if (ab == kNoObj) continue;
      Mor t = tensor_mor(c.identity(a), c.identity(b));
      if (t == kNoMor) {
        frag ? rep.skip("smc/id-tensor")
             : rep.fail("smc/id-tensor", "id⊗id missing at (" + c.object_name(a) +
                                             ", " + c.object_name(b) + ")");
      } else if (t != c.identity(ab)) {
        rep.fail("smc/id-tensor", "id⊗id ≠ id at (" + c.object_name(a) + ", " +
                                      c.object_name(b) + ")");
      } else {
        rep.pass("smc/id-tensor");
      }
    }

  // bifunctoriality over materialized tensor entries, bucketed by middle pair
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> by_dom_pair;
  for (const auto& [k, fg] : tensor_mor_) {
    Mor f = static_cast<Mor>(k >> 32), g = static_cast<Mor>(k & 0xffffffffu);
    by_dom_pair[key(c.dom(f), c.dom(g))].push_back(k);
    (void)fg;
  }
  for (const auto& [k1, t1] : tensor_mor_) {
    Mor f = static_cast<Mor>(k1 >> 32), g = static_cast<Mor>(k1 & 0xffffffffu);
    auto it = by_dom_pair.find(key(c.cod(f), c.cod(g)));
    if (it == by_dom_pair.end()) continue;
    for (std::uint64_t k2 : it->second) {
      Mor f2 = static_cast<Mor>(k2 >> 32), g2 = static_cast<Mor>(k2 & 0xffffffffu);
      Mor t2 = tensor_mor_.at(k2);
      Mor comp_f = c.compose_or_none(f2, f), comp_g = c.compose_or_none(g2, g);
      if (comp_f == kNoMor || comp_g == kNoMor) {
        rep.skip("smc/bifunctor");
        continue;
      }
      Mor lhs = c.compose_or_none(t2, t1);
      Mor rhs = tensor_mor(comp_f, comp_g);
      if (lhs == kNoMor || rhs == kNoMor) {
        rep.skip("smc/bifunctor");
        continue;
      }
      if (lhs != rhs)
        rep.fail("smc/bifunctor",
                 "(f'⊗g')∘(f⊗g) ≠ (f'∘f)⊗(g'∘g) for f=" + c.morphism_name(f) +
                     " g=" + c.morphism_name(g) + " f'=" + c.morphism_name(f2) +
                     " g'=" + c.morphism_name(g2));
      else
        rep.pass("smc/bifunctor");
    }
  }

  // symmetry: presence, self-inverse, naturality, strict hexagon
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      if (tensor_obj(a, b) == kNoObj) continue;
      Mor s = symmetry(a, b), si = symmetry(b, a);
      if (s == kNoMor || si == kNoMor) {
        frag ? rep.skip("smc/symmetry-inverse")
             : rep.fail("smc/symmetry-inverse",
                        "missing symmetry at (" + c.object_name(a) + ", " +
                            c.object_name(b) + ")");
        continue;
      }
      Mor round = c.compose_or_none(si, s);
      if (round == kNoMor)
        rep.skip("smc/symmetry-inverse");
      else if (round != c.identity(tensor_obj(a, b)))
        rep.fail("smc/symmetry-inverse", "σ_{B,A}∘σ_{A,B} ≠ id at (" +
                                             c.object_name(a) + ", " +
                                             c.object_name(b) + ")");
      else
        rep.pass("smc/symmetry-inverse");
    }
  for (const auto& [k1, t1] : tensor_mor_) {
    Mor f = static_cast<Mor>(k1 >> 32), g = static_cast<Mor>(k1 & 0xffffffffu);
    Mor s_dom = symmetry(c.dom(f), c.dom(g));
    Mor s_cod = symmetry(c.cod(f), c.cod(g));
    Mor gf = tensor_mor(g, f);
    if (s_dom == kNoMor || s_cod == kNoMor || gf == kNoMor) {
      rep.skip("smc/symmetry-natural");
      continue;
    }
    Mor lhs = c.compose_or_none(s_cod, t1);
    Mor rhs = c.compose_or_none(gf, s_dom);
    if (lhs == kNoMor || rhs == kNoMor) {
      rep.skip("smc/symmetry-natural");
    } else if (lhs != rhs) {
      rep.fail("smc/symmetry-natural",
               "σ∘(f⊗g) ≠ (g⊗f)∘σ for pair (" + c.morphism_name(f) + ", " +
                   c.morphism_name(g) + ")");
    } else {
      rep.pass("smc/symmetry-natural");
    }
  }
  // strict hexagon: σ_{A,B⊗C} = (B ⊗ σ_{A,C}) ∘ (σ_{A,B} ⊗ C)
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj d = 0; d < n; ++d) {
        Obj bc = tensor_obj(b, d);
        if (bc == kNoObj || tensor_obj(a, bc) == kNoObj) {
          continue;
        }
        Mor lhs = symmetry(a, bc);
        Mor sab = symmetry(a, b), sac = symmetry(a, d);
        if (lhs == kNoMor || sab == kNoMor || sac == kNoMor) {
          rep.skip("smc/hexagon");
          continue;
        }
        Mor leg1 = tensor_mor(sab, c.identity(d));
        Mor leg2 = tensor_mor(c.identity(b), sac);
        if (leg1 == kNoMor || leg2 == kNoMor) {
          rep.skip("smc/hexagon");
          continue;
        }
        Mor rhs = c.compose_or_none(leg2, leg1);
        if (rhs == kNoMor)
          rep.skip("smc/hexagon");
        else if (lhs != rhs)
          rep.fail("smc/hexagon", "strict hexagon fails at (" + c.object_name(a) +
                                      ", " + c.object_name(b) + ", " +
                                      c.object_name(d) + ")");
        else
          rep.pass("smc/hexagon");
      }
  return rep;
}

bool check_monoid(const SmcStructure& s, const MonoidObject& m) {
  const FinCategory& c = s.base();
  Obj mm = s.tensor_obj(m.carrier, m.carrier);
  if (mm == kNoObj)
    throw TypeMismatch("monoid carrier square is not materialized");
  if (c.dom(m.mult) != mm || c.cod(m.mult) != m.carrier)
    throw TypeMismatch("monoid multiplication has wrong endpoints");
  if (c.dom(m.unit_mor) != s.unit() || c.cod(m.unit_mor) != m.carrier)
    throw TypeMismatch("monoid unit has wrong endpoints");

  // associativity: mult ∘ (mult ⊗ M) = mult ∘ (M ⊗ mult)
  Mor mult_m = s.tensor_mor(m.mult, c.identity(m.carrier));
  Mor m_mult = s.tensor_mor(c.identity(m.carrier), m.mult);
  if (mult_m == kNoMor || m_mult == kNoMor)
    throw TypeMismatch("monoid associativity tensors are not materialized");
  if (c.compose(m.mult, mult_m) != c.compose(m.mult, m_mult)) return false;

  // unit laws: mult ∘ (unit ⊗ M) = id = mult ∘ (M ⊗ unit), strict unitors
  Mor u_m = s.tensor_mor(m.unit_mor, c.identity(m.carrier));
  Mor m_u = s.tensor_mor(c.identity(m.carrier), m.unit_mor);
  if (u_m == kNoMor || m_u == kNoMor)
    throw TypeMismatch("monoid unit tensors are not materialized");
  if (c.compose(m.mult, u_m) != c.identity(m.carrier)) return false;
  if (c.compose(m.mult, m_u) != c.identity(m.carrier)) return false;
  return true;
}

}  // namespace tensorloc
