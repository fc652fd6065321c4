#include "tensorloc/category.hpp"

#include <algorithm>
#include <array>

namespace tensorloc {

Obj FinCategory::add_object(std::string name) {
  if (finalized_) throw MalformedTable("add_object after finalize");
  if (object_index_.count(name))
    throw MalformedTable("duplicate object id '" + name + "'");
  Obj a = static_cast<Obj>(objects_.size());
  object_index_.emplace(name, a);
  objects_.push_back(std::move(name));
  identity_.push_back(kNoMor);
  return a;
}

Mor FinCategory::add_morphism(std::string name, Obj dom, Obj cod) {
  if (finalized_) throw MalformedTable("add_morphism after finalize");
  if (dom < 0 || dom >= object_count() || cod < 0 || cod >= object_count())
    throw MalformedTable("morphism '" + name + "' references unknown object");
  if (morphism_index_.count(name))
    throw MalformedTable("duplicate morphism id '" + name + "'");
  Mor f = static_cast<Mor>(mors_.size());
  morphism_index_.emplace(name, f);
  mors_.push_back({std::move(name), dom, cod});
  return f;
}

void FinCategory::set_identity(Obj a, Mor f) {
  if (f < 0 || f >= morphism_count() || a < 0 || a >= object_count())
    throw MalformedTable("set_identity references unknown id");
  if (mors_[f].dom != a || mors_[f].cod != a)
    throw MalformedTable("identity of '" + objects_[a] + "' is not an endomorphism");
  identity_[a] = f;
}

void FinCategory::set_compose(Mor g, Mor f, Mor gf) {
  if (finalized_) throw MalformedTable("set_compose after finalize");
  if (g < 0 || g >= morphism_count() || f < 0 || f >= morphism_count() ||
      gf < 0 || gf >= morphism_count())
    throw MalformedTable("compose entry references unknown morphism id");
  if (!composable(g, f))
    throw MalformedTable("compose entry (" + mors_[g].name + ", " + mors_[f].name +
                         ") is not a composable pair");
  if (mors_[gf].dom != mors_[f].dom || mors_[gf].cod != mors_[g].cod)
    throw MalformedTable("composite '" + mors_[gf].name + "' of (" + mors_[g].name +
                         ", " + mors_[f].name + ") has wrong endpoints");
  pending_compose_.push_back({g, f, gf});
}

void FinCategory::finalize() {
  if (finalized_) return;
  hom_pos_.assign(mors_.size(), 0);
  from_.assign(objects_.size(), {});
  into_.assign(objects_.size(), {});
  for (Mor f = 0; f < morphism_count(); ++f) {
    auto& h = hom_[pair_key(mors_[f].dom, mors_[f].cod)];
    hom_pos_[f] = static_cast<std::int32_t>(h.size());
    h.push_back(f);
    from_[mors_[f].dom].push_back(f);
    into_[mors_[f].cod].push_back(f);
  }
  for (const auto& [g, f, gf] : pending_compose_) {
    Obj a = mors_[f].dom, b = mors_[f].cod, c = mors_[g].cod;
    auto& block = blocks_[triple_key(a, b, c)];
    const std::size_t w = hom_.at(pair_key(a, b)).size();
    if (block.empty()) block.assign(w * hom_.at(pair_key(b, c)).size(), kNoMor);
    Mor& cell = block[static_cast<std::size_t>(hom_pos_[g]) * w + hom_pos_[f]];
    if (cell != kNoMor && cell != gf)
      throw MalformedTable("conflicting compose entries for (" + mors_[g].name +
                           ", " + mors_[f].name + ")");
    cell = gf;
  }
  pending_compose_.clear();
  pending_compose_.shrink_to_fit();
  finalized_ = true;
}

Obj FinCategory::object_by_name(const std::string& name) const {
  auto it = object_index_.find(name);
  return it == object_index_.end() ? kNoObj : it->second;
}

Mor FinCategory::morphism_by_name(const std::string& name) const {
  auto it = morphism_index_.find(name);
  return it == morphism_index_.end() ? kNoMor : it->second;
}

Mor FinCategory::identity(Obj a) const {
  Mor f = identity_.at(a);
  if (f == kNoMor)
    throw MalformedTable("object '" + objects_[a] + "' has no identity");
  return f;
}

Mor FinCategory::compose_or_none(Mor g, Mor f) const {
  if (!finalized_) throw MalformedTable("compose before finalize");
  if (!composable(g, f))
    throw NotComposable("cannot compose " + describe(g) + " after " + describe(f));
  auto it = blocks_.find(triple_key(mors_[f].dom, mors_[f].cod, mors_[g].cod));
  if (it == blocks_.end()) return kNoMor;
  const std::size_t w = hom_.at(pair_key(mors_[f].dom, mors_[f].cod)).size();
  return it->second[static_cast<std::size_t>(hom_pos_[g]) * w + hom_pos_[f]];
}

Mor FinCategory::compose(Mor g, Mor f) const {
  Mor gf = compose_or_none(g, f);
  if (gf == kNoMor)
    throw MalformedTable("missing composite for composable pair (" +
                         mors_[g].name + ", " + mors_[f].name + ")");
  return gf;
}

Mor FinCategory::compose_path(std::span<const Mor> path) const {
  if (path.empty()) throw NotComposable("empty path");
  Mor acc = path[0];
  for (std::size_t i = 1; i < path.size(); ++i) acc = compose(path[i], acc);
  return acc;
}

const std::vector<Mor>& FinCategory::hom(Obj a, Obj b) const {
  static const std::vector<Mor> empty;
  auto it = hom_.find(pair_key(a, b));
  return it == hom_.end() ? empty : it->second;
}

const std::vector<Mor>& FinCategory::morphisms_from(Obj a) const {
  return from_.at(a);
}

const std::vector<Mor>& FinCategory::morphisms_into(Obj b) const {
  return into_.at(b);
}

std::string FinCategory::describe(Mor f) const {
  if (f == kNoMor) return "<none>";
  return mors_[f].name + ": " + objects_[mors_[f].dom] + " -> " +
         objects_[mors_[f].cod];
}

ValidationReport FinCategory::validate() const {
  ValidationReport rep;
  if (!finalized_) {
    rep.fail("finalized", "category not finalized");
    return rep;
  }
  for (Obj a = 0; a < object_count(); ++a) {
    if (identity_[a] == kNoMor)
      fragment_ ? rep.skip("identity/present")
                : rep.fail("identity/present",
                           "object '" + objects_[a] + "' has no identity");
    else
      rep.pass("identity/present");
  }
  // identity neutrality
  for (Mor f = 0; f < morphism_count(); ++f) {
    Obj a = mors_[f].dom, b = mors_[f].cod;
    if (identity_[a] != kNoMor) {
      Mor r = compose_or_none(f, identity_[a]);
      if (r == kNoMor)
        fragment_ ? rep.skip("identity/right") :
            rep.fail("identity/right", "missing f∘id for " + describe(f));
      else if (r != f)
        rep.fail("identity/right", describe(f) + " ∘ id ≠ itself");
      else
        rep.pass("identity/right");
    }
    if (identity_[b] != kNoMor) {
      Mor l = compose_or_none(identity_[b], f);
      if (l == kNoMor)
        fragment_ ? rep.skip("identity/left") :
            rep.fail("identity/left", "missing id∘f for " + describe(f));
      else if (l != f)
        rep.fail("identity/left", "id ∘ " + describe(f) + " ≠ itself");
      else
        rep.pass("identity/left");
    }
  }
  // totality on composable pairs, typing of entries, associativity
  for (Mor f = 0; f < morphism_count(); ++f) {
    for (Mor g : from_[mors_[f].cod]) {
      Mor gf = compose_or_none(g, f);
      if (gf == kNoMor) {
        fragment_ ? rep.skip("compose/total") :
            rep.fail("compose/total", "missing composite (" + mors_[g].name +
                                          ", " + mors_[f].name + ")");
        continue;
      }
      rep.pass("compose/total");
      for (Mor h : from_[mors_[g].cod]) {
        Mor hg = compose_or_none(h, g);
        Mor h_gf = compose_or_none(h, gf);
        Mor hg_f = hg == kNoMor ? kNoMor : compose_or_none(hg, f);
        if (hg == kNoMor || h_gf == kNoMor || hg_f == kNoMor) {
          rep.skip("compose/assoc");
          continue;
        }
        if (h_gf != hg_f)
          rep.fail("compose/assoc",
                   "h∘(g∘f) ≠ (h∘g)∘f for triple (" + mors_[h].name + ", " +
                       mors_[g].name + ", " + mors_[f].name + ")");
        else
          rep.pass("compose/assoc");
      }
    }
  }
  return rep;
}

FinCategory FinCategory::opposite() const {
  FinCategory op;
  for (Obj a = 0; a < object_count(); ++a) op.add_object(objects_[a]);
  for (Mor f = 0; f < morphism_count(); ++f)
    op.add_morphism(mors_[f].name, mors_[f].cod, mors_[f].dom);
  for (Obj a = 0; a < object_count(); ++a)
    if (identity_[a] != kNoMor) op.set_identity(a, identity_[a]);
  if (fragment_) op.mark_fragment();
  for (Mor f = 0; f < morphism_count(); ++f)
    for (Mor g : from_[mors_[f].cod]) {
      Mor gf = compose_or_none(g, f);
      if (gf != kNoMor) op.set_compose(f, g, gf);
    }
  op.finalize();
  return op;
}

bool check_commutes(const FinCategory& c, std::span<const Mor> path1,
                    std::span<const Mor> path2) {
  Mor a = c.compose_path(path1);
  Mor b = c.compose_path(path2);
  if (c.dom(a) != c.dom(b) || c.cod(a) != c.cod(b))
    throw NotComposable("paths do not share endpoints");
  return a == b;
}

namespace {

void require_square(const FinCategory& c, const Square& s) {
  if (c.dom(s.top) != c.dom(s.left))
    throw NonCommutingSquare("square legs do not share an apex");
  if (c.dom(s.right) != c.cod(s.top) || c.dom(s.bottom) != c.cod(s.left) ||
      c.cod(s.right) != c.cod(s.bottom))
    throw NonCommutingSquare("square sides do not line up");
  if (c.compose(s.right, s.top) != c.compose(s.bottom, s.left))
    throw NonCommutingSquare("square does not commute");
}

}  // namespace

bool is_pullback(const FinCategory& c, const Square& s) {
  require_square(c, s);
  const Obj p = c.dom(s.top), a = c.cod(s.left), b = c.cod(s.top);
  for (Obj x = 0; x < c.object_count(); ++x) {
    // bucket hom(X,B) by composite with the right leg
    std::unordered_map<Mor, std::vector<Mor>> by_comp;
    for (Mor xb : c.hom(x, b)) by_comp[c.compose(s.right, xb)].push_back(xb);
    // bucket hom(X,P) by the pair of projections
    std::unordered_map<std::uint64_t, int> mediators;
    for (Mor m : c.hom(x, p)) {
      std::uint64_t key =
          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(
               c.compose(s.left, m)))
           << 32) |
          static_cast<std::uint32_t>(c.compose(s.top, m));
      mediators[key]++;
    }
    for (Mor xa : c.hom(x, a)) {
      auto it = by_comp.find(c.compose(s.bottom, xa));
      if (it == by_comp.end()) continue;
      for (Mor xb : it->second) {
        std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(xa)) << 32) |
            static_cast<std::uint32_t>(xb);
        auto m = mediators.find(key);
        if (m == mediators.end() || m->second != 1) return false;
      }
    }
  }
  return true;
}

bool is_pushout(const FinCategory& c, const Square& s) {
  // A pushout square is a pullback square in the opposite category.
  FinCategory op = c.opposite();
  return is_pullback(op, Square{.top = s.bottom, .left = s.right,
                                .bottom = s.top, .right = s.left});
}

Functor::Functor(const FinCategory* source, const FinCategory* target)
    : source_(source), target_(target) {
  obj_map_.assign(source_->object_count(), kNoObj);
  mor_map_.assign(source_->morphism_count(), kNoMor);
}

void Functor::map_object(Obj a, Obj fa) { obj_map_.at(a) = fa; }

void Functor::map_morphism(Mor f, Mor ff) { mor_map_.at(f) = ff; }

bool Functor::total() const {
  for (Obj a : obj_map_)
    if (a == kNoObj) return false;
  for (Mor f : mor_map_)
    if (f == kNoMor) return false;
  return true;
}

ValidationReport Functor::validate() const {
  ValidationReport rep;
  const FinCategory& s = *source_;
  const FinCategory& t = *target_;
  const bool frag = s.is_fragment() || t.is_fragment();
  for (Obj a = 0; a < s.object_count(); ++a) {
    if (obj_map_[a] == kNoObj) {
      frag ? rep.skip("functor/object-total")
           : rep.fail("functor/object-total",
                      "no image for object '" + s.object_name(a) + "'");
    } else {
      rep.pass("functor/object-total");
    }
  }
  for (Mor f = 0; f < s.morphism_count(); ++f) {
    if (mor_map_[f] == kNoMor) {
      frag ? rep.skip("functor/morphism-total")
           : rep.fail("functor/morphism-total",
                      "no image for morphism " + s.describe(f));
      continue;
    }
    Mor ff = mor_map_[f];
    if (obj_map_[s.dom(f)] == kNoObj || obj_map_[s.cod(f)] == kNoObj ||
        t.dom(ff) != obj_map_[s.dom(f)] || t.cod(ff) != obj_map_[s.cod(f)])
      rep.fail("functor/typing", "image of " + s.describe(f) + " has wrong endpoints");
    else
      rep.pass("functor/typing");
  }
  for (Obj a = 0; a < s.object_count(); ++a) {
    if (obj_map_[a] == kNoObj || !s.has_identity(a)) {
      rep.skip("functor/identity");
      continue;
    }
    Mor fid = mor_map_[s.identity(a)];
    if (fid == kNoMor) {
      rep.skip("functor/identity");
    } else if (!t.has_identity(obj_map_[a]) || fid != t.identity(obj_map_[a])) {
      rep.fail("functor/identity",
               "identity of '" + s.object_name(a) + "' not preserved");
    } else {
      rep.pass("functor/identity");
    }
  }
  for (Mor f = 0; f < s.morphism_count(); ++f) {
    if (mor_map_[f] == kNoMor) continue;
    for (Mor g : s.morphisms_from(s.cod(f))) {
      if (mor_map_[g] == kNoMor) continue;
      Mor gf = s.compose_or_none(g, f);
      if (gf == kNoMor || mor_map_[gf] == kNoMor) {
        rep.skip("functor/composition");
        continue;
      }
      Mor tgf = t.compose_or_none(mor_map_[g], mor_map_[f]);
      if (tgf == kNoMor) {
        rep.skip("functor/composition");
      } else if (tgf != mor_map_[gf]) {
        rep.fail("functor/composition",
                 "F(g∘f) ≠ F(g)∘F(f) for (" + s.morphism_name(g) + ", " +
                     s.morphism_name(f) + ")");
      } else {
        rep.pass("functor/composition");
      }
    }
  }
  return rep;
}

Functor Functor::identity(const FinCategory& c) {
  Functor f(&c, &c);
  for (Obj a = 0; a < c.object_count(); ++a) f.map_object(a, a);
  for (Mor m = 0; m < c.morphism_count(); ++m) f.map_morphism(m, m);
  return f;
}

Functor Functor::composed(const Functor& outer, const Functor& inner) {
  if (&inner.target() != &outer.source())
    throw TypeMismatch("functor composition endpoint mismatch");
  Functor r(&inner.source(), &outer.target());
  for (Obj a = 0; a < inner.source().object_count(); ++a) {
    Obj m = inner.on_object(a);
    r.map_object(a, m == kNoObj ? kNoObj : outer.on_object(m));
  }
  for (Mor f = 0; f < inner.source().morphism_count(); ++f) {
    Mor m = inner.on_morphism(f);
    r.map_morphism(f, m == kNoMor ? kNoMor : outer.on_morphism(m));
  }
  return r;
}

NatTransform::NatTransform(Functor source, Functor target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (&source_.source() != &target_.source() ||
      &source_.target() != &target_.target())
    throw TypeMismatch("natural transformation endpoints mismatch");
  components_.assign(source_.source().object_count(), kNoMor);
}

ValidationReport NatTransform::validate() const {
  ValidationReport rep;
  const FinCategory& c = source_.source();
  const FinCategory& d = source_.target();
  const bool frag = c.is_fragment() || d.is_fragment();
  for (Obj a = 0; a < c.object_count(); ++a) {
    if (components_[a] == kNoMor) {
      frag ? rep.skip("nat/component-total")
           : rep.fail("nat/component-total",
                      "no component at '" + c.object_name(a) + "'");
      continue;
    }
    if (!source_.defined_on_object(a) || !target_.defined_on_object(a)) {
      rep.skip("nat/typing");
      continue;
    }
    Mor comp = components_[a];
    if (d.dom(comp) != source_.on_object(a) || d.cod(comp) != target_.on_object(a))
      rep.fail("nat/typing", "component at '" + c.object_name(a) +
                                 "' has wrong endpoints");
    else
      rep.pass("nat/typing");
  }
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    Obj a = c.dom(f), b = c.cod(f);
    if (components_[a] == kNoMor || components_[b] == kNoMor ||
        !source_.defined_on_morphism(f) || !target_.defined_on_morphism(f)) {
      rep.skip("nat/naturality");
      continue;
    }
    Mor lhs = d.compose_or_none(components_[b], source_.on_morphism(f));
    Mor rhs = d.compose_or_none(target_.on_morphism(f), components_[a]);
    if (lhs == kNoMor || rhs == kNoMor) {
      rep.skip("nat/naturality");
    } else if (lhs != rhs) {
      rep.fail("nat/naturality", "naturality square fails at " + c.describe(f));
    } else {
      rep.pass("nat/naturality");
    }
  }
  return rep;
}

}  // namespace tensorloc
