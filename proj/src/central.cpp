#include "tensorloc/central.hpp"

#include <algorithm>
#include <numeric>

namespace tensorloc {

bool SemilatticeTable::has_all_joins() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (join[i][j] < 0) return false;
  return true;
}

std::optional<SemilatticeTable> SemilatticeTable::poset_from_leq(
    int n, const std::vector<std::vector<bool>>& leq) {
  SemilatticeTable t;
  t.n = n;
  t.leq = leq;
  t.meet.assign(n, std::vector<int>(n, -1));
  t.join.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    if (!leq[i][i]) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      if (leq[i][j] && leq[j][i] && i != j) return std::nullopt;
      for (int k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) return std::nullopt;
    }
  }
  for (int i = 0; i < n; ++i) {
    bool top = true;
    for (int j = 0; j < n; ++j) top = top && leq[j][i];
    if (top) t.top = i;
    bool bottom = true;
    for (int j = 0; j < n; ++j) bottom = bottom && leq[i][j];
    if (bottom) t.bottom = i;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (!leq[k][i] || !leq[k][j]) continue;
        bool greatest = true;
        for (int l = 0; l < n; ++l)
          if (leq[l][i] && leq[l][j] && !leq[l][k]) greatest = false;
        if (greatest) {
          t.meet[i][j] = k;
          break;
        }
      }
      for (int k = 0; k < n; ++k) {
        if (!leq[i][k] || !leq[j][k]) continue;
        bool least = true;
        for (int l = 0; l < n; ++l)
          if (leq[i][l] && leq[j][l] && !leq[k][l]) least = false;
        if (least) {
          t.join[i][j] = k;
          break;
        }
      }
    }
  return t;
}

std::optional<SemilatticeTable> SemilatticeTable::from_leq(
    int n, const std::vector<std::vector<bool>>& leq) {
  auto t = poset_from_leq(n, leq);
  if (!t || t->top < 0) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t->meet[i][j] < 0) return std::nullopt;
  return t;
}

bool SemilatticeTable::order_isomorphic_to(const SemilatticeTable& other) const {
  if (n != other.n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (leq[i][j] != other.leq[perm[i]][perm[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<Mor> central_idempotent_witness(const SmcStructure& s, Mor u) {
  const FinCategory& c = s.base();
  if (c.cod(u) != s.unit()) return std::nullopt;
  Obj U = c.dom(u);
  Obj UU = s.tensor_obj(U, U);
  if (UU == kNoObj) return std::nullopt;
  Mor right = s.tensor_mor(c.identity(U), u);  // U ⊗ u : U⊗U -> U
  Mor left = s.tensor_mor(u, c.identity(U));   // u ⊗ U : U⊗U -> U
  if (right == kNoMor || left == kNoMor) return std::nullopt;
  if (right != left) return std::nullopt;  // strict ρ∘(U⊗u) = λ∘(u⊗U)
  for (Mor w : c.hom(U, UU)) {
    if (c.compose_or_none(right, w) == c.identity(U) &&
        c.compose_or_none(w, right) == c.identity(UU))
      return w;
  }
  return std::nullopt;
}

namespace {

// Isomorphism m : U -> V with u = v ∘ m, if any.
Mor identification_witness(const SmcStructure& s, Obj U, Mor u, Obj V, Mor v,
                           int* count = nullptr) {
  const FinCategory& c = s.base();
  Mor found = kNoMor;
  for (Mor m : c.hom(U, V)) {
    if (c.compose_or_none(v, m) != u) continue;
    for (Mor mi : c.hom(V, U)) {
      if (c.compose_or_none(mi, m) == c.identity(U) &&
          c.compose_or_none(m, mi) == c.identity(V)) {
        if (count) ++*count;
        if (found == kNoMor) found = m;
        break;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<CentralIdempotent> enumerate_central_idempotents(const SmcStructure& s) {
  const FinCategory& c = s.base();
  std::vector<CentralIdempotent> all;
  for (Obj U = 0; U < c.object_count(); ++U)
    for (Mor u : c.hom(U, s.unit()))
      if (auto w = central_idempotent_witness(s, u))
        all.push_back({U, u, *w});

  std::vector<int> cls(all.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next++;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (cls[j] >= 0) continue;
      if (identification_witness(s, all[i].dom, all[i].mor, all[j].dom,
                                 all[j].mor) != kNoMor)
        cls[j] = cls[i];
    }
  }
  std::vector<CentralIdempotent> reps(next);
  std::vector<bool> seen(next, false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    int k = cls[i];
    if (!seen[k]) {
      seen[k] = true;
      reps[k] = all[i];
      continue;
    }
    const auto& cur = reps[k];
    const std::string& cn = c.object_name(cur.dom);
    const std::string& in = c.object_name(all[i].dom);
    if (in < cn ||
        (in == cn && c.morphism_name(all[i].mor) < c.morphism_name(cur.mor)))
      reps[k] = all[i];
  }
  std::sort(reps.begin(), reps.end(),
            [&](const CentralIdempotent& a, const CentralIdempotent& b) {
              if (c.object_name(a.dom) != c.object_name(b.dom))
                return c.object_name(a.dom) < c.object_name(b.dom);
              return c.morphism_name(a.mor) < c.morphism_name(b.mor);
            });
  return reps;
}

int ZiSemilattice::class_of(const SmcStructure& s, Obj dom, Mor mor) const {
  for (int i = 0; i < size(); ++i) {
    if (elements[i].dom == dom && elements[i].mor == mor) return i;
    if (identification_witness(s, dom, mor, elements[i].dom, elements[i].mor) !=
        kNoMor)
      return i;
  }
  return -1;
}

ZiSemilattice zi_semilattice(const SmcStructure& s) {
  const FinCategory& c = s.base();
  ZiSemilattice zi;
  zi.elements = enumerate_central_idempotents(s);
  const int n = zi.size();
  zi.leq_witness.assign(n, std::vector<Mor>(n, kNoMor));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // u ≤ v iff u = v∘m for some m; invertibility not required here
      for (Mor m : c.hom(zi.elements[i].dom, zi.elements[j].dom)) {
        if (c.compose_or_none(zi.elements[j].mor, m) == zi.elements[i].mor) {
          zi.leq_witness[i][j] = m;
          leq[i][j] = true;
          break;
        }
      }
    }
  auto table = SemilatticeTable::from_leq(n, leq);
  if (!table)
    throw MalformedTable("central idempotents do not form a meet-semilattice");
  zi.table = std::move(*table);

  // λ_I ∘ (u⊗v) must land in the order-meet's identification class
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mor uv = s.tensor_mor(zi.elements[i].mor, zi.elements[j].mor);
      if (uv == kNoMor) {
        zi.notes.push_back("meet tensor not materialized for (" +
                           c.object_name(zi.elements[i].dom) + ", " +
                           c.object_name(zi.elements[j].dom) + ")");
        continue;
      }
      int cls = zi.class_of(s, c.dom(uv), uv);
      if (cls != zi.table.meet[i][j])
        throw MalformedTable("λ_I∘(u⊗v) disagrees with the order meet at (" +
                             c.object_name(zi.elements[i].dom) + ", " +
                             c.object_name(zi.elements[j].dom) + ")");
    }

  int top_cls = zi.class_of(s, s.unit(), c.identity(s.unit()));
  if (top_cls != zi.table.top)
    throw MalformedTable("identity on I is not the top central idempotent");

  for (int i = 0; i < n; ++i) {
    int count = 0;
    identification_witness(s, zi.elements[i].dom, zi.elements[i].mor,
                           zi.elements[i].dom, zi.elements[i].mor, &count);
    if (count > 1)
      zi.notes.push_back("identification witness for " +
                         c.object_name(zi.elements[i].dom) + " is not unique (" +
                         std::to_string(count) + " automorphism witnesses)");
  }
  return zi;
}

namespace {

// Stiffness square for (A, u, v):
//   A⊗U⊗V --(A⊗u⊗V)--> A⊗V
//      |                  |
//  (A⊗U⊗v)            (A⊗v)
//      v                  v
//    A⊗U  --(A⊗u)-->     A
struct StiffSquare {
  bool materialized = false;
  Square sq;
};

StiffSquare stiffness_square(const SmcStructure& s, const ZiSemilattice& zi,
                             Obj a, int ui, int vi) {
  const FinCategory& c = s.base();
  StiffSquare r;
  const auto& u = zi.elements[ui];
  const auto& v = zi.elements[vi];
  Obj AU = s.tensor_obj(a, u.dom);
  Obj AV = s.tensor_obj(a, v.dom);
  if (AU == kNoObj || AV == kNoObj || s.tensor_obj(AU, v.dom) == kNoObj)
    return r;
  Mor au = s.tensor_mor(c.identity(a), u.mor);
  if (au == kNoMor) return r;
  Mor top = s.tensor_mor(au, c.identity(v.dom));
  Mor left = s.tensor_mor(c.identity(AU), v.mor);
  Mor right = s.tensor_mor(c.identity(a), v.mor);
  if (top == kNoMor || left == kNoMor || right == kNoMor) return r;
  r.materialized = true;
  r.sq = Square{.top = top, .left = left, .bottom = au, .right = right};
  return r;
}

}  // namespace

StiffnessReport is_stiff(const SmcStructure& s, const ZiSemilattice& zi) {
  const FinCategory& c = s.base();
  for (Obj a = 0; a < c.object_count(); ++a)
    for (int ui = 0; ui < zi.size(); ++ui)
      for (int vi = 0; vi < zi.size(); ++vi) {
        StiffSquare sq = stiffness_square(s, zi, a, ui, vi);
        if (!sq.materialized) continue;
        bool ok = false;
        std::string why;
        try {
          ok = is_pullback(c, sq.sq);
        } catch (const NonCommutingSquare& e) {
          why = e.what();
        }
        if (!ok)
          return {false, "stiffness square fails at (A=" + c.object_name(a) +
                             ", u=" + c.object_name(zi.elements[ui].dom) +
                             ", v=" + c.object_name(zi.elements[vi].dom) + ")" +
                             (why.empty() ? "" : ": " + why)};
      }
  return {true, ""};
}

UniversalJoinsReport has_universal_joins(const SmcStructure& s,
                                         const ZiSemilattice& zi) {
  const FinCategory& c = s.base();
  Obj zero = kNoObj;
  for (Obj z = 0; z < c.object_count(); ++z) {
    bool initial = true;
    for (Obj x = 0; x < c.object_count() && initial; ++x)
      initial = c.hom(z, x).size() == 1;
    if (initial) {
      zero = z;
      break;
    }
  }
  if (zero == kNoObj) return {false, "no initial object"};
  for (Obj a = 0; a < c.object_count(); ++a) {
    Obj az = s.tensor_obj(a, zero), za = s.tensor_obj(zero, a);
    if (az != zero || za != zero)
      return {false, "tensor with the initial object is not absorbing at '" +
                         c.object_name(a) + "'"};
  }
  if (!zi.table.bottom) return {false, "ZI has no bottom element"};
  if (!zi.table.has_all_joins()) return {false, "ZI lacks binary joins"};

  for (Obj a = 0; a < c.object_count(); ++a)
    for (int ui = 0; ui < zi.size(); ++ui)
      for (int vi = 0; vi < zi.size(); ++vi) {
        int ji = zi.table.join[ui][vi];
        const auto& u = zi.elements[ui];
        const auto& v = zi.elements[vi];
        const auto& j = zi.elements[ji];
        Obj AU = s.tensor_obj(a, u.dom);
        Obj AV = s.tensor_obj(a, v.dom);
        Obj AJ = s.tensor_obj(a, j.dom);
        if (AU == kNoObj || AV == kNoObj || AJ == kNoObj ||
            s.tensor_obj(AU, v.dom) == kNoObj)
          continue;
        Mor au = s.tensor_mor(c.identity(a), u.mor);
        if (au == kNoMor) continue;
        Mor top = s.tensor_mor(au, c.identity(v.dom));
        Mor left = s.tensor_mor(c.identity(AU), v.mor);
        if (top == kNoMor || left == kNoMor) continue;
        bool found = false;
        for (Mor mu : c.hom(u.dom, j.dom)) {
          if (c.compose_or_none(j.mor, mu) != u.mor) continue;
          for (Mor mv : c.hom(v.dom, j.dom)) {
            if (c.compose_or_none(j.mor, mv) != v.mor) continue;
            Mor bottom = s.tensor_mor(c.identity(a), mu);
            Mor right = s.tensor_mor(c.identity(a), mv);
            if (bottom == kNoMor || right == kNoMor) continue;
            Square sq{.top = top, .left = left, .bottom = bottom,
                      .right = right};
            try {
              if (is_pullback(c, sq) && is_pushout(c, sq)) {
                found = true;
                break;
              }
            } catch (const NonCommutingSquare&) {
            }
          }
          if (found) break;
        }
        if (!found)
          return {false, "join square is not a pullback+pushout at (A=" +
                             c.object_name(a) + ", u=" + c.object_name(u.dom) +
                             ", v=" + c.object_name(v.dom) + ")"};
      }
  return {true, ""};
}

bool is_local(const ZiSemilattice& zi) {
  const int top = zi.table.top;
  for (int i = 0; i < zi.size(); ++i)
    for (int j = 0; j < zi.size(); ++j) {
      int jj = zi.table.join[i][j];
      if (jj == top && i != top && j != top) return false;
    }
  return true;
}

std::vector<int> meet_prime_points(const ZiSemilattice& zi) {
  std::vector<int> points;
  for (int w = 0; w < zi.size(); ++w) {
    if (zi.table.bottom && *zi.table.bottom == w && zi.size() > 1) continue;
    bool prime = true;
    for (int i = 0; i < zi.size() && prime; ++i)
      for (int j = 0; j < zi.size() && prime; ++j) {
        int jj = zi.table.join[i][j];
        if (jj < 0) continue;
        if (zi.table.le(w, jj) && !zi.table.le(w, i) && !zi.table.le(w, j))
          prime = false;
      }
    if (prime) points.push_back(w);
  }
  return points;
}

FunctorCategoryZi functor_category_zi(const FinCategory& index,
                                      const SmcStructure& target,
                                      const ZiSemilattice& target_zi) {
  (void)target;
  FunctorCategoryZi out;
  out.target_zi = &target_zi;
  const int k = index.object_count();
  const int n = target_zi.size();
  std::vector<int> assign(k, 0);
  while (true) {
    bool ok = true;
    for (Mor f = 0; f < index.morphism_count() && ok; ++f)
      if (!target_zi.table.le(assign[index.dom(f)], assign[index.cod(f)]))
        ok = false;
    if (ok) out.functors.push_back(assign);
    int pos = k - 1;
    while (pos >= 0 && assign[pos] == n - 1) assign[pos--] = 0;
    if (pos < 0) break;
    assign[pos]++;
  }
  const int m = static_cast<int>(out.functors.size());
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool le = true;
      for (int a = 0; a < k && le; ++a)
        le = target_zi.table.le(out.functors[i][a], out.functors[j][a]);
      leq[i][j] = le;
    }
  auto table = SemilatticeTable::from_leq(m, leq);
  if (!table)
    throw MalformedTable("pointwise functor order is not a meet-semilattice");
  out.table = std::move(*table);
  return out;
}

}  // namespace tensorloc
