#include "doctest.h"

#include <vector>

#include "tensorloc/localisable.hpp"
#include "tensorloc/zoo.hpp"

using namespace tensorloc;

namespace {

MonadData identity_monad(const FinCategory& c) {
  MonadData m(&c);
  m.carrier = Functor::identity(c);
  for (Obj a = 0; a < c.object_count(); ++a) {
    m.unit[a] = c.identity(a);
    m.mult[a] = c.identity(a);
  }
  return m;
}

StrengthFamily identity_strength(const SmcStructure& s, const ZiSemilattice& zi,
                                 const MonadData& m) {
  const FinCategory& c = s.base();
  StrengthFamily str(c.object_count(), zi.size());
  for (Obj a = 0; a < c.object_count(); ++a)
    for (int u = 0; u < zi.size(); ++u) {
      Obj ta = m.carrier.on_object(a);
      if (ta == kNoObj) continue;
      Obj dom = s.tensor_obj(ta, zi.elements[u].dom);
      Obj au = s.tensor_obj(a, zi.elements[u].dom);
      Obj cod = au == kNoObj ? kNoObj : m.carrier.on_object(au);
      if (dom == kNoObj || cod == kNoObj || dom != cod) continue;
      str.set(a, u, c.identity(dom));
    }
  return str;
}

}  // namespace

TEST_CASE("identity monad with identity strength passes all six axioms") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::chain(3));
  auto zi = zi_semilattice(lat.smc);
  MonadData m = identity_monad(lat.category());
  StrengthFamily str = identity_strength(lat.smc, zi, m);
  auto rep = check_localisable(lat.smc, zi, m, str);
  CHECK(rep.ok());
  for (const auto& ax : rep.axioms) CHECK(ax.checked > 0);
}

TEST_CASE("constant-top closure is localisable on the chain") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  auto zi = zi_semilattice(lat.smc);
  std::vector<int> cl{2, 2, 2};  // ū = 1 everywhere
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  auto s = strength_from_closure(lat.smc, zi, m);
  REQUIRE(std::holds_alternative<StrengthFamily>(s));
  auto rep = check_localisable(lat.smc, zi, m, std::get<StrengthFamily>(s));
  CHECK(rep.ok());
}

TEST_CASE("identity closure is localisable") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  auto zi = zi_semilattice(lat.smc);
  std::vector<int> cl{0, 1, 2};
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  auto s = strength_from_closure(lat.smc, zi, m);
  REQUIRE(std::holds_alternative<StrengthFamily>(s));
  CHECK(check_localisable(lat.smc, zi, m, std::get<StrengthFamily>(s)).ok());
}

TEST_CASE("the powerset topological closure fails the criterion at ({1},{2})") {
  auto spec = zoo::SemilatticeSpec::powerset(2);
  auto lat = zoo::build_semilattice_category(spec);
  auto zi = zi_semilattice(lat.smc);
  auto idx = [&](const std::string& n) {
    for (int i = 0; i < spec.size(); ++i)
      if (spec.elements[i] == n) return i;
    return -1;
  };
  std::vector<int> cl(4);
  cl[idx("s00")] = idx("s00");
  cl[idx("s10")] = idx("s11");
  cl[idx("s01")] = idx("s01");
  cl[idx("s11")] = idx("s11");
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  auto s = strength_from_closure(lat.smc, zi, m);
  REQUIRE(std::holds_alternative<std::pair<int, int>>(s));
  auto [ui, vi] = std::get<std::pair<int, int>>(s);
  const FinCategory& c = lat.category();
  CHECK(c.object_name(zi.elements[ui].dom) == "s10");
  CHECK(c.object_name(zi.elements[vi].dom) == "s01");
}

TEST_CASE("check_localisable catches the criterion failure directly") {
  // feed the non-localisable closure a maximal partial strength table: the
  // missing entries make the would-be failing instances checkable via eq (5)
  // transports; the checker reports the failure or the absence
  auto spec = zoo::SemilatticeSpec::powerset(2);
  auto lat = zoo::build_semilattice_category(spec);
  auto zi = zi_semilattice(lat.smc);
  auto idx = [&](const std::string& n) {
    for (int i = 0; i < spec.size(); ++i)
      if (spec.elements[i] == n) return i;
    return -1;
  };
  std::vector<int> cl(4);
  cl[idx("s00")] = idx("s00");
  cl[idx("s10")] = idx("s11");
  cl[idx("s01")] = idx("s01");
  cl[idx("s11")] = idx("s11");
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  const FinCategory& c = lat.category();
  StrengthFamily str(c.object_count(), zi.size());
  for (Obj a = 0; a < c.object_count(); ++a)
    for (int u = 0; u < zi.size(); ++u) {
      Obj ta = m.carrier.on_object(a);
      Obj dom = lat.smc.tensor_obj(ta, zi.elements[u].dom);
      Obj au = lat.smc.tensor_obj(a, zi.elements[u].dom);
      Obj cod = m.carrier.on_object(au);
      const auto& h = c.hom(dom, cod);
      if (h.size() == 1) str.set(a, u, h[0]);
    }
  auto rep = check_localisable(lat.smc, zi, m, str);
  // the strength table cannot be total here, so instances are skipped; a
  // total table is impossible exactly because the criterion fails
  std::int64_t skipped = 0;
  for (const auto& ax : rep.axioms) skipped += ax.skipped;
  CHECK(skipped > 0);
}

TEST_CASE("restricted monad of the chain closure is its downset restriction") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  auto zi = zi_semilattice(lat.smc);
  std::vector<int> cl{2, 2, 2};
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  auto sv = strength_from_closure(lat.smc, zi, m);
  auto lm = make_localisable(lat.smc, zi, std::move(m),
                             std::get<StrengthFamily>(sv));
  REQUIRE(lm.report.ok());

  const FinCategory& c = lat.category();
  int mid = -1;
  for (int i = 0; i < zi.size(); ++i)
    if (c.object_name(zi.elements[i].dom) == "c1") mid = i;
  REQUIRE(mid >= 0);
  auto ca = build_restriction(lat.smc, zi.elements[mid]);
  MonadData tu = restrict_monad(lm, mid, ca);
  auto rep = check_monad(tu);
  CHECK(rep.ok());
  // object action is still the closure
  for (Obj a = 0; a < ca.cat().object_count(); ++a)
    CHECK(tu.carrier.on_object(a) == cl[a]);

  // u = 1: T|1 = T up to the C|1 ≅ C identification
  int top = zi.top();
  auto c1 = build_restriction(lat.smc, zi.elements[top]);
  MonadData t1 = restrict_monad(lm, top, c1);
  CHECK(check_monad(t1).ok());
  for (Obj a = 0; a < c1.cat().object_count(); ++a)
    CHECK(t1.carrier.on_object(a) == lm.monad.carrier.on_object(a));
}

TEST_CASE("restriction monad morphisms validate for a ≤ 1 on the chain") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  auto zi = zi_semilattice(lat.smc);
  std::vector<int> cl{2, 2, 2};
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  auto sv = strength_from_closure(lat.smc, zi, m);
  auto lm = make_localisable(lat.smc, zi, std::move(m),
                             std::get<StrengthFamily>(sv));
  const FinCategory& c = lat.category();
  int mid = -1;
  for (int i = 0; i < zi.size(); ++i)
    if (c.object_name(zi.elements[i].dom) == "c1") mid = i;
  int top = zi.top();
  auto ca = build_restriction(lat.smc, zi.elements[mid]);
  auto c1 = build_restriction(lat.smc, zi.elements[top]);
  MonadData tu = restrict_monad(lm, mid, ca);
  MonadData tv = restrict_monad(lm, top, c1);
  auto adj = build_adjunction(lat.smc, ca, c1, zi.leq_witness[mid][top]);
  auto mm = restriction_monad_morphism(lm, mid, top, ca, c1, tu, tv, adj);
  CHECK(check_monad_morphism(mm.lax));
  CHECK(check_monad_morphism(mm.oplax));
  CHECK(mm.localisable_square_ok);

  // u = v: identity-like morphisms
  auto adj_id = build_adjunction(lat.smc, c1, c1, zi.leq_witness[top][top]);
  auto mm_id =
      restriction_monad_morphism(lm, top, top, c1, c1, tv, tv, adj_id);
  CHECK(check_monad_morphism(mm_id.lax));
  CHECK(check_monad_morphism(mm_id.oplax));
}

TEST_CASE("lax restriction morphisms compose along u ≤ v ≤ w") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  auto zi = zi_semilattice(lat.smc);
  std::vector<int> cl{0, 2, 2};
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  auto sv = strength_from_closure(lat.smc, zi, m);
  REQUIRE(std::holds_alternative<StrengthFamily>(sv));
  auto lm = make_localisable(lat.smc, zi, std::move(m),
                             std::get<StrengthFamily>(sv));
  REQUIRE(lm.report.ok());
  const FinCategory& c = lat.category();
  int bot = -1, mid = -1, top = zi.top();
  for (int i = 0; i < zi.size(); ++i) {
    auto n = c.object_name(zi.elements[i].dom);
    if (n == "c0") bot = i;
    if (n == "c1") mid = i;
  }
  auto cb = build_restriction(lat.smc, zi.elements[bot]);
  auto ca = build_restriction(lat.smc, zi.elements[mid]);
  auto c1 = build_restriction(lat.smc, zi.elements[top]);
  MonadData tb = restrict_monad(lm, bot, cb);
  MonadData ta = restrict_monad(lm, mid, ca);
  MonadData t1 = restrict_monad(lm, top, c1);
  Mor m_ba = zi.leq_witness[bot][mid];
  Mor m_a1 = zi.leq_witness[mid][top];
  Mor m_b1 = c.compose(m_a1, m_ba);
  auto adj_ba = build_adjunction(lat.smc, cb, ca, m_ba);
  auto adj_a1 = build_adjunction(lat.smc, ca, c1, m_a1);
  auto adj_b1 = build_adjunction(lat.smc, cb, c1, m_b1);
  auto mm_ba = restriction_monad_morphism(lm, bot, mid, cb, ca, tb, ta, adj_ba);
  auto mm_a1 = restriction_monad_morphism(lm, mid, top, ca, c1, ta, t1, adj_a1);
  auto mm_b1 = restriction_monad_morphism(lm, bot, top, cb, c1, tb, t1, adj_b1);
  MonadMorphism composite = compose_monad_morphisms(mm_ba.lax, mm_a1.lax);
  CHECK(composite.functor.equal_tables(mm_b1.lax.functor));
  CHECK(composite.transform == mm_b1.lax.transform);
}

TEST_CASE("stalks collapse to the least open containing the point") {
  auto spec = zoo::SemilatticeSpec::chain(3);
  auto lat = zoo::build_semilattice_category(spec);
  auto zi = zi_semilattice(lat.smc);
  std::vector<int> cl{0, 2, 2};
  MonadData m = zoo::build_closure_monad(lat, spec, cl);
  auto sv = strength_from_closure(lat.smc, zi, m);
  auto lm = make_localisable(lat.smc, zi, std::move(m),
                             std::get<StrengthFamily>(sv));

  std::vector<RestrictionCategory> rs;
  std::vector<MonadData> ms;
  for (int i = 0; i < zi.size(); ++i) {
    rs.push_back(build_restriction(lat.smc, zi.elements[i]));
    ms.push_back(restrict_monad(lm, i, rs.back()));
  }
  auto points = meet_prime_points(zi);
  REQUIRE(points.size() == 2);
  for (int p : points) {
    auto stalk = stalk_monad(lm, p, rs, ms);
    CHECK(stalk.least_open == p);
    CHECK(stalk.monad.equal_tables(ms[p]));
    CHECK(stalk.opens.size() == stalk.into_stalk.size());
    for (const auto& mor : stalk.into_stalk) CHECK(check_monad_morphism(mor));
  }
}

TEST_CASE("commutativity holds for the identity monad") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::powerset(2));
  auto zi = zi_semilattice(lat.smc);
  MonadData m = identity_monad(lat.category());
  StrengthFamily str = identity_strength(lat.smc, zi, m);
  auto lm = make_localisable(lat.smc, zi, std::move(m), std::move(str));
  REQUIRE(lm.report.ok());
  auto comm = check_commutative(lm);
  CHECK(comm.commutative);
}
