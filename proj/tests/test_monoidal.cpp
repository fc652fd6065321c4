#include "doctest.h"

#include <vector>

#include "tensorloc/monoidal.hpp"
#include "tensorloc/zoo.hpp"

using namespace tensorloc;

namespace {

// Two parallel endomorphisms p, q on X with left-absorbing composition and a
// genuine swap on Y = X⊗X. Enough room to plant a non-natural symmetry.
SmcCategory two_endo_smc(bool natural_symmetry) {
  SmcCategory out;
  FinCategory& c = *out.cat;
  Obj I = c.add_object("I"), X = c.add_object("X"), Y = c.add_object("Y");
  Mor idI = c.add_morphism("idI", I, I);
  Mor idX = c.add_morphism("idX", X, X);
  Mor p = c.add_morphism("p", X, X);
  Mor q = c.add_morphism("q", X, X);
  Mor idY = c.add_morphism("idY", Y, Y);
  Mor rpp = c.add_morphism("rpp", Y, Y);
  Mor rpq = c.add_morphism("rpq", Y, Y);
  Mor rqp = c.add_morphism("rqp", Y, Y);
  Mor rqq = c.add_morphism("rqq", Y, Y);
  Mor s = c.add_morphism("s", Y, Y);
  c.set_identity(I, idI);
  c.set_identity(X, idX);
  c.set_identity(Y, idY);
  c.set_compose(idI, idI, idI);
  // End(X): left-zero on {p,q}
  for (Mor a : {idX, p, q})
    for (Mor b : {idX, p, q}) {
      Mor r = a == idX ? b : a;
      c.set_compose(a, b, r);
    }
  // End(Y): r__ absorbs on the left, swap s conjugates
  auto swap_of = [&](Mor r) {
    if (r == rpq) return rqp;
    if (r == rqp) return rpq;
    return r;
  };
  std::vector<Mor> endY{idY, rpp, rpq, rqp, rqq, s};
  for (Mor a : endY)
    for (Mor b : endY) {
      Mor r;
      if (a == idY) r = b;
      else if (b == idY) r = a;
      else if (a == s && b == s) r = idY;
      else if (a == s) r = swap_of(b);
      else r = a;  // r__ absorbs anything on its right
      c.set_compose(a, b, r);
    }
  c.mark_fragment();  // X⊗Y etc. not materialized
  c.finalize();

  SmcStructure& t = out.smc;
  t = SmcStructure(out.cat.get());
  t.set_unit(I);
  for (Obj a : {I, X, Y}) {
    t.set_tensor_obj(I, a, a);
    t.set_tensor_obj(a, I, a);
  }
  t.set_tensor_obj(X, X, Y);
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    t.set_tensor_mor(idI, f, f);
    if (f != idI) t.set_tensor_mor(f, idI, f);
  }
  auto rr = [&](Mor a, Mor b) {
    if (a == p) return b == p ? rpp : rpq;
    return b == p ? rqp : rqq;
  };
  for (Mor a : {p, q})
    for (Mor b : {p, q}) t.set_tensor_mor(a, b, rr(a, b));
  t.set_tensor_mor(idX, idX, idY);
  t.set_symmetry(I, I, idI);
  t.set_symmetry(I, X, idX);
  t.set_symmetry(X, I, idX);
  t.set_symmetry(I, Y, idY);
  t.set_symmetry(Y, I, idY);
  t.set_symmetry(X, X, natural_symmetry ? s : idY);
  return out;
}

}  // namespace

TEST_CASE("meet-semilattice category validates as a strict SMC") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::chain(3));
  CHECK(lat.category().validate().ok());
  auto rep = validate_smc(lat.smc);
  CHECK(rep.ok());
  CHECK(rep.total_skipped() == 0);
}

TEST_CASE("tensor_word folds strictly") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::chain(3));
  const FinCategory& c = lat.category();
  Obj bottom = c.object_by_name("c0"), a = c.object_by_name("c1"),
      top = c.object_by_name("c2");
  std::vector<Obj> single{a};
  CHECK(lat.smc.tensor_word(single) == a);
  std::vector<Obj> with_unit{top, a};
  CHECK(lat.smc.tensor_word(with_unit) == a);  // I⊗A = A, top is the unit
  std::vector<Obj> uv{a, bottom};
  CHECK(lat.smc.tensor_word(uv) == bottom);  // u⊗v = u∧v
}

TEST_CASE("2^2 lattice category validates") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::powerset(2));
  CHECK(lat.category().validate().ok());
  CHECK(lat.smc.validate().ok());
}

TEST_CASE("natural symmetry passes, planted non-natural symmetry is named") {
  auto good = two_endo_smc(true);
  auto rep_good = good.smc.validate();
  CHECK(rep_good.ok());

  auto bad = two_endo_smc(false);
  auto rep_bad = bad.smc.validate();
  CHECK_FALSE(rep_bad.ok());
  bool named = false;
  for (const auto& v : rep_bad.violations())
    if (v.law == "smc/symmetry-natural" &&
        v.detail.find("p") != std::string::npos &&
        v.detail.find("q") != std::string::npos)
      named = true;
  CHECK(named);
}

TEST_CASE("unit object carries a trivial monoid") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::chain(2));
  const FinCategory& c = lat.category();
  MonoidObject m{lat.smc.unit(), c.identity(lat.smc.unit()),
                 c.identity(lat.smc.unit())};
  CHECK(check_monoid(lat.smc, m));
}

TEST_CASE("strict hexagon holds exhaustively on semilattice categories") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::powerset(2));
  auto rep = lat.smc.validate();
  REQUIRE(rep.ok());
  CHECK(rep.counts().at("smc/hexagon").checked > 0);
  CHECK(rep.counts().at("smc/hexagon").skipped == 0);
}

TEST_CASE("tensor_word value is permutation-stable on semilattices") {
  auto lat = zoo::build_semilattice_category(zoo::SemilatticeSpec::powerset(2));
  const FinCategory& c = lat.category();
  std::vector<Obj> word{c.object_by_name("s01"), c.object_by_name("s10"),
                        c.object_by_name("s11")};
  std::vector<Obj> perm{word[2], word[0], word[1]};
  CHECK(lat.smc.tensor_word(word) == lat.smc.tensor_word(perm));
}
