#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tensorloc/central.hpp"
#include "tensorloc/monad.hpp"
#include "tensorloc/restriction.hpp"

namespace tensorloc {

/// Strength table: str[A][i] : T(A)⊗U_i -> T(A⊗U_i) for ZI representative i.
struct StrengthFamily {
  std::vector<std::vector<Mor>> table;

  StrengthFamily() = default;
  StrengthFamily(int objects, int zi_elements)
      : table(objects, std::vector<Mor>(zi_elements, kNoMor)) {}

  Mor at(Obj a, int u) const { return table.at(a).at(u); }
  void set(Obj a, int u, Mor s) { table.at(a).at(u) = s; }
  bool equal_tables(const StrengthFamily& o) const { return table == o.table; }
};

struct AxiomStatus {
  std::string name;
  bool strictified = false;  // checked in its strict-coherence degenerate form
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
  std::string first_failure;  // empty = passed

  bool passed() const { return first_failure.empty(); }
};

struct AxiomReport {
  // indices 0..5 = Def-3.1 equations (1)..(6)
  std::array<AxiomStatus, 6> axioms;

  bool ok() const {
    for (const auto& a : axioms)
      if (!a.passed()) return false;
    return true;
  }
  std::string summary() const;
};

/// Exhaustive check of the six localisable-monad equations over all
/// materialized instances, lexicographic instance order.
AxiomReport check_localisable(const SmcStructure& s, const ZiSemilattice& zi,
                              const MonadData& m, const StrengthFamily& str);

/// Monad + strength + cached axiom report.
struct LocalisableMonad {
  const SmcStructure* smc = nullptr;
  const ZiSemilattice* zi = nullptr;
  MonadData monad;
  StrengthFamily strength;
  AxiomReport report;
};

LocalisableMonad make_localisable(const SmcStructure& s, const ZiSemilattice& zi,
                                  MonadData monad, StrengthFamily strength);

/// In a poset category the strength morphism exists iff ū∧v ≤ closure(u∧v);
/// returns the unique family or the violating (u, v) pair of ZI indices.
std::variant<StrengthFamily, std::pair<int, int>> strength_from_closure(
    const SmcStructure& s, const ZiSemilattice& zi, const MonadData& closure);

/// Commutativity hexagon for all (A, u, v); returns a counterexample name on
/// failure.
struct CommutativityResult {
  bool commutative = false;
  std::string counterexample;
};
CommutativityResult check_commutative(const LocalisableMonad& lm);

/// T|u on C|u per the restriction formulas; requires a built restriction.
MonadData restrict_monad(const LocalisableMonad& lm, int u_index,
                         const RestrictionCategory& cu);

/// Strength table of T|u over ZI(C|u); entries derived from the base strength.
StrengthFamily restrict_strength(const LocalisableMonad& lm, int u_index,
                                 const RestrictionCategory& cu,
                                 const ZiSemilattice& zi_cu,
                                 const MonadData& tu);

struct RestrictionMonadMorphisms {
  MonadMorphism lax;    // T|v -> T|u along the lower functor, φ_A = T(A)⊗u
  MonadMorphism oplax;  // T|u -> T|v along the upper functor, ψ_A = str_{A,U}
  bool localisable_square_ok = false;  // the morphism-of-localisable-monads square
  std::string detail;
};
RestrictionMonadMorphisms restriction_monad_morphism(
    const LocalisableMonad& lm, int u_index, int v_index,
    const RestrictionCategory& cu, const RestrictionCategory& cv,
    const MonadData& tu, const MonadData& tv, const RestrictionFunctors& adj);

/// Stalk at a point (principal prime filter generated by ZI index w):
/// the restriction at the least open, plus the morphisms T|u -> T|x for every
/// u containing the point.
struct StalkMonad {
  int least_open = -1;
  MonadData monad;                      // on the restriction at least_open
  std::vector<int> opens;               // all u with x ∈ u (i.e. least_open ≤ u)
  std::vector<MonadMorphism> into_stalk; // lax morphisms T|u -> T|x
};
StalkMonad stalk_monad(const LocalisableMonad& lm, int point_generator,
                       const std::vector<RestrictionCategory>& restrictions,
                       const std::vector<MonadData>& restricted_monads);

}  // namespace tensorloc
