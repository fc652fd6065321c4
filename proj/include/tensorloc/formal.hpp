#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensorloc/localisable.hpp"
#include "tensorloc/restriction.hpp"

namespace tensorloc {

/// Formal monad over the ZI-indexed family of restriction categories: a
/// monad on every C|u plus the lower functors, satisfying the modification
/// and naturality equations.
struct FormalMonad {
  const SmcStructure* base = nullptr;
  const ZiSemilattice* zi = nullptr;
  std::vector<std::unique_ptr<RestrictionCategory>> restrictions;
  std::vector<MonadData> monads;
  // lower[u][v] : C|v -> C|u for u ≤ v (nullopt otherwise)
  std::vector<std::vector<std::optional<Functor>>> lower;

  ValidationReport validate() const;
};

FormalMonad localisable_to_formal(const LocalisableMonad& lm);

/// Strength assembly per the adjunction composite; the result lives on the
/// same base as the original localisable monad (through C|1 ≅ C).
LocalisableMonad formal_to_localisable(const FormalMonad& fm);

/// loc -> formal -> loc is a table-exact identity; also asserts the
/// proof-level identities of the bijection theorem per u and morphism.
bool roundtrip_localisable(const LocalisableMonad& lm, std::string* detail);

/// formal -> loc -> formal is a table-exact identity per u.
bool roundtrip_formal(const FormalMonad& fm, std::string* detail);

/// --- graded and indexed monads over a finite strict monoidal poset -------

struct MonoidalPoset {
  SemilatticeTable order;
  std::vector<std::vector<int>> tensor;  // strict monoidal product
  int unit = -1;

  bool unit_is_initial() const;   // unit = bottom
  bool has_codiagonals() const {  // u⊗u ≤ u for every u
    for (int u = 0; u < order.n; ++u)
      if (!order.le(tensor[u][u], u)) return false;
    return true;
  }
  static MonoidalPoset join_semilattice(const SemilatticeTable& t);
};

/// E-indexed monad: per-u monads with monad maps along u ≤ v.
struct IndexedMonad {
  const FinCategory* cat = nullptr;
  MonoidalPoset index;
  std::vector<MonadData> monads;
  // level[u][v] : T_u ⇒ T_v components per object, for u ≤ v
  std::vector<std::vector<std::vector<Mor>>> level;
};

/// E-graded monad: lax monoidal functor E -> [C,C].
struct GradedMonad {
  const FinCategory* cat = nullptr;
  MonoidalPoset index;
  std::vector<Functor> functors;
  std::vector<Mor> unit;  // η_A : A -> T_unit(A)
  // mult[u][v] : T_u T_v ⇒ T_{u⊗v} components per object
  std::vector<std::vector<std::vector<Mor>>> mult;
  // level[u][v] : T_u ⇒ T_v for u ≤ v
  std::vector<std::vector<std::vector<Mor>>> level;
};

ValidationReport check_indexed(const IndexedMonad& im);
ValidationReport check_graded(const GradedMonad& gm);

GradedMonad indexed_to_graded(const IndexedMonad& im);
IndexedMonad graded_to_indexed(const GradedMonad& gm);

bool graded_indexed_roundtrip(const IndexedMonad& im, std::string* detail);

/// Canonical indexed family on the semilattice category of E itself:
/// T_u = (− ∨ u), the join-with-u closure.
IndexedMonad join_closure_indexed(const FinCategory& ecat,
                                  const MonoidalPoset& poset);

}  // namespace tensorloc
