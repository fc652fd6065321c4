#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tensorloc/errors.hpp"
#include "tensorloc/report.hpp"

namespace tensorloc {

using Obj = std::int32_t;
using Mor = std::int32_t;
inline constexpr Obj kNoObj = -1;
inline constexpr Mor kNoMor = -1;

/// Finite category as explicit tables. Morphisms are interned ids; equality
/// of morphisms is equality of ids. Build with add_object/add_morphism/
/// set_identity/set_compose, then finalize(); queries and checkers require a
/// finalized category.
///
/// A category marked as a fragment is a finite slice of an infinite category:
/// composites may be missing from the table, and checkers skip (and count)
/// instances they cannot decide instead of flagging them.
class FinCategory {
 public:
  Obj add_object(std::string name);
  Mor add_morphism(std::string name, Obj dom, Obj cod);
  void set_identity(Obj a, Mor f);
  void set_compose(Mor g, Mor f, Mor gf);
  void mark_fragment() { fragment_ = true; }
  void finalize();

  bool finalized() const { return finalized_; }
  bool is_fragment() const { return fragment_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(mors_.size()); }

  const std::string& object_name(Obj a) const { return objects_.at(a); }
  const std::string& morphism_name(Mor f) const { return mors_.at(f).name; }
  Obj object_by_name(const std::string& name) const;
  Mor morphism_by_name(const std::string& name) const;

  Obj dom(Mor f) const { return mors_.at(f).dom; }
  Obj cod(Mor f) const { return mors_.at(f).cod; }
  Mor identity(Obj a) const;
  bool has_identity(Obj a) const { return identity_.at(a) != kNoMor; }
  bool is_identity(Mor f) const { return identity_.at(dom(f)) == f; }

  bool composable(Mor g, Mor f) const { return cod(f) == dom(g); }
  /// Tabulated composite g∘f, or kNoMor when the entry is absent.
  Mor compose_or_none(Mor g, Mor f) const;
  /// Composite g∘f; throws NotComposable on a cod/dom mismatch and
  /// MalformedTable when a composable pair has no tabulated entry.
  Mor compose(Mor g, Mor f) const;
  /// Fold of compose over a path in diagrammatic order (path[0] first).
  Mor compose_path(std::span<const Mor> path) const;

  const std::vector<Mor>& hom(Obj a, Obj b) const;
  const std::vector<Mor>& morphisms_from(Obj a) const;
  const std::vector<Mor>& morphisms_into(Obj b) const;

  /// Exhaustive identity/associativity/typing check; lists every violation.
  ValidationReport validate() const;

  FinCategory opposite() const;

  std::string describe(Mor f) const;

 private:
  struct MorRec {
    std::string name;
    Obj dom, cod;
  };
  static std::uint64_t pair_key(Obj a, Obj b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  static std::uint64_t triple_key(Obj a, Obj b, Obj c) {
    return static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) |
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(b)) << 21) |
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)) << 42);
  }

  std::vector<std::string> objects_;
  std::vector<MorRec> mors_;
  std::vector<Mor> identity_;
  std::unordered_map<std::string, Obj> object_index_;
  std::unordered_map<std::string, Mor> morphism_index_;

  std::vector<std::array<Mor, 3>> pending_compose_;
  // after finalize():
  std::unordered_map<std::uint64_t, std::vector<Mor>> hom_;
  std::vector<std::int32_t> hom_pos_;  // index of each morphism in its hom-set
  std::vector<std::vector<Mor>> from_, into_;
  // compose blocks keyed by (A,B,C): entry [pos(g) * |hom(A,B)| + pos(f)]
  std::unordered_map<std::uint64_t, std::vector<Mor>> blocks_;

  bool finalized_ = false;
  bool fragment_ = false;
};

/// True iff both composable paths with common endpoints compose to the same
/// morphism id. Throws NotComposable on malformed paths.
bool check_commutes(const FinCategory& c, std::span<const Mor> path1,
                    std::span<const Mor> path2);

/// Commuting square
///
///     P --top--> B
///     |          |
///   left       right
///     v          v
///     A -bottom-> D
struct Square {
  Mor top, left, bottom, right;
};

bool is_pullback(const FinCategory& c, const Square& s);
bool is_pushout(const FinCategory& c, const Square& s);

/// Table-backed functor between finalized categories.
class Functor {
 public:
  Functor() = default;
  Functor(const FinCategory* source, const FinCategory* target);

  void map_object(Obj a, Obj fa);
  void map_morphism(Mor f, Mor ff);

  const FinCategory& source() const { return *source_; }
  const FinCategory& target() const { return *target_; }
  Obj on_object(Obj a) const { return obj_map_.at(a); }
  Mor on_morphism(Mor f) const { return mor_map_.at(f); }
  bool defined_on_object(Obj a) const { return obj_map_.at(a) != kNoObj; }
  bool defined_on_morphism(Mor f) const { return mor_map_.at(f) != kNoMor; }
  bool total() const;

  ValidationReport validate() const;

  bool equal_tables(const Functor& other) const {
    return obj_map_ == other.obj_map_ && mor_map_ == other.mor_map_;
  }

  static Functor identity(const FinCategory& c);
  /// outer ∘ inner; undefined entries propagate.
  static Functor composed(const Functor& outer, const Functor& inner);

 private:
  const FinCategory* source_ = nullptr;
  const FinCategory* target_ = nullptr;
  std::vector<Obj> obj_map_;
  std::vector<Mor> mor_map_;
};

/// Natural transformation between functors with a common source and target.
/// Holds its endpoint functors by value so instances are self-contained.
class NatTransform {
 public:
  NatTransform() = default;
  NatTransform(Functor source, Functor target);

  void set_component(Obj a, Mor f) { components_.at(a) = f; }
  Mor component(Obj a) const { return components_.at(a); }
  bool defined_at(Obj a) const { return components_.at(a) != kNoMor; }

  const Functor& source_functor() const { return source_; }
  const Functor& target_functor() const { return target_; }
  const FinCategory& base() const { return source_.source(); }

  ValidationReport validate() const;

  bool equal_components(const NatTransform& other) const {
    return components_ == other.components_;
  }

 private:
  Functor source_, target_;
  std::vector<Mor> components_;
};

}  // namespace tensorloc
