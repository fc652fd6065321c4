#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "tensorloc/category.hpp"

namespace tensorloc {

/// Strict symmetric monoidal structure on a finalized FinCategory.
/// Associators and unitors are identities by construction; the symmetry is
/// stored explicitly even when it is an identity. On fragments the tensor
/// tables may be partial; every absent entry is reported as skipped by the
/// checkers.
class SmcStructure {
 public:
  SmcStructure() = default;
  explicit SmcStructure(const FinCategory* base) : base_(base) {}

  const FinCategory& base() const { return *base_; }

  void set_unit(Obj i) { unit_ = i; }
  Obj unit() const { return unit_; }

  void set_tensor_obj(Obj a, Obj b, Obj ab);
  void set_tensor_mor(Mor f, Mor g, Mor fg);
  void set_symmetry(Obj a, Obj b, Mor s);

  Obj tensor_obj(Obj a, Obj b) const;         // kNoObj when absent
  Mor tensor_mor(Mor f, Mor g) const;         // kNoMor when absent
  Mor symmetry(Obj a, Obj b) const;           // kNoMor when absent
  Obj require_tensor_obj(Obj a, Obj b) const; // throws MalformedTable
  Mor require_tensor_mor(Mor f, Mor g) const;
  Mor require_symmetry(Obj a, Obj b) const;

  /// f ⊗ id_B
  Mor tensor_mor_right(Mor f, Obj b) const;
  /// id_A ⊗ g
  Mor tensor_mor_left(Obj a, Mor g) const;

  /// Left-normalized tensor fold of a nonempty object list.
  Obj tensor_word(std::span<const Obj> objects) const;
  /// Left-normalized tensor fold of a nonempty morphism list.
  Mor tensor_word_mor(std::span<const Mor> mors) const;

  const std::unordered_map<std::uint64_t, Mor>& tensor_mor_entries() const {
    return tensor_mor_;
  }

  ValidationReport validate() const;

 private:
  static std::uint64_t key(std::int32_t a, std::int32_t b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  const FinCategory* base_ = nullptr;
  Obj unit_ = kNoObj;
  std::unordered_map<std::uint64_t, Obj> tensor_obj_;
  std::unordered_map<std::uint64_t, Mor> tensor_mor_;
  std::unordered_map<std::uint64_t, Mor> symmetry_;
};

/// Internal monoid: a carrier with multiplication M⊗M→M and unit I→M.
struct MonoidObject {
  Obj carrier = kNoObj;
  Mor mult = kNoMor;
  Mor unit_mor = kNoMor;
};

/// True iff the three monoid diagrams commute. Throws TypeMismatch when the
/// structure morphisms have the wrong endpoints.
bool check_monoid(const SmcStructure& s, const MonoidObject& m);

/// Standalone SMC law run per spec surface; equivalent to s.validate().
inline ValidationReport validate_smc(const SmcStructure& s) { return s.validate(); }

/// Bundle owning a finalized category together with its monoidal structure.
/// Builders return these; the SmcStructure points at the owned category.
struct SmcCategory {
  SmcCategory() : cat(std::make_unique<FinCategory>()) {}
  SmcCategory(SmcCategory&&) = default;
  SmcCategory& operator=(SmcCategory&&) = default;

  std::unique_ptr<FinCategory> cat;
  SmcStructure smc;

  FinCategory& category() { return *cat; }
  const FinCategory& category() const { return *cat; }
};

}  // namespace tensorloc
