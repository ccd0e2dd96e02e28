#pragma once

// Finite groups as explicit multiplication tables, plus the subset algebra
// (products, closures, widths) every other module is written against.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relcay/bits.hpp"

namespace relcay {

using Element = int;

inline constexpr int kDefaultMaxOrder = 64;

namespace detail {
struct SubgroupCache;
}

/// A finite group of order at most 64. Element 0 is always the identity.
///
/// Tables are immutable after construction. The subgroup lattice is computed
/// lazily on first use and shared between copies, so a GroupTable may be
/// read from several threads at once.
class GroupTable {
 public:
  GroupTable(std::string spec, int order, std::vector<Element> mul,
             std::vector<std::string> names);

  int order() const { return order_; }
  static constexpr Element identity() { return 0; }
  Element mul(Element x, Element y) const { return mul_[x * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& spec() const { return spec_; }
  Mask all() const { return low_bits(order_); }

  /// Looks an element up by its display name. "1" always names the identity.
  std::optional<Element> find(std::string_view name) const;

  /// Every subgroup as a member mask, ordered by size and then by member list.
  const std::vector<Mask>& subgroup_masks() const;

  // Raw set algebra on masks. These are the hot paths of the audit.
  Mask product(Mask a, Mask b) const;
  Mask left_translate(Element g, Mask a) const;   // gA
  Mask right_translate(Mask a, Element g) const;  // Ag
  Mask inverse(Mask a) const;                     // A^{-1}
  Mask closure(Mask generators) const;            // <A>
  bool is_subgroup(Mask a) const;

  std::string format(Mask a) const;

 private:
  std::string spec_;
  int order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> names_;
  std::shared_ptr<detail::SubgroupCache> cache_;
};

/// A subset of a group. The group must outlive the set.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(const GroupTable& group, Mask members);
  static ElementSet from_members(const GroupTable& group,
                                 const std::vector<Element>& members);

  const GroupTable& group() const { return *group_; }
  Mask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(Element x) const { return relcay::contains(mask_, x); }
  std::vector<Element> members() const { return bits_of(mask_); }
  std::string to_string() const { return group_->format(mask_); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.group_ == b.group_ && a.mask_ == b.mask_;
  }

 private:
  const GroupTable* group_ = nullptr;
  Mask mask_ = 0;
};

/// An ElementSet known to be closed under products and inverses.
class Subgroup {
 public:
  /// Throws NotASubgroupError when `set` is not a subgroup.
  explicit Subgroup(ElementSet set);

  const ElementSet& set() const { return set_; }
  const GroupTable& group() const { return set_.group(); }
  Mask mask() const { return set_.mask(); }
  int size() const { return set_.size(); }
  bool is_proper() const { return set_.mask() != group().all(); }

 private:
  ElementSet set_;
};

/// Parses a group spec such as "C4", "D5", "S3", "Q8", "E2^4", "C2xC6".
/// Throws ParseError on malformed input and CapacityError above `max_order`.
GroupTable make_group(std::string_view spec, int max_order = kDefaultMaxOrder);

/// Parses a comma-separated list of element names. Commas inside
/// parentheses belong to tuple names and do not split. Surrounding braces,
/// as printed by GroupTable::format, are accepted.
std::vector<Element> parse_elements(const GroupTable& group, std::string_view list);

ElementSet product_set(const ElementSet& a, const ElementSet& b);
Subgroup generated_subgroup(const ElementSet& x);
std::vector<Subgroup> enumerate_subgroups(const GroupTable& group);

/// Least n with <X> = X^0 u X u ... u X^n; nullopt stands for infinity and is
/// never produced for a finite group.
std::optional<int> width(const ElementSet& x);
std::optional<int> width_of(const GroupTable& group, Mask x);

/// Largest order of a subgroup contained in X u {1}.
int psi(const ElementSet& x);
int psi_of(const GroupTable& group, Mask x);

struct AbaWitness {
  bool is_aba = false;
  std::optional<std::pair<Mask, Mask>> witness;  // (A, B) with ABA = K
};

/// Whether a subgroup K of `group` is a product ABA of two proper subgroups
/// of K. Only maximal subgroups need to be tried since ABA grows with A, B.
AbaWitness aba_decomposition(const GroupTable& group, Mask k);

/// Whether the whole group is an ABA-group, with a witness pair.
std::pair<bool, std::optional<std::pair<Subgroup, Subgroup>>> is_aba_group(
    const GroupTable& group);

}  // namespace relcay
