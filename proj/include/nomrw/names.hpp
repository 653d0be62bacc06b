#ifndef NOMRW_NAMES_HPP
#define NOMRW_NAMES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

namespace nomrw {

namespace detail {

// One interned spelling. Entries live for the whole process, so handles can
// hold raw pointers and read them without locking.
struct NameEntry {
  std::string text;
  std::string stem;        // text without its trailing decimal digits
  std::uint64_t index = 0; // value of the trailing digits
  bool indexed = false;    // true when the text ends in digits
  std::uint32_t id = 0;    // dense per-namespace id
};

enum class NameSpace : int { Atom = 0, Var = 1, Symbol = 2 };

const NameEntry* intern(NameSpace space, std::string_view text);

// Natural order: plain names before indexed ones (`g` < `c2`), then by stem,
// then numerically by index (`c2` < `c10`), then by spelling.
std::strong_ordering compare_entries(const NameEntry& lhs, const NameEntry& rhs);

}  // namespace detail

/// Interned identifier in one of the three disjoint namespaces.
///
/// Equality is identity of the interned entry, so comparisons are O(1);
/// ordering follows the natural order of the spelling.
template <detail::NameSpace Space>
class Name {
 public:
  Name() : entry_(empty_entry()) {}
  explicit Name(std::string_view text) : entry_(detail::intern(Space, text)) {}

  const std::string& str() const { return entry_->text; }
  std::uint32_t id() const { return entry_->id; }

  friend bool operator==(Name lhs, Name rhs) { return lhs.entry_ == rhs.entry_; }
  friend std::strong_ordering operator<=>(Name lhs, Name rhs) {
    if (lhs.entry_ == rhs.entry_) return std::strong_ordering::equal;
    return detail::compare_entries(*lhs.entry_, *rhs.entry_);
  }
  friend std::ostream& operator<<(std::ostream& os, Name n) { return os << n.str(); }

 private:
  static const detail::NameEntry* empty_entry() {
    static const detail::NameEntry* const entry = detail::intern(Space, "");
    return entry;
  }

  const detail::NameEntry* entry_;
};

/// Object-level name: bindable, never instantiated.
using Atom = Name<detail::NameSpace::Atom>;
/// Meta-level unknown: instantiated by substitution, never bound.
using VarName = Name<detail::NameSpace::Var>;
/// Function symbol of a signature.
using Symbol = Name<detail::NameSpace::Symbol>;

using AtomSet = std::set<Atom>;
using VarSet = std::set<VarName>;

/// First atom `stem1`, `stem2`, ... that is not in `avoid`.
Atom fresh_atom(const AtomSet& avoid, std::string_view stem = "c");

/// The atom named stem followed by i, e.g. w1.
Atom numbered_atom(std::string_view stem, std::size_t i);

/// First variable `stem1`, `stem2`, ... that is not in `avoid`.
VarName fresh_var(const VarSet& avoid, std::string_view stem);

}  // namespace nomrw

template <nomrw::detail::NameSpace Space>
struct std::hash<nomrw::Name<Space>> {
  std::size_t operator()(nomrw::Name<Space> n) const noexcept { return n.id(); }
};

#endif  // NOMRW_NAMES_HPP
