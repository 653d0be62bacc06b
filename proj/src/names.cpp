#include "nomrw/names.hpp"

#include <array>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace nomrw {
namespace detail {
namespace {

struct TextHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};

struct Table {
  std::mutex mutex;
  std::deque<NameEntry> entries;
  std::unordered_map<std::string, const NameEntry*, TextHash, std::equal_to<>> by_text;
};

Table& table(NameSpace space) {
  static std::array<Table, 3> tables;
  return tables[static_cast<int>(space)];
}

NameEntry make_entry(std::string_view text, std::uint32_t id) {
  NameEntry e;
  e.text = std::string(text);
  e.id = id;
  std::size_t cut = text.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(text[cut - 1]))) --cut;
  // Very long digit runs would overflow the index; order those by spelling.
  if (cut < text.size() && text.size() - cut <= 18) {
    e.indexed = true;
    e.stem = std::string(text.substr(0, cut));
    e.index = std::stoull(std::string(text.substr(cut)));
  } else {
    e.stem = e.text;
  }
  return e;
}

}  // namespace

const NameEntry* intern(NameSpace space, std::string_view text) {
  Table& t = table(space);
  std::lock_guard<std::mutex> lock(t.mutex);
  if (auto it = t.by_text.find(text); it != t.by_text.end()) return it->second;
  t.entries.push_back(make_entry(text, static_cast<std::uint32_t>(t.entries.size())));
  const NameEntry* entry = &t.entries.back();
  t.by_text.emplace(entry->text, entry);
  return entry;
}

std::strong_ordering compare_entries(const NameEntry& lhs, const NameEntry& rhs) {
  if (lhs.indexed != rhs.indexed) return lhs.indexed ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = lhs.stem <=> rhs.stem; c != 0) return c;
  if (auto c = lhs.index <=> rhs.index; c != 0) return c;
  return lhs.text <=> rhs.text;
}

}  // namespace detail

Atom numbered_atom(std::string_view stem, std::size_t i) {
  // Witness names are requested constantly; remember the first few per stem.
  constexpr std::size_t cached = 8;
  thread_local std::vector<std::pair<std::string, std::vector<Atom>>> cache;
  if (i == 0 || i > cached) return Atom(std::string(stem) + std::to_string(i));
  for (auto& [s, atoms] : cache)
    if (s == stem) return atoms[i - 1];
  std::vector<Atom> atoms;
  for (std::size_t k = 1; k <= cached; ++k) atoms.emplace_back(std::string(stem) + std::to_string(k));
  cache.emplace_back(std::string(stem), std::move(atoms));
  return cache.back().second[i - 1];
}

Atom fresh_atom(const AtomSet& avoid, std::string_view stem) {
  for (std::size_t i = 1;; ++i) {
    Atom candidate = numbered_atom(stem, i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

VarName fresh_var(const VarSet& avoid, std::string_view stem) {
  for (std::size_t i = 1;; ++i) {
    VarName candidate(std::string(stem) + std::to_string(i));
    if (!avoid.contains(candidate)) return candidate;
  }
}

}  // namespace nomrw
