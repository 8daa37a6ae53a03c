/*
 * symbol.hpp
 * ----------
 * Interned parameter symbols. A parameter (a, b, c, d, h1, k1, k2, ...)
 * is a name interned once into a process-wide table and afterwards handled
 * as a small integer id, so exponent vectors and symbol sets stay cheap to
 * compare. Interning is append-only and thread-safe; ids are dense.
 *
 * A SymbolSet is a sorted vector of ids used both for "symbols occurring in
 * this polynomial" queries and for the declared parameter universes that
 * algebra-level constructors enforce.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace lca {

using SymbolId = std::uint32_t;

/// Process-wide symbol interner.
class SymbolTable {
public:
    static SymbolTable& instance() {
        static SymbolTable table;
        return table;
    }

    SymbolId intern(const std::string& name) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        SymbolId id = static_cast<SymbolId>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    const std::string& name(SymbolId id) const {
        std::lock_guard<std::mutex> lock(mutex_);
        return names_.at(id);
    }

private:
    SymbolTable() = default;
    mutable std::mutex mutex_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> ids_;
};

inline SymbolId intern_symbol(const std::string& name) {
    return SymbolTable::instance().intern(name);
}

inline const std::string& symbol_name(SymbolId id) {
    return SymbolTable::instance().name(id);
}

/// Sorted, duplicate-free set of symbol ids.
using SymbolSet = std::vector<SymbolId>;

inline void symbol_set_insert(SymbolSet& set, SymbolId id) {
    auto it = std::lower_bound(set.begin(), set.end(), id);
    if (it == set.end() || *it != id) set.insert(it, id);
}

inline bool symbol_set_contains(const SymbolSet& set, SymbolId id) {
    return std::binary_search(set.begin(), set.end(), id);
}

inline SymbolSet symbol_set_union(const SymbolSet& lhs, const SymbolSet& rhs) {
    SymbolSet out;
    out.reserve(lhs.size() + rhs.size());
    std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                   std::back_inserter(out));
    return out;
}

/// True when every id of `sub` appears in `super`.
inline bool symbol_set_subset(const SymbolSet& sub, const SymbolSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

} // namespace lca
