#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ritl {

using SymbolId = std::uint32_t;
inline constexpr SymbolId kNoSymbol = static_cast<SymbolId>(-1);

enum class SymbolKind : std::uint8_t {
    RiskPredicate,
    DetPredicate,
    UncontrollableProp,
    AbstractProp,
};

struct Symbol {
    std::string name;
    SymbolKind kind;
    // Index into a caller-owned payload table (predicate definitions etc.).
    std::uint32_t payload = 0;
    // Abstract proposition partner (both directions), kNoSymbol if absent.
    SymbolId partner = kNoSymbol;
};

class SymbolTable {
  public:
    SymbolId add(std::string name, SymbolKind kind, std::uint32_t payload = 0) {
        if (by_name_.count(name)) throw std::runtime_error("duplicate symbol: " + name);
        SymbolId id = static_cast<SymbolId>(symbols_.size());
        by_name_.emplace(name, id);
        symbols_.push_back(Symbol{std::move(name), kind, payload, kNoSymbol});
        return id;
    }

    SymbolId lookup(const std::string& name) const {
        auto it = by_name_.find(name);
        return it == by_name_.end() ? kNoSymbol : it->second;
    }

    const Symbol& at(SymbolId id) const { return symbols_.at(id); }
    Symbol& at(SymbolId id) { return symbols_.at(id); }
    std::size_t size() const { return symbols_.size(); }

    // Abstract partner of a concrete symbol, created on demand.
    SymbolId abstract_partner(SymbolId id) {
        Symbol& s = symbols_.at(id);
        if (s.kind == SymbolKind::AbstractProp) return id;
        if (s.partner != kNoSymbol) return s.partner;
        SymbolId p = add("@" + s.name, SymbolKind::AbstractProp, id);
        symbols_[id].partner = p;
        symbols_[p].partner = id;
        return p;
    }

    SymbolId concrete_of(SymbolId id) const {
        const Symbol& s = symbols_.at(id);
        if (s.kind != SymbolKind::AbstractProp) return id;
        if (s.partner == kNoSymbol) throw std::runtime_error("abstract prop without partner");
        return s.partner;
    }

  private:
    std::vector<Symbol> symbols_;
    std::unordered_map<std::string, SymbolId> by_name_;
};

}  // namespace ritl
