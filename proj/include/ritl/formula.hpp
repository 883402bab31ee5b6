#pragma once

// Interned formula DAG. Structurally identical formulas share one id, so
// equality after canonicalization is id equality.

#include "ritl/interval.hpp"
#include "ritl/symbols.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ritl {

using FormulaId = std::uint32_t;
inline constexpr FormulaId kNoFormula = static_cast<FormulaId>(-1);

enum class FKind : std::uint8_t {
    Top,
    Bot,
    Atom,
    Not,
    And,
    Or,
    Until,    // future until  a U_I b
    Since,    // past until    a S_I b
    Ev,       // F_I
    PastEv,   // O_I
    Alw,      // G_I
    PastAlw,  // H_I
};

inline bool is_temporal(FKind k) {
    switch (k) {
        case FKind::Until:
        case FKind::Since:
        case FKind::Ev:
        case FKind::PastEv:
        case FKind::Alw:
        case FKind::PastAlw:
            return true;
        default:
            return false;
    }
}

struct FNode {
    FKind kind;
    FormulaId a = kNoFormula;
    FormulaId b = kNoFormula;
    SymbolId atom = kNoSymbol;
    TimeInterval itv;  // meaningful for temporal kinds
};

class FormulaArena {
  public:
    const FNode& node(FormulaId id) const { return nodes_.at(id); }

    FormulaId top() { return intern({FKind::Top}); }
    FormulaId bot() { return intern({FKind::Bot}); }
    FormulaId atom(SymbolId s) {
        FNode n{FKind::Atom};
        n.atom = s;
        return intern(n);
    }
    FormulaId negation(FormulaId f) {
        FNode n{FKind::Not};
        n.a = f;
        return intern(n);
    }
    FormulaId conj(FormulaId a, FormulaId b) {
        FNode n{FKind::And};
        n.a = a;
        n.b = b;
        return intern(n);
    }
    FormulaId disj(FormulaId a, FormulaId b) {
        FNode n{FKind::Or};
        n.a = a;
        n.b = b;
        return intern(n);
    }
    FormulaId until(FormulaId a, TimeInterval i, FormulaId b) {
        FNode n{FKind::Until};
        n.a = a;
        n.b = b;
        n.itv = std::move(i);
        return intern(n);
    }
    FormulaId since(FormulaId a, TimeInterval i, FormulaId b) {
        FNode n{FKind::Since};
        n.a = a;
        n.b = b;
        n.itv = std::move(i);
        return intern(n);
    }
    FormulaId ev(TimeInterval i, FormulaId f) { return unary(FKind::Ev, std::move(i), f); }
    FormulaId past_ev(TimeInterval i, FormulaId f) { return unary(FKind::PastEv, std::move(i), f); }
    FormulaId alw(TimeInterval i, FormulaId f) { return unary(FKind::Alw, std::move(i), f); }
    FormulaId past_alw(TimeInterval i, FormulaId f) {
        return unary(FKind::PastAlw, std::move(i), f);
    }

    // Reduces sugar to {Top, Atom, Not, And, Until, Since}.
    FormulaId canonicalize(FormulaId id) {
        const FNode n = node(id);
        switch (n.kind) {
            case FKind::Top:
            case FKind::Atom:
                return id;
            case FKind::Bot:
                return negation(top());
            case FKind::Not:
                return negation(canonicalize(n.a));
            case FKind::And:
                return conj(canonicalize(n.a), canonicalize(n.b));
            case FKind::Or:
                return negation(conj(negation(canonicalize(n.a)), negation(canonicalize(n.b))));
            case FKind::Until:
                return until(canonicalize(n.a), n.itv, canonicalize(n.b));
            case FKind::Since:
                return since(canonicalize(n.a), n.itv, canonicalize(n.b));
            case FKind::Ev:
                return until(top(), n.itv, canonicalize(n.a));
            case FKind::PastEv:
                return since(top(), n.itv, canonicalize(n.a));
            case FKind::Alw:
                return negation(until(top(), n.itv, negation(canonicalize(n.a))));
            case FKind::PastAlw:
                return negation(since(top(), n.itv, negation(canonicalize(n.a))));
        }
        return id;
    }

    std::string print(FormulaId id, const SymbolTable& table) const {
        const FNode& n = node(id);
        switch (n.kind) {
            case FKind::Top:
                return "top";
            case FKind::Bot:
                return "bot";
            case FKind::Atom:
                return table.at(n.atom).name;
            case FKind::Not:
                return "!" + wrap(n.a, table);
            case FKind::And:
                return wrap(n.a, table) + " & " + wrap(n.b, table);
            case FKind::Or:
                return wrap(n.a, table) + " | " + wrap(n.b, table);
            case FKind::Until:
                return wrap(n.a, table) + " U" + n.itv.str() + " " + wrap(n.b, table);
            case FKind::Since:
                return wrap(n.a, table) + " S" + n.itv.str() + " " + wrap(n.b, table);
            case FKind::Ev:
                return "F" + n.itv.str() + " " + wrap(n.a, table);
            case FKind::PastEv:
                return "O" + n.itv.str() + " " + wrap(n.a, table);
            case FKind::Alw:
                return "G" + n.itv.str() + " " + wrap(n.a, table);
            case FKind::PastAlw:
                return "H" + n.itv.str() + " " + wrap(n.a, table);
        }
        return "?";
    }

    // Atoms appearing in a formula, in first-occurrence order.
    std::vector<SymbolId> atoms_of(FormulaId id) const {
        std::vector<SymbolId> out;
        std::vector<bool> seen;
        collect_atoms(id, out, seen);
        return out;
    }

    std::size_t size() const { return nodes_.size(); }

  private:
    FormulaId unary(FKind k, TimeInterval i, FormulaId f) {
        FNode n{k};
        n.a = f;
        n.itv = std::move(i);
        return intern(n);
    }

    std::string wrap(FormulaId id, const SymbolTable& table) const {
        const FNode& n = node(id);
        bool leaf = n.kind == FKind::Top || n.kind == FKind::Bot || n.kind == FKind::Atom ||
                    n.kind == FKind::Not;
        std::string s = print(id, table);
        return leaf ? s : "(" + s + ")";
    }

    void collect_atoms(FormulaId id, std::vector<SymbolId>& out, std::vector<bool>& seen) const {
        const FNode& n = node(id);
        if (n.kind == FKind::Atom) {
            if (n.atom >= seen.size()) seen.resize(n.atom + 1, false);
            if (!seen[n.atom]) {
                seen[n.atom] = true;
                out.push_back(n.atom);
            }
            return;
        }
        if (n.a != kNoFormula) collect_atoms(n.a, out, seen);
        if (n.b != kNoFormula) collect_atoms(n.b, out, seen);
    }

    FormulaId intern(const FNode& n) {
        std::string key = encode(n);
        auto it = interned_.find(key);
        if (it != interned_.end()) return it->second;
        FormulaId id = static_cast<FormulaId>(nodes_.size());
        nodes_.push_back(n);
        interned_.emplace(std::move(key), id);
        return id;
    }

    static std::string encode(const FNode& n) {
        std::string key;
        key += static_cast<char>('A' + static_cast<int>(n.kind));
        key += ":" + std::to_string(n.a) + ":" + std::to_string(n.b) + ":" +
               std::to_string(n.atom);
        if (is_temporal(n.kind)) key += ":" + n.itv.str();
        return key;
    }

    std::vector<FNode> nodes_;
    std::unordered_map<std::string, FormulaId> interned_;
};

}  // namespace ritl
