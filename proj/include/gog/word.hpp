#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gog {

enum class Tri { Yes, No, Unknown };

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::No || b == Tri::No) return Tri::No;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::Yes;
}

inline const char* tri_name(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SymKind { VertexGen, EdgeGen, EdgeLetter };

struct SymbolInfo {
    std::string name;
    SymKind kind;
    int owner;  // vertex index for VertexGen, edge index otherwise
};

// Interned generator names. One table per graph; append-only during
// construction, immutable afterwards.
class SymbolTable {
public:
    int intern(const std::string& name, SymKind kind, int owner);
    std::optional<int> find(const std::string& name) const;
    const SymbolInfo& info(int id) const { return syms_.at(static_cast<size_t>(id)); }
    const std::string& name(int id) const { return info(id).name; }
    int size() const { return static_cast<int>(syms_.size()); }

private:
    std::vector<SymbolInfo> syms_;
    std::map<std::string, int> by_name_;
};

struct Letter {
    int sym;
    long long exp;
    bool operator==(const Letter&) const = default;
};

// Freely-reduced-as-written word: adjacent letters carry distinct symbols and
// all exponents are nonzero. The empty word is the identity.
class Word {
public:
    Word() = default;
    static Word letter(int sym, long long exp = 1);

    void append(int sym, long long exp);
    void append(const Word& w);

    Word inverse() const;
    Word operator*(const Word& o) const;
    Word pow(long long k) const;

    bool empty() const { return ls_.empty(); }
    size_t runs() const { return ls_.size(); }
    long long length() const;  // sum of |exp|
    const std::vector<Letter>& letters() const { return ls_; }

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const { return cmp(o) < 0; }

private:
    int cmp(const Word& o) const;
    std::vector<Letter> ls_;
};

inline Word conjugate(const Word& m, const Word& w) { return m * w * m.inverse(); }
inline Word commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

std::string format_word(const Word& w, const SymbolTable& t);

// Parses whitespace-separated tokens `gen` or `gen^k`; "1" is the identity.
// `scope` restricts which interned symbols may appear (empty message = allowed).
Word parse_word(const std::string& text, const SymbolTable& t,
                const std::function<std::string(int)>& scope);

// Expanded view of a word as single-exponent steps, capped to guard against
// pathological exponents.
std::vector<int> expand_signed(const Word& w, long long cap = 1 << 20);

}  // namespace gog
