#include "gog/word.hpp"

#include <sstream>

namespace gog {

int SymbolTable::intern(const std::string& name, SymKind kind, int owner) {
    if (name.empty()) throw DomainError("empty generator name");
    for (char c : name)
        if (!isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw DomainError("invalid generator name '" + name + "'");
    if (by_name_.count(name))
        throw DomainError("duplicate generator name '" + name + "'");
    int id = static_cast<int>(syms_.size());
    syms_.push_back({name, kind, owner});
    by_name_[name] = id;
    return id;
}

std::optional<int> SymbolTable::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

Word Word::letter(int sym, long long exp) {
    Word w;
    w.append(sym, exp);
    return w;
}

void Word::append(int sym, long long exp) {
    if (exp == 0) return;
    if (!ls_.empty() && ls_.back().sym == sym) {
        ls_.back().exp += exp;
        if (ls_.back().exp == 0) {
            ls_.pop_back();
            // The two neighbours of the removed run may now merge; handled by
            // re-appending since only one boundary can be affected at a time.
            if (!ls_.empty()) {
                Letter tail = ls_.back();
                ls_.pop_back();
                append(tail.sym, tail.exp);
            }
        }
        return;
    }
    ls_.push_back({sym, exp});
}

void Word::append(const Word& w) {
    for (const Letter& l : w.ls_) append(l.sym, l.exp);
}

Word Word::inverse() const {
    Word r;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.ls_.push_back({it->sym, -it->exp});
    return r;
}

Word Word::operator*(const Word& o) const {
    Word r = *this;
    r.append(o);
    return r;
}

Word Word::pow(long long k) const {
    if (k == 0) return Word();
    Word base = k > 0 ? *this : inverse();
    long long n = k > 0 ? k : -k;
    if (ls_.size() == 1) return Word::letter(ls_[0].sym, ls_[0].exp * k);
    Word r;
    for (long long i = 0; i < n; ++i) r.append(base);
    return r;
}

long long Word::length() const {
    long long n = 0;
    for (const Letter& l : ls_) n += l.exp > 0 ? l.exp : -l.exp;
    return n;
}

int Word::cmp(const Word& o) const {
    size_t n = std::min(ls_.size(), o.ls_.size());
    for (size_t i = 0; i < n; ++i) {
        if (ls_[i].sym != o.ls_[i].sym) return ls_[i].sym < o.ls_[i].sym ? -1 : 1;
        if (ls_[i].exp != o.ls_[i].exp) return ls_[i].exp < o.ls_[i].exp ? -1 : 1;
    }
    if (ls_.size() != o.ls_.size()) return ls_.size() < o.ls_.size() ? -1 : 1;
    return 0;
}

std::string format_word(const Word& w, const SymbolTable& t) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (!first) os << ' ';
        first = false;
        os << t.name(l.sym);
        if (l.exp != 1) os << '^' << l.exp;
    }
    return os.str();
}

Word parse_word(const std::string& text, const SymbolTable& t,
                const std::function<std::string(int)>& scope) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    bool any = false;
    while (is >> tok) {
        any = true;
        if (tok == "1") continue;
        std::string name = tok;
        long long exp = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            try {
                size_t used = 0;
                exp = std::stoll(e, &used);
                if (used != e.size()) throw std::invalid_argument(e);
            } catch (const std::exception&) {
                throw DomainError("bad exponent '" + e + "' in word token '" + tok + "'");
            }
            if (exp == 0) throw DomainError("zero exponent in word token '" + tok + "'");
        }
        auto id = t.find(name);
        if (!id) throw DomainError("unknown generator '" + name + "'");
        if (scope) {
            std::string why = scope(*id);
            if (!why.empty()) throw DomainError("generator '" + name + "' " + why);
        }
        w.append(*id, exp);
    }
    if (!any) throw DomainError("empty word text (use '1' for the identity)");
    return w;
}

std::vector<int> expand_signed(const Word& w, long long cap) {
    if (w.length() > cap) throw DomainError("word too long to expand");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(w.length()));
    for (const Letter& l : w.letters()) {
        long long n = l.exp > 0 ? l.exp : -l.exp;
        int step = l.exp > 0 ? (l.sym + 1) : -(l.sym + 1);
        for (long long i = 0; i < n; ++i) out.push_back(step);
    }
    return out;
}

}  // namespace gog
