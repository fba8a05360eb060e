#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gog/snf.hpp"
#include "gog/word.hpp"

namespace gog {

enum class OracleKind { Free, Abelian, ZSemiZ, Presentation };

// A finitely generated abelian group with an explicit realization: free basis
// words first, then torsion basis words aligned with `factors`. `log`
// expresses a group element in these coordinates (free coords first), or
// returns nullopt when the element is not recognized as a member.
struct AbelianDescription {
    int free_rank = 0;
    std::vector<long long> factors;  // invariant factors >= 2, divisibility chain
    std::vector<Word> basis;
    std::function<std::optional<std::vector<long long>>(const Word&)> log;

    bool trivial() const { return free_rank == 0 && factors.empty(); }
    bool infinite() const { return free_rank > 0; }
    std::string display() const;
};

// Element of Z^k x| Z in coordinates: lattice vector plus stable-letter
// exponent.  a^x t^m with t a t^-1 acting as the defining matrix.
struct ZzElt {
    std::vector<Int> vec;
    long long t = 0;
    bool identity() const;
};

// A vertex or edge group in one of the supported classes. Free, Abelian and
// ZSemiZ answer everything exactly; Presentation oracles are tri-valued with
// a bounded rewriting search.
class GroupOracle {
public:
    OracleKind kind = OracleKind::Free;
    std::vector<int> gens;  // symbol ids; ZSemiZ: lattice generators then t last

    // Abelian: per-generator modulus, 0 meaning an infinite factor.
    std::vector<long long> moduli;

    // ZSemiZ: unimodular k x k matrix M with t a t^-1 = M a.
    IntMat matrix;

    // Presentation:
    std::vector<Word> relators;
    int depth_limit = 10;

    bool exact() const { return kind != OracleKind::Presentation; }
    int rank() const { return static_cast<int>(gens.size()); }

    // Canonical form for exact kinds; free reduction only for Presentation.
    Word reduce(const Word& w) const;
    Tri trivial(const Word& w) const;
    Tri equal(const Word& a, const Word& b) const;
    Tri commute(const Word& a, const Word& b) const;

    Tri infinite_order(const Word& w) const;
    Tri torsion_free() const;
    Tri center_infinite() const;

    // Center as an abelian description; nullopt when not computable.
    std::optional<AbelianDescription> center(const SymbolTable& t) const;

    // Defining relators of this group over its own generators (exact kinds
    // synthesize them; Presentation returns its list).
    std::vector<Word> defining_relators(const SymbolTable& t) const;

    // Solve u = w^j; nullopt when u is not a power of w (or not decidable,
    // Presentation kind answers only on syntactic matches).
    std::optional<long long> cyclic_log(const Word& base, const Word& u) const;

    // Membership of u in the subgroup generated by `sub`, with an expression
    // of u as a product of the given generators (exponent vector per
    // generator, valid modulo the subgroup's own relations).
    // Supported: any kind with |sub| <= 1; Abelian with arbitrary sub.
    struct Member {
        Tri in = Tri::Unknown;
        std::vector<long long> coords;
    };
    Member member_of_subgroup(const std::vector<Word>& sub, const Word& u) const;

    // Is the subgroup generated by `sub` the whole group?
    Tri generates_whole(const std::vector<Word>& sub) const;

    // Exponent vector in gens order (total exponents, order of appearance
    // ignored) -- the abelianized image.
    std::vector<long long> exponent_vector(const Word& w) const;

    // ZSemiZ normal form.
    ZzElt zz_normal(const Word& w) const;
    Word zz_word(const ZzElt& e) const;
    // Matrix power M^k (k may be negative).
    IntMat zz_matrix_power(long long k) const;
    // Finite order of the defining matrix, nullopt when infinite.
    std::optional<long long> zz_matrix_order() const;

    std::string kind_name() const;

private:
    int gen_index(int sym) const;
    Word abelian_canonical(const Word& w) const;
    Tri presentation_trivial(const Word& w) const;
};

// Used by parser and tests: oracles constructed outside a graph.
GroupOracle make_free_oracle(std::vector<int> gens);
GroupOracle make_abelian_oracle(std::vector<int> gens, std::vector<long long> moduli);
GroupOracle make_zsemiz_oracle(std::vector<int> gens, IntMat m);
GroupOracle make_presentation_oracle(std::vector<int> gens, std::vector<Word> relators,
                                     int depth_limit = 10);

// Primitive root r with w = r^k (k > 0 after normalization of r); requires a
// nontrivial freely reduced word in a free group.
struct RootPower {
    Word root;
    long long power;
};
RootPower free_primitive_root(const Word& w);

}  // namespace gog
