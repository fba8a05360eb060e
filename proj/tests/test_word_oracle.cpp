#include "doctest.h"
#include "gog/oracle.hpp"

using namespace gog;

namespace {

struct Fixture {
    SymbolTable t;
    int a, b, c, tt;
    Fixture() {
        a = t.intern("a", SymKind::VertexGen, 0);
        b = t.intern("b", SymKind::VertexGen, 0);
        c = t.intern("c", SymKind::VertexGen, 0);
        tt = t.intern("t", SymKind::VertexGen, 0);
    }
    Word w(const std::string& s) { return parse_word(s, t, nullptr); }
};

}  // namespace

TEST_CASE("word algebra") {
    Fixture f;
    Word w = f.w("a^2 b a^-1");
    CHECK(w.length() == 4);
    CHECK((w * w.inverse()).empty());
    CHECK(f.w("a^2 a^-3") == f.w("a^-1"));
    CHECK(f.w("a b b^-1 a") == f.w("a^2"));
    CHECK(w.pow(0).empty());
    CHECK(f.w("a^2").pow(3) == f.w("a^6"));
    CHECK(format_word(w, f.t) == "a^2 b a^-1");
    CHECK(format_word(Word(), f.t) == "1");
    CHECK_THROWS_AS(f.w("a^0"), DomainError);
    CHECK_THROWS_AS(f.w("zz"), DomainError);
    CHECK(f.w("1").empty());
}

TEST_CASE("free primitive roots") {
    Fixture f;
    auto rp = free_primitive_root(f.w("a^6"));
    CHECK(rp.root == f.w("a"));
    CHECK(rp.power == 6);
    rp = free_primitive_root(f.w("a b a b a b"));
    CHECK(rp.root == f.w("a b"));
    CHECK(rp.power == 3);
    rp = free_primitive_root(f.w("a b a^-1 b^-1"));
    CHECK(rp.power == 1);
    rp = free_primitive_root(f.w("c a b a b c^-1"));
    CHECK(rp.root == f.w("c a b c^-1"));
    CHECK(rp.power == 2);
}

TEST_CASE("free oracle services") {
    Fixture f;
    GroupOracle free2 = make_free_oracle({f.a, f.b});
    CHECK(free2.trivial(f.w("a b b^-1 a^-1")) == Tri::Yes);
    CHECK(free2.trivial(f.w("a b a^-1 b^-1")) == Tri::No);
    CHECK(free2.equal(f.w("a"), f.w("a b b^-1")) == Tri::Yes);
    CHECK(free2.center(f.t)->trivial());
    CHECK(free2.center_infinite() == Tri::No);
    CHECK(free2.infinite_order(f.w("a b")) == Tri::Yes);

    GroupOracle free1 = make_free_oracle({f.a});
    auto z = free1.center(f.t);
    CHECK(z->free_rank == 1);
    CHECK(z->display() == "Z");
    CHECK((*z->log(f.w("a^5")))[0] == 5);

    CHECK(free2.cyclic_log(f.w("a b"), f.w("a b a b")) == 2);
    CHECK(free2.cyclic_log(f.w("a b"), f.w("b^-1 a^-1")) == -1);
    CHECK(!free2.cyclic_log(f.w("a^2"), f.w("a^3")).has_value());
    CHECK(free2.cyclic_log(f.w("a^2"), f.w("a^-6")) == -3);

    CHECK(free1.generates_whole({f.w("a^2"), f.w("a^3")}) == Tri::Yes);
    CHECK(free1.generates_whole({f.w("a^2")}) == Tri::No);
    CHECK(free2.generates_whole({f.w("a b")}) == Tri::No);
    CHECK(free2.generates_whole({f.w("a"), f.w("b")}) == Tri::Yes);
}

TEST_CASE("abelian oracle canonical forms and center") {
    Fixture f;
    GroupOracle ab = make_abelian_oracle({f.a, f.b}, {0, 2});
    CHECK(ab.reduce(f.w("b a b a")) == f.w("a^2"));
    CHECK(ab.trivial(f.w("b^2")) == Tri::Yes);
    CHECK(ab.infinite_order(f.w("b")) == Tri::No);
    CHECK(ab.infinite_order(f.w("a b")) == Tri::Yes);
    CHECK(ab.torsion_free() == Tri::No);
    auto z = ab.center(f.t);
    CHECK(z->free_rank == 1);
    CHECK(z->factors == std::vector<long long>{2});
    CHECK(z->display() == "Z x Z/2");
    auto coords = z->log(f.w("a^3 b^5"));
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == 3);
    CHECK((*coords)[1] == 1);

    // Z/2 x Z/3 is cyclic of order 6 in invariant-factor form.
    GroupOracle ab23 = make_abelian_oracle({f.a, f.b}, {2, 3});
    auto z23 = ab23.center(f.t);
    CHECK(z23->free_rank == 0);
    CHECK(z23->factors == std::vector<long long>{6});
    // The basis element really has order 6.
    const Word& gen = z23->basis[0];
    for (int k = 1; k < 6; ++k) CHECK(ab23.trivial(gen.pow(k)) == Tri::No);
    CHECK(ab23.trivial(gen.pow(6)) == Tri::Yes);

    CHECK(ab.generates_whole({f.w("a"), f.w("b")}) == Tri::Yes);
    CHECK(ab.generates_whole({f.w("a b")}) == Tri::No);
    CHECK(ab.cyclic_log(f.w("a b"), f.w("a^3 b")) == 3);
}

TEST_CASE("zsemiz oracle: Klein bottle group") {
    Fixture f;
    IntMat m(1, 1);
    m.at(0, 0) = -1;
    GroupOracle kb = make_zsemiz_oracle({f.a, f.tt}, m);
    CHECK(kb.reduce(f.w("t a t^-1")) == f.w("a^-1"));
    CHECK(kb.trivial(f.w("t a t^-1 a")) == Tri::Yes);
    CHECK(kb.torsion_free() == Tri::Yes);
    CHECK(kb.infinite_order(f.w("t")) == Tri::Yes);

    auto z = kb.center(f.t);
    REQUIRE(z.has_value());
    CHECK(z->free_rank == 1);
    CHECK(z->basis[0] == f.w("t^2"));
    CHECK(kb.center_infinite() == Tri::Yes);

    // Independent check: the short central words are exactly the powers of t^2.
    std::vector<Word> ball{Word()};
    for (int l = 0; l < 4; ++l) {
        std::vector<Word> next;
        for (const Word& w : ball)
            for (int sym : {f.a, f.tt})
                for (int s : {1, -1}) {
                    Word e = w * Word::letter(sym, s);
                    if (e.length() == w.length() + 1) next.push_back(e);
                }
        for (const Word& w : next) ball.push_back(w);
    }
    for (const Word& w : ball) {
        bool central = kb.commute(w, f.w("a")) == Tri::Yes && kb.commute(w, f.w("t")) == Tri::Yes;
        ZzElt e = kb.zz_normal(w);
        bool power_of_t2 = e.vec[0] == 0 && e.t % 2 == 0;
        CHECK(central == power_of_t2);
    }

    CHECK(kb.cyclic_log(f.w("t^2"), f.w("t^-6")) == -3);
    CHECK(!kb.cyclic_log(f.w("t^2"), f.w("t^3")).has_value());
    CHECK(kb.cyclic_log(f.w("a"), f.w("t^2 a^5 t^-2")) == 5);
    CHECK(kb.generates_whole({f.w("a")}) == Tri::No);
}

TEST_CASE("zsemiz matrix orders") {
    Fixture f;
    IntMat m1(1, 1);
    m1.at(0, 0) = -1;
    CHECK(make_zsemiz_oracle({f.a, f.tt}, m1).zz_matrix_order() == 2);

    IntMat rot(2, 2);
    rot.at(0, 1) = -1;
    rot.at(1, 0) = 1;
    CHECK(make_zsemiz_oracle({f.a, f.b, f.tt}, rot).zz_matrix_order() == 4);

    IntMat shear(2, 2);
    shear.at(0, 0) = 1;
    shear.at(0, 1) = 1;
    shear.at(1, 1) = 1;
    GroupOracle heis = make_zsemiz_oracle({f.a, f.b, f.tt}, shear);
    CHECK(!heis.zz_matrix_order().has_value());
    // Fix(M) = <a>; an infinite-order matrix contributes no t power.
    auto z = heis.center(f.t);
    CHECK(z->free_rank == 1);
    CHECK(z->basis[0] == f.w("a"));

    IntMat bad(1, 1);
    bad.at(0, 0) = 2;
    CHECK_THROWS_AS(make_zsemiz_oracle({f.a, f.tt}, bad), DomainError);
}

TEST_CASE("presentation oracle is tri-valued") {
    Fixture f;
    GroupOracle o = make_presentation_oracle({f.a}, {f.w("a^2")});
    CHECK(o.trivial(f.w("a^2")) == Tri::Yes);
    CHECK(o.trivial(f.w("a")) == Tri::No);  // abelianization obstruction
    CHECK(o.trivial(f.w("a^4")) == Tri::Yes);

    GroupOracle fa = make_presentation_oracle({f.a, f.b}, {f.w("a b a^-1 b^-1")});
    CHECK(fa.trivial(f.w("a b a^-1 b^-1")) == Tri::Yes);
    CHECK(fa.trivial(f.w("a b a^-1 b")) == Tri::No);
    CHECK(fa.trivial(f.w("b a b^-1 a^-1")) == Tri::Yes);
    CHECK(fa.equal(f.w("a b"), f.w("b a")) == Tri::Yes);
    CHECK(fa.center(f.t) == std::nullopt);
    CHECK(fa.torsion_free() == Tri::Unknown);

    // A word the bounded search will not certify: trivial abelianization but
    // deep; the oracle answers unknown rather than guessing.
    GroupOracle hard = make_presentation_oracle({f.a, f.b}, {f.w("a^2 b^3")}, 2);
    Tri t = hard.trivial(f.w("b^3 a^2 b^3 a^2 b^-3 a^-2 b^-3 a^-2"));
    CHECK(t != Tri::No);
}
