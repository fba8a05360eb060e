#include "gog/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace gog {

std::string AbelianDescription::display() const {
    if (trivial()) return "trivial";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (long long f : factors) {
        if (!first) os << " x ";
        os << "Z/" << f;
        first = false;
    }
    return os.str();
}

bool ZzElt::identity() const {
    if (t != 0) return false;
    for (const Int& x : vec)
        if (x != 0) return false;
    return true;
}

namespace {

Word split_prefix(const Word& w, long long pos, Word* suffix) {
    Word pre;
    Word suf;
    long long seen = 0;
    for (const Letter& l : w.letters()) {
        long long n = l.exp > 0 ? l.exp : -l.exp;
        long long sgn = l.exp > 0 ? 1 : -1;
        if (seen + n <= pos) {
            pre.append(l.sym, l.exp);
        } else if (seen >= pos) {
            suf.append(l.sym, l.exp);
        } else {
            long long take = pos - seen;
            pre.append(l.sym, sgn * take);
            suf.append(l.sym, sgn * (n - take));
        }
        seen += n;
    }
    *suffix = suf;
    return pre;
}

}  // namespace

int GroupOracle::gen_index(int sym) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == sym) return static_cast<int>(i);
    throw DomainError("symbol does not belong to this group");
}

std::vector<long long> GroupOracle::exponent_vector(const Word& w) const {
    std::vector<long long> v(gens.size(), 0);
    for (const Letter& l : w.letters()) v[static_cast<size_t>(gen_index(l.sym))] += l.exp;
    return v;
}

Word GroupOracle::abelian_canonical(const Word& w) const {
    std::vector<long long> v = exponent_vector(w);
    Word r;
    for (size_t i = 0; i < gens.size(); ++i) {
        long long e = v[i];
        long long d = moduli[i];
        if (d > 0) {
            e %= d;
            if (e < 0) e += d;
        }
        if (e != 0) r.append(gens[i], e);
    }
    return r;
}

Word GroupOracle::reduce(const Word& w) const {
    switch (kind) {
        case OracleKind::Free: return w;  // Word is maintained freely reduced
        case OracleKind::Abelian: return abelian_canonical(w);
        case OracleKind::ZSemiZ: return zz_word(zz_normal(w));
        case OracleKind::Presentation: return w;
    }
    return w;
}

Tri GroupOracle::trivial(const Word& w) const {
    if (kind == OracleKind::Presentation) return presentation_trivial(w);
    return reduce(w).empty() ? Tri::Yes : Tri::No;
}

Tri GroupOracle::equal(const Word& a, const Word& b) const { return trivial(a * b.inverse()); }

Tri GroupOracle::commute(const Word& a, const Word& b) const {
    return trivial(commutator(a, b));
}

Tri GroupOracle::infinite_order(const Word& w) const {
    switch (kind) {
        case OracleKind::Free: return w.empty() ? Tri::No : Tri::Yes;
        case OracleKind::Abelian: {
            std::vector<long long> v = exponent_vector(w);
            for (size_t i = 0; i < gens.size(); ++i)
                if (moduli[i] == 0 && v[i] != 0) return Tri::Yes;
            return Tri::No;
        }
        case OracleKind::ZSemiZ:
            return zz_normal(w).identity() ? Tri::No : Tri::Yes;  // torsion-free group
        case OracleKind::Presentation: {
            Tri t = presentation_trivial(w);
            if (t == Tri::Yes) return Tri::No;
            return Tri::Unknown;
        }
    }
    return Tri::Unknown;
}

Tri GroupOracle::torsion_free() const {
    switch (kind) {
        case OracleKind::Free:
        case OracleKind::ZSemiZ: return Tri::Yes;
        case OracleKind::Abelian:
            for (long long d : moduli)
                if (d >= 2) return Tri::No;
            return Tri::Yes;
        case OracleKind::Presentation: return Tri::Unknown;
    }
    return Tri::Unknown;
}

Tri GroupOracle::center_infinite() const {
    switch (kind) {
        case OracleKind::Free:
            return gens.size() == 1 ? Tri::Yes : Tri::No;
        case OracleKind::Abelian:
            for (long long d : moduli)
                if (d == 0) return Tri::Yes;
            return Tri::No;
        case OracleKind::ZSemiZ: {
            // Center = Fix(M) extended by t^ord when M has finite order.
            const int k = matrix.rows();
            IntMat mi(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) mi.at(i, j) = matrix.at(i, j) - (i == j ? 1 : 0);
            if (!integer_kernel(mi).empty()) return Tri::Yes;
            return zz_matrix_order() ? Tri::Yes : Tri::No;
        }
        case OracleKind::Presentation: return Tri::Unknown;
    }
    return Tri::Unknown;
}

std::optional<AbelianDescription> GroupOracle::center(const SymbolTable& t) const {
    (void)t;
    AbelianDescription d;
    switch (kind) {
        case OracleKind::Free: {
            if (gens.size() == 1) {
                int g = gens[0];
                d.free_rank = 1;
                d.basis = {Word::letter(g)};
                d.log = [g](const Word& w) -> std::optional<std::vector<long long>> {
                    if (w.empty()) return std::vector<long long>{0};
                    if (w.runs() == 1 && w.letters()[0].sym == g)
                        return std::vector<long long>{w.letters()[0].exp};
                    return std::nullopt;
                };
            } else {
                d.log = [](const Word& w) -> std::optional<std::vector<long long>> {
                    if (w.empty()) return std::vector<long long>{};
                    return std::nullopt;
                };
            }
            return d;
        }
        case OracleKind::Abelian: {
            // Canonical invariant-factor form of Z^k / <d_i e_i> via SNF.
            const int k = rank();
            int ncols = 0;
            for (long long m : moduli)
                if (m >= 1) ++ncols;
            IntMat rel(k, ncols);
            int c = 0;
            for (int i = 0; i < k; ++i)
                if (moduli[static_cast<size_t>(i)] >= 1)
                    rel.at(i, c++) = moduli[static_cast<size_t>(i)];
            SmithResult snf = smith_normal_form(rel);
            IntMat uinv = inverse_unimodular(snf.u);
            std::vector<int> free_idx, tor_idx;
            std::vector<long long> tor_mod;
            for (int j = 0; j < k; ++j) {
                Int s = j < static_cast<int>(snf.diagonal.size()) ? snf.diagonal[static_cast<size_t>(j)] : Int(0);
                if (s == 0) {
                    free_idx.push_back(j);
                } else if (s >= 2) {
                    tor_idx.push_back(j);
                    tor_mod.push_back(to_ll(s));
                }
            }
            auto basis_word = [&](int j) {
                Word w;
                for (int i = 0; i < k; ++i) {
                    long long e = to_ll(uinv.at(i, j));
                    if (e != 0) w.append(gens[static_cast<size_t>(i)], e);
                }
                return abelian_canonical(w);
            };
            d.free_rank = static_cast<int>(free_idx.size());
            d.factors = tor_mod;
            for (int j : free_idx) d.basis.push_back(basis_word(j));
            for (int j : tor_idx) d.basis.push_back(basis_word(j));
            GroupOracle self = *this;
            IntMat u = snf.u;
            d.log = [self, u, free_idx, tor_idx,
                     tor_mod](const Word& w) -> std::optional<std::vector<long long>> {
                std::vector<long long> x = self.exponent_vector(w);
                std::vector<long long> out;
                for (int j : free_idx) {
                    Int acc = 0;
                    for (size_t i = 0; i < x.size(); ++i) acc += u.at(j, static_cast<int>(i)) * x[i];
                    out.push_back(to_ll(acc));
                }
                for (size_t jj = 0; jj < tor_idx.size(); ++jj) {
                    Int acc = 0;
                    for (size_t i = 0; i < x.size(); ++i)
                        acc += u.at(tor_idx[jj], static_cast<int>(i)) * x[i];
                    Int m = acc % tor_mod[jj];
                    if (m < 0) m += tor_mod[jj];
                    out.push_back(to_ll(m));
                }
                return out;
            };
            return d;
        }
        case OracleKind::ZSemiZ: {
            const int k = matrix.rows();
            IntMat mi(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) mi.at(i, j) = matrix.at(i, j) - (i == j ? 1 : 0);
            std::vector<std::vector<Int>> fix = integer_kernel(mi);
            std::optional<long long> ord = zz_matrix_order();
            IntMat fixmat(k, static_cast<int>(fix.size()));
            for (size_t j = 0; j < fix.size(); ++j)
                for (int i = 0; i < k; ++i) fixmat.at(i, static_cast<int>(j)) = fix[j][static_cast<size_t>(i)];
            for (const auto& f : fix) {
                Word w;
                for (int i = 0; i < k; ++i)
                    if (f[static_cast<size_t>(i)] != 0)
                        w.append(gens[static_cast<size_t>(i)], to_ll(f[static_cast<size_t>(i)]));
                d.basis.push_back(w);
            }
            d.free_rank = static_cast<int>(fix.size());
            if (ord) {
                d.basis.push_back(Word::letter(gens.back(), *ord));
                d.free_rank += 1;
            }
            GroupOracle self = *this;
            long long ordv = ord.value_or(0);
            d.log = [self, fixmat, ordv](const Word& w) -> std::optional<std::vector<long long>> {
                ZzElt e = self.zz_normal(w);
                std::vector<long long> out;
                if (!fixmat.cols() && ordv == 0) return e.identity() ? std::make_optional(out) : std::nullopt;
                long long tcoord = 0;
                if (ordv != 0) {
                    if (e.t % ordv != 0) return std::nullopt;
                    tcoord = e.t / ordv;
                } else if (e.t != 0) {
                    return std::nullopt;
                }
                auto sol = solve_integer(fixmat, e.vec);
                if (!sol) return std::nullopt;
                for (const Int& x : *sol) out.push_back(to_ll(x));
                if (ordv != 0) out.push_back(tcoord);
                return out;
            };
            return d;
        }
        case OracleKind::Presentation: return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Word> GroupOracle::defining_relators(const SymbolTable& t) const {
    (void)t;
    std::vector<Word> rs;
    switch (kind) {
        case OracleKind::Free: break;
        case OracleKind::Abelian: {
            for (size_t i = 0; i < gens.size(); ++i)
                for (size_t j = i + 1; j < gens.size(); ++j)
                    rs.push_back(commutator(Word::letter(gens[i]), Word::letter(gens[j])));
            for (size_t i = 0; i < gens.size(); ++i)
                if (moduli[i] >= 1) rs.push_back(Word::letter(gens[i], moduli[i]));
            break;
        }
        case OracleKind::ZSemiZ: {
            const int k = matrix.rows();
            int tl = gens.back();
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    rs.push_back(commutator(Word::letter(gens[static_cast<size_t>(i)]),
                                            Word::letter(gens[static_cast<size_t>(j)])));
            for (int i = 0; i < k; ++i) {
                Word img;
                for (int j = 0; j < k; ++j) {
                    long long e = to_ll(matrix.at(j, i));
                    if (e != 0) img.append(gens[static_cast<size_t>(j)], e);
                }
                Word r = Word::letter(tl) * Word::letter(gens[static_cast<size_t>(i)]) *
                         Word::letter(tl, -1) * img.inverse();
                rs.push_back(r);
            }
            break;
        }
        case OracleKind::Presentation: rs = relators; break;
    }
    return rs;
}

std::optional<long long> GroupOracle::cyclic_log(const Word& base, const Word& u) const {
    Word b = reduce(base);
    Word w = reduce(u);
    if (b.empty()) return w.empty() ? std::make_optional(0LL) : std::nullopt;
    switch (kind) {
        case OracleKind::Free: {
            if (w.empty()) return 0;
            RootPower rp = free_primitive_root(b);
            // w must be root^t with rp.power | t.
            long long ulen = w.length(), rlen = rp.root.length();
            long long tmax = ulen / rlen + 1;
            Word acc;
            for (long long t = 1; t <= tmax; ++t) {
                acc = acc * rp.root;
                if (acc == w) {
                    if (t % rp.power != 0) return std::nullopt;
                    return t / rp.power;
                }
                if (acc.length() > ulen + rlen) break;
            }
            acc = Word();
            Word rinv = rp.root.inverse();
            for (long long t = 1; t <= tmax; ++t) {
                acc = acc * rinv;
                if (acc == w) {
                    if (t % rp.power != 0) return std::nullopt;
                    return -(t / rp.power);
                }
                if (acc.length() > ulen + rlen) break;
            }
            return std::nullopt;
        }
        case OracleKind::Abelian: {
            // Solve j * vec(b) == vec(u) modulo the torsion moduli.
            std::vector<long long> vb = exponent_vector(b), vu = exponent_vector(w);
            int k = rank();
            int extra = 0;
            for (long long d : moduli)
                if (d >= 1) ++extra;
            IntMat m(k, 1 + extra);
            std::vector<Int> rhs(static_cast<size_t>(k));
            int c = 1;
            for (int i = 0; i < k; ++i) {
                m.at(i, 0) = vb[static_cast<size_t>(i)];
                rhs[static_cast<size_t>(i)] = vu[static_cast<size_t>(i)];
                if (moduli[static_cast<size_t>(i)] >= 1) m.at(i, c++) = moduli[static_cast<size_t>(i)];
            }
            auto sol = solve_integer(m, rhs);
            if (!sol) return std::nullopt;
            return to_ll((*sol)[0]);
        }
        case OracleKind::ZSemiZ: {
            ZzElt eb = zz_normal(b), eu = zz_normal(w);
            if (eu.identity()) return 0;
            auto check = [&](long long j) {
                // b^j computed by iterated multiplication in normal form.
                ZzElt acc;
                acc.vec.assign(eb.vec.size(), 0);
                IntMat p = IntMat::identity(matrix.rows());
                IntMat step = zz_matrix_power(eb.t);
                long long n = j >= 0 ? j : -j;
                ZzElt factor = eb;
                if (j < 0) {
                    // b^-1 = (-M^-t x, -t)
                    IntMat minv = zz_matrix_power(-eb.t);
                    factor.t = -eb.t;
                    factor.vec.assign(eb.vec.size(), 0);
                    for (int r = 0; r < matrix.rows(); ++r)
                        for (int cc = 0; cc < matrix.rows(); ++cc)
                            factor.vec[static_cast<size_t>(r)] -= minv.at(r, cc) * eb.vec[static_cast<size_t>(cc)];
                    step = zz_matrix_power(factor.t);
                }
                for (long long i = 0; i < n; ++i) {
                    for (int r = 0; r < matrix.rows(); ++r) {
                        Int acc2 = 0;
                        for (int cc = 0; cc < matrix.rows(); ++cc)
                            acc2 += p.at(r, cc) * factor.vec[static_cast<size_t>(cc)];
                        acc.vec[static_cast<size_t>(r)] += acc2;
                    }
                    p = p * step;
                }
                acc.t = j * eb.t;
                return acc.vec == eu.vec && acc.t == eu.t;
            };
            if (eb.t != 0) {
                if (eu.t % eb.t != 0) return std::nullopt;
                long long j = eu.t / eb.t;
                return check(j) ? std::make_optional(j) : std::nullopt;
            }
            if (eu.t != 0) return std::nullopt;
            long long j = 0;
            bool have = false;
            for (size_t i = 0; i < eb.vec.size(); ++i) {
                if (eb.vec[i] == 0) {
                    if (eu.vec[i] != 0) return std::nullopt;
                    continue;
                }
                Int q = eu.vec[i] / eb.vec[i];
                if (q * eb.vec[i] != eu.vec[i]) return std::nullopt;
                if (!have) {
                    j = to_ll(q);
                    have = true;
                } else if (q != j) {
                    return std::nullopt;
                }
            }
            if (!have) return std::nullopt;  // b trivial handled above
            return j;
        }
        case OracleKind::Presentation: {
            // Syntactic powers only; sound but incomplete.
            if (w.empty()) return 0;
            long long tmax = w.length() / std::max<long long>(b.length(), 1) + 1;
            Word acc;
            for (long long t = 1; t <= tmax; ++t) {
                acc = acc * b;
                if (acc == w) return t;
            }
            acc = Word();
            Word binv = b.inverse();
            for (long long t = 1; t <= tmax; ++t) {
                acc = acc * binv;
                if (acc == w) return -t;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

GroupOracle::Member GroupOracle::member_of_subgroup(const std::vector<Word>& sub,
                                                    const Word& u) const {
    Member m;
    if (sub.empty()) {
        m.in = trivial(u);
        return m;
    }
    if (sub.size() == 1) {
        auto j = cyclic_log(sub[0], u);
        if (j) {
            m.in = Tri::Yes;
            m.coords = {*j};
        } else {
            m.in = exact() ? Tri::No : Tri::Unknown;
        }
        return m;
    }
    if (kind == OracleKind::Abelian) {
        int k = rank();
        int extra = 0;
        for (long long d : moduli)
            if (d >= 1) ++extra;
        IntMat mat(k, static_cast<int>(sub.size()) + extra);
        for (size_t j = 0; j < sub.size(); ++j) {
            std::vector<long long> v = exponent_vector(reduce(sub[j]));
            for (int i = 0; i < k; ++i) mat.at(i, static_cast<int>(j)) = v[static_cast<size_t>(i)];
        }
        int c = static_cast<int>(sub.size());
        for (int i = 0; i < k; ++i)
            if (moduli[static_cast<size_t>(i)] >= 1) mat.at(i, c++) = moduli[static_cast<size_t>(i)];
        std::vector<Int> rhs;
        for (long long v : exponent_vector(reduce(u))) rhs.push_back(v);
        auto sol = solve_integer(mat, rhs);
        if (!sol) {
            m.in = Tri::No;
            return m;
        }
        m.in = Tri::Yes;
        for (size_t j = 0; j < sub.size(); ++j) m.coords.push_back(to_ll((*sol)[j]));
        return m;
    }
    m.in = Tri::Unknown;
    return m;
}

Tri GroupOracle::generates_whole(const std::vector<Word>& sub) const {
    switch (kind) {
        case OracleKind::Free: {
            if (gens.empty()) return Tri::Yes;  // trivial group
            if (gens.size() == 1) {
                long long g = 0;
                for (const Word& w : sub) {
                    Word r = reduce(w);
                    if (r.empty()) continue;
                    g = std::gcd(g, r.letters()[0].exp);
                }
                return g == 1 || g == -1 ? Tri::Yes : Tri::No;
            }
            // Abelianized image must be onto Z^n.
            IntMat mat(rank(), static_cast<int>(sub.size()));
            for (size_t j = 0; j < sub.size(); ++j) {
                std::vector<long long> v = exponent_vector(reduce(sub[j]));
                for (int i = 0; i < rank(); ++i) mat.at(i, static_cast<int>(j)) = v[static_cast<size_t>(i)];
            }
            SmithResult snf = smith_normal_form(mat);
            bool onto = snf.rank == rank();
            for (int i = 0; i < snf.rank; ++i)
                if (snf.diagonal[static_cast<size_t>(i)] != 1) onto = false;
            if (!onto) return Tri::No;
            // Every generator literally present means the subgroup is everything.
            std::set<int> present;
            for (const Word& w : sub) {
                Word r = reduce(w);
                if (r.runs() == 1 && (r.letters()[0].exp == 1 || r.letters()[0].exp == -1))
                    present.insert(r.letters()[0].sym);
            }
            if (present.size() == gens.size()) return Tri::Yes;
            return Tri::Unknown;
        }
        case OracleKind::Abelian: {
            int k = rank();
            int extra = 0;
            for (long long d : moduli)
                if (d >= 1) ++extra;
            IntMat mat(k, static_cast<int>(sub.size()) + extra);
            for (size_t j = 0; j < sub.size(); ++j) {
                std::vector<long long> v = exponent_vector(reduce(sub[j]));
                for (int i = 0; i < k; ++i) mat.at(i, static_cast<int>(j)) = v[static_cast<size_t>(i)];
            }
            int c = static_cast<int>(sub.size());
            for (int i = 0; i < k; ++i)
                if (moduli[static_cast<size_t>(i)] >= 1) mat.at(i, c++) = moduli[static_cast<size_t>(i)];
            SmithResult snf = smith_normal_form(mat);
            if (snf.rank < k) return Tri::No;
            for (int i = 0; i < k; ++i)
                if (snf.diagonal[static_cast<size_t>(i)] != 1) return Tri::No;
            return Tri::Yes;
        }
        case OracleKind::ZSemiZ: {
            if (sub.size() == 1) return Tri::No;  // Z^k x| Z is never cyclic (k >= 1)
            // Abelianization is Z^k/(M - I) x Z; not onto => proper.
            const int k = matrix.rows();
            IntMat mat(k + 1, static_cast<int>(sub.size()) + k);
            for (size_t j = 0; j < sub.size(); ++j) {
                ZzElt e = zz_normal(sub[j]);
                for (int i = 0; i < k; ++i) mat.at(i, static_cast<int>(j)) = e.vec[static_cast<size_t>(i)];
                mat.at(k, static_cast<int>(j)) = e.t;
            }
            for (int j = 0; j < k; ++j)
                for (int i = 0; i < k; ++i)
                    mat.at(i, static_cast<int>(sub.size()) + j) = matrix.at(i, j) - (i == j ? 1 : 0);
            SmithResult snf = smith_normal_form(mat);
            bool onto = snf.rank == k + 1;
            for (int i = 0; i < snf.rank; ++i)
                if (snf.diagonal[static_cast<size_t>(i)] != 1) onto = false;
            if (!onto) return Tri::No;
            return Tri::Unknown;
        }
        case OracleKind::Presentation: {
            // Compare abelianizations.
            int k = rank();
            IntMat mat(k, static_cast<int>(sub.size() + relators.size()));
            int c = 0;
            for (const Word& w : sub) {
                std::vector<long long> v = exponent_vector(w);
                for (int i = 0; i < k; ++i) mat.at(i, c) = v[static_cast<size_t>(i)];
                ++c;
            }
            for (const Word& w : relators) {
                std::vector<long long> v = exponent_vector(w);
                for (int i = 0; i < k; ++i) mat.at(i, c) = v[static_cast<size_t>(i)];
                ++c;
            }
            SmithResult snf = smith_normal_form(mat);
            bool onto = snf.rank == k;
            for (int i = 0; i < snf.rank; ++i)
                if (snf.diagonal[static_cast<size_t>(i)] != 1) onto = false;
            if (!onto) return Tri::No;
            return Tri::Unknown;
        }
    }
    return Tri::Unknown;
}

ZzElt GroupOracle::zz_normal(const Word& w) const {
    const int k = matrix.rows();
    ZzElt e;
    e.vec.assign(static_cast<size_t>(k), 0);
    IntMat p = IntMat::identity(k);
    long long pexp = 0;
    int tsym = gens.back();
    for (const Letter& l : w.letters()) {
        if (l.sym == tsym) {
            e.t += l.exp;
            continue;
        }
        int gi = gen_index(l.sym);
        if (gi >= k) throw DomainError("zsemiz: bad generator");
        if (pexp != e.t) {
            p = zz_matrix_power(e.t);
            pexp = e.t;
        }
        for (int r = 0; r < k; ++r) e.vec[static_cast<size_t>(r)] += p.at(r, gi) * l.exp;
    }
    return e;
}

Word GroupOracle::zz_word(const ZzElt& e) const {
    Word w;
    const int k = matrix.rows();
    for (int i = 0; i < k; ++i)
        if (e.vec[static_cast<size_t>(i)] != 0)
            w.append(gens[static_cast<size_t>(i)], to_ll(e.vec[static_cast<size_t>(i)]));
    if (e.t != 0) w.append(gens.back(), e.t);
    return w;
}

IntMat GroupOracle::zz_matrix_power(long long p) const {
    const int k = matrix.rows();
    IntMat base = p >= 0 ? matrix : inverse_unimodular(matrix);
    long long n = p >= 0 ? p : -p;
    IntMat acc = IntMat::identity(k);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::optional<long long> GroupOracle::zz_matrix_order() const {
    const int k = matrix.rows();
    // A finite-order matrix in GL(k,Z) has order dividing lcm{d : phi(d) <= k}.
    long long limit = 2LL * k * k + 1;
    std::vector<long long> phi(static_cast<size_t>(limit) + 1);
    for (long long i = 0; i <= limit; ++i) phi[static_cast<size_t>(i)] = i;
    for (long long i = 2; i <= limit; ++i)
        if (phi[static_cast<size_t>(i)] == i)
            for (long long j = i; j <= limit; j += i)
                phi[static_cast<size_t>(j)] -= phi[static_cast<size_t>(j)] / i;
    long long bound = 1;
    for (long long d = 1; d <= limit; ++d)
        if (phi[static_cast<size_t>(d)] <= k) bound = std::lcm(bound, d);
    IntMat id = IntMat::identity(k);
    IntMat a = id;
    for (long long j = 1; j <= bound; ++j) {
        a = a * matrix;
        if (a == id) return j;
    }
    return std::nullopt;
}

Tri GroupOracle::presentation_trivial(const Word& w) const {
    if (w.empty()) return Tri::Yes;
    if (relators.empty()) return Tri::No;  // free group in disguise
    // Abelianization obstruction.
    {
        int k = rank();
        IntMat mat(k, static_cast<int>(relators.size()));
        for (size_t j = 0; j < relators.size(); ++j) {
            std::vector<long long> v = exponent_vector(relators[j]);
            for (int i = 0; i < k; ++i) mat.at(i, static_cast<int>(j)) = v[static_cast<size_t>(i)];
        }
        std::vector<Int> rhs;
        for (long long v : exponent_vector(w)) rhs.push_back(v);
        if (!solve_integer(mat, rhs)) return Tri::No;
    }
    // Bounded breadth-first relator insertion.
    long long maxrel = 0;
    for (const Word& r : relators) maxrel = std::max(maxrel, r.length());
    const long long caplen = w.length() + maxrel + 2;
    const size_t cap_nodes = 50000;
    std::set<Word> seen;
    std::deque<std::pair<Word, int>> queue;
    queue.push_back({w, 0});
    seen.insert(w);
    std::vector<Word> moves;
    for (const Word& r : relators) {
        moves.push_back(r);
        moves.push_back(r.inverse());
    }
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        if (cur.empty()) return Tri::Yes;
        if (depth >= depth_limit) continue;
        long long len = cur.length();
        for (const Word& mv : moves) {
            for (long long pos = 0; pos <= len; ++pos) {
                Word suf;
                Word pre = split_prefix(cur, pos, &suf);
                Word next = pre * mv * suf;
                if (next.length() > caplen) continue;
                if (next.empty()) return Tri::Yes;
                if (seen.size() >= cap_nodes) continue;
                if (seen.insert(next).second) queue.push_back({next, depth + 1});
            }
        }
    }
    return Tri::Unknown;
}

std::string GroupOracle::kind_name() const {
    switch (kind) {
        case OracleKind::Free: return "free";
        case OracleKind::Abelian: return "abelian";
        case OracleKind::ZSemiZ: return "zsemiz";
        case OracleKind::Presentation: return "presentation";
    }
    return "?";
}

GroupOracle make_free_oracle(std::vector<int> gens) {
    GroupOracle o;
    o.kind = OracleKind::Free;
    o.gens = std::move(gens);
    return o;
}

GroupOracle make_abelian_oracle(std::vector<int> gens, std::vector<long long> moduli) {
    if (gens.size() != moduli.size()) throw DomainError("abelian oracle: moduli/gens mismatch");
    for (long long d : moduli)
        if (d < 0) throw DomainError("abelian oracle: negative modulus");
    GroupOracle o;
    o.kind = OracleKind::Abelian;
    o.gens = std::move(gens);
    o.moduli = std::move(moduli);
    return o;
}

GroupOracle make_zsemiz_oracle(std::vector<int> gens, IntMat m) {
    if (m.rows() != m.cols()) throw DomainError("zsemiz oracle: matrix not square");
    if (static_cast<int>(gens.size()) != m.rows() + 1)
        throw DomainError("zsemiz oracle: need k lattice generators plus one stable letter");
    Int d = determinant(m);
    if (d != 1 && d != -1)
        throw DomainError("zsemiz oracle: matrix must be unimodular (|det| = 1)");
    GroupOracle o;
    o.kind = OracleKind::ZSemiZ;
    o.gens = std::move(gens);
    o.matrix = std::move(m);
    return o;
}

GroupOracle make_presentation_oracle(std::vector<int> gens, std::vector<Word> relators,
                                     int depth_limit) {
    GroupOracle o;
    o.kind = OracleKind::Presentation;
    o.gens = std::move(gens);
    o.relators = std::move(relators);
    o.depth_limit = depth_limit;
    return o;
}

RootPower free_primitive_root(const Word& w) {
    if (w.empty()) throw DomainError("primitive root of the trivial word");
    // Cyclic decomposition w = c q c^-1 with q cyclically reduced.
    Word c;
    std::vector<Letter> body(w.letters().begin(), w.letters().end());
    while (body.size() >= 2 && body.front().sym == body.back().sym &&
           ((body.front().exp > 0) != (body.back().exp > 0))) {
        long long a = body.front().exp, b = body.back().exp;
        long long strip = std::min(a > 0 ? a : -a, b > 0 ? b : -b);
        long long sgn = a > 0 ? 1 : -1;
        c.append(body.front().sym, sgn * strip);
        body.front().exp -= sgn * strip;
        body.back().exp += sgn * strip;
        std::vector<Letter> nb;
        for (const Letter& l : body)
            if (l.exp != 0) nb.push_back(l);
        body = nb;
        if (body.size() == 1) break;
    }
    Word q;
    for (const Letter& l : body) q.append(l.sym, l.exp);
    RootPower rp;
    if (q.runs() == 1) {
        const Letter& l = q.letters()[0];
        rp.root = c * Word::letter(l.sym, l.exp > 0 ? 1 : -1) * c.inverse();
        rp.power = l.exp > 0 ? l.exp : -l.exp;
        return rp;
    }
    std::vector<int> flat = expand_signed(q);
    long long L = static_cast<long long>(flat.size());
    for (long long p = 1; p <= L; ++p) {
        if (L % p != 0) continue;
        bool periodic = true;
        for (long long i = p; i < L && periodic; ++i)
            if (flat[static_cast<size_t>(i)] != flat[static_cast<size_t>(i - p)]) periodic = false;
        if (periodic) {
            Word suf;
            Word pre = split_prefix(q, p, &suf);
            rp.root = c * pre * c.inverse();
            rp.power = L / p;
            return rp;
        }
    }
    rp.root = c * q * c.inverse();
    rp.power = 1;
    return rp;
}

}  // namespace gog
