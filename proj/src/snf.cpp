#include "gog/snf.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace gog {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat: size mismatch in product");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMat IntMat::transposed() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

void swap_rows(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += c * row[b]
void add_row(IntMat& m, int a, int b, const Int& c) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}

void add_col(IntMat& m, int a, int b, const Int& c) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}

void negate_row(IntMat& m, int a) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

Int iabs(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SmithResult smith_normal_form(const IntMat& input) {
    const int R = input.rows(), C = input.cols();
    SmithResult res;
    res.s = input;
    res.u = IntMat::identity(R);
    res.v = IntMat::identity(C);
    IntMat& s = res.s;
    IntMat& u = res.u;
    IntMat& v = res.v;

    const int n = std::min(R, C);
    for (int k = 0; k < n; ++k) {
        // Locate a pivot: smallest nonzero absolute value in the trailing block.
        int pi = -1, pj = -1;
        Int best;
        for (int i = k; i < R; ++i)
            for (int j = k; j < C; ++j)
                if (s.at(i, j) != 0) {
                    Int a = iabs(s.at(i, j));
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0) break;  // trailing block is zero
        swap_rows(s, k, pi);
        swap_rows(u, k, pi);
        swap_cols(s, k, pj);
        swap_cols(v, k, pj);

        for (;;) {
            // Clear column k below the pivot.
            bool clean = true;
            for (int i = k + 1; i < R; ++i) {
                if (s.at(i, k) == 0) continue;
                Int q = s.at(i, k) / s.at(k, k);
                add_row(s, i, k, -q);
                add_row(u, i, k, -q);
                if (s.at(i, k) != 0) {
                    // Remainder is a smaller pivot candidate.
                    swap_rows(s, k, i);
                    swap_rows(u, k, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Clear row k to the right of the pivot.
            for (int j = k + 1; j < C; ++j) {
                if (s.at(k, j) == 0) continue;
                Int q = s.at(k, j) / s.at(k, k);
                add_col(s, j, k, -q);
                add_col(v, j, k, -q);
                if (s.at(k, j) != 0) {
                    swap_cols(s, k, j);
                    swap_cols(v, k, j);
                    clean = false;
                    break;  // column k may be dirty again
                }
            }
            if (!clean) continue;

            // Enforce divisibility of the trailing block by the pivot.
            bool divides = true;
            for (int i = k + 1; i < R && divides; ++i)
                for (int j = k + 1; j < C && divides; ++j)
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        add_row(s, k, i, 1);
                        add_row(u, k, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
    }

    for (int k = 0; k < n; ++k)
        if (s.at(k, k) < 0) {
            negate_row(s, k);
            negate_row(u, k);
        }

    res.diagonal.resize(n);
    for (int k = 0; k < n; ++k) {
        res.diagonal[k] = s.at(k, k);
        if (res.diagonal[k] != 0) ++res.rank;
    }
    return res;
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            swap_rows(a, k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

int rank_over_q(const IntMat& m) { return smith_normal_form(m).rank; }

std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve_integer: size mismatch");
    SmithResult snf = smith_normal_form(m);
    // m = u^-1 s v^-1, so m x = b  <=>  s y = u b with x = v y.
    std::vector<Int> c(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Int acc = 0;
        for (int j = 0; j < m.rows(); ++j) acc += snf.u.at(i, j) * b[j];
        c[i] = acc;
    }
    std::vector<Int> y(m.cols());
    const int n = std::min(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        if (i < n && snf.diagonal[i] != 0) {
            if (c[i] % snf.diagonal[i] != 0) return std::nullopt;
            y[i] = c[i] / snf.diagonal[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(m.cols());
    for (int i = 0; i < m.cols(); ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc += snf.v.at(i, j) * y[j];
        x[i] = acc;
    }
    return x;
}

std::vector<std::vector<Int>> integer_kernel(const IntMat& m) {
    SmithResult snf = smith_normal_form(m);
    std::vector<std::vector<Int>> basis;
    for (int j = snf.rank; j < m.cols(); ++j) {
        std::vector<Int> col(m.cols());
        for (int i = 0; i < m.cols(); ++i) col[i] = snf.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

IntMat inverse_unimodular(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse_unimodular: matrix not square");
    Int d = determinant(m);
    if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: determinant not +-1");
    const int n = m.rows();
    IntMat inv(n, n);
    if (n == 0) return inv;
    // Adjugate over exact integers; n stays tiny here.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = determinant(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(i, j) = d == 1 ? cof : Int(-cof);
        }
    return inv;
}

long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer too large for long long: " + v.str());
    return static_cast<long long>(v);
}

}  // namespace gog
