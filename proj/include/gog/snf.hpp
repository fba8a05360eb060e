#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gog {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major. Sizes stay small (centralizer blocks and
// relation columns), so exact big-integer entries are affordable everywhere.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const = default;

    IntMat transposed() const;
    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// u * m * v = s with u, v unimodular and s diagonal with a divisibility chain
// s(0,0) | s(1,1) | ...; diagonal entries are nonnegative.
struct SmithResult {
    IntMat u, s, v;
    std::vector<Int> diagonal;  // all min(rows, cols) entries, zeros included
    int rank = 0;               // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMat& m);

// Determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMat& m);

int rank_over_q(const IntMat& m);

// One integer solution x of m * x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b);

// Basis of { x : m * x = 0 } as columns.
std::vector<std::vector<Int>> integer_kernel(const IntMat& m);

// Inverse of a unimodular matrix (|det| = 1); throws otherwise.
IntMat inverse_unimodular(const IntMat& m);

// Narrow to long long, throwing on overflow.
long long to_ll(const Int& v);

}  // namespace gog
