#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "paraboson/rational.hpp"

namespace paraboson {

// Dense matrix over exact rationals. Immutable after construction in spirit:
// the algebra routines below copy, they never modify their inputs.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    std::vector<Rational> mul(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RatMatrix::mul: size mismatch");
        std::vector<Rational> out(rows_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (data_[r * cols_ + c] != 0) out[r] += data_[r * cols_ + c] * v[c];
        return out;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (at(r, c) != at(c, r)) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Exact rank via fraction-free (Bareiss) elimination on a denominator-cleared copy.
int rank(const RatMatrix& m);

// Exact coefficients c with B c = t, or nullopt when t is not in the column span.
// Pivoting is deterministic: first nonzero entry in row-major scan order.
// Free variables are set to zero.
std::optional<std::vector<Rational>> solve_in_span(const RatMatrix& basis_columns,
                                                   const std::vector<Rational>& target);

struct PsdResult {
    bool psd = false;
    // On failure, an exact vector x with x^T G x < 0.
    std::vector<Rational> witness;
};

// Exact positive-semidefiniteness test by symmetric elimination.
// Throws std::invalid_argument on non-symmetric input.
PsdResult psd_check(const RatMatrix& g);

// Basis of the right nullspace {x : M x = 0}, deterministic (RREF, free vars in order).
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

}  // namespace paraboson
