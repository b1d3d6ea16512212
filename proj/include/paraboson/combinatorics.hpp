#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "paraboson/rational.hpp"

namespace paraboson {

// Non-increasing sequence of non-negative integers; trailing zeros are not stored,
// so length() is the number of nonzero parts. part(i) is 1-based and returns 0
// past the end.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;  // |lambda|
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    // Entries as a fixed-length vector (n >= length()).
    std::vector<int> padded(int n) const;

    Partition conjugate() const;
    Integer factorial_product() const;  // lambda_1! ... lambda_k!

    // lambda +/- epsilon_i (1-based); returns nullopt-like failure via valid flag.
    // Use try_add / try_remove below.
    friend bool operator==(const Partition&, const Partition&) = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// lambda + epsilon_i if it is a partition, otherwise false.
bool try_add_cell_row(const Partition& lam, int i, Partition& out);
// lambda - epsilon_i if it is a partition, otherwise false.
bool try_remove_cell_row(const Partition& lam, int i, Partition& out);

// Dominance-then-lex order on partitions of equal size; falls back to size then lex.
bool shape_order_less(const Partition& a, const Partition& b);

// Ragged array of rows, entries in {1,...,n}; cell access A(k,l) is 1-based.
class YoungTableau {
public:
    YoungTableau() = default;
    explicit YoungTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int k, int l) const { return rows_[k - 1][l - 1]; }
    Partition shape() const;
    int size() const;
    int max_entry() const;
    std::vector<int> weight(int n) const;  // multiplicities of 1..n
    bool semistandard() const;
    std::vector<int> reading_word() const;  // rows concatenated top to bottom

    std::string to_text() const;  // one row per line, space-separated

    friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
    auto operator<=>(const YoungTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

// n x n matrix of non-negative integers; gamma.at(i,j) counts i-entries in row j
// of the associated tableau, so column sums give the shape.
class ExponentMatrix {
public:
    ExponentMatrix() : n_(0) {}
    explicit ExponentMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {}
    ExponentMatrix(int n, const std::vector<std::vector<int>>& entries);

    int n() const { return n_; }
    int at(int i, int j) const { return e_[idx(i, j)]; }
    int& at(int i, int j) { return e_[idx(i, j)]; }

    bool is_lower_triangular() const;
    std::vector<int> column_sums() const;           // length n
    bool column_sums_partition(Partition& out) const;
    Integer diag_factorial() const;                 // gamma_11! ... gamma_nn!
    std::vector<int> reading() const { return e_; } // row-major, for lex ordering

    ExponentMatrix plus_unit(int i, int j, int delta = 1) const;

    friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
    auto operator<=>(const ExponentMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("ExponentMatrix index");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int n_;
    std::vector<int> e_;
};

Partition conjugate(const Partition& lam);

// All partitions of d with at most max_len nonzero parts, largest-part-first lex order.
std::vector<Partition> enumerate_partitions(int d, int max_len);

// All semistandard fillings with entries <= n, ordered lexicographically by reading word.
// Empty when length(lambda) > n.
std::vector<YoungTableau> enumerate_ssyt(const Partition& lam, int n);

ExponentMatrix exponent_matrix(const YoungTableau& a, int n);

// D(gamma): the unique row-nondecreasing tableau with gamma.at(i,j) i-entries in row j.
// Throws when column sums do not form a partition.
YoungTableau tableau_from_matrix(const ExponentMatrix& gamma);

// True iff D(gamma) is semistandard: lower triangular, column sums a partition,
// and the interlacing inequalities between consecutive tableau rows hold.
bool is_ssyt_matrix(const ExponentMatrix& gamma);

// One permutation per row of lambda (for row actions) or per column (for column
// actions), stored 1-based; sign is the product of the constituent signs.
struct YoungSubgroupElement {
    std::vector<std::vector<int>> perms;
    int sign = 1;
};

// All elements of S_lambda (cartesian product of row symmetric groups).
// Throws when |S_lambda| exceeds the bound.
std::vector<YoungSubgroupElement> enumerate_young_subgroup(const Partition& lam,
                                                           unsigned long bound = 3628800UL);

// A^tau(k,l) = A(k, tau_k(l)); tau must have one permutation of {1..lambda_k} per row.
YoungTableau row_permute(const YoungTableau& a, const YoungSubgroupElement& tau);
// A_sigma(k,l) = A(sigma_l(k), l); sigma must have one permutation per column.
YoungTableau column_permute(const YoungTableau& a, const YoungSubgroupElement& sigma);

// Strictly increasing tuples (i = i_1 < ... < i_s = j), grouped by length then lex.
using IndexTuple = std::vector<int>;
std::vector<IndexTuple> enumerate_index_tuples(int i, int j);
IndexTuple tuple_complement(const IndexTuple& t, int i, int j);

// Triangular pattern m[i][j] (1 <= i <= j <= n) with m_ij = sum_{k=i..j} gamma_ki.
// Requires a semistandard input; the betweenness conditions then hold.
std::vector<std::vector<int>> gz_pattern(const YoungTableau& a, int n);

// Distinct tableaux obtained by rearranging each row of D(gamma), together with the
// common multiplicity of each in the full row-permutation sum (product of the
// per-row multiset stabilizer sizes).
struct RowOrbit {
    std::vector<YoungTableau> tableaux;
    Integer multiplicity;
};
RowOrbit enumerate_row_arrangements(const ExponentMatrix& gamma);

}  // namespace paraboson
