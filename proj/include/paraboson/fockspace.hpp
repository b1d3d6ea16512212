#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paraboson/exactlinalg.hpp"
#include "paraboson/rational.hpp"

namespace paraboson {

// One Fock space: n paraboson modes of order p. Identities quantified over all p
// are checked by instantiating several contexts.
struct FockContext {
    int n = 1;
    int p = 1;
    int degree_bound = 8;
};

// Sequence of mode indices; the leftmost letter is the outermost (last-applied)
// creation operator, so (i1,...,ik) stands for B_{i1}^+ ... B_{ik}^+ |0>.
using Word = std::vector<int>;

// Letter multiplicities of a word; together with p this fixes the gl(n) weight.
std::vector<int> word_counts(const Word& w, int n);

// gl(n) weight, stored as doubled entries 2*mu_i = p + 2*count_i so the p/2
// offsets stay integral.
class GlWeight {
public:
    GlWeight() = default;
    static GlWeight from_counts(const FockContext& ctx, const std::vector<int>& counts);

    const std::vector<int>& twice() const { return twice_; }
    Rational mu(int i) const { return Rational(twice_[i - 1], 2); }
    // h_i = E_ii - i + 1 evaluated on this weight.
    Rational h(int i) const { return Rational(twice_[i - 1] - 2 * (i - 1), 2); }
    // h_i - h_j, always an integer on word weights.
    long h_diff(int i, int j) const { return (twice_[i - 1] - twice_[j - 1]) / 2 - (i - j); }
    int degree(int p) const;

    friend bool operator==(const GlWeight&, const GlWeight&) = default;

private:
    std::vector<int> twice_;
};

// Finite rational combination of creation words. No zero coefficients are stored.
// A vector may be a formal sum across several weights; homogeneous_counts()
// reports the common letter-count vector when there is one.
class FockVector {
public:
    FockVector() = default;
    static FockVector vacuum() {
        FockVector v;
        v.add(Word{}, Rational(1));
        return v;
    }
    static FockVector single(Word w, Rational c = Rational(1)) {
        FockVector v;
        v.add(std::move(w), std::move(c));
        return v;
    }

    void add(Word w, Rational c);
    void add_scaled(const FockVector& other, const Rational& c);
    FockVector& operator+=(const FockVector& other);
    FockVector& operator-=(const FockVector& other);
    FockVector& operator*=(const Rational& c);

    bool empty() const { return terms_.empty(); }  // formally zero
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, Rational>& terms() const { return terms_; }
    Rational coeff(const Word& w) const;

    std::optional<std::vector<int>> homogeneous_counts(int n) const;
    // Splits by letter-count vector; deterministic order.
    std::map<std::vector<int>, FockVector> split_by_counts(int n) const;

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    std::map<Word, Rational> terms_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(const Rational& c, FockVector v);

// B_j^+ : prepend letter j to every word.
FockVector apply_creation(int j, const FockVector& v);

// E_ij = (1/2){B_i^+, B_j^-}: substitute i for each j-letter, plus delta_ij (p/2).
FockVector apply_gl(const FockContext& ctx, int i, int j, const FockVector& v);

// Antisymmetrized creation product [B_{i1}^+,...,B_{ik}^+] applied to v.
FockVector multibracket(const std::vector<int>& indices, const FockVector& v);

// Per-weight data: word list in lex order, Gram matrix of the inner product,
// and the canonical pivot words (first linearly independent in word order).
struct WeightSpace {
    std::vector<int> counts;
    std::vector<Word> words;
    RatMatrix gram;
    std::vector<int> pivots;  // indices into words
    int rank = 0;

    int index_of(const Word& w) const;
};

// Engine for one context: derived annihilation action, inner products, and the
// per-weight Gram caches that realize equality in the simple module (two formal
// vectors may be the same module element; equality always means modulo the
// kernel of the Gram pairing).
//
// Caches are memoized per weight and guarded by a mutex; concurrent lookups are
// safe and duplicated fills are idempotent.
class FockEngine {
public:
    explicit FockEngine(FockContext ctx) : ctx_(ctx) {}
    const FockContext& ctx() const { return ctx_; }

    // B_j^- via the recursion B_j^-(B_i^+ u) = 2 E_ij u - B_i^+(B_j^- u), B_j^-|0> = 0.
    FockVector apply_annihilation(int j, const FockVector& v) const;

    Rational inner_product(const FockVector& u, const FockVector& w) const;

    // Weight-space cache for the given letter counts. Throws when the degree
    // exceeds ctx.degree_bound.
    const WeightSpace& space(const std::vector<int>& counts) const;

    bool is_zero(const FockVector& v) const;              // zero in the module
    bool equals(const FockVector& u, const FockVector& w) const;

    // Coordinates of v over the pivot words of its weight space (v modulo the
    // radical). Requires a homogeneous vector; the zero vector yields {}.
    struct Canonical {
        std::vector<int> counts;
        std::vector<Rational> coords;
    };
    Canonical canonical_form(const FockVector& v) const;

    // Basis of the formal singular vectors of a weight space: kernel of all
    // raising operators E_ij, i<j, as formal linear algebra.
    std::vector<FockVector> singular_basis(const std::vector<int>& counts) const;

    GlWeight weight_of_counts(const std::vector<int>& counts) const {
        return GlWeight::from_counts(ctx_, counts);
    }

private:
    FockVector annihilate_word(int j, const Word& w) const;
    Rational word_ip(const Word& u, const Word& w) const;

    FockContext ctx_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, Word>, FockVector> annih_memo_;
    mutable std::map<std::pair<Word, Word>, Rational> ip_memo_;
    mutable std::map<std::vector<int>, WeightSpace> spaces_;
};

// All words with the given letter counts, lex order.
std::vector<Word> words_with_counts(const std::vector<int>& counts);

}  // namespace paraboson
