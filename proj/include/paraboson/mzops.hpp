#pragma once

#include "paraboson/bases.hpp"
#include "paraboson/combinatorics.hpp"
#include "paraboson/fockspace.hpp"

namespace paraboson {

// A denominator of the extremal projector vanished on the weight it was applied
// to: (h_i - h_j + 1)_k = 0 with a nonvanishing numerator vector.
class SingularWeightError : public std::runtime_error {
public:
    SingularWeightError(int i, int j, int k);
    int i, j, k;
};

// True when every raising operator E_ab (a < b < limit+1) kills v as a formal
// word combination. limit defaults to n (full gl(n)-highest).
bool is_gl_highest(const FockEngine& engine, const FockVector& v, int limit = 0);

// The gl(n) extremal projector applied to a homogeneous vector: the normally
// ordered product of the rank-one projector series. Each series terminates
// because the raising operators are nilpotent on a fixed weight space.
FockVector extremal_project(const FockEngine& engine, const FockVector& v);

// p B_j^+ and p B_j^- on a highest-weight vector, evaluated through the finite
// closed-form sums (coefficients act first, on the incoming weight).
// Input must be formally gl(n)-highest; throws otherwise.
FockVector project_creation_on_hw(const FockEngine& engine, int j, const FockVector& v_hw);
FockVector project_annihilation_on_hw(const FockEngine& engine, int j, const FockVector& v_hw);

// Raising/lowering generators z_j^{+/-}: the projected operators normalized by
// the right Cartan factors, again evaluated on the incoming weight.
FockVector z_plus(const FockEngine& engine, int j, const FockVector& v_hw);
FockVector z_minus(const FockEngine& engine, int j, const FockVector& v_hw);

// Pair generators via the projector: extremal_project({B_i^pm, B_j^pm} v_hw).
FockVector z_pair_plus(const FockEngine& engine, int i, int j, const FockVector& v_hw);
FockVector z_pair_minus(const FockEngine& engine, int i, int j, const FockVector& v_hw);

// Closed-form scalars: the coefficient of Omega_{lambda +/- eps_j} in
// B_j^{+/-} Omega_lambda.
Rational d_plus(const Partition& lam, int j, int n);
Rational d_minus(const Partition& lam, int j, int n, int p);
// Squared matrix element of the orthonormal basis ladder (rational, no roots).
Rational c_plus_sq(const Partition& lam, int j, int n, int p);

// Scalar relating the z-raising chain to Omega_lambda:
// (z_n^+)^{lambda_n} ... (z_1^+)^{lambda_1} |0> = gz_chain_scalar(lambda) Omega_lambda.
Rational gz_chain_scalar(const Partition& lam, int n);

struct HwTerm {
    Rational coeff;
    ExponentMatrix gamma;
    Partition lam;
};

// Linear combination sum_t coeff_t E^{gamma_t} Omega_{lambda_t}.
struct HwExpansion {
    std::vector<HwTerm> terms;
    FockVector realize(const FockContext& ctx) const;
};

// Expansion of B_j^{sign} Omega_lambda over E^{e_I} Omega_{lambda +/- eps_i}.
// sign is +1 for creation, -1 for annihilation. Terms whose shifted shape is not
// a partition are omitted (their vectors are zero).
HwExpansion expand_B_on_hw(int sign, int j, const Partition& lam, const FockContext& ctx);

// Expansion of B_ell^{sign} E^gamma Omega_lambda over E^{gamma-bar} Omega_{lambda
// +/- eps_i}, with lower-triangular completion of the exponent matrices; terms
// forced to a negative diagonal are dropped as zero.
HwExpansion expand_B_on_Egamma(int sign, int ell, const ExponentMatrix& gamma,
                               const Partition& lam, const FockContext& ctx);

// Lowering generator y_{mj} of the gl(m) > gl(m-1) step, applied to a vector that
// is gl(m-1)-highest; preserves that property. Throws on non-highest input or a
// vanishing denominator.
FockVector y_lower(const FockEngine& engine, int m, int j, const FockVector& v);

struct GzVector {
    YoungTableau tableau;
    FockVector vector;
    Rational norm2;  // squared norm; the normalized vector is (vector, norm2) as a pair
};

// Gelfand-Zetlin basis vector: the y-monomial applied to the z-raising chain.
// Requires a semistandard tableau with at most p rows.
GzVector gz_vector(const FockEngine& engine, const YoungTableau& a);

struct TransitionBlock {
    std::vector<int> weight_counts;
    std::vector<YoungTableau> tableaux;  // block order: exponent-matrix reading lex
    RatMatrix T;     // v_A = sum_B T[A][B] E^{gamma_B} Omega_lambda
    RatMatrix Tinv;  // E^{gamma_A} Omega_lambda = sum_B Tinv[A][B] v_B
};

// Transition matrix between the GZ basis and the monomial basis, one block per
// weight. Throws std::logic_error when triangularity fails (ordering bug) or a
// GZ vector falls outside the monomial span (engine bug). Empty when
// length(lambda) > p.
std::vector<TransitionBlock> transition_matrix(const FockEngine& engine, const Partition& lam);

// n = 3 closed form of one transition row: coefficients over E^{gamma(l)} Omega.
struct ClosedTransitionTerm {
    Rational coeff;
    ExponentMatrix gamma;
};
std::vector<ClosedTransitionTerm> transition_row_closed_n3(const YoungTableau& a,
                                                           const FockContext& ctx);

// GZ vector as an explicit polynomial in creation operators: a combination of
// column-bracket products, one term per row-arrangement tableau.
struct BracketTerm {
    Rational coeff;
    YoungTableau tableau;  // coeff * omega_{tableau}
};
std::vector<BracketTerm> gz_creation_polynomial(const FockEngine& engine, const YoungTableau& a);
FockVector realize_brackets(const std::vector<BracketTerm>& terms, const FockContext& ctx);

}  // namespace paraboson
