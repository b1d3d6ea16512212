#pragma once

#include "paraboson/combinatorics.hpp"
#include "paraboson/fockspace.hpp"

namespace paraboson {

// omega_A: signed sum over column permutations of B_A^+ |0>, computed column by
// column as a product of antisymmetrized creation brackets.
FockVector omega_A(const YoungTableau& a, const FockContext& ctx);

// Omega_A: row-symmetrized sum over omega_{A^tau}. Depends on A only through its
// exponent matrix, so it is computed from D(gamma_A) with multiset-arrangement
// multiplicities rather than summing all |S_lambda| permutations.
FockVector Omega_A(const YoungTableau& a, const FockContext& ctx);
FockVector Omega_of_matrix(const ExponentMatrix& gamma, const FockContext& ctx);

// Omega_lambda = Omega_{D(gamma_lambda)} = lambda! omega_lambda; the gl(n)-highest
// weight vector of weight lambda + p/2 (zero in the module when length > p).
FockVector Omega_lambda(const Partition& lam, const FockContext& ctx);

// E^gamma: the ordered monomial in lowering operators E_kj (k > j), applied to v.
// Only the strictly lower-triangular entries of gamma participate.
FockVector apply_E_gamma(const FockContext& ctx, const ExponentMatrix& gamma,
                         const FockVector& v);

// Returns Omega_lambda (possibly the zero vector of the module).
FockVector highest_weight_vector(const Partition& lam, const FockContext& ctx);

struct PbwRecord {
    YoungTableau tableau;
    ExponentMatrix gamma;
    FockVector vector;  // E^{gamma_A} Omega_{lambda_A}
};

// All basis vectors of the given total degree: one per semistandard tableau with
// at most p rows. Each record's monomial expression is checked against the
// symmetrized expression (lambda!/diag(gamma)!) Omega_A; a mismatch throws,
// since it would mean the engine itself is broken.
std::vector<PbwRecord> pbw_basis(const FockEngine& engine, int degree);

// The expansion of E_ij Omega_{D(gamma)} into Omega_{D(gamma + e_ik - e_jk)} terms,
// as a checkable identity. Returns true when the identity holds in the module.
bool check_gl_action_on_omega(const FockEngine& engine, const ExponentMatrix& gamma,
                              int i, int j);

// Power version: when all j-entries of D(gamma) sit in one row k,
// E_ij^m Omega_{D(gamma)} = gamma_jk!/(gamma_jk-m)! Omega_{D(gamma + m(e_ik - e_jk))},
// and zero for m > gamma_jk.
bool check_gl_power_action_on_omega(const FockEngine& engine, const ExponentMatrix& gamma,
                                    int i, int j, int k, int m);

}  // namespace paraboson
