#include "paraboson/bases.hpp"

#include <sstream>

namespace paraboson {

FockVector omega_A(const YoungTableau& a, const FockContext& ctx) {
    Partition lam = a.shape();
    if (a.max_entry() > ctx.n) throw std::invalid_argument("omega_A: entry exceeds n");
    Partition conj = lam.conjugate();
    FockVector v = FockVector::vacuum();
    // Rightmost column acts first.
    for (int l = conj.length(); l >= 1; --l) {
        std::vector<int> column;
        for (int k = 1; k <= conj.part(l); ++k) column.push_back(a.at(k, l));
        v = multibracket(column, v);
    }
    return v;
}

FockVector Omega_of_matrix(const ExponentMatrix& gamma, const FockContext& ctx) {
    RowOrbit orbit = enumerate_row_arrangements(gamma);
    FockVector out;
    Rational mult(orbit.multiplicity);
    for (const auto& t : orbit.tableaux) out.add_scaled(omega_A(t, ctx), mult);
    return out;
}

FockVector Omega_A(const YoungTableau& a, const FockContext& ctx) {
    return Omega_of_matrix(exponent_matrix(a, ctx.n), ctx);
}

FockVector Omega_lambda(const Partition& lam, const FockContext& ctx) {
    if (lam.length() > ctx.n) throw std::invalid_argument("Omega_lambda: too many rows");
    ExponentMatrix g(ctx.n);
    for (int i = 1; i <= lam.length(); ++i) g.at(i, i) = lam.part(i);
    return Omega_of_matrix(g, ctx);
}

FockVector apply_E_gamma(const FockContext& ctx, const ExponentMatrix& gamma,
                         const FockVector& v) {
    if (gamma.n() != ctx.n) throw std::invalid_argument("apply_E_gamma: size mismatch");
    FockVector out = v;
    // Product order: k = 2 leftmost, within a block E_k1 ... E_{k,k-1}; the
    // rightmost factor acts first.
    for (int k = ctx.n; k >= 2; --k) {
        for (int j = k - 1; j >= 1; --j) {
            for (int t = 0; t < gamma.at(k, j); ++t) out = apply_gl(ctx, k, j, out);
        }
    }
    return out;
}

FockVector highest_weight_vector(const Partition& lam, const FockContext& ctx) {
    return Omega_lambda(lam, ctx);
}

std::vector<PbwRecord> pbw_basis(const FockEngine& engine, int degree) {
    const FockContext& ctx = engine.ctx();
    if (degree > ctx.degree_bound) {
        std::ostringstream os;
        os << "pbw_basis: degree " << degree << " exceeds configured bound " << ctx.degree_bound;
        throw std::length_error(os.str());
    }
    std::vector<PbwRecord> out;
    std::vector<Partition> shapes = enumerate_partitions(degree, std::min(ctx.n, ctx.p));
    std::sort(shapes.begin(), shapes.end(), shape_order_less);
    for (const auto& lam : shapes) {
        FockVector hw = Omega_lambda(lam, ctx);
        for (const auto& a : enumerate_ssyt(lam, ctx.n)) {
            ExponentMatrix g = exponent_matrix(a, ctx.n);
            PbwRecord rec;
            rec.tableau = a;
            rec.gamma = g;
            rec.vector = apply_E_gamma(ctx, g, hw);

            Rational scale(lam.factorial_product());
            scale /= Rational(g.diag_factorial());
            FockVector rhs = scale * Omega_A(a, ctx);
            if (!engine.equals(rec.vector, rhs))
                throw std::logic_error(
                    "pbw_basis: monomial and symmetrized expressions disagree (engine bug)");
            out.push_back(std::move(rec));
        }
    }
    return out;
}

bool check_gl_action_on_omega(const FockEngine& engine, const ExponentMatrix& gamma,
                              int i, int j) {
    const FockContext& ctx = engine.ctx();
    Partition lam;
    if (!gamma.column_sums_partition(lam))
        throw std::invalid_argument("check_gl_action_on_omega: column sums not a partition");
    FockVector lhs = apply_gl(ctx, i, j, Omega_of_matrix(gamma, ctx));
    FockVector rhs;
    if (i == j) rhs.add_scaled(Omega_of_matrix(gamma, ctx), Rational(ctx.p, 2));
    for (int k = 1; k <= ctx.n; ++k) {
        int c = gamma.at(j, k);
        if (c == 0) continue;
        ExponentMatrix shifted = gamma.plus_unit(i, k).plus_unit(j, k, -1);
        rhs.add_scaled(Omega_of_matrix(shifted, ctx), Rational(c));
    }
    return engine.equals(lhs, rhs);
}

bool check_gl_power_action_on_omega(const FockEngine& engine, const ExponentMatrix& gamma,
                                    int i, int j, int k, int m) {
    const FockContext& ctx = engine.ctx();
    if (i == j) throw std::invalid_argument("power action requires i != j");
    for (int kk = 1; kk <= ctx.n; ++kk)
        if (kk != k && gamma.at(j, kk) != 0)
            throw std::invalid_argument("power action requires all j-entries in one row");
    FockVector lhs = Omega_of_matrix(gamma, ctx);
    for (int t = 0; t < m; ++t) lhs = apply_gl(ctx, i, j, lhs);

    const int cap = gamma.at(j, k);
    if (m > cap) return engine.is_zero(lhs);
    ExponentMatrix shifted = gamma;
    shifted.at(i, k) += m;
    shifted.at(j, k) -= m;
    Rational scale(factorial(static_cast<unsigned long>(cap)));
    scale /= Rational(factorial(static_cast<unsigned long>(cap - m)));
    return engine.equals(lhs, scale * Omega_of_matrix(shifted, ctx));
}

}  // namespace paraboson
