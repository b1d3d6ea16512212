#include "paraboson/mzops.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace paraboson {

namespace {

std::string singular_message(int i, int j, int k) {
    std::ostringstream os;
    os << "extremal projector denominator (h_" << i << " - h_" << j << " + 1)_" << k
       << " vanishes on this weight";
    return os.str();
}

GlWeight weight_of(const FockEngine& engine, const FockVector& v, const char* who) {
    auto counts = v.homogeneous_counts(engine.ctx().n);
    if (!counts) {
        std::ostringstream os;
        os << who << ": vector must be homogeneous of a single weight";
        throw std::invalid_argument(os.str());
    }
    return engine.weight_of_counts(*counts);
}

void require_gl_highest(const FockEngine& engine, const FockVector& v, int limit,
                        const char* who) {
    if (!is_gl_highest(engine, v, limit)) {
        std::ostringstream os;
        os << who << ": input is not a gl-highest-weight vector (level " << limit << ")";
        throw std::invalid_argument(os.str());
    }
}

// E^{e_I} w for an index tuple I = (i_1 < ... < i_s): E_{i_2 i_1} ... E_{i_s i_{s-1}},
// rightmost factor first.
FockVector apply_chain(const FockContext& ctx, const IndexTuple& tuple, FockVector w) {
    for (int u = static_cast<int>(tuple.size()) - 1; u >= 1; --u)
        w = apply_gl(ctx, tuple[u], tuple[u - 1], w);
    return w;
}

ExponentMatrix matrix_of_tuple(const IndexTuple& tuple, int n) {
    ExponentMatrix m(n);
    for (std::size_t u = 0; u + 1 < tuple.size(); ++u) ++m.at(tuple[u + 1], tuple[u]);
    return m;
}

// Lower-triangular completion: keep the strictly lower part, set the diagonal so
// column sums equal the target shape. Returns false when a diagonal entry would
// be negative (the monomial over-lowers and the vector is zero).
bool complete_lower_triangular(const std::vector<std::vector<int>>& scratch,
                               const Partition& target, int n, ExponentMatrix& out) {
    out = ExponentMatrix(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            if (scratch[i - 1][j - 1] < 0) throw std::logic_error("negative lower entry");
            out.at(i, j) = scratch[i - 1][j - 1];
        }
    for (int l = 1; l <= n; ++l) {
        int below = 0;
        for (int m = l + 1; m <= n; ++m) below += out.at(m, l);
        int diag = target.part(l) - below;
        if (diag < 0) return false;
        out.at(l, l) = diag;
    }
    return true;
}

}  // namespace

SingularWeightError::SingularWeightError(int i_, int j_, int k_)
    : std::runtime_error(singular_message(i_, j_, k_)), i(i_), j(j_), k(k_) {}

bool is_gl_highest(const FockEngine& engine, const FockVector& v, int limit) {
    const FockContext& ctx = engine.ctx();
    const int top = limit == 0 ? ctx.n : limit;
    for (int a = 1; a <= top; ++a)
        for (int b = a + 1; b <= top; ++b)
            if (!apply_gl(ctx, a, b, v).empty()) return false;
    return true;
}

FockVector extremal_project(const FockEngine& engine, const FockVector& v) {
    const FockContext& ctx = engine.ctx();
    if (v.empty()) return v;
    GlWeight wt = weight_of(engine, v, "extremal_project");

    // Normal order: pairs (i,j) sorted by j then i; the rightmost factor acts first.
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= ctx.n; ++j)
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);

    FockVector cur = v;
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        auto [i, j] = *it;
        FockVector acc = cur;
        FockVector raised = cur;
        const long base = wt.h_diff(i, j) + 1;
        Rational kfact(1), poch(1);
        for (int k = 1;; ++k) {
            raised = apply_gl(ctx, i, j, raised);
            if (raised.empty()) break;
            kfact *= k;
            poch *= Rational(base + k - 1);
            if (poch == 0) throw SingularWeightError(i, j, k);
            FockVector lowered = raised;
            for (int t = 0; t < k; ++t) lowered = apply_gl(ctx, j, i, lowered);
            acc.add_scaled(lowered, Rational(k % 2 ? -1 : 1) / (kfact * poch));
        }
        cur = acc;
    }
    return cur;
}

FockVector project_creation_on_hw(const FockEngine& engine, int j, const FockVector& v_hw) {
    const FockContext& ctx = engine.ctx();
    if (j < 1 || j > ctx.n) throw std::invalid_argument("project_creation_on_hw: bad index");
    if (v_hw.empty()) return v_hw;
    require_gl_highest(engine, v_hw, 0, "project_creation_on_hw");
    GlWeight wt = weight_of(engine, v_hw, "project_creation_on_hw");

    FockVector out;
    for (int i = 1; i <= j; ++i) {
        Rational denom(1);
        for (int l = i; l <= j - 1; ++l) {
            long f = wt.h_diff(l, j);
            if (f == 0) throw SingularWeightError(l, j, 1);
            denom *= Rational(f);
        }
        for (const auto& tuple : enumerate_index_tuples(i, j)) {
            Rational num(1);
            for (int l : tuple_complement(tuple, i, j)) num *= Rational(wt.h_diff(l, j) - 1);
            int sign = (tuple.size() - 1) % 2 ? -1 : 1;
            Rational coeff = Rational(sign) * num / denom;
            if (coeff == 0) continue;
            out.add_scaled(apply_chain(ctx, tuple, apply_creation(i, v_hw)), coeff);
        }
    }
    return out;
}

FockVector project_annihilation_on_hw(const FockEngine& engine, int j, const FockVector& v_hw) {
    const FockContext& ctx = engine.ctx();
    if (j < 1 || j > ctx.n) throw std::invalid_argument("project_annihilation_on_hw: bad index");
    if (v_hw.empty()) return v_hw;
    require_gl_highest(engine, v_hw, 0, "project_annihilation_on_hw");
    GlWeight wt = weight_of(engine, v_hw, "project_annihilation_on_hw");

    FockVector out;
    for (int i = j; i <= ctx.n; ++i) {
        for (const auto& tuple : enumerate_index_tuples(j, i)) {
            Rational denom(1);
            for (int l : tuple) {
                if (l == j) continue;
                long f = wt.h_diff(j, l);
                if (f == 0) throw SingularWeightError(j, l, 1);
                denom *= Rational(f);
            }
            out.add_scaled(apply_chain(ctx, tuple, engine.apply_annihilation(i, v_hw)),
                           1 / denom);
        }
    }
    return out;
}

FockVector z_plus(const FockEngine& engine, int j, const FockVector& v_hw) {
    if (v_hw.empty()) return v_hw;
    GlWeight wt = weight_of(engine, v_hw, "z_plus");
    Rational scale(1);
    for (int l = 1; l <= j - 1; ++l) scale *= Rational(wt.h_diff(l, j));
    return scale * project_creation_on_hw(engine, j, v_hw);
}

FockVector z_minus(const FockEngine& engine, int j, const FockVector& v_hw) {
    if (v_hw.empty()) return v_hw;
    const FockContext& ctx = engine.ctx();
    GlWeight wt = weight_of(engine, v_hw, "z_minus");
    Rational scale(1);
    for (int l = j + 1; l <= ctx.n; ++l) scale *= Rational(wt.h_diff(j, l));
    return scale * project_annihilation_on_hw(engine, j, v_hw);
}

FockVector z_pair_plus(const FockEngine& engine, int i, int j, const FockVector& v_hw) {
    if (v_hw.empty()) return v_hw;
    require_gl_highest(engine, v_hw, 0, "z_pair_plus");
    FockVector w = apply_creation(i, apply_creation(j, v_hw));
    w += apply_creation(j, apply_creation(i, v_hw));
    return extremal_project(engine, w);
}

FockVector z_pair_minus(const FockEngine& engine, int i, int j, const FockVector& v_hw) {
    if (v_hw.empty()) return v_hw;
    require_gl_highest(engine, v_hw, 0, "z_pair_minus");
    FockVector w = engine.apply_annihilation(i, engine.apply_annihilation(j, v_hw));
    w += engine.apply_annihilation(j, engine.apply_annihilation(i, v_hw));
    return extremal_project(engine, w);
}

Rational d_plus(const Partition& lam, int j, int n) {
    long s = 0;
    for (int a = j; a <= n; ++a)
        s += static_cast<long>(a + 1) * (lam.part(a) - lam.part(a + 1) + (a == j ? 1 : 0));
    Rational r(parity2(s) ? -1 : 1);
    r /= Rational(static_cast<long>(lam.part(j) + 1) * j);
    for (int l = 1; l <= j - 1; ++l) {
        long diff = lam.part(j) - lam.part(l);
        r *= Rational(diff - j + l + 1);
        r /= Rational(diff - j + l + parity2(diff));
    }
    return r;
}

Rational d_minus(const Partition& lam, int j, int n, int p) {
    long s = 0;
    for (int a = j; a <= n; ++a)
        s += static_cast<long>(a + 1) * (lam.part(a) - lam.part(a + 1));
    Rational r(parity2(s) ? -1 : 1);
    r *= Rational(static_cast<long>(lam.part(j)) * j);
    r *= Rational(lam.part(j) + n - j + parity2(lam.part(j)) * (p - n));
    for (int l = j + 1; l <= n; ++l) {
        long diff = lam.part(j) - lam.part(l);
        r *= Rational(diff - j + l - 1);
        r /= Rational(diff - j + l - parity2(diff));
    }
    return r;
}

Rational c_plus_sq(const Partition& lam, int j, int n, int p) {
    Rational r(1);
    for (int l = 1; l <= j - 1; ++l) {
        long diff = lam.part(j) - lam.part(l);
        r *= Rational(diff - j + l + 1);
        r /= Rational(diff - j + l);
    }
    r *= Rational(lam.part(j) + n + 1 - j + parity2(lam.part(j) + 1) * (p - n));
    for (int l = 1; l <= n; ++l) {
        if (l == j) continue;
        long diff = lam.part(j) - lam.part(l);
        r *= Rational(diff - j + l);
        r /= Rational(diff - j + l + parity2(diff));
    }
    return r;
}

Rational gz_chain_scalar(const Partition& lam, int n) {
    Rational d(1);
    for (int j = 1; j <= n; ++j) {
        const long lj = lam.part(j);
        long sexp = static_cast<long>(j + 1) * (lj * (lj + 1) / 2);
        Rational stage(parity2(sexp) ? -1 : 1);
        stage /= Rational(factorial(static_cast<unsigned long>(lj)));
        Integer jp;
        mpz_ui_pow_ui(jp.get_mpz_t(), static_cast<unsigned long>(j),
                      static_cast<unsigned long>(lj));
        stage /= Rational(jp);
        for (long k = 0; k < lj; ++k)
            for (int l = 1; l <= j - 1; ++l)
                stage *= Rational(lam.part(l) - k + j - l - 1 + parity2(k - lam.part(l)));
        d *= stage;
    }
    return d;
}

FockVector HwExpansion::realize(const FockContext& ctx) const {
    FockVector out;
    for (const auto& term : terms)
        out.add_scaled(apply_E_gamma(ctx, term.gamma, Omega_lambda(term.lam, ctx)), term.coeff);
    return out;
}

HwExpansion expand_B_on_hw(int sign, int j, const Partition& lam, const FockContext& ctx) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("expand_B_on_hw: sign must be +-1");
    const int n = ctx.n;
    HwExpansion exp;
    if (sign > 0) {
        for (int i = 1; i <= j; ++i) {
            Partition shifted;
            if (!try_add_cell_row(lam, i, shifted)) continue;
            Rational denom(1);
            for (int l = i + 1; l <= j; ++l)
                denom *= Rational(static_cast<long>(lam.part(i) - lam.part(l)) - i + l);
            for (const auto& tuple : enumerate_index_tuples(i, j)) {
                Rational num = d_plus(lam, i, n);
                for (int l : tuple_complement(tuple, i, j))
                    num *= Rational(static_cast<long>(lam.part(i) - lam.part(l)) - i + l + 1);
                Rational coeff = num / denom;
                if (coeff == 0) continue;
                exp.terms.push_back({coeff, matrix_of_tuple(tuple, n), shifted});
            }
        }
    } else {
        for (int i = j; i <= n; ++i) {
            Partition shifted;
            if (!try_remove_cell_row(lam, i, shifted)) continue;
            for (const auto& tuple : enumerate_index_tuples(j, i)) {
                Rational denom(1);
                for (int l : tuple) {
                    if (l == i) continue;
                    denom *= Rational(static_cast<long>(lam.part(i) - lam.part(l)) - i + l);
                }
                Rational coeff = d_minus(lam, i, n, ctx.p) / denom;
                if (coeff == 0) continue;
                exp.terms.push_back({coeff, matrix_of_tuple(tuple, n), shifted});
            }
        }
    }
    return exp;
}

HwExpansion expand_B_on_Egamma(int sign, int ell, const ExponentMatrix& gamma,
                               const Partition& lam, const FockContext& ctx) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("expand_B_on_Egamma: sign must be +-1");
    if (!gamma.is_lower_triangular())
        throw std::invalid_argument("expand_B_on_Egamma: gamma must be lower triangular");
    const int n = ctx.n;

    // Inner steps shared by both signs: given the residual matrix g1 (after the
    // first commutation step) and the hw expansion term (tuple I, shifted shape),
    // rewrite E^{g1} E^{e_I} into ordered monomials and complete the diagonals.
    HwExpansion out;
    auto emit = [&](const std::vector<std::vector<int>>& g1, const Rational& prefix,
                    const Partition& lam_shifted, const IndexTuple& tuple,
                    const Rational& tuple_coeff) {
        const int s = static_cast<int>(tuple.size());
        // Enumerate v_u in {i_u, ..., n} for u = 2..s.
        std::vector<int> v(std::max(0, s - 1), 0);
        auto rec = [&](auto&& self, int u, std::vector<std::vector<int>> scratch,
                       Rational coeff) -> void {
            if (u == s) {
                ExponentMatrix bar;
                if (!complete_lower_triangular(scratch, lam_shifted, n, bar)) return;
                out.terms.push_back({prefix * tuple_coeff * coeff, bar, lam_shifted});
                return;
            }
            const int iu_prev = tuple[u - 1];
            const int iu = tuple[u];
            for (int vu = iu; vu <= n; ++vu) {
                Rational factor(1);
                if (vu != iu) {
                    factor = Rational(scratch[vu - 1][iu - 1]);
                    if (factor == 0) continue;
                }
                auto next = scratch;
                next[vu - 1][iu_prev - 1] += 1;
                next[vu - 1][iu - 1] -= 1;
                self(self, u + 1, std::move(next), coeff * factor);
            }
        };
        rec(rec, 1, g1, Rational(1));
    };

    auto to_scratch = [&](const ExponentMatrix& g) {
        std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) s[i - 1][j - 1] = g.at(i, j);
        return s;
    };

    if (sign > 0) {
        for (int j = ell; j <= n; ++j) {
            for (const auto& jt : enumerate_index_tuples(ell, j)) {
                Rational cj(1);
                auto g1 = to_scratch(gamma);
                bool dead = false;
                for (std::size_t u = 0; u + 1 < jt.size(); ++u) {
                    int entry = g1[jt[u + 1] - 1][jt[u] - 1];
                    if (entry == 0) { dead = true; break; }
                    cj *= Rational(entry);
                    g1[jt[u + 1] - 1][jt[u] - 1] -= 1;
                }
                if (dead) continue;
                if ((jt.size() - 1) % 2) cj = -cj;

                // B_j^+ Omega_lambda expansion.
                for (int i = 1; i <= j; ++i) {
                    Partition shifted;
                    if (!try_add_cell_row(lam, i, shifted)) continue;
                    Rational denom(1);
                    for (int l = i + 1; l <= j; ++l)
                        denom *= Rational(static_cast<long>(lam.part(i) - lam.part(l)) - i + l);
                    for (const auto& it : enumerate_index_tuples(i, j)) {
                        Rational num = d_plus(lam, i, n);
                        for (int l : tuple_complement(it, i, j))
                            num *= Rational(static_cast<long>(lam.part(i) - lam.part(l)) - i +
                                            l + 1);
                        Rational ci = num / denom;
                        if (ci == 0) continue;
                        emit(g1, cj, shifted, it, ci);
                    }
                }
            }
        }
    } else {
        for (int j = 1; j <= ell; ++j) {
            Rational cj(1);
            auto g1 = to_scratch(gamma);
            if (j != ell) {
                int entry = g1[ell - 1][j - 1];
                if (entry == 0) continue;
                cj = Rational(entry);
                g1[ell - 1][j - 1] -= 1;
            } else {
                g1[ell - 1][ell - 1] -= 1;  // diagonal is scratch, recomputed on completion
            }
            for (int i = j; i <= n; ++i) {
                Partition shifted;
                if (!try_remove_cell_row(lam, i, shifted)) continue;
                for (const auto& it : enumerate_index_tuples(j, i)) {
                    Rational denom(1);
                    for (int l : it) {
                        if (l == i) continue;
                        denom *= Rational(static_cast<long>(lam.part(i) - lam.part(l)) - i + l);
                    }
                    Rational ci = d_minus(lam, i, n, ctx.p) / denom;
                    if (ci == 0) continue;
                    emit(g1, cj, shifted, it, ci);
                }
            }
        }
    }

    // Merge identical (gamma, lambda) terms for a canonical expansion.
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> merged;
    for (const auto& t : out.terms) {
        auto key = std::make_pair(t.gamma.reading(), t.lam.padded(n));
        merged[key] += t.coeff;
    }
    HwExpansion canonical;
    for (const auto& t : out.terms) {
        auto key = std::make_pair(t.gamma.reading(), t.lam.padded(n));
        auto it = merged.find(key);
        if (it == merged.end()) continue;
        if (it->second != 0) canonical.terms.push_back({it->second, t.gamma, t.lam});
        merged.erase(it);
    }
    return canonical;
}

FockVector y_lower(const FockEngine& engine, int m, int j, const FockVector& v) {
    const FockContext& ctx = engine.ctx();
    if (m < 2 || m > ctx.n || j < 1 || j >= m) throw std::invalid_argument("y_lower: bad indices");
    if (v.empty()) return v;
    require_gl_highest(engine, v, m - 1, "y_lower");
    GlWeight wt = weight_of(engine, v, "y_lower");

    FockVector out = apply_gl(ctx, m, j, v);
    for (int i = j + 1; i <= m - 1; ++i) {
        for (const auto& tuple : enumerate_index_tuples(j, i)) {
            if (tuple.size() < 2) continue;
            Rational denom(1);
            for (int l : tuple) {
                if (l == j) continue;
                long f = wt.h_diff(j, l);
                if (f == 0) throw SingularWeightError(j, l, 1);
                denom *= Rational(f);
            }
            FockVector w = apply_gl(ctx, m, tuple.back(), v);
            w = apply_chain(ctx, tuple, std::move(w));
            out.add_scaled(w, 1 / denom);
        }
    }
    Rational scale(1);
    for (int l = j + 1; l <= m - 1; ++l) scale *= Rational(wt.h_diff(j, l));
    return scale * out;
}

GzVector gz_vector(const FockEngine& engine, const YoungTableau& a) {
    const FockContext& ctx = engine.ctx();
    if (!a.semistandard()) throw std::invalid_argument("gz_vector: tableau not semistandard");
    Partition lam = a.shape();
    if (lam.length() > ctx.p)
        throw std::invalid_argument("gz_vector: tableau has more rows than the order p");
    ExponentMatrix g = exponent_matrix(a, ctx.n);

    GzVector out;
    out.tableau = a;
    FockVector v = FockVector::vacuum();
    for (int j = 1; j <= ctx.n; ++j)
        for (int t = 0; t < lam.part(j); ++t) v = z_plus(engine, j, v);
    for (int k = ctx.n; k >= 2; --k)
        for (int l = k - 1; l >= 1; --l)
            for (int t = 0; t < g.at(k, l); ++t) v = y_lower(engine, k, l, v);
    out.norm2 = engine.inner_product(v, v);
    out.vector = std::move(v);
    return out;
}

std::vector<TransitionBlock> transition_matrix(const FockEngine& engine, const Partition& lam) {
    const FockContext& ctx = engine.ctx();
    std::vector<TransitionBlock> blocks;
    if (lam.length() > ctx.p) return blocks;

    auto tabs = enumerate_ssyt(lam, ctx.n);
    std::map<std::vector<int>, std::vector<YoungTableau>> by_weight;
    for (const auto& a : tabs) by_weight[a.weight(ctx.n)].push_back(a);

    FockVector hw = Omega_lambda(lam, ctx);
    for (auto& [counts, group] : by_weight) {
        std::sort(group.begin(), group.end(), [&](const YoungTableau& x, const YoungTableau& y) {
            return exponent_matrix(x, ctx.n).reading() < exponent_matrix(y, ctx.n).reading();
        });
        const std::size_t m = group.size();

        std::vector<std::vector<Rational>> cols(m);
        std::size_t dim = 0;
        for (std::size_t b = 0; b < m; ++b) {
            FockVector u = apply_E_gamma(ctx, exponent_matrix(group[b], ctx.n), hw);
            auto can = engine.canonical_form(u);
            if (can.coords.empty())
                throw std::logic_error("transition_matrix: basis vector vanishes (engine bug)");
            cols[b] = can.coords;
            dim = can.coords.size();
        }
        RatMatrix basis(dim, m);
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t r = 0; r < dim; ++r) basis.at(r, b) = cols[b][r];

        TransitionBlock block;
        block.weight_counts = counts;
        block.tableaux = group;
        block.T = RatMatrix(m, m);
        for (std::size_t arow = 0; arow < m; ++arow) {
            GzVector gz = gz_vector(engine, group[arow]);
            auto can = engine.canonical_form(gz.vector);
            std::vector<Rational> target(dim, Rational(0));
            if (!can.coords.empty()) {
                if (can.counts != counts)
                    throw std::logic_error("transition_matrix: GZ vector weight mismatch");
                target = can.coords;
            }
            auto sol = solve_in_span(basis, target);
            if (!sol)
                throw std::logic_error("transition_matrix: GZ vector outside span (engine bug)");
            for (std::size_t b = 0; b < m; ++b) block.T.at(arow, b) = (*sol)[b];
        }
        for (std::size_t arow = 0; arow < m; ++arow) {
            if (block.T.at(arow, arow) == 0)
                throw std::logic_error("transition_matrix: zero diagonal entry");
            for (std::size_t b = 0; b < arow; ++b)
                if (block.T.at(arow, b) != 0)
                    throw std::logic_error("transition_matrix: triangularity violated");
        }
        // Upper-triangular inverse by back substitution.
        block.Tinv = RatMatrix(m, m);
        for (std::size_t col = 0; col < m; ++col) {
            std::vector<Rational> x(m, Rational(0));
            for (std::size_t r = col + 1; r-- > 0;) {
                Rational s = (r == col) ? Rational(1) : Rational(0);
                for (std::size_t cmid = r + 1; cmid <= col; ++cmid)
                    s -= block.T.at(r, cmid) * x[cmid];
                x[r] = s / block.T.at(r, r);
            }
            for (std::size_t r = 0; r < m; ++r) block.Tinv.at(r, col) = x[r];
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::vector<ClosedTransitionTerm> transition_row_closed_n3(const YoungTableau& a,
                                                           const FockContext& ctx) {
    if (ctx.n != 3) throw std::invalid_argument("transition_row_closed_n3: requires n = 3");
    if (!a.semistandard())
        throw std::invalid_argument("transition_row_closed_n3: tableau not semistandard");
    Partition lam = a.shape();
    ExponentMatrix g = exponent_matrix(a, 3);
    const int g31 = g.at(3, 1), g32 = g.at(3, 2);
    const Rational d = gz_chain_scalar(lam, 3);

    std::vector<ClosedTransitionTerm> row;
    for (int l = 0; l <= g31; ++l) {
        if (l > lam.part(2) - lam.part(3) - g32) break;  // vanishing rule
        Rational coeff = d * Rational(binomial(g31, l));
        coeff *= pochhammer(Rational(lam.part(1) - lam.part(2) + 2 - g31 + g32 + l),
                            static_cast<unsigned>(g31 - l));
        ExponentMatrix gl = g;
        gl.at(2, 1) += l;
        gl.at(3, 1) -= l;
        gl.at(3, 2) += l;
        gl.at(2, 2) -= l;
        row.push_back({coeff, gl});
    }
    return row;
}

std::vector<BracketTerm> gz_creation_polynomial(const FockEngine& engine, const YoungTableau& a) {
    const FockContext& ctx = engine.ctx();
    Partition lam = a.shape();
    auto blocks = transition_matrix(engine, lam);
    const auto counts = a.weight(ctx.n);

    std::vector<BracketTerm> terms;
    for (const auto& block : blocks) {
        if (block.weight_counts != counts) continue;
        std::size_t arow = block.tableaux.size();
        for (std::size_t r = 0; r < block.tableaux.size(); ++r)
            if (block.tableaux[r] == a) { arow = r; break; }
        if (arow == block.tableaux.size())
            throw std::invalid_argument("gz_creation_polynomial: tableau not in its block");
        Rational lam_fact(lam.factorial_product());
        for (std::size_t b = 0; b < block.tableaux.size(); ++b) {
            Rational t = block.T.at(arow, b);
            if (t == 0) continue;
            ExponentMatrix gb = exponent_matrix(block.tableaux[b], ctx.n);
            Rational omega_coeff = t * lam_fact / Rational(gb.diag_factorial());
            RowOrbit orbit = enumerate_row_arrangements(gb);
            Rational per_term = omega_coeff * Rational(orbit.multiplicity);
            for (const auto& tab : orbit.tableaux) terms.push_back({per_term, tab});
        }
        return terms;
    }
    throw std::invalid_argument("gz_creation_polynomial: weight block not found");
}

FockVector realize_brackets(const std::vector<BracketTerm>& terms, const FockContext& ctx) {
    FockVector out;
    for (const auto& t : terms) out.add_scaled(omega_A(t.tableau, ctx), t.coeff);
    return out;
}

}  // namespace paraboson
