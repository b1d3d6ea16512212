#include "paraboson/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace paraboson {

namespace {

std::vector<Word> all_words_up_to(int n, int maxdeg) {
    std::vector<Word> out;
    out.push_back({});
    std::size_t begin = 0;
    for (int d = 1; d <= maxdeg; ++d) {
        std::size_t end = out.size();
        for (std::size_t t = begin; t < end; ++t)
            for (int letter = 1; letter <= n; ++letter) {
                Word w = out[t];
                w.push_back(letter);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

FockVector apply_b(const FockEngine& eng, int sign, int idx, const FockVector& v) {
    return sign > 0 ? apply_creation(idx, v) : eng.apply_annihilation(idx, v);
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
    return os.str();
}

std::string lam_str(const Partition& lam) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < lam.length(); ++i) {
        if (i) os << ',';
        os << lam.parts()[i];
    }
    os << ')';
    return os.str();
}

CheckResult tally(const std::string& name, long cases, const std::string& first_failure) {
    CheckResult r;
    r.name = name;
    r.pass = first_failure.empty();
    std::ostringstream os;
    if (r.pass) os << cases << " cases";
    else os << "failed: " << first_failure;
    r.detail = os.str();
    return r;
}

std::vector<Partition> partitions_up_to(int maxsize, int maxlen) {
    std::vector<Partition> out;
    for (int d = 0; d <= maxsize; ++d)
        for (auto& lam : enumerate_partitions(d, maxlen)) out.push_back(std::move(lam));
    return out;
}

// All n x n non-negative matrices with the given column sums.
std::vector<ExponentMatrix> matrices_with_column_sums(const Partition& lam, int n,
                                                      bool lower_triangular_only) {
    std::vector<ExponentMatrix> out;
    ExponentMatrix cur(n);
    auto fill_col = [&](auto&& self, int col, int row, int remaining) -> void {
        if (row == n) {
            if (remaining != 0) return;
            if (col == n) {
                out.push_back(cur);
                return;
            }
            self(self, col + 1, 1, lam.part(col + 1));
            return;
        }
        int hi = remaining;
        if (lower_triangular_only && row < col) hi = 0;
        for (int v = 0; v <= hi; ++v) {
            cur.at(row, col) = v;
            self(self, col, row + 1, remaining - v);
            cur.at(row, col) = 0;
        }
    };
    fill_col(fill_col, 1, 1, lam.part(1));
    return out;
}

std::vector<std::vector<int>> counts_of_degree(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == n - 1) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> suite_relations(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    FockContext ctx{cfg.n, cfg.p, std::max(8, cfg.deg + 4)};
    FockEngine eng(ctx);
    const auto words = all_words_up_to(cfg.n, cfg.deg);

    {
        long cases = 0;
        std::string fail;
        const int signs[2] = {1, -1};
        for (const auto& w : words) {
            FockVector v = FockVector::single(w);
            for (int xi : signs)
                for (int eta : signs)
                    for (int eps : signs)
                        for (int i = 1; i <= cfg.n && fail.empty(); ++i)
                            for (int j = 1; j <= cfg.n; ++j)
                                for (int l = 1; l <= cfg.n; ++l) {
                                    auto anti = [&](const FockVector& u) {
                                        return apply_b(eng, xi, i, apply_b(eng, eta, j, u)) +
                                               apply_b(eng, eta, j, apply_b(eng, xi, i, u));
                                    };
                                    FockVector lhs = anti(apply_b(eng, eps, l, v));
                                    lhs -= apply_b(eng, eps, l, anti(v));
                                    FockVector rhs;
                                    if (j == l)
                                        rhs.add_scaled(apply_b(eng, xi, i, v),
                                                       Rational(eps - eta));
                                    if (i == l)
                                        rhs.add_scaled(apply_b(eng, eta, j, v),
                                                       Rational(eps - xi));
                                    ++cases;
                                    if (!eng.equals(lhs, rhs) && fail.empty()) {
                                        std::ostringstream os;
                                        os << "triple relation at word " << word_str(w)
                                           << " (i,j,l)=(" << i << ',' << j << ',' << l
                                           << ") signs (" << xi << ',' << eta << ',' << eps
                                           << ')';
                                        fail = os.str();
                                    }
                                }
        }
        out.push_back(tally("triple relations", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& w : words) {
            FockVector v = FockVector::single(w);
            for (int i = 1; i <= cfg.n && fail.empty(); ++i)
                for (int j = 1; j <= cfg.n; ++j)
                    for (int k = 1; k <= cfg.n; ++k)
                        for (int l = 1; l <= cfg.n; ++l) {
                            FockVector lhs = apply_gl(ctx, i, j, apply_gl(ctx, k, l, v));
                            lhs -= apply_gl(ctx, k, l, apply_gl(ctx, i, j, v));
                            FockVector rhs;
                            if (j == k) rhs += apply_gl(ctx, i, l, v);
                            if (i == l) rhs -= apply_gl(ctx, k, j, v);
                            ++cases;
                            if (!(lhs == rhs) && fail.empty())
                                fail = "gl commutator at word " + word_str(w);
                        }
        }
        out.push_back(tally("gl(n) commutation relations", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        const auto small = all_words_up_to(cfg.n, std::min(cfg.deg, 3));
        for (const auto& u : small)
            for (const auto& w : words) {
                if (w.size() != u.size() + 1) continue;
                for (int j = 1; j <= cfg.n; ++j) {
                    Rational lhs = eng.inner_product(apply_creation(j, FockVector::single(u)),
                                                     FockVector::single(w));
                    Rational rhs = eng.inner_product(
                        FockVector::single(u),
                        eng.apply_annihilation(j, FockVector::single(w)));
                    ++cases;
                    if (lhs != rhs && fail.empty())
                        fail = "adjointness at " + word_str(u) + ", " + word_str(w);
                }
            }
        out.push_back(tally("creation/annihilation adjointness", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (int d = 0; d <= std::min(cfg.deg, 4); ++d)
            for (const auto& counts : counts_of_degree(cfg.n, d)) {
                const auto ws = words_with_counts(counts);
                for (std::size_t a = 0; a < ws.size(); ++a)
                    for (std::size_t b = a; b < ws.size(); ++b) {
                        Rational xy = eng.inner_product(FockVector::single(ws[a]),
                                                        FockVector::single(ws[b]));
                        Rational yx = eng.inner_product(FockVector::single(ws[b]),
                                                        FockVector::single(ws[a]));
                        ++cases;
                        if (xy != yx && fail.empty())
                            fail = "symmetry at " + word_str(ws[a]) + ", " + word_str(ws[b]);
                    }
            }
        out.push_back(tally("inner product symmetry", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (int d = 0; d <= cfg.deg; ++d)
            for (const auto& counts : counts_of_degree(cfg.n, d)) {
                const WeightSpace& ws = eng.space(counts);
                ++cases;
                if (!ws.gram.is_symmetric()) {
                    fail = "gram not symmetric";
                    break;
                }
                auto res = psd_check(ws.gram);
                if (!res.psd && fail.empty()) {
                    std::ostringstream os;
                    os << "gram not PSD at degree " << d;
                    fail = os.str();
                }
            }
        out.push_back(tally("weight-space Gram matrices symmetric and PSD", cases, fail));
    }

    return out;
}

std::vector<CheckResult> suite_bases(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    FockContext ctx{cfg.n, cfg.p, std::max(8, cfg.deg + 4)};
    FockEngine eng(ctx);

    {
        long cases = 0;
        std::string fail;
        for (int d = 0; d <= cfg.deg && fail.empty(); ++d) {
            std::vector<PbwRecord> recs;
            try {
                recs = pbw_basis(eng, d);
            } catch (const std::exception& e) {
                fail = e.what();
                break;
            }
            // Count oracle: semistandard tableaux with at most p rows.
            long expected = 0;
            for (const auto& lam : enumerate_partitions(d, std::min(cfg.n, cfg.p)))
                expected += static_cast<long>(enumerate_ssyt(lam, cfg.n).size());
            if (static_cast<long>(recs.size()) != expected) {
                fail = "basis count mismatch";
                break;
            }
            // Rank: stack canonical coordinates per weight.
            std::map<std::vector<int>, std::vector<std::vector<Rational>>> cols;
            for (const auto& rec : recs) {
                auto can = eng.canonical_form(rec.vector);
                if (can.coords.empty()) {
                    fail = "basis vector is zero in the module";
                    break;
                }
                cols[can.counts].push_back(can.coords);
            }
            if (!fail.empty()) break;
            long rank_sum = 0;
            for (const auto& [counts, vecs] : cols) {
                RatMatrix m(vecs[0].size(), vecs.size());
                for (std::size_t c = 0; c < vecs.size(); ++c)
                    for (std::size_t r = 0; r < vecs[c].size(); ++r) m.at(r, c) = vecs[c][r];
                rank_sum += rank(m);
            }
            if (rank_sum != expected) {
                std::ostringstream os;
                os << "rank " << rank_sum << " != count " << expected << " at degree " << d;
                fail = os.str();
            }
            cases += expected;
        }
        out.push_back(tally("basis identity, count and rank per degree", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(cfg.deg, cfg.n)) {
            FockVector omega = Omega_lambda(lam, ctx);
            ++cases;
            if (!is_gl_highest(eng, omega, 0)) {
                fail = "not highest weight at " + lam_str(lam);
                break;
            }
            bool zero = eng.is_zero(omega);
            bool should_be_zero = lam.length() > cfg.p;
            if (zero != should_be_zero) {
                fail = "vanishing clause at " + lam_str(lam);
                break;
            }
            for (int i = 1; i <= cfg.n; ++i) {
                FockVector lhs = apply_gl(ctx, i, i, omega);
                FockVector rhs = (Rational(lam.part(i)) + Rational(cfg.p, 2)) * omega;
                if (!(lhs == rhs)) {
                    fail = "eigenvalue at " + lam_str(lam);
                    break;
                }
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("highest-weight classification", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 4), cfg.n)) {
            for (const auto& g : matrices_with_column_sums(lam, cfg.n, false)) {
                for (int i = 1; i <= cfg.n && fail.empty(); ++i)
                    for (int j = 1; j <= cfg.n; ++j) {
                        ++cases;
                        if (!check_gl_action_on_omega(eng, g, i, j)) {
                            std::ostringstream os;
                            os << "gl action expansion at shape " << lam_str(lam) << " (i,j)=("
                               << i << ',' << j << ')';
                            fail = os.str();
                        }
                    }
                if (!fail.empty()) break;
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("gl action expansion on symmetrized vectors", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 4), cfg.n)) {
            for (const auto& g : matrices_with_column_sums(lam, cfg.n, false)) {
                for (int j = 1; j <= cfg.n && fail.empty(); ++j) {
                    int row = 0, nonzero_rows = 0;
                    for (int k = 1; k <= cfg.n; ++k)
                        if (g.at(j, k) > 0) { row = k; ++nonzero_rows; }
                    if (nonzero_rows > 1) continue;
                    if (nonzero_rows == 0) row = 1;
                    for (int i = 1; i <= cfg.n; ++i) {
                        if (i == j) continue;
                        for (int m = 0; m <= g.at(j, row) + 1; ++m) {
                            ++cases;
                            if (!check_gl_power_action_on_omega(eng, g, i, j, row, m) &&
                                fail.empty())
                                fail = "power action at shape " + lam_str(lam);
                        }
                    }
                }
                if (!fail.empty()) break;
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("single-row power action", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 5), cfg.n)) {
            if (lam.length() > cfg.n) continue;
            FockVector hw = Omega_lambda(lam, ctx);
            for (const auto& g : matrices_with_column_sums(lam, cfg.n, true)) {
                FockVector lhs = apply_E_gamma(ctx, g, hw);
                Rational scale(lam.factorial_product());
                scale /= Rational(g.diag_factorial());
                FockVector rhs = scale * Omega_of_matrix(g, ctx);
                ++cases;
                if (!eng.equals(lhs, rhs) && fail.empty())
                    fail = "monomial identity at shape " + lam_str(lam);
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("monomial identity on lower-triangular matrices", cases, fail));
    }

    if (cfg.n >= 2 && cfg.p >= 2) {
        bool found = false;
        std::string where;
        for (int d = 2; d <= cfg.deg && !found; ++d) {
            std::map<std::vector<int>, std::vector<FockVector>> by_weight;
            long count = 0;
            for (const auto& lam : enumerate_partitions(d, std::min(cfg.n, cfg.p)))
                for (const auto& a : enumerate_ssyt(lam, cfg.n)) {
                    // B_A^+ v0: the column-reading word of A.
                    Word w;
                    Partition conj = a.shape().conjugate();
                    for (int l = 1; l <= conj.length(); ++l)
                        for (int k = 1; k <= conj.part(l); ++k) w.push_back(a.at(k, l));
                    by_weight[word_counts(w, cfg.n)].push_back(FockVector::single(w));
                    ++count;
                }
            long rank_sum = 0;
            for (const auto& [counts, vecs] : by_weight) {
                std::vector<std::vector<Rational>> cols;
                for (const auto& v : vecs) {
                    auto can = eng.canonical_form(v);
                    std::vector<Rational> c = can.coords;
                    if (c.empty()) c.assign(1, Rational(0));
                    cols.push_back(c);
                }
                std::size_t rows = 0;
                for (auto& c : cols) rows = std::max(rows, c.size());
                RatMatrix m(rows, cols.size());
                for (std::size_t cc = 0; cc < cols.size(); ++cc)
                    for (std::size_t r = 0; r < cols[cc].size(); ++r) m.at(r, cc) = cols[cc][r];
                rank_sum += rank(m);
            }
            if (rank_sum < count) {
                found = true;
                std::ostringstream os;
                os << "rank " << rank_sum << " < " << count << " at degree " << d;
                where = os.str();
            }
        }
        CheckResult r;
        r.name = "column-word family fails to be a basis (witness search)";
        r.pass = found;
        r.detail = found ? where : "no rank deficiency found in range";
        out.push_back(r);
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 4), cfg.n)) {
            if (lam.length() == 0 || lam.factorial_product() > 64) continue;
            for (const auto& a : enumerate_ssyt(lam, cfg.n)) {
                FockVector naive;
                for (const auto& tau : enumerate_young_subgroup(lam))
                    naive += omega_A(row_permute(a, tau), ctx);
                ++cases;
                if (!(naive == Omega_A(a, ctx)) && fail.empty())
                    fail = "orbit sum mismatch at shape " + lam_str(lam);
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("row-symmetrized sum matches full Young-subgroup sum", cases, fail));
    }

    return out;
}

std::vector<CheckResult> suite_mz(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    FockContext ctx{cfg.n, cfg.p, std::max(8, cfg.deg + 4)};
    FockEngine eng(ctx);

    {
        long cases = 0, skipped = 0;
        std::string fail;
        for (int d = 0; d <= std::min(cfg.deg, 5) && fail.empty(); ++d) {
            for (const auto& counts : counts_of_degree(cfg.n, d)) {
                auto singulars = eng.singular_basis(counts);
                RatMatrix gs(singulars.size(), singulars.size());
                for (std::size_t a = 0; a < singulars.size(); ++a)
                    for (std::size_t b = 0; b < singulars.size(); ++b)
                        gs.at(a, b) = eng.inner_product(singulars[a], singulars[b]);

                const auto ws = words_with_counts(counts);
                std::vector<FockVector> projected;
                bool singular_space = false;
                for (const auto& w : ws) {
                    try {
                        projected.push_back(extremal_project(eng, FockVector::single(w)));
                    } catch (const SingularWeightError&) {
                        singular_space = true;
                        break;
                    }
                }
                if (singular_space) {
                    ++skipped;
                    continue;
                }
                for (std::size_t a = 0; a < ws.size() && fail.empty(); ++a) {
                    const FockVector& pv = projected[a];
                    ++cases;
                    if (!is_gl_highest(eng, pv, 0)) {
                        fail = "projector image not singular";
                        break;
                    }
                    if (!(extremal_project(eng, pv) == pv)) {
                        fail = "projector not idempotent";
                        break;
                    }
                    // Gram-orthogonal projection onto the singular subspace.
                    std::vector<Rational> rhs(singulars.size());
                    for (std::size_t s = 0; s < singulars.size(); ++s)
                        rhs[s] = eng.inner_product(singulars[s], FockVector::single(ws[a]));
                    auto sol = solve_in_span(gs, rhs);
                    if (!sol) {
                        fail = "projection oracle system inconsistent";
                        break;
                    }
                    FockVector oracle;
                    for (std::size_t s = 0; s < singulars.size(); ++s)
                        oracle.add_scaled(singulars[s], (*sol)[s]);
                    if (!eng.equals(pv, oracle)) {
                        fail = "projector differs from Gram-orthogonal projection";
                        break;
                    }
                }
                for (std::size_t a = 0; a < ws.size() && fail.empty(); ++a)
                    for (std::size_t b = a; b < ws.size(); ++b) {
                        Rational lhs = eng.inner_product(projected[a], FockVector::single(ws[b]));
                        Rational rhs = eng.inner_product(FockVector::single(ws[a]), projected[b]);
                        if (lhs != rhs) {
                            fail = "projector not self-adjoint";
                            break;
                        }
                    }
                for (const auto& s : singulars) {
                    if (!fail.empty()) break;
                    if (!(extremal_project(eng, s) == s)) fail = "projector moves a singular vector";
                }
                if (!fail.empty()) break;
            }
        }
        std::ostringstream extra;
        CheckResult r = tally("extremal projector laws and projection oracle", cases, fail);
        if (r.pass && skipped) {
            extra << r.detail << " (" << skipped << " singular weight spaces skipped)";
            r.detail = extra.str();
        }
        out.push_back(r);
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::max(0, cfg.deg - 1), std::min(cfg.n, cfg.p))) {
            FockVector hw = Omega_lambda(lam, ctx);
            for (int j = 1; j <= cfg.n && fail.empty(); ++j) {
                try {
                    FockVector direct_plus = extremal_project(eng, apply_creation(j, hw));
                    if (!eng.equals(project_creation_on_hw(eng, j, hw), direct_plus))
                        fail = "projected creation mismatch at " + lam_str(lam);
                    ++cases;
                } catch (const SingularWeightError&) {
                }
                try {
                    FockVector direct_minus =
                        extremal_project(eng, eng.apply_annihilation(j, hw));
                    if (!eng.equals(project_annihilation_on_hw(eng, j, hw), direct_minus) &&
                        fail.empty())
                        fail = "projected annihilation mismatch at " + lam_str(lam);
                    ++cases;
                } catch (const SingularWeightError&) {
                }
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("projected ladder operators match the projector route", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 5), std::min(cfg.n, cfg.p))) {
            FockVector hw = Omega_lambda(lam, ctx);
            Rational hw_norm = eng.inner_product(hw, hw);
            if (hw_norm == 0) continue;
            for (int j = 1; j <= cfg.n && fail.empty(); ++j) {
                Partition up;
                if (try_add_cell_row(lam, j, up) && up.length() <= cfg.p &&
                    up.size() <= cfg.deg) {
                    FockVector target = Omega_lambda(up, ctx);
                    Rational tn = eng.inner_product(target, target);
                    Rational proj =
                        eng.inner_product(target, apply_creation(j, hw)) / tn;
                    ++cases;
                    if (proj != d_plus(lam, j, cfg.n)) fail = "d+ at " + lam_str(lam);
                }
                Partition down;
                if (try_remove_cell_row(lam, j, down)) {
                    FockVector target = Omega_lambda(down, ctx);
                    Rational tn = eng.inner_product(target, target);
                    if (tn != 0) {
                        Rational proj = eng.inner_product(
                                            target, eng.apply_annihilation(j, hw)) / tn;
                        ++cases;
                        if (proj != d_minus(lam, j, cfg.n, cfg.p) && fail.empty())
                            fail = "d- at " + lam_str(lam);
                    }
                }
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("ladder scalars match Gram-projection coefficients", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (int j = 1; j <= cfg.n; ++j) {
            for (const auto& mu : partitions_up_to(std::min(cfg.deg, 5), j - 1)) {
                Partition lam;
                if (!try_add_cell_row(mu, j, lam)) continue;
                Rational expect = Rational((j % 2) ? 1 : -1) * Rational(j) *
                                  Rational(cfg.p - j + 1);
                ++cases;
                if (d_minus(lam, j, cfg.n, cfg.p) != expect && fail.empty())
                    fail = "special value at " + lam_str(lam);
            }
        }
        out.push_back(tally("ladder scalar special value", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 5), cfg.n)) {
            for (int j = 1; j <= cfg.n; ++j) {
                Partition up;
                if (!try_add_cell_row(lam, j, up)) continue;
                if (up.length() > cfg.n) continue;
                ++cases;
                Rational lhs = d_plus(lam, j, cfg.n) * d_minus(up, j, cfg.n, cfg.p);
                if (lhs != c_plus_sq(lam, j, cfg.n, cfg.p) && fail.empty())
                    fail = "squared ladder relation at " + lam_str(lam);
            }
        }
        out.push_back(tally("squared ladder relation", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 4), std::min(cfg.n, cfg.p))) {
            FockVector hw = Omega_lambda(lam, ctx);
            Rational hw_norm = eng.inner_product(hw, hw);
            if (hw_norm == 0) continue;
            for (int j = 1; j <= cfg.n && fail.empty(); ++j) {
                Partition up;
                if (try_add_cell_row(lam, j, up) && up.length() <= cfg.p) {
                    FockVector tgt = Omega_lambda(up, ctx);
                    Rational ratio = hw_norm / eng.inner_product(tgt, tgt);
                    Rational lhs = d_plus(lam, j, cfg.n) * d_plus(lam, j, cfg.n);
                    ++cases;
                    if (lhs != ratio * c_plus_sq(lam, j, cfg.n, cfg.p))
                        fail = "norm ratio (+) at " + lam_str(lam);
                }
                Partition down;
                if (try_remove_cell_row(lam, j, down) && fail.empty()) {
                    FockVector tgt = Omega_lambda(down, ctx);
                    Rational tn = eng.inner_product(tgt, tgt);
                    if (tn != 0) {
                        Rational ratio = hw_norm / tn;
                        Rational lhs = d_minus(lam, j, cfg.n, cfg.p) *
                                       d_minus(lam, j, cfg.n, cfg.p);
                        ++cases;
                        if (lhs != ratio * c_plus_sq(down, j, cfg.n, cfg.p))
                            fail = "norm ratio (-) at " + lam_str(lam);
                    }
                }
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("norm ratios tie ladder scalars to the orthonormal ladder", cases,
                            fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::max(0, cfg.deg - 1), std::min(cfg.n, cfg.p))) {
            FockVector hw = Omega_lambda(lam, ctx);
            for (int j = 1; j <= cfg.n && fail.empty(); ++j)
                for (int sign : {1, -1}) {
                    FockVector direct = apply_b(eng, sign, j, hw);
                    FockVector expanded = expand_B_on_hw(sign, j, lam, ctx).realize(ctx);
                    ++cases;
                    if (!eng.equals(direct, expanded)) {
                        std::ostringstream os;
                        os << "hw expansion at " << lam_str(lam) << " j=" << j
                           << " sign=" << sign;
                        fail = os.str();
                    }
                }
            if (!fail.empty()) break;
        }
        out.push_back(tally("ladder expansion on highest-weight vectors", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg - 1, 4), std::min(cfg.n, cfg.p))) {
            for (const auto& g : matrices_with_column_sums(lam, cfg.n, true)) {
                FockVector base = apply_E_gamma(ctx, g, Omega_lambda(lam, ctx));
                for (int ell = 1; ell <= cfg.n && fail.empty(); ++ell)
                    for (int sign : {1, -1}) {
                        FockVector direct = apply_b(eng, sign, ell, base);
                        FockVector expanded =
                            expand_B_on_Egamma(sign, ell, g, lam, ctx).realize(ctx);
                        ++cases;
                        if (!eng.equals(direct, expanded)) {
                            std::ostringstream os;
                            os << "monomial expansion at " << lam_str(lam) << " ell=" << ell
                               << " sign=" << sign;
                            fail = os.str();
                        }
                    }
                if (!fail.empty()) break;
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("ladder expansion on monomial vectors", cases, fail));
    }

    {
        // First commutation step checked standalone against direct operators.
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg - 1, 4), std::min(cfg.n, cfg.p))) {
            for (const auto& g : matrices_with_column_sums(lam, cfg.n, true)) {
                FockVector hw = Omega_lambda(lam, ctx);
                FockVector base = apply_E_gamma(ctx, g, hw);
                for (int ell = 1; ell <= cfg.n && fail.empty(); ++ell) {
                    FockVector plus_rhs;
                    for (int j = ell; j <= cfg.n; ++j)
                        for (const auto& jt : enumerate_index_tuples(ell, j)) {
                            Rational c(1);
                            ExponentMatrix g1 = g;
                            bool dead = false;
                            for (std::size_t u = 0; u + 1 < jt.size(); ++u) {
                                int e = g1.at(jt[u + 1], jt[u]);
                                if (e == 0) { dead = true; break; }
                                c *= e;
                                g1.at(jt[u + 1], jt[u]) -= 1;
                            }
                            if (dead) continue;
                            if ((jt.size() - 1) % 2) c = -c;
                            plus_rhs.add_scaled(
                                apply_E_gamma(ctx, g1, apply_creation(j, hw)), c);
                        }
                    ++cases;
                    if (!eng.equals(apply_creation(ell, base), plus_rhs)) {
                        fail = "creation chain rewrite at " + lam_str(lam);
                        break;
                    }
                    FockVector minus_rhs;
                    for (int j = 1; j <= ell; ++j) {
                        Rational c(1);
                        ExponentMatrix g1 = g;
                        if (j != ell) {
                            int e = g1.at(ell, j);
                            if (e == 0) continue;
                            c = Rational(e);
                            g1.at(ell, j) -= 1;
                        }
                        minus_rhs.add_scaled(
                            apply_E_gamma(ctx, g1, eng.apply_annihilation(j, hw)), c);
                    }
                    ++cases;
                    if (!eng.equals(eng.apply_annihilation(ell, base), minus_rhs)) {
                        fail = "annihilation chain rewrite at " + lam_str(lam);
                        break;
                    }
                }
                if (!fail.empty()) break;
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("ladder commutation through monomials", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 5), std::min(cfg.n, cfg.p))) {
            FockVector hw = Omega_lambda(lam, ctx);
            if (eng.is_zero(hw)) continue;
            for (int j = 1; j <= cfg.n && fail.empty(); ++j) {
                Partition up;
                bool valid_up = try_add_cell_row(lam, j, up);
                if (valid_up && up.size() <= cfg.deg) {
                    FockVector lhs = z_plus(eng, j, hw);
                    FockVector rhs;
                    if (up.length() <= cfg.p) {
                        Rational c = d_plus(lam, j, cfg.n);
                        for (int l = 1; l <= j - 1; ++l)
                            c *= Rational(static_cast<long>(lam.part(l) - lam.part(j)) - l + j);
                        rhs = c * Omega_lambda(up, ctx);
                    }
                    ++cases;
                    if (!eng.equals(lhs, rhs)) fail = "raising scalar at " + lam_str(lam);
                    if (fail.empty() && !is_gl_highest(eng, lhs, 0))
                        fail = "raising output not highest at " + lam_str(lam);
                }
                if (!valid_up) {
                    // z_j^+ must vanish in the module when lambda + eps_j leaves the cone.
                    FockVector lhs = z_plus(eng, j, hw);
                    ++cases;
                    if (!eng.is_zero(lhs) && fail.empty())
                        fail = "raising zero clause at " + lam_str(lam);
                }
                Partition down;
                if (fail.empty()) {
                    FockVector lhs = z_minus(eng, j, hw);
                    FockVector rhs;
                    if (try_remove_cell_row(lam, j, down)) {
                        Rational c = d_minus(lam, j, cfg.n, cfg.p);
                        for (int l = j + 1; l <= cfg.n; ++l)
                            c *= Rational(static_cast<long>(lam.part(j) - lam.part(l)) - j + l);
                        rhs = c * Omega_lambda(down, ctx);
                    }
                    ++cases;
                    if (!eng.equals(lhs, rhs)) fail = "lowering scalar at " + lam_str(lam);
                }
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("raising/lowering scalars on highest-weight vectors", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::max(0, cfg.deg - 1), std::min(cfg.n, cfg.p))) {
            FockVector hw = Omega_lambda(lam, ctx);
            GlWeight wt = GlWeight::from_counts(ctx, lam.padded(cfg.n));
            for (int j = 1; j <= cfg.n && fail.empty(); ++j) {
                // Creation recovered from projected operators.
                FockVector rhs = project_creation_on_hw(eng, j, hw);
                for (int i = 1; i <= j - 1; ++i) {
                    for (const auto& tuple : enumerate_index_tuples(i, j)) {
                        if (tuple.size() < 2) continue;
                        Rational num(1);
                        for (int l : tuple_complement(tuple, i, j))
                            num *= Rational(wt.h_diff(i, l) + 1);
                        Rational den(1);
                        for (int l = i + 1; l <= j; ++l) den *= Rational(wt.h_diff(i, l));
                        FockVector term = project_creation_on_hw(eng, i, hw);
                        for (int u = static_cast<int>(tuple.size()) - 1; u >= 1; --u)
                            term = apply_gl(ctx, tuple[u], tuple[u - 1], term);
                        rhs.add_scaled(term, num / den);
                    }
                }
                ++cases;
                if (!eng.equals(apply_creation(j, hw), rhs)) {
                    fail = "creation recovery at " + lam_str(lam);
                    break;
                }
                FockVector rhs2 = project_annihilation_on_hw(eng, j, hw);
                for (int i = j + 1; i <= cfg.n; ++i) {
                    for (const auto& tuple : enumerate_index_tuples(j, i)) {
                        if (tuple.size() < 2) continue;
                        Rational den(1);
                        for (int l : tuple)
                            if (l != i) den *= Rational(wt.h_diff(i, l));
                        FockVector term = project_annihilation_on_hw(eng, i, hw);
                        for (int u = static_cast<int>(tuple.size()) - 1; u >= 1; --u)
                            term = apply_gl(ctx, tuple[u], tuple[u - 1], term);
                        rhs2.add_scaled(term, 1 / den);
                    }
                }
                ++cases;
                if (!eng.equals(eng.apply_annihilation(j, hw), rhs2))
                    fail = "annihilation recovery at " + lam_str(lam);
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("generators recovered from projected ladder operators", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        FockVector vac = FockVector::vacuum();
        FockVector pair = z_pair_plus(eng, 1, 1, vac);
        Partition two(std::vector<int>{2});
        if (!eng.equals(pair, Omega_lambda(two, ctx))) fail = "pair raising on vacuum";
        ++cases;
        if (fail.empty() && !eng.is_zero(z_pair_minus(eng, 1, 1, vac)))
            fail = "pair lowering on vacuum not zero";
        ++cases;
        Partition one(std::vector<int>{1});
        FockVector hw1 = Omega_lambda(one, ctx);
        for (int i = 1; i <= cfg.n && fail.empty(); ++i)
            for (int j = i; j <= cfg.n; ++j) {
                try {
                    FockVector w = z_pair_plus(eng, i, j, hw1);
                    ++cases;
                    if (!is_gl_highest(eng, w, 0)) {
                        fail = "pair output not highest";
                        break;
                    }
                } catch (const SingularWeightError&) {
                }
            }
        out.push_back(tally("pair generators via the projector", cases, fail));
    }

    if (cfg.n == 3) {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 4), std::min(cfg.n, cfg.p))) {
            FockVector hw = Omega_lambda(lam, ctx);
            if (eng.is_zero(hw)) continue;
            GlWeight wt = GlWeight::from_counts(ctx, lam.padded(3));
            auto E = [&](int a, int b, const FockVector& v) { return apply_gl(ctx, a, b, v); };
            auto B = [&](int a, const FockVector& v) { return apply_creation(a, v); };
            auto Bm = [&](int a, const FockVector& v) { return eng.apply_annihilation(a, v); };
            Rational h12(wt.h_diff(1, 2)), h13(wt.h_diff(1, 3)), h23(wt.h_diff(2, 3));

            FockVector z2 = Rational(h12) * B(2, hw) - E(2, 1, B(1, hw));
            FockVector z3 = (h13 * h23) * B(3, hw) - h13 * E(3, 2, B(2, hw)) -
                            (h23 - 1) * E(3, 1, B(1, hw)) + E(2, 1, E(3, 2, B(1, hw)));
            FockVector z1m = (h12 * h13) * Bm(1, hw) + h13 * E(2, 1, Bm(2, hw)) +
                             h12 * E(3, 1, Bm(3, hw)) + E(2, 1, E(3, 2, Bm(3, hw)));
            FockVector z2m = h23 * Bm(2, hw) + E(3, 2, Bm(3, hw));
            cases += 6;
            if (!eng.equals(z_plus(eng, 1, hw), B(1, hw))) fail = "z1+ display";
            else if (!eng.equals(z_plus(eng, 2, hw), z2)) fail = "z2+ display";
            else if (!eng.equals(z_plus(eng, 3, hw), z3)) fail = "z3+ display";
            else if (!eng.equals(z_minus(eng, 1, hw), z1m)) fail = "z1- display";
            else if (!eng.equals(z_minus(eng, 2, hw), z2m)) fail = "z2- display";
            else if (!eng.equals(z_minus(eng, 3, hw), Bm(3, hw))) fail = "z3- display";
            if (!fail.empty()) {
                fail += " at " + lam_str(lam);
                break;
            }
        }
        out.push_back(tally("explicit raising/lowering operators (n=3)", cases, fail));
    }

    return out;
}

std::vector<CheckResult> suite_gz(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    FockContext ctx{cfg.n, cfg.p, std::max(8, cfg.deg + 4)};
    FockEngine eng(ctx);

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(cfg.deg, std::min(cfg.n, cfg.p))) {
            FockVector chain = FockVector::vacuum();
            bool singular = false;
            try {
                for (int j = 1; j <= cfg.n; ++j)
                    for (int t = 0; t < lam.part(j); ++t) chain = z_plus(eng, j, chain);
            } catch (const SingularWeightError&) {
                singular = true;
            }
            if (singular) continue;
            ++cases;
            if (!eng.equals(chain, gz_chain_scalar(lam, cfg.n) * Omega_lambda(lam, ctx)) &&
                fail.empty())
                fail = "chain scalar at " + lam_str(lam);
        }
        out.push_back(tally("raising chain reaches highest-weight vectors with the closed scalar",
                            cases, fail));
    }

    if (cfg.n == 3) {
        long cases = 0;
        std::string fail;
        // gl(2)-highest test vectors: y-monomial prefixes of highest-weight vectors.
        std::vector<FockVector> tests;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 4), std::min(cfg.n, cfg.p))) {
            FockVector hw = Omega_lambda(lam, ctx);
            if (hw.empty()) continue;
            tests.push_back(hw);
            try {
                tests.push_back(y_lower(eng, 3, 2, hw));
            } catch (const std::exception&) {
            }
        }
        for (const auto& v : tests) {
            if (v.empty()) continue;
            GlWeight wt = GlWeight::from_counts(
                ctx, v.homogeneous_counts(3).value());
            auto E = [&](int a, int b, const FockVector& u) { return apply_gl(ctx, a, b, u); };
            cases += 3;
            if (!eng.equals(y_lower(eng, 2, 1, v), E(2, 1, v))) {
                fail = "y21 display";
                break;
            }
            FockVector y31 = Rational(wt.h_diff(1, 2)) * E(3, 1, v) + E(2, 1, E(3, 2, v));
            if (!eng.equals(y_lower(eng, 3, 1, v), y31)) {
                fail = "y31 display";
                break;
            }
            if (!eng.equals(y_lower(eng, 3, 2, v), E(3, 2, v))) {
                fail = "y32 display";
                break;
            }
        }
        out.push_back(tally("explicit chain lowering operators (n=3)", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        std::map<std::vector<int>, std::vector<GzVector>> by_weight;
        for (const auto& lam : partitions_up_to(cfg.deg, std::min(cfg.n, cfg.p)))
            for (const auto& a : enumerate_ssyt(lam, cfg.n)) {
                GzVector gz = gz_vector(eng, a);
                ++cases;
                if (gz.norm2 == 0 && fail.empty())
                    fail = "zero norm at shape " + lam_str(lam);
                by_weight[a.weight(cfg.n)].push_back(std::move(gz));
            }
        for (const auto& [counts, group] : by_weight) {
            if (!fail.empty()) break;
            for (std::size_t a = 0; a < group.size() && fail.empty(); ++a)
                for (std::size_t b = a + 1; b < group.size(); ++b) {
                    ++cases;
                    if (eng.inner_product(group[a].vector, group[b].vector) != 0) {
                        fail = "non-orthogonal pair";
                        break;
                    }
                }
        }
        out.push_back(tally("Gelfand-Zetlin vectors orthogonal with nonzero norms", cases, fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(cfg.deg, std::min(cfg.n, cfg.p))) {
            try {
                auto blocks = transition_matrix(eng, lam);
                cases += static_cast<long>(blocks.size());
                if (cfg.n == 3) {
                    for (const auto& block : blocks) {
                        for (std::size_t r = 0; r < block.tableaux.size(); ++r) {
                            auto closed = transition_row_closed_n3(block.tableaux[r], ctx);
                            std::map<std::vector<int>, Rational> closed_map;
                            for (const auto& term : closed)
                                closed_map[term.gamma.reading()] += term.coeff;
                            for (std::size_t b = 0; b < block.tableaux.size(); ++b) {
                                ExponentMatrix gb =
                                    exponent_matrix(block.tableaux[b], cfg.n);
                                Rational expect(0);
                                auto it = closed_map.find(gb.reading());
                                if (it != closed_map.end()) expect = it->second;
                                ++cases;
                                if (block.T.at(r, b) != expect && fail.empty()) {
                                    fail = "closed-form transition row at " + lam_str(lam);
                                }
                            }
                        }
                    }
                }
            } catch (const std::exception& e) {
                if (fail.empty()) fail = std::string(e.what()) + " at " + lam_str(lam);
            }
            if (!fail.empty()) break;
        }
        out.push_back(
            tally("transition matrix triangular; closed form matches where applicable", cases,
                  fail));
    }

    {
        long cases = 0;
        std::string fail;
        for (const auto& lam : partitions_up_to(std::min(cfg.deg, 5), std::min(cfg.n, cfg.p))) {
            for (const auto& a : enumerate_ssyt(lam, cfg.n)) {
                auto terms = gz_creation_polynomial(eng, a);
                ++cases;
                if (!eng.equals(realize_brackets(terms, ctx), gz_vector(eng, a).vector) &&
                    fail.empty())
                    fail = "creation polynomial mismatch at " + lam_str(lam);
            }
            if (!fail.empty()) break;
        }
        out.push_back(tally("creation-polynomial form of Gelfand-Zetlin vectors", cases, fail));
    }

    if (cfg.n == 3 && cfg.deg >= 6) {
        long cases = 0;
        std::string fail;
        Partition lam(std::vector<int>{4, 2});
        FockVector hw = Omega_lambda(lam, ctx);

        // Monomial display: E_31^2 acting on the highest-weight vector.
        ExponentMatrix g31(3);
        g31.at(1, 1) = 2;
        g31.at(2, 2) = 2;
        g31.at(3, 1) = 2;
        FockVector lhs = apply_E_gamma(ctx, g31, hw);
        FockVector rhs = FockVector::vacuum();
        rhs = apply_creation(1, apply_creation(1, rhs));
        rhs = multibracket({1, 2}, multibracket({1, 2}, rhs));
        for (int t = 0; t < 2; ++t) {
            FockVector anti = apply_creation(3, eng.apply_annihilation(1, rhs));
            anti += eng.apply_annihilation(1, apply_creation(3, rhs));
            rhs = anti;
        }
        ++cases;
        if (!eng.equals(lhs, Rational(12) * rhs)) fail = "monomial vs anticommutator display";

        // The three tableaux of shape (4,2,0) and weight (2,2,2).
        YoungTableau a1(std::vector<std::vector<int>>{{1, 1, 3, 3}, {2, 2}});
        YoungTableau a2(std::vector<std::vector<int>>{{1, 1, 2, 3}, {2, 3}});
        YoungTableau a3(std::vector<std::vector<int>>{{1, 1, 2, 2}, {3, 3}});
        FockVector o1 = Omega_A(a1, ctx), o2 = Omega_A(a2, ctx), o3 = Omega_A(a3, ctx);
        GzVector v1 = gz_vector(eng, a1), v2 = gz_vector(eng, a2), v3 = gz_vector(eng, a3);

        ++cases;
        if (fail.empty() &&
            !eng.equals(v1.vector, Rational(-6) * o1 + Rational(-12) * o2 + Rational(-2) * o3))
            fail = "first worked-example vector";
        ++cases;
        if (fail.empty() && !eng.equals(v2.vector, Rational(-8) * o2 + Rational(-2) * o3))
            fail = "second worked-example vector";
        ++cases;
        if (fail.empty() && !eng.equals(v3.vector, Rational(-2) * o3))
            fail = "third worked-example vector";

        // Frozen transition block at weight (2,2,2).
        auto blocks = transition_matrix(eng, lam);
        const TransitionBlock* block = nullptr;
        for (const auto& b : blocks)
            if (b.weight_counts == std::vector<int>{2, 2, 2}) block = &b;
        ++cases;
        if (fail.empty()) {
            if (!block || block->tableaux.size() != 3) {
                fail = "weight block missing";
            } else {
                const char* texp[3][3] = {{"-1/2", "-1/2", "-1/12"},
                                          {"0", "-1/3", "-1/12"},
                                          {"0", "0", "-1/12"}};
                const char* tinv[3][3] = {{"-2", "3", "-1"}, {"0", "-3", "3"}, {"0", "0", "-12"}};
                for (int r = 0; r < 3 && fail.empty(); ++r)
                    for (int c = 0; c < 3; ++c) {
                        if (block->T.at(r, c) != parse_rational(texp[r][c])) {
                            fail = "transition entry mismatch";
                            break;
                        }
                        if (block->Tinv.at(r, c) != parse_rational(tinv[r][c])) {
                            fail = "inverse transition entry mismatch";
                            break;
                        }
                    }
            }
        }

        // Bracket expansion of the third vector: six terms, all with coefficient -16.
        if (fail.empty()) {
            auto terms = gz_creation_polynomial(eng, a3);
            ++cases;
            if (terms.size() != 6) {
                fail = "bracket term count";
            } else {
                for (const auto& t : terms)
                    if (t.coeff != Rational(-16)) {
                        fail = "bracket coefficient";
                        break;
                    }
            }
            if (fail.empty() && !eng.equals(realize_brackets(terms, ctx), v3.vector))
                fail = "bracket realization";
        }
        // Bracket expansion of the second vector: magnitudes all 16.
        if (fail.empty()) {
            auto terms = gz_creation_polynomial(eng, a2);
            ++cases;
            for (const auto& t : terms)
                if (t.coeff != Rational(16) && t.coeff != Rational(-16)) {
                    fail = "bracket magnitude";
                    break;
                }
        }
        out.push_back(tally("worked example block for shape (4,2,0)", cases, fail));
    }

    return out;
}

std::vector<CheckResult> suite_appendix(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    FockContext ctx{cfg.n, cfg.p, std::max(8, cfg.deg + 5)};
    FockEngine eng(ctx);
    std::mt19937_64 rng(cfg.seed);
    auto rand_int = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned long>(hi - lo + 1));
    };

    const int trials = 48;
    long cases_sub = 0, cases_cre = 0, cases_ann = 0;
    std::string fail_sub, fail_cre, fail_ann;
    for (int t = 0; t < trials; ++t) {
        const int k = rand_int(1, std::min(3, cfg.n + 1));
        std::vector<int> idx(k);
        for (int& v : idx) v = rand_int(1, cfg.n);
        const int wdeg = rand_int(0, std::max(0, std::min(cfg.deg, 6 - k) - 1));
        Word w(wdeg);
        for (int& v : w) v = rand_int(1, cfg.n);
        FockVector base = FockVector::single(w);

        {
            // Substitution identity for a gl generator through a bracket.
            int i = rand_int(1, cfg.n), j = rand_int(1, cfg.n);
            FockVector lhs = apply_gl(ctx, i, j, multibracket(idx, base));
            FockVector rhs = multibracket(idx, apply_gl(ctx, i, j, base));
            for (int tpos = 0; tpos < k; ++tpos) {
                if (idx[tpos] != j) continue;
                std::vector<int> replaced = idx;
                replaced[tpos] = i;
                rhs += multibracket(replaced, base);
            }
            ++cases_sub;
            if (!eng.equals(lhs, rhs) && fail_sub.empty()) fail_sub = "substitution identity";
        }
        {
            // Creation through a bracket.
            int i = rand_int(1, cfg.n);
            FockVector lhs = apply_creation(i, multibracket(idx, base));
            FockVector rhs;
            rhs.add_scaled(multibracket(idx, apply_creation(i, base)),
                           Rational(k % 2 ? 1 : -1));
            std::vector<int> extended = idx;
            extended.push_back(i);
            rhs.add_scaled(multibracket(extended, base),
                           Rational(k % 2 ? -2 : 2) / Rational(k + 1));
            ++cases_cre;
            if (!eng.equals(lhs, rhs) && fail_cre.empty()) fail_cre = "creation identity";
        }
        {
            // Annihilation through a bracket.
            int i = rand_int(1, cfg.n);
            FockVector lhs = eng.apply_annihilation(i, multibracket(idx, base));
            FockVector rhs;
            rhs.add_scaled(multibracket(idx, eng.apply_annihilation(i, base)),
                           Rational(k % 2 ? -1 : 1));
            for (int tpos = 0; tpos < k; ++tpos) {
                std::vector<int> omitted;
                for (int u = 0; u < k; ++u)
                    if (u != tpos) omitted.push_back(idx[u]);
                FockVector inner = apply_gl(ctx, idx[tpos], i, base);
                FockVector bracketed =
                    omitted.empty() ? inner : multibracket(omitted, inner);
                rhs.add_scaled(bracketed, Rational(tpos % 2 ? -2 * k : 2 * k));
                if (idx[tpos] == i) {
                    FockVector plain = omitted.empty() ? base : multibracket(omitted, base);
                    rhs.add_scaled(plain, Rational((tpos % 2 ? 1 : -1) *
                                                   static_cast<long>(k) * (k - 1)));
                }
            }
            ++cases_ann;
            if (!eng.equals(lhs, rhs) && fail_ann.empty()) fail_ann = "annihilation identity";
        }
    }
    out.push_back(tally("gl generator through creation brackets", cases_sub, fail_sub));
    out.push_back(tally("creation operator through creation brackets", cases_cre, fail_cre));
    out.push_back(tally("annihilation operator through creation brackets", cases_ann, fail_ann));
    return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg) {
    if (name == "relations") return suite_relations(cfg);
    if (name == "bases") return suite_bases(cfg);
    if (name == "mz") return suite_mz(cfg);
    if (name == "gz") return suite_gz(cfg);
    if (name == "appendix") return suite_appendix(cfg);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const char* s : {"relations", "bases", "mz", "gz", "appendix"}) {
            auto part = run_suite(s, cfg);
            for (auto& r : part) {
                r.name = std::string(s) + "/" + r.name;
                out.push_back(std::move(r));
            }
        }
        return out;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace paraboson
