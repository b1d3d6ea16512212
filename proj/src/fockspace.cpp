#include "paraboson/fockspace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace paraboson {

std::vector<int> word_counts(const Word& w, int n) {
    std::vector<int> c(n, 0);
    for (int letter : w) {
        if (letter < 1 || letter > n) throw std::invalid_argument("word letter out of range");
        ++c[letter - 1];
    }
    return c;
}

GlWeight GlWeight::from_counts(const FockContext& ctx, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != ctx.n)
        throw std::invalid_argument("GlWeight: counts size mismatch");
    GlWeight w;
    w.twice_.resize(ctx.n);
    for (int i = 0; i < ctx.n; ++i) w.twice_[i] = ctx.p + 2 * counts[i];
    return w;
}

int GlWeight::degree(int p) const {
    int d = 0;
    for (int t : twice_) d += (t - p) / 2;
    return d;
}

void FockVector::add(Word w, Rational c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void FockVector::add_scaled(const FockVector& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [w, q] : other.terms_) add(w, q * c);
}

FockVector& FockVector::operator+=(const FockVector& other) {
    add_scaled(other, Rational(1));
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
    add_scaled(other, Rational(-1));
    return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, q] : terms_) q *= c;
    return *this;
}

Rational FockVector::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::vector<int>> FockVector::homogeneous_counts(int n) const {
    std::optional<std::vector<int>> counts;
    for (const auto& [w, q] : terms_) {
        auto c = word_counts(w, n);
        if (!counts) counts = c;
        else if (*counts != c) return std::nullopt;
    }
    return counts;  // nullopt only via mixed weights; zero vector has no terms -> nullopt-free
}

std::map<std::vector<int>, FockVector> FockVector::split_by_counts(int n) const {
    std::map<std::vector<int>, FockVector> parts;
    for (const auto& [w, q] : terms_) parts[word_counts(w, n)].add(w, q);
    return parts;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
FockVector operator*(const Rational& c, FockVector v) { return v *= c; }

FockVector apply_creation(int j, const FockVector& v) {
    if (j < 1) throw std::invalid_argument("apply_creation: bad mode index");
    FockVector out;
    for (const auto& [w, q] : v.terms()) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(j);
        nw.insert(nw.end(), w.begin(), w.end());
        out.add(std::move(nw), q);
    }
    return out;
}

FockVector apply_gl(const FockContext& ctx, int i, int j, const FockVector& v) {
    if (i < 1 || i > ctx.n || j < 1 || j > ctx.n)
        throw std::invalid_argument("apply_gl: index out of range");
    FockVector out;
    const Rational half_p(ctx.p, 2);
    for (const auto& [w, q] : v.terms()) {
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t] != j) continue;
            Word nw = w;
            nw[t] = i;
            out.add(std::move(nw), q);
        }
        if (i == j) out.add(w, q * half_p);
    }
    return out;
}

FockVector multibracket(const std::vector<int>& indices, const FockVector& v) {
    if (indices.empty()) throw std::invalid_argument("multibracket: empty index list");
    std::vector<int> perm(indices.size());
    std::iota(perm.begin(), perm.end(), 0);
    FockVector out;
    // Iterate permutations with their signs (next_permutation from sorted base).
    do {
        int sign = 1;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) sign = -sign;
        for (const auto& [w, q] : v.terms()) {
            Word nw;
            nw.reserve(w.size() + perm.size());
            for (std::size_t a = 0; a < perm.size(); ++a) nw.push_back(indices[perm[a]]);
            nw.insert(nw.end(), w.begin(), w.end());
            out.add(std::move(nw), sign > 0 ? q : -q);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Word> words_with_counts(const std::vector<int>& counts) {
    Word base;
    for (std::size_t i = 0; i < counts.size(); ++i)
        base.insert(base.end(), counts[i], static_cast<int>(i) + 1);
    std::vector<Word> out;
    if (base.empty()) {
        out.push_back({});
        return out;
    }
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

int WeightSpace::index_of(const Word& w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w) return -1;
    return static_cast<int>(it - words.begin());
}

FockVector FockEngine::annihilate_word(int j, const Word& w) const {
    if (w.empty()) return FockVector{};
    auto key = std::make_pair(j, w);
    auto it = annih_memo_.find(key);
    if (it != annih_memo_.end()) return it->second;

    const int lead = w[0];
    Word tail(w.begin() + 1, w.end());
    FockVector tail_vec = FockVector::single(tail);
    // B_j^-(B_lead^+ u) = 2 E_{lead,j} u - B_lead^+(B_j^- u)
    FockVector res = Rational(2) * apply_gl(ctx_, lead, j, tail_vec);
    res -= apply_creation(lead, annihilate_word(j, tail));
    annih_memo_.emplace(std::move(key), res);
    return res;
}

FockVector FockEngine::apply_annihilation(int j, const FockVector& v) const {
    if (j < 1 || j > ctx_.n) throw std::invalid_argument("apply_annihilation: bad index");
    std::lock_guard<std::mutex> lock(mutex_);
    FockVector out;
    for (const auto& [w, q] : v.terms()) out.add_scaled(annihilate_word(j, w), q);
    return out;
}

Rational FockEngine::word_ip(const Word& u, const Word& w) const {
    if (u.size() != w.size()) return Rational(0);
    if (word_counts(u, ctx_.n) != word_counts(w, ctx_.n)) return Rational(0);
    if (u.empty()) return Rational(1);
    auto key = std::make_pair(u, w);
    auto it = ip_memo_.find(key);
    if (it != ip_memo_.end()) return it->second;

    // <B_i^+ u', w> = <u', B_i^- w>
    const int lead = u[0];
    Word rest(u.begin() + 1, u.end());
    FockVector lowered = annihilate_word(lead, w);
    Rational r(0);
    for (const auto& [lw, lq] : lowered.terms()) r += lq * word_ip(rest, lw);
    ip_memo_.emplace(std::move(key), r);
    return r;
}

Rational FockEngine::inner_product(const FockVector& u, const FockVector& w) const {
    std::lock_guard<std::mutex> lock(mutex_);
    Rational r(0);
    for (const auto& [uw, uq] : u.terms())
        for (const auto& [ww, wq] : w.terms()) {
            if (uw.size() != ww.size()) continue;
            Rational ip = word_ip(uw, ww);
            if (ip != 0) r += uq * wq * ip;
        }
    return r;
}

const WeightSpace& FockEngine::space(const std::vector<int>& counts) const {
    if (static_cast<int>(counts.size()) != ctx_.n)
        throw std::invalid_argument("space: counts size mismatch");
    int degree = std::accumulate(counts.begin(), counts.end(), 0);
    if (degree > ctx_.degree_bound) {
        std::ostringstream os;
        os << "weight space degree " << degree << " exceeds configured bound "
           << ctx_.degree_bound;
        throw std::length_error(os.str());
    }

    std::lock_guard<std::mutex> lock(mutex_);
    auto it = spaces_.find(counts);
    if (it != spaces_.end()) return it->second;

    WeightSpace ws;
    ws.counts = counts;
    ws.words = words_with_counts(counts);
    const std::size_t m = ws.words.size();
    ws.gram = RatMatrix(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            Rational ip = word_ip(ws.words[a], ws.words[b]);
            ws.gram.at(a, b) = ip;
            ws.gram.at(b, a) = ip;
        }

    // Greedy pivots: first column independent of the previously chosen ones.
    // Incremental elimination over the chosen columns.
    std::vector<std::vector<Rational>> echelon;  // reduced columns (length m)
    std::vector<std::size_t> lead_rows;
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Rational> col(m);
        for (std::size_t r = 0; r < m; ++r) col[r] = ws.gram.at(r, c);
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            if (col[lead_rows[e]] == 0) continue;
            Rational f = col[lead_rows[e]];
            for (std::size_t r = 0; r < m; ++r) col[r] -= f * echelon[e][r];
        }
        std::size_t lead = m;
        for (std::size_t r = 0; r < m; ++r)
            if (col[r] != 0) { lead = r; break; }
        if (lead == m) continue;
        Rational inv = 1 / col[lead];
        for (std::size_t r = 0; r < m; ++r) col[r] *= inv;
        echelon.push_back(std::move(col));
        lead_rows.push_back(lead);
        ws.pivots.push_back(static_cast<int>(c));
    }
    ws.rank = static_cast<int>(ws.pivots.size());

    auto [ins, ok] = spaces_.emplace(counts, std::move(ws));
    return ins->second;
}

bool FockEngine::is_zero(const FockVector& v) const {
    // The form is the pullback of the simple module's positive-definite inner
    // product, so a vector is zero in the module iff its self-pairing vanishes.
    return inner_product(v, v) == 0;
}

bool FockEngine::equals(const FockVector& u, const FockVector& w) const {
    return is_zero(u - w);
}

FockEngine::Canonical FockEngine::canonical_form(const FockVector& v) const {
    Canonical out;
    if (v.empty()) return out;
    auto counts = v.homogeneous_counts(ctx_.n);
    if (!counts) throw std::invalid_argument("canonical_form: vector not homogeneous");
    const WeightSpace& ws = space(*counts);
    out.counts = *counts;

    std::vector<Rational> c(ws.words.size(), Rational(0));
    for (const auto& [word, q] : v.terms()) c[ws.index_of(word)] = q;
    std::vector<Rational> gc = ws.gram.mul(c);

    const std::size_t r = ws.pivots.size();
    RatMatrix gpp(r, r);
    std::vector<Rational> rhs(r);
    for (std::size_t a = 0; a < r; ++a) {
        rhs[a] = gc[ws.pivots[a]];
        for (std::size_t b = 0; b < r; ++b) gpp.at(a, b) = ws.gram.at(ws.pivots[a], ws.pivots[b]);
    }
    auto sol = solve_in_span(gpp, rhs);
    if (!sol) throw std::logic_error("canonical_form: pivot system inconsistent");
    out.coords = *sol;
    return out;
}

std::vector<FockVector> FockEngine::singular_basis(const std::vector<int>& counts) const {
    const WeightSpace& ws = space(counts);
    const std::size_t m = ws.words.size();

    // Stack the matrices of all raising operators E_ij, i<j.
    std::vector<std::vector<Rational>> rows;
    for (int i = 1; i <= ctx_.n; ++i) {
        for (int j = i + 1; j <= ctx_.n; ++j) {
            if (counts[j - 1] == 0) continue;
            std::vector<int> target = counts;
            ++target[i - 1];
            --target[j - 1];
            std::vector<Word> target_words = words_with_counts(target);
            std::map<Word, std::size_t> tindex;
            for (std::size_t t = 0; t < target_words.size(); ++t) tindex[target_words[t]] = t;
            std::vector<std::vector<Rational>> block(target_words.size(),
                                                     std::vector<Rational>(m, Rational(0)));
            for (std::size_t a = 0; a < m; ++a) {
                FockVector img = apply_gl(ctx_, i, j, FockVector::single(ws.words[a]));
                for (const auto& [tw, q] : img.terms()) block[tindex.at(tw)][a] += q;
            }
            for (auto& rrow : block) rows.push_back(std::move(rrow));
        }
    }

    std::vector<FockVector> basis;
    if (rows.empty()) {
        // No raising operator acts: every word is singular.
        for (const auto& w : ws.words) basis.push_back(FockVector::single(w));
        return basis;
    }
    RatMatrix mraise(rows.size(), m);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m; ++c) mraise.at(r, c) = rows[r][c];
    for (const auto& vec : nullspace(mraise)) {
        FockVector fv;
        for (std::size_t c = 0; c < m; ++c)
            if (vec[c] != 0) fv.add(ws.words[c], vec[c]);
        basis.push_back(std::move(fv));
    }
    return basis;
}

}  // namespace paraboson
