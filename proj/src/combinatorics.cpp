#include "paraboson/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace paraboson {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts not non-increasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
    std::vector<int> v(n, 0);
    for (int i = 0; i < std::min(n, length()); ++i) v[i] = parts_[i];
    return v;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition{};
    c.resize(parts_[0], 0);
    for (int j = 1; j <= parts_[0]; ++j)
        c[j - 1] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                  [j](int p) { return p >= j; }));
    return Partition(std::move(c));
}

Integer Partition::factorial_product() const {
    Integer f = 1;
    for (int p : parts_) f *= factorial(static_cast<unsigned long>(p));
    return f;
}

bool try_add_cell_row(const Partition& lam, int i, Partition& out) {
    if (i < 1) return false;
    std::vector<int> v = lam.padded(std::max(i, lam.length()));
    v[i - 1] += 1;
    if (i >= 2 && v[i - 1] > v[i - 2]) return false;
    out = Partition(std::move(v));
    return true;
}

bool try_remove_cell_row(const Partition& lam, int i, Partition& out) {
    if (i < 1 || i > lam.length()) return false;
    std::vector<int> v = lam.padded(lam.length());
    v[i - 1] -= 1;
    if (v[i - 1] < 0) return false;
    if (i < lam.length() && v[i - 1] < v[i]) return false;
    out = Partition(std::move(v));
    return true;
}

bool shape_order_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // Dominance where comparable, lex tiebreak.
    int n = std::max(a.length(), b.length());
    int pa = 0, pb = 0;
    bool a_dom = true, b_dom = true;
    for (int i = 1; i <= n; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) a_dom = false;
        if (pb < pa) b_dom = false;
    }
    if (a_dom && !b_dom) return true;   // a dominates b: a first
    if (b_dom && !a_dom) return false;
    return a.parts() > b.parts();  // lex, larger first parts first
}

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k].empty()) throw std::invalid_argument("YoungTableau: empty row");
        if (k + 1 < rows_.size() && rows_[k].size() < rows_[k + 1].size())
            throw std::invalid_argument("YoungTableau: row lengths not non-increasing");
        for (int e : rows_[k])
            if (e < 1) throw std::invalid_argument("YoungTableau: entries must be >= 1");
    }
}

Partition YoungTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int YoungTableau::size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

int YoungTableau::max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
        for (int e : r) m = std::max(m, e);
    return m;
}

std::vector<int> YoungTableau::weight(int n) const {
    std::vector<int> w(n, 0);
    for (const auto& r : rows_)
        for (int e : r) {
            if (e > n) throw std::invalid_argument("YoungTableau::weight: entry exceeds n");
            ++w[e - 1];
        }
    return w;
}

bool YoungTableau::semistandard() const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        for (std::size_t l = 0; l + 1 < rows_[k].size(); ++l)
            if (rows_[k][l] > rows_[k][l + 1]) return false;
        if (k + 1 < rows_.size())
            for (std::size_t l = 0; l < rows_[k + 1].size(); ++l)
                if (rows_[k][l] >= rows_[k + 1][l]) return false;
    }
    return true;
}

std::vector<int> YoungTableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
}

std::string YoungTableau::to_text() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        for (std::size_t l = 0; l < rows_[k].size(); ++l) {
            if (l) os << ' ';
            os << rows_[k][l];
        }
        os << '\n';
    }
    return os.str();
}

ExponentMatrix::ExponentMatrix(int n, const std::vector<std::vector<int>>& entries)
    : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {
    if (static_cast<int>(entries.size()) != n) throw std::invalid_argument("ExponentMatrix: bad rows");
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(entries[i - 1].size()) != n)
            throw std::invalid_argument("ExponentMatrix: bad cols");
        for (int j = 1; j <= n; ++j) {
            if (entries[i - 1][j - 1] < 0) throw std::invalid_argument("ExponentMatrix: negative");
            at(i, j) = entries[i - 1][j - 1];
        }
    }
}

bool ExponentMatrix::is_lower_triangular() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

std::vector<int> ExponentMatrix::column_sums() const {
    std::vector<int> s(n_, 0);
    for (int j = 1; j <= n_; ++j)
        for (int i = 1; i <= n_; ++i) s[j - 1] += at(i, j);
    return s;
}

bool ExponentMatrix::column_sums_partition(Partition& out) const {
    std::vector<int> s = column_sums();
    for (std::size_t j = 0; j + 1 < s.size(); ++j)
        if (s[j] < s[j + 1]) return false;
    out = Partition(std::move(s));
    return true;
}

Integer ExponentMatrix::diag_factorial() const {
    Integer f = 1;
    for (int i = 1; i <= n_; ++i) f *= factorial(static_cast<unsigned long>(at(i, i)));
    return f;
}

ExponentMatrix ExponentMatrix::plus_unit(int i, int j, int delta) const {
    ExponentMatrix m = *this;
    m.at(i, j) += delta;
    if (m.at(i, j) < 0) throw std::invalid_argument("ExponentMatrix: entry went negative");
    return m;
}

Partition conjugate(const Partition& lam) { return lam.conjugate(); }

std::vector<Partition> enumerate_partitions(int d, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (d >= 0) rec(rec, d, d == 0 ? 1 : d);
    return out;
}

std::vector<YoungTableau> enumerate_ssyt(const Partition& lam, int n) {
    std::vector<YoungTableau> out;
    if (lam.length() > n) return out;
    if (lam.length() == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::vector<int>> rows(lam.length());
    for (int k = 1; k <= lam.length(); ++k) rows[k - 1].assign(lam.part(k), 0);

    // Fill in reading order; ascending candidate values produce reading-word lex order.
    std::vector<std::pair<int, int>> cells;
    for (int k = 1; k <= lam.length(); ++k)
        for (int l = 1; l <= lam.part(k); ++l) cells.emplace_back(k, l);

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.emplace_back(rows);
            return;
        }
        auto [k, l] = cells[idx];
        int lo = 1;
        if (l > 1) lo = std::max(lo, rows[k - 1][l - 2]);      // weakly increasing along rows
        if (k > 1) lo = std::max(lo, rows[k - 2][l - 1] + 1);  // strictly increasing down columns
        for (int v = lo; v <= n; ++v) {
            rows[k - 1][l - 1] = v;
            self(self, idx + 1);
        }
        rows[k - 1][l - 1] = 0;
    };
    rec(rec, 0);
    return out;
}

ExponentMatrix exponent_matrix(const YoungTableau& a, int n) {
    if (a.max_entry() > n) throw std::invalid_argument("exponent_matrix: entry exceeds n");
    if (a.shape().length() > n) throw std::invalid_argument("exponent_matrix: too many rows");
    ExponentMatrix g(n);
    const auto& rows = a.rows();
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (int e : rows[j]) ++g.at(e, static_cast<int>(j) + 1);
    return g;
}

YoungTableau tableau_from_matrix(const ExponentMatrix& gamma) {
    Partition lam;
    if (!gamma.column_sums_partition(lam))
        throw std::invalid_argument("tableau_from_matrix: column sums are not a partition");
    std::vector<std::vector<int>> rows;
    for (int j = 1; j <= gamma.n(); ++j) {
        std::vector<int> row;
        for (int i = 1; i <= gamma.n(); ++i)
            row.insert(row.end(), gamma.at(i, j), i);
        if (!row.empty()) rows.push_back(std::move(row));
        else break;  // column sums form a partition, later rows are empty too
    }
    return rows.empty() ? YoungTableau() : YoungTableau(std::move(rows));
}

bool is_ssyt_matrix(const ExponentMatrix& gamma) {
    Partition lam;
    if (!gamma.column_sums_partition(lam)) return false;
    if (!gamma.is_lower_triangular()) return false;
    const int n = gamma.n();
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i; j <= n - 1; ++j) {
            int lhs = 0, rhs = 0;
            for (int k = i; k <= j; ++k) lhs += gamma.at(k, i);
            for (int k = i + 1; k <= j + 1; ++k) rhs += gamma.at(k, i + 1);
            if (lhs < rhs) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int permutation_sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

}  // namespace

std::vector<YoungSubgroupElement> enumerate_young_subgroup(const Partition& lam,
                                                           unsigned long bound) {
    Integer order = lam.factorial_product();
    if (order > Integer(static_cast<long>(bound)))
        throw std::length_error("enumerate_young_subgroup: group order exceeds bound");

    std::vector<std::vector<std::vector<int>>> row_perms;
    for (int k = 1; k <= lam.length(); ++k) row_perms.push_back(all_permutations(lam.part(k)));

    std::vector<YoungSubgroupElement> out;
    YoungSubgroupElement cur;
    cur.perms.resize(lam.length());
    auto rec = [&](auto&& self, int k) -> void {
        if (k == lam.length()) {
            YoungSubgroupElement e = cur;
            e.sign = 1;
            for (const auto& p : e.perms) e.sign *= permutation_sign(p);
            out.push_back(std::move(e));
            return;
        }
        for (const auto& p : row_perms[k]) {
            cur.perms[k] = p;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

YoungTableau row_permute(const YoungTableau& a, const YoungSubgroupElement& tau) {
    Partition lam = a.shape();
    if (static_cast<int>(tau.perms.size()) != lam.length())
        throw std::invalid_argument("row_permute: permutation count mismatch");
    std::vector<std::vector<int>> rows(lam.length());
    for (int k = 1; k <= lam.length(); ++k) {
        if (static_cast<int>(tau.perms[k - 1].size()) != lam.part(k))
            throw std::invalid_argument("row_permute: permutation length mismatch");
        rows[k - 1].resize(lam.part(k));
        for (int l = 1; l <= lam.part(k); ++l)
            rows[k - 1][l - 1] = a.at(k, tau.perms[k - 1][l - 1]);
    }
    return YoungTableau(std::move(rows));
}

YoungTableau column_permute(const YoungTableau& a, const YoungSubgroupElement& sigma) {
    Partition lam = a.shape();
    Partition conj = lam.conjugate();
    if (static_cast<int>(sigma.perms.size()) != conj.length())
        throw std::invalid_argument("column_permute: permutation count mismatch");
    std::vector<std::vector<int>> rows(lam.length());
    for (int k = 1; k <= lam.length(); ++k) rows[k - 1].resize(lam.part(k));
    for (int l = 1; l <= conj.length(); ++l) {
        if (static_cast<int>(sigma.perms[l - 1].size()) != conj.part(l))
            throw std::invalid_argument("column_permute: permutation length mismatch");
        for (int k = 1; k <= conj.part(l); ++k)
            rows[k - 1][l - 1] = a.at(sigma.perms[l - 1][k - 1], l);
    }
    return YoungTableau(std::move(rows));
}

std::vector<IndexTuple> enumerate_index_tuples(int i, int j) {
    std::vector<IndexTuple> out;
    if (i > j) return out;
    if (i == j) {
        out.push_back({i});
        return out;
    }
    // Subsets of {i+1,...,j-1}, grouped by tuple length then lex.
    std::vector<int> middle;
    for (int v = i + 1; v < j; ++v) middle.push_back(v);
    const int m = static_cast<int>(middle.size());
    for (int s = 2; s <= j - i + 1; ++s) {
        int pick = s - 2;
        std::vector<int> idx(pick);
        std::iota(idx.begin(), idx.end(), 0);
        auto emit = [&]() {
            IndexTuple t;
            t.push_back(i);
            for (int q : idx) t.push_back(middle[q]);
            t.push_back(j);
            out.push_back(std::move(t));
        };
        if (pick == 0) {
            out.push_back({i, j});
            continue;
        }
        if (pick > m) continue;
        while (true) {
            emit();
            int q = pick - 1;
            while (q >= 0 && idx[q] == m - pick + q) --q;
            if (q < 0) break;
            ++idx[q];
            for (int r = q + 1; r < pick; ++r) idx[r] = idx[r - 1] + 1;
        }
    }
    return out;
}

IndexTuple tuple_complement(const IndexTuple& t, int i, int j) {
    IndexTuple out;
    std::size_t pos = 0;
    for (int v = i; v <= j; ++v) {
        while (pos < t.size() && t[pos] < v) ++pos;
        if (pos < t.size() && t[pos] == v) continue;
        out.push_back(v);
    }
    return out;
}

std::vector<std::vector<int>> gz_pattern(const YoungTableau& a, int n) {
    if (!a.semistandard()) throw std::invalid_argument("gz_pattern: tableau not semistandard");
    ExponentMatrix g = exponent_matrix(a, n);
    std::vector<std::vector<int>> m(n);
    for (int i = 1; i <= n; ++i) {
        m[i - 1].assign(n - i + 1, 0);
        for (int j = i; j <= n; ++j) {
            int s = 0;
            for (int k = i; k <= j; ++k) s += g.at(k, i);
            m[i - 1][j - i] = s;
        }
    }
    return m;
}

RowOrbit enumerate_row_arrangements(const ExponentMatrix& gamma) {
    Partition lam;
    if (!gamma.column_sums_partition(lam))
        throw std::invalid_argument("enumerate_row_arrangements: column sums not a partition");

    RowOrbit orbit;
    orbit.multiplicity = 1;
    for (int i = 1; i <= gamma.n(); ++i)
        for (int j = 1; j <= gamma.n(); ++j)
            orbit.multiplicity *= factorial(static_cast<unsigned long>(gamma.at(i, j)));

    // Distinct multiset permutations per row, combined across rows.
    std::vector<std::vector<std::vector<int>>> per_row;
    for (int j = 1; j <= lam.length(); ++j) {
        std::vector<int> row;
        for (int i = 1; i <= gamma.n(); ++i) row.insert(row.end(), gamma.at(i, j), i);
        std::vector<std::vector<int>> arrangements;
        std::sort(row.begin(), row.end());
        do arrangements.push_back(row);
        while (std::next_permutation(row.begin(), row.end()));
        per_row.push_back(std::move(arrangements));
    }

    std::vector<std::vector<int>> cur(lam.length());
    auto rec = [&](auto&& self, int j) -> void {
        if (j == lam.length()) {
            orbit.tableaux.push_back(lam.length() ? YoungTableau(cur) : YoungTableau());
            return;
        }
        for (const auto& arr : per_row[j]) {
            cur[j] = arr;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return orbit;
}

}  // namespace paraboson
