#include "hsc/linmap.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hsc {

namespace {

// Row of an elimination tableau: sorted (col, value), no zeros.
using SparseRow = std::vector<std::pair<int, Scalar>>;

struct Echelon {
    std::vector<SparseRow> rows;  // reduced echelon, sorted by leading column
    std::vector<int> pivots;      // pivots[i] = leading column of rows[i], all < pivot_limit
    std::vector<SparseRow> inconsistent;  // rows whose leading column is >= pivot_limit
};

SparseRow row_axpy(const Scalar& a, const SparseRow& x, const Scalar& b, const SparseRow& y) {
    // a*x + b*y, merged.
    SparseRow out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            Scalar v = a * x[i].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, v);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            Scalar v = b * y[j].second;
            if (!v.is_zero()) out.emplace_back(y[j].first, v);
            ++j;
        } else {
            Scalar v = a * x[i].second + b * y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

void row_scale(SparseRow& r, const Scalar& c) {
    for (auto& [col, v] : r) v = v * c;
}

// Divide a rational row by the gcd of its numerators (and clear denominators
// first), keeping entries small during fraction-free elimination.
void row_reduce_content(const Field& field, SparseRow& r) {
    if (field.kind() != Field::Kind::Rationals || r.empty()) return;
    mpz_class lcm = 1;
    for (const auto& [col, v] : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.value().get_den().get_mpz_t());
    mpz_class gcd = 0;
    for (const auto& [col, v] : r) {
        mpz_class num = v.value().get_num() * (lcm / v.value().get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
    }
    if (gcd == 0) return;
    Scalar factor(field, mpq_class(lcm, gcd));
    row_scale(r, factor);
}

// Reduced echelon form on sparse rows. Pivoting by first nonzero column,
// first row; scalars are exact so no numerical pivoting is needed. Columns
// >= pivot_limit never become pivots (used for augmented solves).
Echelon echelon_sparse(const Field& field, std::vector<SparseRow> rows, int pivot_limit) {
    Echelon result;
    // Forward, fraction-free for Q (content-reduced cross-multiplication).
    std::vector<SparseRow> done;
    std::vector<int> done_pivot;
    while (true) {
        int best = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty()) continue;
            if (best < 0 || rows[i].front().first < rows[best].front().first) best = static_cast<int>(i);
        }
        if (best < 0) break;
        SparseRow pivot_row = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        int pc = pivot_row.front().first;
        if (pc >= pivot_limit) {
            result.inconsistent.push_back(std::move(pivot_row));
            // Any remaining row also has leading column >= pivot_limit.
            for (auto& r : rows)
                if (!r.empty()) result.inconsistent.push_back(std::move(r));
            break;
        }
        Scalar p = pivot_row.front().second;
        for (auto& r : rows) {
            if (r.empty() || r.front().first != pc) continue;
            Scalar f = r.front().second;
            if (field.kind() == Field::Kind::Rationals) {
                r = row_axpy(p, r, -f, pivot_row);
                row_reduce_content(field, r);
            } else {
                r = row_axpy(Scalar::one(field), r, -(f / p), pivot_row);
            }
        }
        done.push_back(std::move(pivot_row));
        done_pivot.push_back(pc);
    }
    // Normalize pivots to 1 and eliminate above.
    for (auto& r : done) row_scale(r, r.front().second.inverse());
    for (int i = static_cast<int>(done.size()) - 1; i >= 0; --i) {
        for (int j = 0; j < i; ++j) {
            // Entry of row j at column done_pivot[i], if any.
            const SparseRow& rj = done[j];
            auto it = std::lower_bound(rj.begin(), rj.end(), done_pivot[i],
                                       [](const auto& e, int c) { return e.first < c; });
            if (it != rj.end() && it->first == done_pivot[i])
                done[j] = row_axpy(Scalar::one(field), rj, -it->second, done[i]);
        }
    }
    result.rows = std::move(done);
    result.pivots = std::move(done_pivot);
    return result;
}

// Dense reduced echelon; same contract as echelon_sparse.
Echelon echelon_dense(const Field& field, std::vector<SparseRow> sparse_rows, int ncols, int pivot_limit) {
    std::vector<std::vector<Scalar>> m(sparse_rows.size(), std::vector<Scalar>(ncols, Scalar::zero(field)));
    for (size_t i = 0; i < sparse_rows.size(); ++i)
        for (const auto& [c, v] : sparse_rows[i]) m[i][c] = v;
    int nrows = static_cast<int>(m.size());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < pivot_limit && r < nrows; ++c) {
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (!m[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][c].inverse();
        for (int j = c; j < ncols; ++j) m[r][j] = m[r][j] * inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (int j = c; j < ncols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon result;
    result.pivots = std::move(pivots);
    for (int i = 0; i < nrows; ++i) {
        SparseRow row;
        for (int j = 0; j < ncols; ++j)
            if (!m[i][j].is_zero()) row.emplace_back(j, m[i][j]);
        if (row.empty()) continue;
        if (i < static_cast<int>(result.pivots.size()))
            result.rows.push_back(std::move(row));
        else
            result.inconsistent.push_back(std::move(row));
    }
    return result;
}

constexpr int kDenseColumnLimit = 512;

Echelon echelon(const Field& field, std::vector<SparseRow> rows, int ncols, int pivot_limit) {
    if (ncols <= kDenseColumnLimit) return echelon_dense(field, std::move(rows), ncols, pivot_limit);
    return echelon_sparse(field, std::move(rows), pivot_limit);
}

std::vector<SparseRow> to_sparse_rows(const LinearMap& f, int extra_cols = 0) {
    (void)extra_cols;
    std::vector<SparseRow> rows(f.rows());
    for (const auto& e : f.entries()) rows[e.row].emplace_back(e.col, e.value);
    return rows;
}

}  // namespace

LinearMap::LinearMap(Field field, int rows, int cols, std::vector<Entry> entries)
    : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative dimension");
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    entries_.reserve(entries.size());
    for (auto& e : entries) {
        if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
            throw DimensionMismatch("entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                    ") out of range for " + std::to_string(rows) + "x" + std::to_string(cols));
        if (e.value.field() != field_) throw FieldMismatch("entry field differs from map field");
        if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
            entries_.back().value += e.value;
            if (entries_.back().value.is_zero()) entries_.pop_back();
        } else if (!e.value.is_zero()) {
            entries_.push_back(std::move(e));
        }
    }
}

LinearMap LinearMap::identity(const Field& field, int n) {
    std::vector<Entry> es;
    es.reserve(n);
    for (int i = 0; i < n; ++i) es.push_back({i, i, Scalar::one(field)});
    return LinearMap(field, n, n, std::move(es));
}

LinearMap LinearMap::zero(const Field& field, int rows, int cols) { return LinearMap(field, rows, cols, {}); }

LinearMap LinearMap::from_dense(const Field& field, const std::vector<std::vector<Scalar>>& rows) {
    std::vector<Entry> es;
    int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (static_cast<int>(rows[i].size()) != ncols) throw DimensionMismatch("ragged dense matrix");
        for (int j = 0; j < ncols; ++j)
            if (!rows[i][j].is_zero()) es.push_back({i, j, rows[i][j]});
    }
    return LinearMap(field, static_cast<int>(rows.size()), ncols, std::move(es));
}

LinearMap LinearMap::from_ints(const Field& field, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Scalar>> s;
    s.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Scalar> sr;
        sr.reserve(r.size());
        for (long v : r) sr.emplace_back(field, v);
        s.push_back(std::move(sr));
    }
    return from_dense(field, s);
}

LinearMap LinearMap::from_vec(const Field& field, const Vec& v) {
    std::vector<Entry> es;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!v[i].is_zero()) es.push_back({i, 0, v[i]});
    return LinearMap(field, static_cast<int>(v.size()), 1, std::move(es));
}

LinearMap LinearMap::swap_legs(const Field& field, int m, int n) {
    return leg_permutation(field, {m, n}, {1, 0});
}

LinearMap LinearMap::leg_permutation(const Field& field, const std::vector<int>& dims,
                                     const std::vector<int>& perm) {
    int total = 1;
    for (int d : dims) total *= d;
    std::vector<Entry> es;
    es.reserve(total);
    int k = static_cast<int>(dims.size());
    std::vector<int> idx(k, 0);
    for (int s = 0; s < total; ++s) {
        int rem = s;
        for (int leg = k - 1; leg >= 0; --leg) {
            idx[leg] = rem % dims[leg];
            rem /= dims[leg];
        }
        int t = 0;
        for (int leg = 0; leg < k; ++leg) t = t * dims[perm[leg]] + idx[perm[leg]];
        es.push_back({t, s, Scalar::one(field)});
    }
    return LinearMap(field, total, total, std::move(es));
}

Scalar LinearMap::at(int row, int col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair<int, int>(row, col),
                               [](const Entry& e, const std::pair<int, int>& rc) {
                                   return e.row != rc.first ? e.row < rc.first : e.col < rc.second;
                               });
    if (it != entries_.end() && it->row == row && it->col == col) return it->value;
    return Scalar::zero(field_);
}

Vec LinearMap::column(int col) const {
    Vec v(rows_, Scalar::zero(field_));
    for (const auto& e : entries_)
        if (e.col == col) v[e.row] = e.value;
    return v;
}

std::vector<std::vector<Scalar>> LinearMap::to_dense() const {
    std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_, Scalar::zero(field_)));
    for (const auto& e : entries_) m[e.row][e.col] = e.value;
    return m;
}

bool LinearMap::operator==(const LinearMap& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    if (entries_.size() != rhs.entries_.size()) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].row != rhs.entries_[i].row || entries_[i].col != rhs.entries_[i].col ||
            entries_[i].value != rhs.entries_[i].value)
            return false;
    return true;
}

LinearMap LinearMap::operator+(const LinearMap& rhs) const {
    if (field_ != rhs.field_) throw FieldMismatch("sum of maps over different fields");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("sum of maps of different shape");
    std::vector<Entry> es = entries_;
    es.insert(es.end(), rhs.entries_.begin(), rhs.entries_.end());
    return LinearMap(field_, rows_, cols_, std::move(es));
}

LinearMap LinearMap::operator-(const LinearMap& rhs) const { return *this + rhs.scale(-Scalar::one(field_)); }

LinearMap LinearMap::scale(const Scalar& c) const {
    std::vector<Entry> es = entries_;
    for (auto& e : es) e.value = e.value * c;
    return LinearMap(field_, rows_, cols_, std::move(es));
}

LinearMap LinearMap::compose(const LinearMap& g) const {
    if (field_ != g.field_) throw FieldMismatch("composition over different fields");
    if (cols_ != g.rows_)
        throw DimensionMismatch("composition mismatch: " + std::to_string(cols_) + " vs " + std::to_string(g.rows_));
    // Group g's entries by row for the contraction over the middle index.
    std::vector<std::vector<const Entry*>> by_row(g.rows_);
    for (const auto& e : g.entries_) by_row[e.row].push_back(&e);
    std::map<std::pair<int, int>, Scalar> acc;
    for (const auto& f : entries_) {
        for (const Entry* e : by_row[f.col]) {
            auto key = std::make_pair(f.row, e->col);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, f.value * e->value);
            else
                it->second += f.value * e->value;
        }
    }
    std::vector<Entry> es;
    es.reserve(acc.size());
    for (auto& [rc, v] : acc)
        if (!v.is_zero()) es.push_back({rc.first, rc.second, v});
    return LinearMap(field_, rows_, g.cols_, std::move(es));
}

LinearMap LinearMap::tensor(const LinearMap& g) const {
    if (field_ != g.field_) throw FieldMismatch("tensor over different fields");
    std::vector<Entry> es;
    es.reserve(entries_.size() * g.entries_.size());
    for (const auto& a : entries_)
        for (const auto& b : g.entries_)
            es.push_back({a.row * g.rows_ + b.row, a.col * g.cols_ + b.col, a.value * b.value});
    return LinearMap(field_, rows_ * g.rows_, cols_ * g.cols_, std::move(es));
}

LinearMap LinearMap::transpose() const {
    std::vector<Entry> es;
    es.reserve(entries_.size());
    for (const auto& e : entries_) es.push_back({e.col, e.row, e.value});
    return LinearMap(field_, cols_, rows_, std::move(es));
}

Vec LinearMap::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("apply: vector length mismatch");
    Vec y(rows_, Scalar::zero(field_));
    for (const auto& e : entries_) y[e.row] += e.value * x[e.col];
    return y;
}

int LinearMap::rank() const {
    return static_cast<int>(echelon(field_, to_sparse_rows(*this), cols_, cols_).pivots.size());
}

LinearMap LinearMap::kernel() const {
    Echelon e = echelon(field_, to_sparse_rows(*this), cols_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : e.pivots) is_pivot[p] = true;
    // One basis vector per free column, then re-echelonize the basis (as
    // rows) for a deterministic reduced form.
    std::vector<SparseRow> basis;
    for (int fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        SparseRow v;
        for (size_t i = 0; i < e.pivots.size(); ++i) {
            const SparseRow& row = e.rows[i];
            auto it = std::lower_bound(row.begin(), row.end(), fc,
                                       [](const auto& en, int c) { return en.first < c; });
            if (it != row.end() && it->first == fc) v.emplace_back(e.pivots[i], -it->second);
        }
        v.emplace_back(fc, Scalar::one(field_));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    Echelon canon = echelon(field_, std::move(basis), cols_, cols_);
    std::vector<Entry> es;
    for (size_t j = 0; j < canon.rows.size(); ++j)
        for (const auto& [pos, val] : canon.rows[j]) es.push_back({pos, static_cast<int>(j), val});
    return LinearMap(field_, cols_, static_cast<int>(canon.rows.size()), std::move(es));
}

LinearMap LinearMap::image() const {
    Echelon canon = echelon(field_, to_sparse_rows(transpose()), rows_, rows_);
    std::vector<Entry> es;
    for (size_t j = 0; j < canon.rows.size(); ++j)
        for (const auto& [pos, val] : canon.rows[j]) es.push_back({pos, static_cast<int>(j), val});
    return LinearMap(field_, rows_, static_cast<int>(canon.rows.size()), std::move(es));
}

std::optional<Vec> LinearMap::solve(const Vec& b) const {
    if (static_cast<int>(b.size()) != rows_) throw DimensionMismatch("solve: rhs length mismatch");
    auto x = solve_matrix(from_vec(field_, b));
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<LinearMap> LinearMap::solve_matrix(const LinearMap& b) const {
    if (field_ != b.field_) throw FieldMismatch("solve over different fields");
    if (b.rows_ != rows_) throw DimensionMismatch("solve: rhs row count mismatch");
    std::vector<SparseRow> rows = to_sparse_rows(*this);
    for (const auto& e : b.entries_) rows[e.row].emplace_back(cols_ + e.col, e.value);
    for (auto& r : rows)
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Echelon e = echelon(field_, std::move(rows), cols_ + b.cols_, cols_);
    if (!e.inconsistent.empty()) return std::nullopt;
    std::vector<Entry> es;
    for (size_t i = 0; i < e.pivots.size(); ++i)
        for (const auto& [c, v] : e.rows[i])
            if (c >= cols_) es.push_back({e.pivots[i], c - cols_, v});
    return LinearMap(field_, cols_, b.cols_, std::move(es));
}

std::optional<LinearMap> LinearMap::invert() const {
    if (rows_ != cols_) return std::nullopt;
    auto inv = solve_matrix(identity(field_, rows_));
    if (!inv) return std::nullopt;
    return inv;
}

std::string LinearMap::str() const {
    std::ostringstream os;
    auto d = to_dense();
    os << rows_ << "x" << cols_ << " over " << field_.name() << "\n";
    for (const auto& row : d) {
        os << "[";
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].str();
        os << "]\n";
    }
    return os.str();
}

LinearMap factor_through(const LinearMap& inclusion, const LinearMap& f, const std::string& what) {
    auto x = inclusion.solve_matrix(f);
    if (!x) throw NotWellDefined(what + ": image not contained in the target subspace");
    return *x;
}

bool image_contained(const LinearMap& sub, const LinearMap& sup) {
    return sup.solve_matrix(sub).has_value();
}

}  // namespace hsc
