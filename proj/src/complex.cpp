#include "arn/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace arn {

const Block ProjComplex::kEmptyBlock = {};

ProjComplex::ProjComplex(PresPtr A, int lo, std::vector<std::vector<int>> verts,
                         std::vector<Block> diffs)
    : A_(std::move(A)), lo_(lo), verts_(std::move(verts)), diffs_(std::move(diffs)) {
    // Trim empty degrees at both ends so ranges are tight.
    while (!verts_.empty() && verts_.front().empty()) {
        verts_.erase(verts_.begin());
        if (!diffs_.empty()) diffs_.erase(diffs_.begin());
        ++lo_;
    }
    while (!verts_.empty() && verts_.back().empty()) {
        verts_.pop_back();
        if (!diffs_.empty()) diffs_.pop_back();
    }
    if (verts_.empty()) {
        diffs_.clear();
        lo_ = 0;
        return;
    }
    if (diffs_.size() + 1 != verts_.size())
        diffs_.resize(verts_.size() - 1);
    validate();
}

ProjComplex ProjComplex::zero(PresPtr A) {
    ProjComplex X;
    X.A_ = std::move(A);
    return X;
}

ProjComplex ProjComplex::stalk(PresPtr A, int vertex, int n) {
    if (vertex < 0 || vertex >= A->N())
        throw std::invalid_argument("stalk: vertex out of range");
    return ProjComplex(std::move(A), -n, {{vertex}}, {});
}

const Block& ProjComplex::diff(int n) const {
    if (!in_range(n) || n == hi()) return kEmptyBlock;
    return diffs_[n - lo_];
}

AlgElem ProjComplex::diff_entry(int n, int s, int t) const {
    const Block& b = diff(n);
    if (b.empty()) return A_->zero_elem(vertex(n, s), vertex(n + 1, t));
    return b[s][t];
}

std::optional<Interval> ProjComplex::support() const {
    if (is_zero()) return std::nullopt;
    return Interval{lo(), hi()};
}

ProjComplex ProjComplex::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    ProjComplex X = *this;
    X.lo_ -= k;
    if (k % 2 != 0) {
        for (auto& blk : X.diffs_)
            for (auto& row : blk)
                for (auto& e : row) e = A_->scale(e, A_->prime() - 1);
    }
    return X;
}

void ProjComplex::validate() const {
    if (is_zero()) return;
    const Presentation& A = *A_;
    for (size_t k = 0; k < diffs_.size(); ++k) {
        const Block& b = diffs_[k];
        size_t rows = verts_[k].size(), cols = verts_[k + 1].size();
        if (b.empty()) {
            if (rows && cols)
                throw std::invalid_argument("complex: missing differential block");
            continue;
        }
        if (b.size() != rows)
            throw std::invalid_argument("complex: differential block has wrong row count");
        for (size_t s = 0; s < rows; ++s) {
            if (b[s].size() != cols)
                throw std::invalid_argument("complex: differential block has wrong column count");
            for (size_t t = 0; t < cols; ++t) {
                const AlgElem& e = b[s][t];
                if (e.from_v != verts_[k][s] || e.to_v != verts_[k + 1][t])
                    throw std::invalid_argument("complex: entry endpoints disagree with summands");
            }
        }
    }
    // d o d = 0.
    for (size_t k = 0; k + 1 < diffs_.size(); ++k) {
        size_t rows = verts_[k].size(), mid = verts_[k + 1].size(), cols = verts_[k + 2].size();
        for (size_t s = 0; s < rows; ++s)
            for (size_t u = 0; u < cols; ++u) {
                AlgElem acc = A.zero_elem(verts_[k][s], verts_[k + 2][u]);
                for (size_t t = 0; t < mid; ++t)
                    acc = A.add(acc, A.multiply(diffs_[k][s][t], diffs_[k + 1][t][u]));
                if (!acc.is_zero())
                    throw std::invalid_argument("complex: d o d != 0");
            }
    }
}

bool ProjComplex::operator==(const ProjComplex& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return lo_ == o.lo_ && verts_ == o.verts_ && diffs_ == o.diffs_;
}

// ---- chain maps -------------------------------------------------------------

ChainMap::ChainMap(ProjComplex X, ProjComplex Y) : X_(std::move(X)), Y_(std::move(Y)) {
    if (X_.pres().get() != Y_.pres().get())
        throw std::invalid_argument("chain map: mixed presentations");
    if (X_.is_zero() || Y_.is_zero()) return;
    int lo = std::max(X_.lo(), Y_.lo());
    int hi = std::min(X_.hi(), Y_.hi());
    nlo_ = lo;
    for (int n = lo; n <= hi; ++n) {
        Block b(X_.summands(n), std::vector<AlgElem>(Y_.summands(n)));
        for (int s = 0; s < X_.summands(n); ++s)
            for (int t = 0; t < Y_.summands(n); ++t)
                b[s][t] = X_.pres()->zero_elem(X_.vertex(n, s), Y_.vertex(n, t));
        comps_.push_back(std::move(b));
    }
}

AlgElem ChainMap::comp(int n, int s, int t) const {
    int k = n - nlo_;
    if (k < 0 || k >= static_cast<int>(comps_.size())) {
        int fv = X_.in_range(n) ? X_.vertex(n, s) : 0;
        int tv = Y_.in_range(n) ? Y_.vertex(n, t) : fv;
        return pres()->zero_elem(fv, tv);
    }
    return comps_[k][s][t];
}

void ChainMap::set_comp(int n, int s, int t, AlgElem e) {
    int k = n - nlo_;
    if (k < 0 || k >= static_cast<int>(comps_.size()))
        throw std::invalid_argument("chain map: degree outside overlap");
    if (e.from_v != X_.vertex(n, s) || e.to_v != Y_.vertex(n, t))
        throw std::invalid_argument("chain map: entry endpoints disagree with summands");
    comps_[k][s][t] = std::move(e);
}

bool ChainMap::is_zero_map() const {
    for (auto& b : comps_)
        for (auto& row : b)
            for (auto& e : row)
                if (!e.is_zero()) return false;
    return true;
}

ChainMap ChainMap::identity(const ProjComplex& X) {
    ChainMap f(X, X);
    for (int n = X.lo(); n <= X.hi(); ++n)
        for (int s = 0; s < X.summands(n); ++s)
            f.set_comp(n, s, s, X.pres()->idempotent(X.vertex(n, s)));
    return f;
}

ChainMap ChainMap::shifted(int k) const {
    ChainMap g(X_.shifted(k), Y_.shifted(k));
    for (int i = 0; i < static_cast<int>(comps_.size()); ++i) {
        int n = nlo_ + i;
        for (size_t s = 0; s < comps_[i].size(); ++s)
            for (size_t t = 0; t < comps_[i][s].size(); ++t)
                g.set_comp(n - k, static_cast<int>(s), static_cast<int>(t), comps_[i][s][t]);
    }
    return g;
}

ChainMap ChainMap::scaled(u32 c) const {
    ChainMap g = *this;
    for (auto& b : g.comps_)
        for (auto& row : b)
            for (auto& e : row) e = pres()->scale(e, c);
    return g;
}

ChainMap ChainMap::plus(const ChainMap& o) const {
    if (!(X_ == o.X_) || !(Y_ == o.Y_))
        throw std::invalid_argument("chain map plus: endpoints differ");
    ChainMap g = *this;
    for (int i = 0; i < static_cast<int>(comps_.size()); ++i)
        for (size_t s = 0; s < comps_[i].size(); ++s)
            for (size_t t = 0; t < comps_[i][s].size(); ++t)
                g.comps_[i][s][t] = pres()->add(comps_[i][s][t], o.comps_[i][s][t]);
    return g;
}

void ChainMap::validate() const {
    const Presentation& A = *pres();
    if (X_.is_zero() || Y_.is_zero()) return;
    int lo = std::min(X_.lo(), Y_.lo()) - 1;
    int hi = std::max(X_.hi(), Y_.hi()) + 1;
    for (int n = lo; n <= hi; ++n) {
        // f^{n+1} d_X^n = d_Y^n f^n blockwise.
        int rows = X_.summands(n);
        int cols = Y_.summands(n + 1);
        if (!rows || !cols) {
            // Still fine: both composites are zero maps.
            continue;
        }
        for (int s = 0; s < rows; ++s)
            for (int t = 0; t < cols; ++t) {
                AlgElem lhs = A.zero_elem(X_.vertex(n, s), Y_.vertex(n + 1, t));
                for (int u = 0; u < X_.summands(n + 1); ++u)
                    lhs = A.add(lhs, A.multiply(X_.diff_entry(n, s, u), comp(n + 1, u, t)));
                AlgElem rhs = A.zero_elem(X_.vertex(n, s), Y_.vertex(n + 1, t));
                for (int v = 0; v < Y_.summands(n); ++v)
                    rhs = A.add(rhs, A.multiply(comp(n, s, v), Y_.diff_entry(n, v, t)));
                if (!(lhs == rhs))
                    throw std::invalid_argument("chain map: square does not commute");
            }
    }
}

bool ChainMap::is_valid() const {
    try {
        validate();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

bool ChainMap::operator==(const ChainMap& o) const {
    if (!(X_ == o.X_) || !(Y_ == o.Y_)) return false;
    // Compare on the overlap; both are stored on the same range.
    return comps_ == o.comps_ && nlo_ == o.nlo_;
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
    if (!(g.codomain() == f.domain()))
        throw std::invalid_argument("compose: codomain of the first-applied map must match");
    const Presentation& A = *f.pres();
    ChainMap h(g.domain(), f.codomain());
    const ProjComplex& X = g.domain();
    const ProjComplex& Y = g.codomain();
    const ProjComplex& Z = f.codomain();
    int lo = std::max(X.lo(), Z.lo());
    int hi = std::min(X.hi(), Z.hi());
    for (int n = lo; n <= hi; ++n) {
        if (!Y.in_range(n)) continue;
        for (int s = 0; s < X.summands(n); ++s)
            for (int t = 0; t < Z.summands(n); ++t) {
                AlgElem acc = A.zero_elem(X.vertex(n, s), Z.vertex(n, t));
                for (int u = 0; u < Y.summands(n); ++u)
                    acc = A.add(acc, A.multiply(g.comp(n, s, u), f.comp(n, u, t)));
                h.set_comp(n, s, t, std::move(acc));
            }
    }
    return h;
}

ProjComplex direct_sum(const ProjComplex& X, const ProjComplex& Y) {
    return direct_sum_with_maps(X, Y).sum;
}

SumMaps direct_sum_with_maps(const ProjComplex& X, const ProjComplex& Y) {
    if (X.pres().get() != Y.pres().get())
        throw std::invalid_argument("direct_sum: mixed presentations");
    PresPtr A = X.pres();
    if (X.is_zero() || Y.is_zero()) {
        const ProjComplex& nz = X.is_zero() ? Y : X;
        SumMaps out{nz, ChainMap(X, nz), ChainMap(Y, nz), ChainMap(nz, X), ChainMap(nz, Y)};
        if (!nz.is_zero()) {
            if (X.is_zero()) {
                out.inj_y = ChainMap::identity(nz);
                out.proj_y = ChainMap::identity(nz);
            } else {
                out.inj_x = ChainMap::identity(nz);
                out.proj_x = ChainMap::identity(nz);
            }
        }
        return out;
    }
    int lo = std::min(X.lo(), Y.lo());
    int hi = std::max(X.hi(), Y.hi());
    std::vector<std::vector<int>> verts;
    for (int n = lo; n <= hi; ++n) {
        std::vector<int> row;
        for (int s = 0; s < X.summands(n); ++s) row.push_back(X.vertex(n, s));
        for (int s = 0; s < Y.summands(n); ++s) row.push_back(Y.vertex(n, s));
        verts.push_back(std::move(row));
    }
    std::vector<Block> diffs;
    for (int n = lo; n < hi; ++n) {
        int rx = X.summands(n), ry = Y.summands(n);
        int cx = X.summands(n + 1), cy = Y.summands(n + 1);
        Block b(rx + ry, std::vector<AlgElem>(cx + cy));
        for (int s = 0; s < rx + ry; ++s)
            for (int t = 0; t < cx + cy; ++t) {
                int sv = s < rx ? X.vertex(n, s) : Y.vertex(n, s - rx);
                int tv = t < cx ? X.vertex(n + 1, t) : Y.vertex(n + 1, t - cx);
                if (s < rx && t < cx)
                    b[s][t] = X.diff_entry(n, s, t);
                else if (s >= rx && t >= cx)
                    b[s][t] = Y.diff_entry(n, s - rx, t - cx);
                else
                    b[s][t] = A->zero_elem(sv, tv);
            }
        diffs.push_back(std::move(b));
    }
    SumMaps out;
    out.sum = ProjComplex(A, lo, std::move(verts), std::move(diffs));
    out.inj_x = ChainMap(X, out.sum);
    out.inj_y = ChainMap(Y, out.sum);
    out.proj_x = ChainMap(out.sum, X);
    out.proj_y = ChainMap(out.sum, Y);
    for (int n = lo; n <= hi; ++n) {
        int rx = X.summands(n);
        for (int s = 0; s < rx; ++s) {
            out.inj_x.set_comp(n, s, s, A->idempotent(X.vertex(n, s)));
            out.proj_x.set_comp(n, s, s, A->idempotent(X.vertex(n, s)));
        }
        for (int s = 0; s < Y.summands(n); ++s) {
            out.inj_y.set_comp(n, s, rx + s, A->idempotent(Y.vertex(n, s)));
            out.proj_y.set_comp(n, rx + s, s, A->idempotent(Y.vertex(n, s)));
        }
    }
    return out;
}

ConeTriangle cone(const ChainMap& f) {
    f.validate();
    PresPtr A = f.pres();
    const ProjComplex& X = f.domain();
    const ProjComplex& Y = f.codomain();
    ProjComplex SX = X.shifted(1);
    if (X.is_zero()) {
        ConeTriangle out{Y, ChainMap::identity(Y), ChainMap(Y, SX)};
        return out;
    }
    int lo = std::min(SX.is_zero() ? Y.lo() : SX.lo(), Y.is_zero() ? SX.lo() : Y.lo());
    int hi = std::max(SX.is_zero() ? Y.hi() : SX.hi(), Y.is_zero() ? SX.hi() : Y.hi());
    std::vector<std::vector<int>> verts;
    std::vector<Block> diffs;
    auto sx_cnt = [&](int n) { return SX.summands(n); };
    auto y_cnt = [&](int n) { return Y.summands(n); };
    for (int n = lo; n <= hi; ++n) {
        std::vector<int> row;
        for (int s = 0; s < sx_cnt(n); ++s) row.push_back(SX.vertex(n, s));
        for (int s = 0; s < y_cnt(n); ++s) row.push_back(Y.vertex(n, s));
        verts.push_back(std::move(row));
    }
    for (int n = lo; n < hi; ++n) {
        int rx = sx_cnt(n), ry = y_cnt(n), cx = sx_cnt(n + 1), cy = y_cnt(n + 1);
        Block b(rx + ry, std::vector<AlgElem>(cx + cy));
        for (int s = 0; s < rx + ry; ++s)
            for (int t = 0; t < cx + cy; ++t) {
                int sv = s < rx ? SX.vertex(n, s) : Y.vertex(n, s - rx);
                int tv = t < cx ? SX.vertex(n + 1, t) : Y.vertex(n + 1, t - cx);
                AlgElem e = A->zero_elem(sv, tv);
                if (s < rx && t < cx) {
                    e = SX.diff_entry(n, s, t);  // already -d_X^{n+1}
                } else if (s < rx && t >= cx) {
                    // -f^{n+1}: X^{n+1} = SX^n -> Y^{n+1}. The sign makes the
                    // canonical projection triangles of the catalog exact with
                    // connecting scalar 1.
                    e = A->scale(f.comp(n + 1, s, t - cx), A->prime() - 1);
                } else if (s >= rx && t >= cx) {
                    e = Y.diff_entry(n, s - rx, t - cx);
                }
                b[s][t] = std::move(e);
            }
        diffs.push_back(std::move(b));
    }
    ConeTriangle out;
    out.cone = ProjComplex(A, lo, std::move(verts), std::move(diffs));
    out.inc = ChainMap(Y, out.cone);
    out.proj = ChainMap(out.cone, SX);
    for (int n = lo; n <= hi; ++n) {
        int rx = sx_cnt(n);
        for (int s = 0; s < y_cnt(n); ++s)
            out.inc.set_comp(n, s, rx + s, A->idempotent(Y.vertex(n, s)));
        for (int s = 0; s < rx; ++s)
            out.proj.set_comp(n, s, s, A->idempotent(SX.vertex(n, s)));
    }
    out.inc.validate();
    out.proj.validate();
    return out;
}

std::string complex_brief(const ProjComplex& X) {
    if (X.is_zero()) return "0";
    std::string s;
    for (int n = X.lo(); n <= X.hi(); ++n) {
        if (n > X.lo()) s += " -> ";
        s += "[" + std::to_string(n) + ":";
        for (int i = 0; i < X.summands(n); ++i) {
            if (i) s += "+";
            s += "P" + std::to_string(X.vertex(n, i));
        }
        s += "]";
    }
    return s;
}

}  // namespace arn
