#include "arn/homotopy.hpp"

#include <algorithm>
#include <stdexcept>

namespace arn {

CoordLayout layout_maps(const ProjComplex& X, const ProjComplex& Y, int shift) {
    CoordLayout lay;
    if (X.is_zero() || Y.is_zero()) return lay;
    const Presentation& A = *X.pres();
    for (int n = X.lo(); n <= X.hi(); ++n) {
        int m = n + shift;
        if (!Y.in_range(m)) continue;
        for (int s = 0; s < X.summands(n); ++s)
            for (int t = 0; t < Y.summands(m); ++t)
                for (int pid : A.hom_paths(X.vertex(n, s), Y.vertex(m, t)))
                    lay.slots.push_back({n, s, t, pid});
    }
    return lay;
}

Vec vectorize(const ChainMap& f, const CoordLayout& lay) {
    Vec v(lay.size(), 0);
    for (int i = 0; i < lay.size(); ++i) {
        const auto& sl = lay.slots[i];
        AlgElem e = f.comp(sl.n, sl.s, sl.t);
        for (auto& [pid, c] : e.terms)
            if (pid == sl.path) v[i] = c;
    }
    return v;
}

ChainMap devectorize(const ProjComplex& X, const ProjComplex& Y, const CoordLayout& lay,
                     const Vec& v) {
    ChainMap f(X, Y);
    const Presentation& A = *X.pres();
    for (int i = 0; i < lay.size(); ++i) {
        if (!v[i]) continue;
        const auto& sl = lay.slots[i];
        AlgElem e = f.comp(sl.n, sl.s, sl.t);
        e = A.add(e, A.scale(A.elem_of_path(sl.path), v[i]));
        f.set_comp(sl.n, sl.s, sl.t, std::move(e));
    }
    return f;
}

namespace {

// Rows of the commuting-square system f^{n+1} d_X^n - d_Y^n f^n = 0 in the
// coordinates of `lay` (shift 0 layout of maps X -> Y).
Mat square_system(const ProjComplex& X, const ProjComplex& Y, const CoordLayout& lay) {
    const Presentation& A = *X.pres();
    u32 p = A.prime();
    // Row layout: for each degree n, each (s in X^n, t in Y^{n+1}), each
    // basis path of e_{vX(n,s)} A e_{vY(n+1,t)}.
    struct RowSlot {
        int n, s, t, path;
    };
    std::vector<RowSlot> rows;
    if (!X.is_zero() && !Y.is_zero())
        for (int n = X.lo(); n <= X.hi(); ++n) {
            if (!Y.in_range(n + 1)) continue;
            for (int s = 0; s < X.summands(n); ++s)
                for (int t = 0; t < Y.summands(n + 1); ++t)
                    for (int pid : A.hom_paths(X.vertex(n, s), Y.vertex(n + 1, t)))
                        rows.push_back({n, s, t, pid});
        }
    Mat m(static_cast<int>(rows.size()), lay.size(), p);
    // Index rows by (n,s,t) for accumulation.
    auto row_of = [&](int n, int s, int t, int pid) -> int {
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].n == n && rows[i].s == s && rows[i].t == t && rows[i].path == pid)
                return static_cast<int>(i);
        return -1;
    };
    for (int col = 0; col < lay.size(); ++col) {
        const auto& sl = lay.slots[col];
        AlgElem unit = A.elem_of_path(sl.path);
        // Term f^{n+1} d_X^n: the unknown slot sits at degree n+1 = sl.n.
        if (X.in_range(sl.n - 1)) {
            for (int s0 = 0; s0 < X.summands(sl.n - 1); ++s0) {
                AlgElem prod = A.multiply(X.diff_entry(sl.n - 1, s0, sl.s), unit);
                for (auto& [pid, c] : prod.terms) {
                    int ri = row_of(sl.n - 1, s0, sl.t, pid);
                    if (ri >= 0) m.at(ri, col) = fp_add(m.at(ri, col), c, p);
                }
            }
        }
        // Term -d_Y^n f^n: the unknown slot sits at degree n = sl.n.
        if (Y.in_range(sl.n + 1)) {
            for (int t1 = 0; t1 < Y.summands(sl.n + 1); ++t1) {
                AlgElem prod = A.multiply(unit, Y.diff_entry(sl.n, sl.t, t1));
                for (auto& [pid, c] : prod.terms) {
                    int ri = row_of(sl.n, sl.s, t1, pid);
                    if (ri >= 0) m.at(ri, col) = fp_sub(m.at(ri, col), c, p);
                }
            }
        }
    }
    return m;
}

}  // namespace

std::vector<ChainMap> chain_maps(const ProjComplex& X, const ProjComplex& Y) {
    if (X.pres().get() != Y.pres().get())
        throw std::invalid_argument("chain_maps: mixed presentations");
    CoordLayout lay = layout_maps(X, Y, 0);
    std::vector<ChainMap> out;
    if (lay.size() == 0) return out;
    Mat sys = square_system(X, Y, lay);
    for (auto& v : kernel(sys)) out.push_back(devectorize(X, Y, lay, v));
    return out;
}

std::vector<ChainMap> null_homotopics(const ProjComplex& X, const ProjComplex& Y) {
    CoordLayout lay = layout_maps(X, Y, 0);
    std::vector<ChainMap> out;
    if (lay.size() == 0) return out;
    const Presentation& A = *X.pres();
    u32 p = A.prime();
    CoordLayout slay = layout_maps(X, Y, -1);  // degree -1 maps s
    RowBasis rb(lay.size(), p);
    std::vector<Vec> images;
    for (int i = 0; i < slay.size(); ++i) {
        const auto& sl = slay.slots[i];
        AlgElem unit = A.elem_of_path(sl.path);
        // h = d_Y^{n-1} s^n + s^{n+1} d_X^n with the single slot s^{sl.n}.
        ChainMap h(X, Y);
        // Contribution to h^{sl.n}: compose s^{sl.n} then d_Y^{sl.n - 1}.
        if (Y.in_range(sl.n)) {
            for (int t1 = 0; t1 < Y.summands(sl.n); ++t1) {
                AlgElem prod = A.multiply(unit, Y.diff_entry(sl.n - 1, sl.t, t1));
                if (!prod.is_zero())
                    h.set_comp(sl.n, sl.s, t1, A.add(h.comp(sl.n, sl.s, t1), prod));
            }
        }
        // Contribution to h^{sl.n - 1}: d_X^{sl.n - 1} then s^{sl.n}.
        if (X.in_range(sl.n - 1) && Y.in_range(sl.n - 1)) {
            for (int s0 = 0; s0 < X.summands(sl.n - 1); ++s0) {
                AlgElem prod = A.multiply(X.diff_entry(sl.n - 1, s0, sl.s), unit);
                if (!prod.is_zero())
                    h.set_comp(sl.n - 1, s0, sl.t, A.add(h.comp(sl.n - 1, s0, sl.t), prod));
            }
        }
        Vec v = vectorize(h, lay);
        if (rb.insert(v) >= 0) out.push_back(std::move(h));
    }
    return out;
}

HomSpace::HomSpace(const ProjComplex& X, const ProjComplex& Y)
    : X_(X), Y_(Y), lay_(layout_maps(X, Y, 0)), span_(lay_.size(), X.pres()->prime()) {
    auto cm = chain_maps(X, Y);
    chain_dim_ = static_cast<int>(cm.size());
    auto nh = null_homotopics(X, Y);
    null_dim_ = static_cast<int>(nh.size());
    for (auto& h : nh) span_.insert(vectorize(h, lay_));
    for (auto& f : cm) {
        Vec v = vectorize(f, lay_);
        int idx = span_.insert(v);
        if (idx >= 0) {
            rep_index_.push_back(idx);
            basis_vecs_.push_back(std::move(v));
            basis_.push_back(std::move(f));
        }
    }
}

Vec HomSpace::reduce(const ChainMap& f) const {
    if (!(f.domain() == X_) || !(f.codomain() == Y_))
        throw std::invalid_argument("HomSpace::reduce: endpoints differ");
    return reduce_vec(vectorize(f, lay_));
}

Vec HomSpace::reduce_vec(const Vec& coords) const {
    Vec coeffs;
    Vec residual = span_.reduce(coords, &coeffs);
    for (u32 x : residual)
        if (x)
            throw std::invalid_argument("HomSpace::reduce: not a chain map class in this space");
    Vec out(basis_.size(), 0);
    for (size_t i = 0; i < rep_index_.size(); ++i) out[i] = coeffs[rep_index_[i]];
    return out;
}

ChainMap HomSpace::from_coords(const Vec& coords) const {
    u32 p = X_.pres()->prime();
    Vec acc(lay_.size(), 0);
    for (size_t i = 0; i < coords.size() && i < basis_vecs_.size(); ++i) {
        if (!coords[i]) continue;
        for (int c = 0; c < lay_.size(); ++c)
            acc[c] = fp_add(acc[c], fp_mul(coords[i], basis_vecs_[i][c], p), p);
    }
    return devectorize(X_, Y_, lay_, acc);
}

Vec compose_classes(const HomSpace& H, const ChainMap& f, const ChainMap& g) {
    return H.reduce(compose(f, g));
}

bool is_homotopy_equivalence(const ChainMap& f) {
    auto ct = cone(f);
    if (ct.cone.is_zero()) return true;
    HomSpace end(ct.cone, ct.cone);
    return end.is_null_homotopic(ChainMap::identity(ct.cone));
}

std::vector<std::vector<Vec>> end_structure(const HomSpace& end) {
    int d = end.dim();
    std::vector<std::vector<Vec>> tab(d, std::vector<Vec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            tab[i][j] = end.reduce(compose(end.basis()[i], end.basis()[j]));
    return tab;
}

Vec identity_class(const HomSpace& end) {
    return end.reduce(ChainMap::identity(end.domain()));
}

namespace {

Vec class_mul(const std::vector<std::vector<Vec>>& tab, const Vec& x, const Vec& y, u32 p) {
    int d = static_cast<int>(x.size());
    Vec out(d, 0);
    for (int i = 0; i < d; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < d; ++j) {
            if (!y[j]) continue;
            u32 c = fp_mul(x[i], y[j], p);
            for (int k = 0; k < d; ++k)
                out[k] = fp_add(out[k], fp_mul(c, tab[i][j][k], p), p);
        }
    }
    return out;
}

bool vec_zero(const Vec& v) {
    for (u32 x : v)
        if (x) return false;
    return true;
}

}  // namespace

bool is_indecomposable(const ProjComplex& X) {
    if (X.is_zero()) return false;
    HomSpace end(X, X);
    u32 p = X.pres()->prime();
    Vec idc = identity_class(end);
    if (vec_zero(idc)) return false;  // contractible
    auto tab = end_structure(end);
    int d = end.dim();
    // Identity coefficient of each basis class in the deterministic basis
    // {id, remaining independent classes}.
    RowBasis rb(d, p);
    rb.insert(idc);
    for (int i = 0; i < d; ++i) {
        Vec coeffs;
        Vec e(d, 0);
        e[i] = 1;
        rb.reduce(e, &coeffs);
        u32 lambda = coeffs.empty() ? 0 : coeffs[0];
        // h = b_i - lambda id must be nilpotent.
        Vec h(d, 0);
        for (int k = 0; k < d; ++k) h[k] = fp_sub(e[k], fp_mul(lambda, idc[k], p), p);
        Vec pow = h;
        bool nil = vec_zero(pow);
        for (int it = 0; it < d + 1 && !nil; ++it) {
            pow = class_mul(tab, pow, h, p);
            nil = vec_zero(pow);
        }
        if (!nil) return false;
        rb.insert(e);
    }
    return true;
}

bool class_invertible(const HomSpace& h_xy, const HomSpace& h_yx, const HomSpace& end_y,
                      const Vec& u) {
    // Solve [u o v] = [id_Y] over v in Hom(Y,X).
    u32 p = h_xy.domain().pres()->prime();
    if (vec_zero(u)) return false;
    ChainMap urep = h_xy.from_coords(u);
    int dv = h_yx.dim();
    int de = end_y.dim();
    if (de == 0) return false;
    Mat m(de, dv, p);
    for (int j = 0; j < dv; ++j) {
        Vec col = end_y.reduce(compose(urep, h_yx.basis()[j]));
        for (int i = 0; i < de; ++i) m.at(i, j) = col[i];
    }
    return solve(m, identity_class(end_y)).has_value();
}

bool spaces_isomorphic(const HomSpace& h_xy, const HomSpace& h_yx, const HomSpace& end_y) {
    for (int i = 0; i < h_xy.dim(); ++i) {
        Vec u(h_xy.dim(), 0);
        u[i] = 1;
        if (class_invertible(h_xy, h_yx, end_y, u)) return true;
    }
    return false;
}

}  // namespace arn
