#include "arn/pathalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace arn {

namespace {

// A walk (src, len) is nonzero in A(r,N) iff none of its interior vertices
// lies in {0, ..., r-1}.
bool walk_nonzero(int src, int len, int r, int N) {
    for (int j = 1; j < len; ++j) {
        int v = (src + j) % N;
        if (v < r) return false;
    }
    return true;
}

}  // namespace

Presentation Presentation::make_arn(int r, int N, u32 prime) {
    if (r < 1) throw std::invalid_argument("make_arn: need r >= 1");
    if (N < r) throw std::invalid_argument("make_arn: need N >= r");
    if (!is_prime(prime)) throw std::invalid_argument("make_arn: modulus must be prime");
    Presentation P;
    P.r_ = r;
    P.N_ = N;
    P.p_ = prime;
    for (int i = 0; i < N; ++i) P.arrows_.push_back({i, i, (i + 1) % N});
    // Relation alpha_i * alpha_{i-1} for i = 0..r-1 (alpha_{-1} = alpha_{N-1}).
    for (int i = 0; i < r; ++i) P.forbidden_.push_back({i, (i + N - 1) % N});

    P.path_id_by_src_len_.assign(N, {});
    for (int src = 0; src < N; ++src) {
        for (int len = 0; len <= N + 1; ++len) {
            if (!walk_nonzero(src, len, r, N)) break;
            P.path_id_by_src_len_[src].push_back(static_cast<int>(P.paths_.size()));
            P.paths_.push_back({src, len});
        }
    }
    P.hom_paths_.assign(N, std::vector<std::vector<int>>(N));
    for (int id = 0; id < P.path_count(); ++id)
        P.hom_paths_[P.path_target(id)][P.paths_[id].src].push_back(id);
    return P;
}

PresPtr make_arn_shared(int r, int N, u32 prime) {
    return std::make_shared<const Presentation>(Presentation::make_arn(r, N, prime));
}

int Presentation::path_id(int src, int len) const {
    if (src < 0 || src >= N_ || len < 0) return -1;
    const auto& row = path_id_by_src_len_[src];
    if (len >= static_cast<int>(row.size())) return -1;
    return row[len];
}

std::vector<int> Presentation::path_word(int id) const {
    const Path& pth = paths_[id];
    std::vector<int> w;
    for (int j = 0; j < pth.len; ++j) w.push_back((pth.src + j) % N_);
    return w;
}

std::string Presentation::path_str(int id) const {
    const Path& pth = paths_[id];
    if (pth.len == 0) return "e" + std::to_string(pth.src);
    std::string s;
    // Right-to-left: the first applied arrow is rightmost.
    for (int j = pth.len - 1; j >= 0; --j) {
        s += "a" + std::to_string((pth.src + j) % N_);
        if (j > 0) s += ".";
    }
    return s;
}

const std::vector<int>& Presentation::hom_paths(int i, int j) const { return hom_paths_[i][j]; }

int Presentation::projective_dim(int v) const {
    return static_cast<int>(path_id_by_src_len_[v].size());
}

std::vector<int> Presentation::projective_injective_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < r_; ++i) out.push_back(i);
    return out;
}

AlgElem Presentation::zero_elem(int from_v, int to_v) const { return AlgElem{from_v, to_v, {}}; }

AlgElem Presentation::idempotent(int v) const {
    return AlgElem{v, v, {{path_id(v, 0), 1 % p_}}};
}

AlgElem Presentation::elem_of_path(int id) const {
    return AlgElem{path_target(id), paths_[id].src, {{id, 1 % p_}}};
}

AlgElem Presentation::scale(const AlgElem& x, u32 c) const {
    AlgElem out{x.from_v, x.to_v, {}};
    c %= p_;
    if (c == 0) return out;
    for (auto& [id, coef] : x.terms) {
        u32 v = fp_mul(coef, c, p_);
        if (v) out.terms.push_back({id, v});
    }
    return out;
}

AlgElem Presentation::add(const AlgElem& x, const AlgElem& y) const {
    if (x.from_v != y.from_v || x.to_v != y.to_v)
        throw std::invalid_argument("AlgElem add: mismatched idempotents");
    AlgElem out{x.from_v, x.to_v, {}};
    size_t i = 0, j = 0;
    while (i < x.terms.size() || j < y.terms.size()) {
        if (j == y.terms.size() || (i < x.terms.size() && x.terms[i].first < y.terms[j].first)) {
            out.terms.push_back(x.terms[i++]);
        } else if (i == x.terms.size() || y.terms[j].first < x.terms[i].first) {
            out.terms.push_back(y.terms[j++]);
        } else {
            u32 v = fp_add(x.terms[i].second, y.terms[j].second, p_);
            if (v) out.terms.push_back({x.terms[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

AlgElem Presentation::multiply(const AlgElem& x, const AlgElem& y) const {
    if (x.to_v != y.from_v)
        throw std::invalid_argument("AlgElem multiply: inner idempotents do not match");
    AlgElem out = zero_elem(x.from_v, y.to_v);
    std::map<int, u32> acc;
    for (auto& [px, cx] : x.terms) {
        for (auto& [py, cy] : y.terms) {
            // y's path runs to_v(y) -> to_v(x) = src of x's path; concatenate.
            int id = path_id(paths_[py].src, paths_[py].len + paths_[px].len);
            if (id < 0) continue;
            u32& slot = acc[id];
            slot = fp_add(slot, fp_mul(cx, cy, p_), p_);
        }
    }
    for (auto& [id, c] : acc)
        if (c) out.terms.push_back({id, c});
    return out;
}

bool Presentation::is_identity(const AlgElem& x) const {
    return x.from_v == x.to_v && x.terms.size() == 1 &&
           x.terms[0].first == path_id(x.from_v, 0) && x.terms[0].second == 1 % p_;
}

AlgebraElem Presentation::unit() const {
    AlgebraElem u{Vec(path_count(), 0)};
    for (int v = 0; v < N_; ++v) u.coeffs[path_id(v, 0)] = 1 % p_;
    return u;
}

AlgebraElem Presentation::algebra_multiply(const AlgebraElem& x, const AlgebraElem& y) const {
    AlgebraElem out{Vec(path_count(), 0)};
    for (int px = 0; px < path_count(); ++px) {
        if (!x.coeffs[px]) continue;
        for (int py = 0; py < path_count(); ++py) {
            if (!y.coeffs[py]) continue;
            // Product x*y applies y first: need target(py) == src(px).
            if (path_target(py) != paths_[px].src) continue;
            int id = path_id(paths_[py].src, paths_[py].len + paths_[px].len);
            if (id < 0) continue;
            out.coeffs[id] =
                fp_add(out.coeffs[id], fp_mul(x.coeffs[px], y.coeffs[py], p_), p_);
        }
    }
    return out;
}

std::optional<AlgebraElem> Presentation::algebra_inverse(const AlgebraElem& x) const {
    int n = path_count();
    // Solve x*y = 1 as a linear system in y.
    Mat m(n, n, p_);
    for (int py = 0; py < n; ++py) {
        AlgebraElem basis{Vec(n, 0)};
        basis.coeffs[py] = 1;
        AlgebraElem prod = algebra_multiply(x, basis);
        for (int row = 0; row < n; ++row) m.at(row, py) = prod.coeffs[row];
    }
    auto sol = solve(m, unit().coeffs);
    if (!sol) return std::nullopt;
    AlgebraElem y{sol->particular};
    // A is finite dimensional, so a right inverse is two-sided; check anyway.
    if (algebra_multiply(y, x).coeffs != unit().coeffs) return std::nullopt;
    return y;
}

bool Presentation::is_central(const AlgebraElem& x) const {
    for (int pid = 0; pid < path_count(); ++pid) {
        AlgebraElem basis{Vec(path_count(), 0)};
        basis.coeffs[pid] = 1;
        if (algebra_multiply(x, basis).coeffs != algebra_multiply(basis, x).coeffs) return false;
    }
    return true;
}

std::vector<AlgebraElem> Presentation::center_basis() const {
    int n = path_count();
    // Rows: for every basis path a and every result path, the coefficient of
    // z*a - a*z; unknowns: coefficients of z.
    Mat m(n * n, n, p_);
    for (int pz = 0; pz < n; ++pz) {
        AlgebraElem z{Vec(n, 0)};
        z.coeffs[pz] = 1;
        for (int pa = 0; pa < n; ++pa) {
            AlgebraElem a{Vec(n, 0)};
            a.coeffs[pa] = 1;
            AlgebraElem za = algebra_multiply(z, a);
            AlgebraElem az = algebra_multiply(a, z);
            for (int row = 0; row < n; ++row)
                m.at(pa * n + row, pz) = fp_sub(za.coeffs[row], az.coeffs[row], p_);
        }
    }
    std::vector<AlgebraElem> out;
    for (auto& v : kernel(m)) out.push_back(AlgebraElem{std::move(v)});
    return out;
}

}  // namespace arn
