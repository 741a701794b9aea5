#include "arn/pseudofunctor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace arn {

namespace {

int imod(int x, int m) {
    int v = x % m;
    return v < 0 ? v + m : v;
}

bool vec_zero(const Vec& v) {
    for (u32 x : v)
        if (x) return false;
    return true;
}

// Scale so that the first nonzero coordinate is 1; zero vectors stay zero.
Vec normalize_direction(Vec v, u32 p) {
    for (u32 x : v)
        if (x) {
            u32 inv = fp_inv(x, p);
            for (auto& y : v) y = fp_mul(y, inv, p);
            break;
        }
    return v;
}

using Expo = std::map<int, int>;

Expo expo_diff(const Expo& a, const Expo& b) {
    Expo out = a;
    for (auto& [e, k] : b) {
        out[e] -= k;
        if (out[e] == 0) out.erase(e);
    }
    return out;
}

}  // namespace

SpanGraph::SpanGraph(PresPtr A, Interval window)
    : ctx_(std::make_shared<WindowContext>(A, window)) {
    const Presentation& P = *A;
    for (auto& id : enumerate_spanning(window, P)) {
        Edge e;
        e.id = id;
        e.from = ctx_->index_of(morph_domain(id, P));
        e.to = ctx_->index_of(morph_codomain(id, P));
        ChainMap f = realize_morph(id, A);
        Vec cls = ctx_->hom(e.from, e.to).reduce(f);
        e.nonzero = !vec_zero(cls);
        index_[id] = static_cast<int>(edges_.size());
        edges_.push_back(std::move(e));
    }
    explore_compositions();
    add_stalk_relations();
    add_triangle_relations();
    // Deduplicate relations by their factor lists.
    std::sort(relations_.begin(), relations_.end(),
              [](const Relation& a, const Relation& b) {
                  return std::tie(a.edge_factors, a.conn_factors) <
                         std::tie(b.edge_factors, b.conn_factors);
              });
    relations_.erase(std::unique(relations_.begin(), relations_.end(),
                                 [](const Relation& a, const Relation& b) {
                                     return a.edge_factors == b.edge_factors &&
                                            a.conn_factors == b.conn_factors;
                                 }),
                     relations_.end());
}

int SpanGraph::edge_index(const MorphId& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

void SpanGraph::explore_compositions() {
    const WindowContext& ctx = *ctx_;
    u32 p = pres()->prime();
    int n = ctx.size();

    struct DirEntry {
        Vec direction;
        ChainMap rep;
        Expo expo;
    };
    std::map<std::pair<int, int>, std::vector<DirEntry>> dirs;
    std::vector<std::tuple<int, int, int>> work;  // (from, to, entry index)

    auto emit_equal = [&](const Expo& a, const Expo& b, const std::string& origin) {
        Expo d = expo_diff(a, b);
        if (d.empty()) return;
        Relation rel;
        for (auto& [e, k] : d) rel.edge_factors.push_back({e, k});
        rel.origin = origin;
        relations_.push_back(std::move(rel));
    };

    auto add_entry = [&](int u, int v, Vec cls, ChainMap rep, Expo expo,
                         const std::string& origin) {
        if (vec_zero(cls)) return;
        Vec dir = normalize_direction(std::move(cls), p);
        auto& bucket = dirs[{u, v}];
        for (auto& entry : bucket)
            if (entry.direction == dir) {
                emit_equal(entry.expo, expo, origin);
                return;
            }
        int hom_dim = ctx.hom(u, v).dim();
        bucket.push_back({dir, std::move(rep), std::move(expo)});
        work.push_back({u, v, static_cast<int>(bucket.size()) - 1});
        // Three distinct directions in a two-dimensional space force all
        // their scalars equal (a linear map with three eigendirections on a
        // plane is scalar).
        if (hom_dim == 2 && bucket.size() >= 3)
            for (size_t i = 0; i + 1 < bucket.size(); ++i)
                emit_equal(bucket[i].expo, bucket[i + 1].expo, "dependent-directions");
    };

    // Seeds: identity directions and the generator edges.
    for (int i = 0; i < n; ++i) {
        const HomSpace& end = ctx.hom(i, i);
        add_entry(i, i, identity_class(end), ChainMap::identity(ctx.realized(i)), {},
                  "identity");
    }
    std::vector<std::vector<int>> out_edges(n);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        if (!edges_[e].nonzero) continue;
        out_edges[edges_[e].from].push_back(e);
        ChainMap f = realize_morph(edges_[e].id, pres());
        add_entry(edges_[e].from, edges_[e].to, ctx.hom(edges_[e].from, edges_[e].to).reduce(f),
                  f, Expo{{e, 1}}, "edge");
    }

    // Extend chains by one edge at a time. Directions per pair are bounded,
    // so this terminates; the cap is a safety net only.
    size_t processed = 0;
    while (processed < work.size() && work.size() < 200000) {
        auto [u, v, idx] = work[processed++];
        DirEntry entry = dirs[{u, v}][idx];  // copy: bucket may grow
        for (int e : out_edges[v]) {
            int w = edges_[e].to;
            ChainMap ef = realize_morph(edges_[e].id, pres());
            ChainMap comp = compose(ef, entry.rep);
            Vec cls = ctx.hom(u, w).reduce(comp);
            Expo expo = entry.expo;
            expo[e] += 1;
            add_entry(u, w, std::move(cls), std::move(comp), std::move(expo), "composition");
        }
    }
}

void SpanGraph::add_stalk_relations() {
    // Generators inside a single shifted copy of the projectives are fixed
    // by any pseudo-identity: both endpoints stalks in the same degree.
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const MorphId& id = edges_[e].id;
        if (id.fam == MFam::c && id.l == id.m && id.m == id.n) {
            Relation rel;
            rel.edge_factors.push_back({e, 1});
            rel.origin = "stalk-fixed";
            relations_.push_back(std::move(rel));
        }
    }
}

void SpanGraph::add_triangle_relations() {
    const Presentation& P = *pres();
    int r = P.r();
    Interval win = ctx_->window();
    int qlo = r;  // smallest valid Q index; used for deterministic choices

    auto edge_or = [&](const MorphId& id) { return edge_index(id); };
    auto push_triangle = [&](const std::vector<MorphId>& ids, const std::string& origin,
                             int corner_sigma_power) {
        Relation rel;
        for (auto& id : ids) {
            int e = edge_or(id);
            if (e < 0) return;  // instance leaves the window edge set
            rel.edge_factors.push_back({e, 1});
        }
        std::sort(rel.edge_factors.begin(), rel.edge_factors.end());
        // Merge duplicate edges.
        std::vector<std::pair<int, int>> merged;
        for (auto& [e, k] : rel.edge_factors) {
            if (!merged.empty() && merged.back().first == e)
                merged.back().second += k;
            else
                merged.push_back({e, k});
        }
        rel.edge_factors = std::move(merged);
        rel.conn_factors.push_back({corner_sigma_power, 1});
        rel.origin = origin;
        relations_.push_back(std::move(rel));
    };

    // T1: the projection triangle of X[s; m,n].
    for (int s = 0; s < r; ++s)
        for (int m = win.lo; m <= win.hi; ++m)
            for (int n = m + 1; n <= win.hi; ++n) {
                std::vector<MorphId> ids;
                int sigma = imod(s - n + m, r);
                for (int k = n; k >= m + 1; --k)
                    ids.push_back({MFam::i, imod(sigma + n - k, r), 0, k, 0, n, 0, 0, 0, 0});
                ids.push_back({MFam::pi, s, 0, m, 0, n, 0, 0, 0, 0});
                if (m < n - 1) {
                    if (r > 1) continue;  // no margin-free factorization of the connection
                    if (m - 1 < win.lo) continue;
                    ids.push_back({MFam::j, 0, 0, m, 0, n - 1, 0, qlo, 0, 0, 0});
                    ids.push_back({MFam::c, 0, m - 1, n - 1, 0, n, 0, qlo, qlo, 0, 0});
                    ids.push_back({MFam::p, 0, 0, n - 1, 0, n, 0, 0, qlo, 0, 0});
                }
                // m = n - 1: the connecting morphism lives inside one shifted
                // copy of the projectives and contributes factor 1.
                push_triangle(ids, "triangle-pi", -n);
            }

    // T2: the projection triangle of L[m,n;a].
    for (int m = win.lo; m <= win.hi; ++m)
        for (int n = m + 1; n <= win.hi; ++n)
            for (int a = r; a < P.N(); ++a) {
                std::vector<MorphId> ids;
                int sigma = imod(r + m - n, r);
                for (int k = n; k >= m + 2; --k)
                    ids.push_back({MFam::i, imod(sigma + n - k, r), 0, k, 0, n, 0, 0, 0, 0});
                ids.push_back({MFam::j, 0, 0, m + 1, 0, n, 0, a, 0, 0, 0});
                ids.push_back({MFam::piprime, 0, 0, m, 0, n, 0, a, 0, 0, 0});
                if (m < n - 1) {
                    if (imod(n - m, r) != 0) continue;  // connection edge needs r | (n - m)
                    ids.push_back({MFam::c, 0, m, n - 1, 0, n, 0, a, qlo, 0, 0});
                    ids.push_back({MFam::p, 0, 0, n - 1, 0, n, 0, 0, qlo, 0, 0});
                }
                push_triangle(ids, "triangle-pi'", -n);
            }

    // T3: the projection triangle of R[m,n;b].
    for (int m = win.lo; m <= win.hi; ++m)
        for (int n = m + 1; n <= win.hi; ++n)
            for (int b = r; b < P.N(); ++b) {
                std::vector<MorphId> ids;
                for (int k = n; k >= m + 1; --k)
                    ids.push_back({MFam::iprime, 0, 0, k, 0, n, 0, 0, b, 0, 0});
                ids.push_back({MFam::p, 0, 0, m, 0, n, 0, 0, b, 0, 0});
                if (m < n - 1) {
                    if (r > 1) continue;
                    if (m - 1 < win.lo) continue;
                    ids.push_back({MFam::j, 0, 0, m, 0, n - 1, 0, qlo, 0, 0, 0});
                    ids.push_back({MFam::c, 0, m - 1, n - 1, 0, n - 1, 0, qlo, b, 0, 0});
                }
                push_triangle(ids, "triangle-p", -n);
            }

    // T4: the projection triangle of B[m,n;a,b]; entirely window-free of
    // margins, the connecting morphism is itself a generator.
    for (int m = win.lo; m <= win.hi; ++m)
        for (int n = m + 1; n <= win.hi; ++n) {
            if (!(m < n - r) || imod(n - m - 1, r) != 0) continue;
            for (int a = r; a < P.N(); ++a)
                for (int b = r; b < P.N(); ++b) {
                    std::vector<MorphId> ids;
                    for (int k = n; k >= m + 2; --k)
                        ids.push_back({MFam::iprime, 0, 0, k, 0, n, 0, 0, b, 0, 0});
                    ids.push_back({MFam::iota, 0, 0, m + 1, 0, n, 0, a, b, 0, 0});
                    ids.push_back({MFam::q, 0, 0, m, 0, n, 0, a, b, 0, 0});
                    ids.push_back({MFam::c, 0, m, n - 1, 0, n - 1, 0, a, b, 0, 0});
                    push_triangle(ids, "triangle-q", -n);
                }
        }

    // T5: the projection triangle of Z[m;a,b].
    for (int m = win.lo; m < win.hi; ++m)
        for (int a = r; a < P.N(); ++a)
            for (int b = r; b < a; ++b) {
                std::vector<MorphId> ids;
                ids.push_back({MFam::xi, 0, 0, m + 1, 0, 0, 0, a, b, 0, 0});
                ids.push_back({MFam::zeta, 0, 0, m, 0, 0, 0, a, b, 0, 0});
                ids.push_back({MFam::c, 0, m, m, 0, m, 0, a, b, 0, 0});
                push_triangle(ids, "triangle-zeta", -(m + 1));
            }
}

ConsistencyReport check_consistency(const ScalarSystem& sys, const SpanGraph& graph) {
    const Presentation& P = *graph.pres();
    u32 p = P.prime();
    ConsistencyReport rep;
    std::vector<u32> vals(graph.edges().size(), 1);
    for (size_t e = 0; e < graph.edges().size(); ++e) {
        std::string name = graph.edge_name(static_cast<int>(e));
        auto it = sys.scalars.find(name);
        if (it == sys.scalars.end()) {
            rep.consistent = false;
            rep.violated = "missing scalar for " + name;
            return rep;
        }
        if (it->second % p == 0) {
            rep.consistent = false;
            rep.violated = "zero scalar for " + name;
            return rep;
        }
        vals[e] = it->second % p;
    }
    for (auto& [name, value] : sys.scalars)
        if (value % p == 0) {
            rep.consistent = false;
            rep.violated = "zero scalar for " + name;
            return rep;
        }
    auto conn = [&](int degree) -> u32 {
        auto it = sys.connecting.find(degree);
        return it == sys.connecting.end() ? 1 : it->second % p;
    };
    for (auto& rel : graph.relations()) {
        u32 prod = 1;
        for (auto& [e, k] : rel.edge_factors) {
            u32 base = k >= 0 ? vals[e] : fp_inv(vals[e], p);
            for (int i = 0; i < std::abs(k); ++i) prod = fp_mul(prod, base, p);
        }
        for (auto& [d, k] : rel.conn_factors) {
            u32 base = k >= 0 ? conn(d) : fp_inv(conn(d), p);
            for (int i = 0; i < std::abs(k); ++i) prod = fp_mul(prod, base, p);
        }
        if (prod != 1 % p) {
            rep.consistent = false;
            rep.violated = rel.origin;
            return rep;
        }
    }
    return rep;
}

Trivialization trivialize(const ScalarSystem& sys, const SpanGraph& graph) {
    const Presentation& P = *graph.pres();
    u32 p = P.prime();
    const WindowContext& ctx = graph.ctx();
    Trivialization out;
    std::vector<u32> vals(graph.edges().size(), 1);
    for (size_t e = 0; e < graph.edges().size(); ++e) {
        auto it = sys.scalars.find(graph.edge_name(static_cast<int>(e)));
        if (it == sys.scalars.end() || it->second % p == 0)
            throw std::invalid_argument("trivialize: system not total and nonzero");
        vals[e] = it->second % p;
    }
    int n = ctx.size();
    std::vector<u32> delta(n, 0);  // 0 = unassigned
    std::vector<int> parent_edge(n, -1);
    std::vector<int> parent(n, -1);
    // BFS forest over nonzero-class edges, objects in deterministic order.
    for (int root = 0; root < n; ++root) {
        if (delta[root]) continue;
        delta[root] = 1;
        std::vector<int> queue{root};
        size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            for (size_t e = 0; e < graph.edges().size(); ++e) {
                const auto& ed = graph.edges()[e];
                if (!ed.nonzero) continue;
                int other = -1;
                u32 dval = 0;
                if (ed.from == u && !delta[ed.to]) {
                    // delta(to) * s(e) * delta(from)^{-1} = 1
                    other = ed.to;
                    dval = fp_mul(delta[u], fp_inv(vals[e], p), p);
                } else if (ed.to == u && !delta[ed.from]) {
                    other = ed.from;
                    dval = fp_mul(delta[u], vals[e], p);
                }
                if (other < 0) continue;
                delta[other] = dval;
                parent[other] = u;
                parent_edge[other] = static_cast<int>(e);
                queue.push_back(other);
            }
        }
    }
    // Verify every nonzero-class edge.
    for (size_t e = 0; e < graph.edges().size(); ++e) {
        const auto& ed = graph.edges()[e];
        if (!ed.nonzero) continue;
        u32 check = fp_mul(delta[ed.to], fp_mul(vals[e], fp_inv(delta[ed.from], p), p), p);
        if (check != 1 % p) {
            out.ok = false;
            // Violated cycle: tree paths of both endpoints plus this edge.
            out.violated_cycle.push_back(graph.edge_name(static_cast<int>(e)));
            for (int v : {ed.from, ed.to})
                for (int x = v; parent[x] >= 0; x = parent[x])
                    out.violated_cycle.push_back(graph.edge_name(parent_edge[x]));
            std::sort(out.violated_cycle.begin(), out.violated_cycle.end());
            out.violated_cycle.erase(
                std::unique(out.violated_cycle.begin(), out.violated_cycle.end()),
                out.violated_cycle.end());
            return out;
        }
    }
    out.ok = true;
    for (int i = 0; i < n; ++i) out.object_scalars[ctx.name(i)] = delta[i];
    return out;
}

namespace {

bool is_stalk_id(const CatalogId& id) {
    return (id.fam == Family::X && id.m == id.n) || (id.fam == Family::L && id.m == id.n);
}

}  // namespace

ScalarSystem coboundary_system(const SpanGraph& graph,
                               const std::map<std::string, u32>& object_scalars) {
    const WindowContext& ctx = graph.ctx();
    u32 p = graph.pres()->prime();
    ScalarSystem sys;
    auto value = [&](int idx) -> u32 {
        auto it = object_scalars.find(ctx.name(idx));
        u32 v = it == object_scalars.end() ? 1 : it->second % p;
        return v ? v : 1;
    };
    for (size_t e = 0; e < graph.edges().size(); ++e) {
        const auto& ed = graph.edges()[e];
        // c(codomain) * c(domain)^{-1}
        sys.scalars[graph.edge_name(static_cast<int>(e))] =
            fp_mul(value(ed.to), fp_inv(value(ed.from), p), p);
    }
    return sys;
}

std::map<std::string, u32> random_object_scalars(const SpanGraph& graph, u64 seed) {
    const WindowContext& ctx = graph.ctx();
    u32 p = graph.pres()->prime();
    std::mt19937_64 rng(seed);
    std::map<std::string, u32> out;
    for (int i = 0; i < ctx.size(); ++i) {
        // A normalized pseudo-identity fixes stalk complexes, so the
        // adjusting scalars are 1 there.
        if (is_stalk_id(ctx.objects()[i]))
            out[ctx.name(i)] = 1;
        else
            out[ctx.name(i)] = static_cast<u32>(rng() % (p - 1)) + 1;
    }
    return out;
}

ScalarSystem perturb_one_edge(const ScalarSystem& sys, const SpanGraph& graph, u64 seed) {
    u32 p = graph.pres()->prime();
    std::mt19937_64 rng(seed);
    // Only nonzero-class edges carry meaning; perturb one of those.
    std::vector<int> candidates;
    for (int e = 0; e < static_cast<int>(graph.edges().size()); ++e)
        if (graph.edges()[e].nonzero) candidates.push_back(e);
    if (candidates.empty()) return sys;
    int pick = candidates[rng() % candidates.size()];
    ScalarSystem out = sys;
    std::string name = graph.edge_name(pick);
    u32 old = out.scalars.at(name);
    u32 factor = static_cast<u32>(rng() % (p - 2)) + 2;  // anything but 0 and 1
    out.scalars[name] = fp_mul(old, factor, p);
    return out;
}

std::map<int, AlgebraElem> normalize_connecting(const std::map<int, AlgebraElem>& lambda,
                                                const Presentation& A) {
    std::map<int, AlgebraElem> a;
    if (lambda.empty()) return a;
    for (auto& [n, z] : lambda)
        if (!A.is_central(z))
            throw std::invalid_argument("normalize_connecting: input is not central");
    int lo = lambda.begin()->first;
    int hi = lambda.rbegin()->first;
    int anchor = (lo <= 0 && 0 <= hi + 1) ? 0 : lo;
    a[anchor] = A.unit();
    auto lam = [&](int n) -> const AlgebraElem& {
        auto it = lambda.find(n);
        if (it == lambda.end())
            throw std::invalid_argument("normalize_connecting: missing degree " +
                                        std::to_string(n));
        return it->second;
    };
    for (int n = anchor; n <= hi; ++n) a[n + 1] = A.algebra_multiply(a[n], lam(n));
    for (int n = anchor - 1; n >= lo; --n) {
        auto inv = A.algebra_inverse(lam(n));
        if (!inv)
            throw std::invalid_argument("normalize_connecting: lambda_" + std::to_string(n) +
                                        " is not invertible");
        a[n] = A.algebra_multiply(a[n + 1], *inv);
    }
    // Verify the defining recurrence exactly (also catches non-invertible
    // forward steps).
    for (int n = lo; n <= hi; ++n) {
        auto inv = A.algebra_inverse(a[n]);
        if (!inv)
            throw std::invalid_argument("normalize_connecting: a_" + std::to_string(n) +
                                        " is not invertible");
        if (!(A.algebra_multiply(*inv, a[n + 1]) == lam(n)))
            throw std::logic_error("normalize_connecting: recurrence failed");
    }
    return a;
}

EtaReport verify_eta(const std::map<std::string, u32>& b, const std::map<std::string, u32>& phi,
                     const WindowContext& ctx) {
    const Presentation& A = *ctx.pres();
    u32 p = A.prime();
    if (A.r() != 1) throw std::invalid_argument("prop_a2_eta: r = 1 only");
    EtaReport rep;
    rep.phi = phi;
    auto coeff = [&](const std::map<std::string, u32>& m, const std::string& k) -> u32 {
        auto it = m.find(k);
        return it == m.end() ? 0 : it->second % p;
    };
    for (int i = 0; i < ctx.size(); ++i) {
        const CatalogId& id = ctx.objects()[i];
        CatalogId sid = shift_id(id, A);
        if (ctx.index_of(sid) < 0) continue;
        ChainMap t = shift_identification(id, ctx.pres());
        ChainMap tinv(t.codomain(), t.domain());
        for (int k = t.domain().lo(); k <= t.domain().hi(); ++k)
            tinv.set_comp(k, 0, 0, t.comp(k, 0, 0));
        const ProjComplex& SU = t.domain();
        HomSpace end_su(SU, SU);
        // omega_U = Sigma(id + b(U) delta_U); eta likewise with phi.
        auto one_plus = [&](const CatalogId& oid, const ProjComplex& obj, u32 c) {
            ChainMap f = ChainMap::identity(obj);
            if (oid.fam == Family::X && c)
                f = f.plus(delta(oid.m, oid.n, ctx.pres()).scaled(c));
            return f;
        };
        ChainMap omega = one_plus(id, ctx.realized(i), coeff(b, ctx.name(i))).shifted(1);
        ChainMap eta_u = one_plus(id, ctx.realized(i), coeff(phi, ctx.name(i))).shifted(1);
        ChainMap eta_shift =
            one_plus(sid, realize(sid, ctx.pres()), coeff(phi, print_catalog_id(sid, A)));
        // eta_{Sigma U} transported through t, composed with omega_U, must
        // agree with Sigma(eta_U).
        ChainMap lhs = compose(tinv, compose(eta_shift, compose(t, omega)));
        if (end_su.reduce(lhs) != end_su.reduce(eta_u)) {
            rep.ok = false;
            rep.witness = ctx.name(i);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

EtaReport prop_a2_eta(const std::map<std::string, u32>& b, const WindowContext& ctx) {
    const Presentation& A = *ctx.pres();
    u32 p = A.prime();
    if (A.r() != 1) throw std::invalid_argument("prop_a2_eta: r = 1 only");
    // Orbit segments: X[m,n] |-> X[m-1,n-1]; anchor phi = 0 at the minimal
    // element of each segment and accumulate upward.
    std::map<std::string, u32> phi;
    for (auto& id : ctx.objects()) {
        if (id.fam != Family::X) continue;
        int d = id.n - id.m;
        // Walk down to the segment's minimal element.
        int m0 = id.m;
        while (ctx.index_of({Family::X, 0, m0 - 1, m0 - 1 + d, 0, 0}) >= 0) --m0;
        u32 acc = 0;
        for (int m = m0 + 1; m <= id.m; ++m) {
            auto it = b.find(print_catalog_id({Family::X, 0, m, m + d, 0, 0}, A));
            u32 bm = it == b.end() ? 0 : it->second % p;
            acc = fp_add(acc, bm, p);
        }
        phi[print_catalog_id(id, A)] = acc;
    }
    return verify_eta(b, phi, ctx);
}

}  // namespace arn
