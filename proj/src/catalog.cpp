#include "arn/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace arn {

namespace {

int imod(int x, int m) {
    int v = x % m;
    return v < 0 ? v + m : v;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::X: return "X";
        case Family::L: return "L";
        case Family::R: return "R";
        case Family::B: return "B";
        case Family::Z: return "Z";
    }
    return "?";
}

CatalogId CatalogId::canonical() const {
    if (fam == Family::R && m == n) return CatalogId{Family::L, 0, m, n, b, 0};
    return *this;
}

Interval CatalogId::support() const {
    if (fam == Family::Z) return {m, m + 1};
    return {m, n};
}

std::string catalog_id_error(const CatalogId& id, const Presentation& A) {
    int r = A.r(), N = A.N();
    auto q_ok = [&](int v) { return v >= r && v < N; };
    std::string qr = "Q indices must satisfy " + std::to_string(r) +
                     " <= index < " + std::to_string(N);
    switch (id.fam) {
        case Family::X:
            if (id.m > id.n) return "X needs m <= n";
            if (id.s < 0 || id.s >= r) return "X needs 0 <= s < r";
            return "";
        case Family::L:
            if (id.m > id.n) return "L needs m <= n";
            if (!q_ok(id.a)) return qr;
            return "";
        case Family::R:
            if (id.m > id.n) return "R needs m <= n";
            if (!q_ok(id.b)) return qr;
            return "";
        case Family::B:
            if (!(id.m < id.n - r)) return "B needs m < n - r";
            if ((id.n - id.m - 1) % r != 0) return "B needs r | (n - m - 1)";
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            return "";
        case Family::Z:
            if (r + 1 >= N) return "Z undefined for N = " + std::to_string(N) +
                                   " (no pair " + std::to_string(r) + " <= b < a < N)";
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            if (!(id.b < id.a)) return "Z needs b < a";
            return "";
    }
    return "unknown family";
}

bool catalog_id_valid(const CatalogId& id, const Presentation& A) {
    return catalog_id_error(id, A).empty();
}

std::string print_catalog_id(const CatalogId& id, const Presentation& A) {
    std::string s = family_name(id.fam) + "[";
    switch (id.fam) {
        case Family::X:
            if (A.r() > 1) s += "s=" + std::to_string(id.s) + ";";
            s += std::to_string(id.m) + "," + std::to_string(id.n);
            break;
        case Family::L:
            s += std::to_string(id.m) + "," + std::to_string(id.n) + ";a=" + std::to_string(id.a);
            break;
        case Family::R:
            s += std::to_string(id.m) + "," + std::to_string(id.n) + ";b=" + std::to_string(id.b);
            break;
        case Family::B:
            s += std::to_string(id.m) + "," + std::to_string(id.n) + ";a=" + std::to_string(id.a) +
                 ",b=" + std::to_string(id.b);
            break;
        case Family::Z:
            s += std::to_string(id.m) + ";a=" + std::to_string(id.a) + ",b=" + std::to_string(id.b);
            break;
    }
    return s + "]";
}

namespace {

struct IdParser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + why);
    }
    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }
    int named(const std::string& key) {
        for (char c : key) expect(c);
        expect('=');
        return integer();
    }
};

}  // namespace

CatalogId parse_catalog_id(const std::string& text, const Presentation& A) {
    IdParser P{text};
    CatalogId id;
    if (P.eat('X')) {
        id.fam = Family::X;
        P.expect('[');
        if (P.pos < text.size() && text[P.pos] == 's') {
            id.s = P.named("s");
            P.expect(';');
        }
        id.m = P.integer();
        P.expect(',');
        id.n = P.integer();
        P.expect(']');
    } else if (P.eat('L') || P.eat('R')) {
        char f = text[P.pos - 1];
        id.fam = f == 'L' ? Family::L : Family::R;
        P.expect('[');
        id.m = P.integer();
        P.expect(',');
        id.n = P.integer();
        P.expect(';');
        if (id.fam == Family::L)
            id.a = P.named("a");
        else
            id.b = P.named("b");
        P.expect(']');
    } else if (P.eat('B')) {
        id.fam = Family::B;
        P.expect('[');
        id.m = P.integer();
        P.expect(',');
        id.n = P.integer();
        P.expect(';');
        id.a = P.named("a");
        P.expect(',');
        id.b = P.named("b");
        P.expect(']');
    } else if (P.eat('Z')) {
        id.fam = Family::Z;
        P.expect('[');
        id.m = P.integer();
        P.expect(';');
        id.a = P.named("a");
        P.expect(',');
        id.b = P.named("b");
        P.expect(']');
    } else {
        P.fail("expected a family tag X, L, R, B or Z");
    }
    if (P.pos != text.size()) P.fail("trailing characters");
    std::string err = catalog_id_error(id, A);
    if (!err.empty()) throw std::invalid_argument("invalid id '" + text + "': " + err);
    return id;
}

AlgElem down_P(const Presentation& A, int i) {
    int r = A.r(), N = A.N();
    if (i < 0 || i >= r) throw std::invalid_argument("down_P: index out of Z/rZ range");
    if (i == 0) {
        // P_0 -> P_{r-1}: e_0 |-> the path from r-1 around the tail to 0.
        return A.elem_of_path(A.path_id(r - 1, N - r + 1));
    }
    return A.elem_of_path(A.path_id(i - 1, 1));
}

AlgElem q_to_p(const Presentation& A, int a) {
    int r = A.r();
    // e_a |-> path from r-1 to a.
    return A.elem_of_path(A.path_id(r - 1, a - r + 1));
}

AlgElem p_to_q(const Presentation& A, int a) {
    int N = A.N();
    // e_0 |-> path from a to 0.
    return A.elem_of_path(A.path_id(a, N - a));
}

AlgElem q_to_q(const Presentation& A, int a, int b) {
    if (b > a) throw std::invalid_argument("q_to_q: needs b <= a");
    if (a == b) return A.idempotent(a);
    return A.elem_of_path(A.path_id(b, a - b));
}

int catalog_vertex(const CatalogId& id, const Presentation& A, int k) {
    int r = A.r();
    switch (id.fam) {
        case Family::X:
            return imod(id.s - (k - id.m), r);
        case Family::L:
            return k == id.m ? id.a : imod(r - (k - id.m), r);
        case Family::R:
            return k == id.n ? id.b : imod(id.n - 1 - k, r);
        case Family::B:
            if (k == id.m) return id.a;
            if (k == id.n) return id.b;
            return imod(r - (k - id.m), r);
        case Family::Z:
            return k == id.m ? id.a : id.b;
    }
    throw std::logic_error("catalog_vertex: bad family");
}

ProjComplex realize(const CatalogId& raw, const PresPtr& A) {
    std::string err = catalog_id_error(raw, *A);
    if (!err.empty())
        throw std::invalid_argument("realize " + print_catalog_id(raw, *A) + ": " + err);
    CatalogId id = raw.canonical();
    Interval sup = id.support();
    std::vector<std::vector<int>> verts;
    for (int k = sup.lo; k <= sup.hi; ++k) verts.push_back({catalog_vertex(id, *A, k)});
    std::vector<Block> diffs;
    for (int k = sup.lo; k < sup.hi; ++k) {
        AlgElem e;
        switch (id.fam) {
            case Family::X:
                e = down_P(*A, catalog_vertex(id, *A, k));
                break;
            case Family::L:
                e = k == id.m ? q_to_p(*A, id.a) : down_P(*A, catalog_vertex(id, *A, k));
                break;
            case Family::R:
                e = k == id.n - 1 ? p_to_q(*A, id.b) : down_P(*A, catalog_vertex(id, *A, k));
                break;
            case Family::B:
                if (k == id.m)
                    e = q_to_p(*A, id.a);
                else if (k == id.n - 1)
                    e = p_to_q(*A, id.b);
                else
                    e = down_P(*A, catalog_vertex(id, *A, k));
                break;
            case Family::Z:
                e = q_to_q(*A, id.a, id.b);
                break;
        }
        diffs.push_back({{std::move(e)}});
    }
    return ProjComplex(A, sup.lo, std::move(verts), std::move(diffs));
}

std::vector<CatalogId> enumerate_window(const Interval& window, const Presentation& A) {
    std::vector<CatalogId> out;
    if (window.empty()) return out;
    int r = A.r(), N = A.N();
    int lo = window.lo, hi = window.hi;
    for (int s = 0; s < r; ++s)
        for (int m = lo; m <= hi; ++m)
            for (int n = m; n <= hi; ++n) out.push_back({Family::X, s, m, n, 0, 0});
    for (int m = lo; m <= hi; ++m)
        for (int n = m; n <= hi; ++n)
            for (int a = r; a < N; ++a) out.push_back({Family::L, 0, m, n, a, 0});
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)  // R[m,m] is canonically L[m,m]
            for (int b = r; b < N; ++b) out.push_back({Family::R, 0, m, n, 0, b});
    for (int m = lo; m <= hi; ++m)
        for (int n = m; n <= hi; ++n) {
            if (!(m < n - r) || (n - m - 1) % r != 0) continue;
            for (int a = r; a < N; ++a)
                for (int b = r; b < N; ++b) out.push_back({Family::B, 0, m, n, a, b});
        }
    for (int m = lo; m + 1 <= hi; ++m)
        for (int a = r; a < N; ++a)
            for (int b = r; b < a; ++b) out.push_back({Family::Z, 0, m, 0, a, b});
    return out;
}

ChainMap delta(int m, int n, const PresPtr& A) {
    if (A->r() != 1) throw std::invalid_argument("delta: defined for r = 1 only");
    ProjComplex X = realize({Family::X, 0, m, n, 0, 0}, A);
    ChainMap d(X, X);
    d.set_comp(m, 0, 0, A->elem_of_path(A->path_id(0, A->N())));
    d.validate();
    return d;
}

ChainMap t_iso(int m, int n, const PresPtr& A) {
    if (A->r() != 1) throw std::invalid_argument("t_iso: defined for r = 1 only");
    return shift_identification({Family::X, 0, m, n, 0, 0}, A);
}

CatalogId shift_id(const CatalogId& raw, const Presentation&) {
    CatalogId id = raw.canonical();
    CatalogId out = id;
    out.m -= 1;
    if (id.fam != Family::Z) out.n -= 1;
    return out;
}

ChainMap shift_identification(const CatalogId& raw, const PresPtr& A) {
    CatalogId id = raw.canonical();
    ProjComplex SX = realize(id, A).shifted(1);
    ProjComplex T = realize(shift_id(id, *A), A);
    ChainMap t(SX, T);
    u32 p = A->prime();
    for (int k = SX.lo(); k <= SX.hi(); ++k) {
        u32 sign = imod(k, 2) == 0 ? 1 % p : p - 1;
        t.set_comp(k, 0, 0, A->scale(A->idempotent(SX.vertex(k, 0)), sign));
    }
    t.validate();
    return t;
}

}  // namespace arn
