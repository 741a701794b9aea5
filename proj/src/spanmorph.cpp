#include "arn/spanmorph.hpp"

#include <algorithm>
#include <stdexcept>

#include "arn/homotopy.hpp"

namespace arn {

namespace {

int imod(int x, int m) {
    int v = x % m;
    return v < 0 ? v + m : v;
}

bool divr(int x, int r) { return imod(x, r) == 0; }

}  // namespace

std::string mfam_name(MFam f) {
    switch (f) {
        case MFam::i: return "i";
        case MFam::j: return "j";
        case MFam::iprime: return "i'";
        case MFam::iota: return "iota";
        case MFam::xi: return "xi";
        case MFam::pi: return "pi";
        case MFam::piprime: return "pi'";
        case MFam::p: return "p";
        case MFam::q: return "q";
        case MFam::zeta: return "zeta";
        case MFam::c: return "c";
        case MFam::mxI: return "mx.I";
        case MFam::mxII: return "mx.II";
        case MFam::mxIII: return "mx.III";
        case MFam::mxIV: return "mx.IV";
        case MFam::mxV: return "mx.V";
        case MFam::mxVI: return "mx.VI";
        case MFam::mxVII: return "mx.VII";
        case MFam::mxVIII: return "mx.VIII";
        case MFam::mxIX: return "mx.IX";
        case MFam::mxX: return "mx.X";
        case MFam::mxXI: return "mx.XI";
    }
    return "?";
}

std::string morph_id_error(const MorphId& id, const Presentation& A) {
    int r = A.r(), N = A.N();
    auto q_ok = [&](int v) { return v >= r && v < N; };
    std::string qr = "Q indices must satisfy " + std::to_string(r) +
                     " <= index < " + std::to_string(N);
    auto s_ok = [&](int s) { return s >= 0 && s < r; };
    switch (id.fam) {
        case MFam::i:
            if (!s_ok(id.s)) return "i needs 0 <= s < r";
            if (id.m > id.n) return "i needs m <= n";
            return "";
        case MFam::j:
            if (id.m > id.n) return "j needs m <= n";
            if (!q_ok(id.a)) return qr;
            return "";
        case MFam::iprime:
            if (id.m > id.n) return "i' needs m <= n";
            if (!q_ok(id.b)) return qr;
            return "";
        case MFam::iota:
            if (!(id.m <= id.n - r)) return "iota needs m <= n - r";
            if (!divr(id.n - id.m, r)) return "iota needs r | (n - m)";
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            return "";
        case MFam::xi:
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            if (!(id.b < id.a)) return "xi needs b < a";
            return "";
        case MFam::pi:
            if (!s_ok(id.s)) return "pi needs 0 <= s < r";
            if (!(id.m < id.n)) return "pi needs m < n";
            return "";
        case MFam::piprime:
            if (!(id.m < id.n)) return "pi' needs m < n";
            if (!q_ok(id.a)) return qr;
            return "";
        case MFam::p:
            if (!(id.m < id.n)) return "p needs m < n";
            if (!q_ok(id.b)) return qr;
            return "";
        case MFam::q:
            if (!(id.m < id.n - r)) return "q needs m < n - r";
            if (!divr(id.n - id.m - 1, r)) return "q needs r | (n - m - 1)";
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            return "";
        case MFam::zeta:
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            if (!(id.b < id.a)) return "zeta needs b < a";
            return "";
        case MFam::c:
            if (!(id.l <= id.m && id.m <= id.n)) return "c needs l <= m <= n";
            if (!divr(id.n - id.l, r)) return "c needs r | (n - l)";
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            if (id.l == id.m && id.m == id.n && !(id.b < id.a))
                return "c with l = m = n needs b < a";
            return "";
        case MFam::mxI:
            if (!(id.m < id.mp && id.mp < id.n)) return "mx.I needs m < mp < n";
            if (!divr(id.mp - id.m, r)) return "mx.I needs r | (mp - m)";
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            return "";
        case MFam::mxII:
            if (!(id.m < id.n)) return "mx.II needs m < n";
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            if (!(id.b < id.a)) return "mx.II needs b < a";
            return "";
        case MFam::mxIII:
            if (!(id.m < id.n && id.n < id.np)) return "mx.III needs m < n < np";
            if (!divr(id.np - id.n, r)) return "mx.III needs r | (np - n)";
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            return "";
        case MFam::mxIV:
            if (!(id.m < id.n)) return "mx.IV needs m < n";
            if (!q_ok(id.a) || !q_ok(id.b)) return qr;
            if (!(id.b < id.a)) return "mx.IV needs b < a";
            return "";
        case MFam::mxV:
            if (!(id.m < id.mp && id.mp < id.n && id.n < id.np))
                return "mx.V needs m < mp < n < np";
            if (!divr(id.mp - id.m, r)) return "mx.V needs r | (mp - m)";
            if (!divr(id.np - id.n, r)) return "mx.V needs r | (np - n)";
            if (!(id.m < id.n - r) || !divr(id.n - id.m - 1, r))
                return "mx.V needs a valid domain B[m,n]";
            if (!(id.mp < id.np - r) || !divr(id.np - id.mp - 1, r))
                return "mx.V needs a valid codomain B[mp,np]";
            if (!q_ok(id.a) || !q_ok(id.b) || !q_ok(id.ap) || !q_ok(id.bp)) return qr;
            return "";
        case MFam::mxVI:
            if (!(id.m < id.n - r) || !divr(id.n - id.m - 1, r))
                return "mx.VI needs a valid domain B[m,n]";
            if (!(id.n < id.np)) return "mx.VI needs n < np";
            if (!divr(id.np - id.n, r)) return "mx.VI needs r | (np - n)";
            if (!q_ok(id.a) || !q_ok(id.b) || !q_ok(id.ap) || !q_ok(id.bp)) return qr;
            if (!(id.ap <= id.a)) return "mx.VI needs ap <= a";
            return "";
        case MFam::mxVII:
            if (!(id.m < id.mp)) return "mx.VII needs m < mp";
            if (!(id.mp < id.n - r) || !divr(id.n - id.mp - 1, r))
                return "mx.VII needs a valid codomain B[mp,n]";
            if (!divr(id.mp - id.m, r)) return "mx.VII needs r | (mp - m)";
            if (!q_ok(id.a) || !q_ok(id.b) || !q_ok(id.ap) || !q_ok(id.bp)) return qr;
            if (!(id.bp <= id.b)) return "mx.VII needs bp <= b";
            return "";
        case MFam::mxVIII:
            if (!(id.m < id.n - r) || !divr(id.n - id.m - 1, r))
                return "mx.VIII needs a valid B[m,n]";
            if (!q_ok(id.a) || !q_ok(id.b) || !q_ok(id.ap) || !q_ok(id.bp)) return qr;
            if (!(id.ap <= id.a)) return "mx.VIII needs ap <= a";
            if (!(id.bp <= id.b)) return "mx.VIII needs bp <= b";
            if (id.ap == id.a && id.bp == id.b)
                return "mx.VIII with ap = a and bp = b is the identity";
            return "";
        case MFam::mxIX:
            if (!(id.m < id.n - r) || !divr(id.n - id.m - 1, r))
                return "mx.IX needs a valid domain B[m,n]";
            if (!q_ok(id.a) || !q_ok(id.b) || !q_ok(id.ap) || !q_ok(id.bp)) return qr;
            if (!(id.bp <= id.b && id.b < id.ap)) return "mx.IX needs bp <= b < ap";
            return "";
        case MFam::mxX:
            if (!(id.m < id.n - r) || !divr(id.n - id.m - 1, r))
                return "mx.X needs a valid codomain B[m,n]";
            if (!q_ok(id.a) || !q_ok(id.b) || !q_ok(id.ap) || !q_ok(id.bp)) return qr;
            if (!(id.b < id.ap && id.ap <= id.a)) return "mx.X needs b < ap <= a";
            return "";
        case MFam::mxXI:
            if (!q_ok(id.a) || !q_ok(id.b) || !q_ok(id.ap) || !q_ok(id.bp)) return qr;
            if (!(id.bp <= id.b && id.b < id.ap && id.ap <= id.a))
                return "mx.XI needs bp <= b < ap <= a";
            if (id.ap == id.a && id.bp == id.b)
                return "mx.XI with ap = a and bp = b is the identity";
            return "";
    }
    return "unknown family";
}

bool morph_id_valid(const MorphId& id, const Presentation& A) {
    return morph_id_error(id, A).empty();
}

CatalogId morph_domain(const MorphId& id, const Presentation& A) {
    int r = A.r();
    switch (id.fam) {
        case MFam::i: return {Family::X, id.s, id.m, id.n, 0, 0};
        case MFam::j: return {Family::X, imod(r - 1, r), id.m, id.n, 0, 0};
        case MFam::iprime: return CatalogId{Family::R, 0, id.m, id.n, 0, id.b}.canonical();
        case MFam::iota: return CatalogId{Family::R, 0, id.m, id.n, 0, id.b}.canonical();
        case MFam::xi: return {Family::L, 0, id.m, id.m, id.b, 0};
        case MFam::pi: return {Family::X, id.s, id.m, id.n, 0, 0};
        case MFam::piprime: return {Family::L, 0, id.m, id.n, id.a, 0};
        case MFam::p: return CatalogId{Family::R, 0, id.m, id.n, 0, id.b}.canonical();
        case MFam::q: return {Family::B, 0, id.m, id.n, id.a, id.b};
        case MFam::zeta: return {Family::Z, 0, id.m, 0, id.a, id.b};
        case MFam::c: return {Family::L, 0, id.l, id.m, id.a, 0};
        case MFam::mxI: return {Family::L, 0, id.m, id.n, id.a, 0};
        case MFam::mxII: return {Family::L, 0, id.m, id.n, id.a, 0};
        case MFam::mxIII: return CatalogId{Family::R, 0, id.m, id.n, 0, id.a}.canonical();
        case MFam::mxIV: return CatalogId{Family::R, 0, id.m, id.n, 0, id.a}.canonical();
        case MFam::mxV: return {Family::B, 0, id.m, id.n, id.a, id.b};
        case MFam::mxVI: return {Family::B, 0, id.m, id.n, id.a, id.b};
        case MFam::mxVII: return {Family::B, 0, id.m, id.n, id.a, id.b};
        case MFam::mxVIII: return {Family::B, 0, id.m, id.n, id.a, id.b};
        case MFam::mxIX: return {Family::B, 0, id.m, id.n, id.a, id.b};
        case MFam::mxX: return {Family::Z, 0, id.m, 0, id.a, id.b};
        case MFam::mxXI: return {Family::Z, 0, id.m, 0, id.a, id.b};
    }
    throw std::logic_error("morph_domain: bad family");
}

CatalogId morph_codomain(const MorphId& id, const Presentation& A) {
    int r = A.r();
    switch (id.fam) {
        case MFam::i: return {Family::X, imod(id.s + 1, r), id.m - 1, id.n, 0, 0};
        case MFam::j: return {Family::L, 0, id.m - 1, id.n, id.a, 0};
        case MFam::iprime: return CatalogId{Family::R, 0, id.m - 1, id.n, 0, id.b}.canonical();
        case MFam::iota: return {Family::B, 0, id.m - 1, id.n, id.a, id.b};
        case MFam::xi: return {Family::Z, 0, id.m - 1, 0, id.a, id.b};
        case MFam::pi: return {Family::X, id.s, id.m, id.n - 1, 0, 0};
        case MFam::piprime: return {Family::L, 0, id.m, id.n - 1, id.a, 0};
        case MFam::p: return {Family::X, imod(id.n - id.m - 1, r), id.m, id.n - 1, 0, 0};
        case MFam::q: return {Family::L, 0, id.m, id.n - 1, id.a, 0};
        case MFam::zeta: return {Family::L, 0, id.m, id.m, id.a, 0};
        case MFam::c: return CatalogId{Family::R, 0, id.m, id.n, 0, id.b}.canonical();
        case MFam::mxI: return {Family::L, 0, id.mp, id.n, id.b, 0};
        case MFam::mxII: return {Family::L, 0, id.m, id.n, id.b, 0};
        case MFam::mxIII: return CatalogId{Family::R, 0, id.m, id.np, 0, id.b}.canonical();
        case MFam::mxIV: return CatalogId{Family::R, 0, id.m, id.n, 0, id.b}.canonical();
        case MFam::mxV: return {Family::B, 0, id.mp, id.np, id.ap, id.bp};
        case MFam::mxVI: return {Family::B, 0, id.m, id.np, id.ap, id.bp};
        case MFam::mxVII: return {Family::B, 0, id.mp, id.n, id.ap, id.bp};
        case MFam::mxVIII: return {Family::B, 0, id.m, id.n, id.ap, id.bp};
        case MFam::mxIX: return {Family::Z, 0, id.n - 1, 0, id.ap, id.bp};
        case MFam::mxX: return {Family::B, 0, id.m, id.n, id.ap, id.bp};
        case MFam::mxXI: return {Family::Z, 0, id.m, 0, id.ap, id.bp};
    }
    throw std::logic_error("morph_codomain: bad family");
}

namespace {

struct ParamSpec {
    // Parameter keys before and after the semicolon, in print order; the
    // Z/rZ index s gets its own leading "s=..;" group when r > 1.
    std::vector<std::string> main_keys;
    std::vector<std::string> letter_keys;
    bool s_prefix = false;
};

ParamSpec param_spec(MFam f, int r) {
    switch (f) {
        case MFam::i:
        case MFam::pi:
            return r > 1 ? ParamSpec{{"m", "n"}, {}, true} : ParamSpec{{"m", "n"}, {}};
        case MFam::j: return {{"m", "n"}, {"a"}};
        case MFam::iprime: return {{"m", "n"}, {"b"}};
        case MFam::iota: return {{"m", "n"}, {"a", "b"}};
        case MFam::xi: return {{"m"}, {"a", "b"}};
        case MFam::piprime: return {{"m", "n"}, {"a"}};
        case MFam::p: return {{"m", "n"}, {"b"}};
        case MFam::q: return {{"m", "n"}, {"a", "b"}};
        case MFam::zeta: return {{"m"}, {"a", "b"}};
        case MFam::c: return {{"l", "m", "n"}, {"a", "b"}};
        case MFam::mxI: return {{"m", "mp", "n"}, {"a", "b"}};
        case MFam::mxII: return {{"m", "n"}, {"a", "b"}};
        case MFam::mxIII: return {{"m", "n", "np"}, {"a", "b"}};
        case MFam::mxIV: return {{"m", "n"}, {"a", "b"}};
        case MFam::mxV: return {{"m", "mp", "n", "np"}, {"a", "b", "ap", "bp"}};
        case MFam::mxVI: return {{"m", "n", "np"}, {"a", "b", "ap", "bp"}};
        case MFam::mxVII: return {{"m", "mp", "n"}, {"a", "b", "ap", "bp"}};
        case MFam::mxVIII: return {{"m", "n"}, {"a", "b", "ap", "bp"}};
        case MFam::mxIX: return {{"m", "n"}, {"a", "b", "ap", "bp"}};
        case MFam::mxX: return {{"m", "n"}, {"a", "b", "ap", "bp"}};
        case MFam::mxXI: return {{"m"}, {"a", "b", "ap", "bp"}};
    }
    return {};
}

int& param_ref(MorphId& id, const std::string& key) {
    if (key == "s") return id.s;
    if (key == "l") return id.l;
    if (key == "m") return id.m;
    if (key == "mp") return id.mp;
    if (key == "n") return id.n;
    if (key == "np") return id.np;
    if (key == "a") return id.a;
    if (key == "b") return id.b;
    if (key == "ap") return id.ap;
    if (key == "bp") return id.bp;
    throw std::logic_error("param_ref: unknown key " + key);
}

}  // namespace

std::string print_morph_id(const MorphId& id, const Presentation& A) {
    ParamSpec spec = param_spec(id.fam, A.r());
    MorphId copy = id;
    std::string s = mfam_name(id.fam) + "[";
    if (spec.s_prefix) s += "s=" + std::to_string(id.s) + ";";
    bool first = true;
    for (auto& k : spec.main_keys) {
        if (!first) s += ",";
        s += k + "=" + std::to_string(param_ref(copy, k));
        first = false;
    }
    if (!spec.letter_keys.empty()) {
        s += ";";
        first = true;
        for (auto& k : spec.letter_keys) {
            if (!first) s += ",";
            s += k + "=" + std::to_string(param_ref(copy, k));
            first = false;
        }
    }
    return s + "]";
}

MorphId parse_morph_id(const std::string& text, const Presentation& A) {
    static const std::vector<MFam> all = {
        // Longest names first so "mx.VIII" is not eaten by "mx.V".
        MFam::mxVIII, MFam::mxVII, MFam::mxIII, MFam::mxXI, MFam::mxIX, MFam::mxIV,
        MFam::mxVI,  MFam::mxII,  MFam::mxX,   MFam::mxV,  MFam::mxI,  MFam::iprime,
        MFam::iota,  MFam::piprime, MFam::pi,  MFam::xi,   MFam::zeta, MFam::i,
        MFam::j,     MFam::p,     MFam::q,    MFam::c};
    MorphId id;
    size_t pos = 0;
    bool found = false;
    for (MFam f : all) {
        std::string name = mfam_name(f);
        if (text.rfind(name + "[", 0) == 0) {
            id.fam = f;
            pos = name.size();
            found = true;
            break;
        }
    }
    if (!found) throw std::invalid_argument("parse error at position 0: unknown morphism family");
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + why);
    };
    auto expect = [&](char ch) {
        if (pos >= text.size() || text[pos] != ch) fail(std::string("expected '") + ch + "'");
        ++pos;
    };
    auto integer = [&]() {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(text.substr(start, pos - start));
    };
    ParamSpec spec = param_spec(id.fam, A.r());
    expect('[');
    if (spec.s_prefix) {
        expect('s');
        expect('=');
        id.s = integer();
        expect(';');
    }
    bool first = true;
    for (auto& k : spec.main_keys) {
        if (!first) expect(',');
        for (char ch : k) expect(ch);
        expect('=');
        param_ref(id, k) = integer();
        first = false;
    }
    if (!spec.letter_keys.empty()) {
        expect(';');
        first = true;
        for (auto& k : spec.letter_keys) {
            if (!first) expect(',');
            for (char ch : k) expect(ch);
            expect('=');
            param_ref(id, k) = integer();
            first = false;
        }
    }
    expect(']');
    if (pos != text.size()) fail("trailing characters");
    std::string err = morph_id_error(id, A);
    if (!err.empty()) throw std::invalid_argument("invalid id '" + text + "': " + err);
    return id;
}

ChainMap identity_overlap(const ProjComplex& X, const ProjComplex& Y) {
    ChainMap f(X, Y);
    if (X.is_zero() || Y.is_zero()) return f;
    int lo = std::max(X.lo(), Y.lo());
    int hi = std::min(X.hi(), Y.hi());
    for (int k = lo; k <= hi; ++k) {
        if (X.summands(k) != 1 || Y.summands(k) != 1 || X.vertex(k, 0) != Y.vertex(k, 0))
            throw std::invalid_argument("identity_overlap: vertices disagree on the overlap");
        f.set_comp(k, 0, 0, X.pres()->idempotent(X.vertex(k, 0)));
    }
    return f;
}

ChainMap realize_morph(const MorphId& id, const PresPtr& A) {
    std::string err = morph_id_error(id, *A);
    if (!err.empty())
        throw std::invalid_argument("realize_morph " + print_morph_id(id, *A) + ": " + err);
    const Presentation& P = *A;
    int r = P.r();
    ProjComplex dom = realize(morph_domain(id, P), A);
    ProjComplex cod = realize(morph_codomain(id, P), A);
    ChainMap f(dom, cod);
    auto set1 = [&](int k, AlgElem e) { f.set_comp(k, 0, 0, std::move(e)); };
    auto ids_on = [&](int from, int to) {
        for (int k = from; k <= to; ++k) set1(k, P.idempotent(dom.vertex(k, 0)));
    };
    switch (id.fam) {
        case MFam::i:
        case MFam::j:
        case MFam::iprime:
        case MFam::iota:
        case MFam::xi:
        case MFam::pi:
        case MFam::piprime:
        case MFam::p:
        case MFam::q:
        case MFam::zeta:
            f = identity_overlap(dom, cod);
            break;
        case MFam::c: {
            if (id.l == id.m && id.m == id.n)
                set1(id.m, q_to_q(P, id.a, id.b));
            else if (id.l == id.m)
                set1(id.m, q_to_p(P, id.a));
            else if (id.m == id.n)
                set1(id.m, p_to_q(P, id.b));
            else
                set1(id.m, down_P(P, imod(id.l - id.m, r)));
            break;
        }
        case MFam::mxI:
            set1(id.mp, p_to_q(P, id.b));
            ids_on(id.mp + 1, id.n);
            break;
        case MFam::mxII:
            set1(id.m, q_to_q(P, id.a, id.b));
            ids_on(id.m + 1, id.n);
            break;
        case MFam::mxIII:
            ids_on(id.m, id.n - 1);
            set1(id.n, q_to_p(P, id.a));
            break;
        case MFam::mxIV:
            ids_on(id.m, id.n - 1);
            set1(id.n, q_to_q(P, id.a, id.b));
            break;
        case MFam::mxV:
            set1(id.mp, p_to_q(P, id.ap));
            ids_on(id.mp + 1, id.n - 1);
            set1(id.n, q_to_p(P, id.b));
            break;
        case MFam::mxVI:
            set1(id.m, q_to_q(P, id.a, id.ap));
            ids_on(id.m + 1, id.n - 1);
            set1(id.n, q_to_p(P, id.b));
            break;
        case MFam::mxVII:
            set1(id.mp, p_to_q(P, id.ap));
            ids_on(id.mp + 1, id.n - 1);
            set1(id.n, q_to_q(P, id.b, id.bp));
            break;
        case MFam::mxVIII:
            set1(id.m, q_to_q(P, id.a, id.ap));
            ids_on(id.m + 1, id.n - 1);
            set1(id.n, q_to_q(P, id.b, id.bp));
            break;
        case MFam::mxIX:
            set1(id.n - 1, p_to_q(P, id.ap));
            set1(id.n, q_to_q(P, id.b, id.bp));
            break;
        case MFam::mxX:
            set1(id.m, q_to_q(P, id.a, id.ap));
            set1(id.m + 1, q_to_p(P, id.b));
            break;
        case MFam::mxXI:
            set1(id.m, q_to_q(P, id.a, id.ap));
            set1(id.m + 1, q_to_q(P, id.b, id.bp));
            break;
    }
    f.validate();
    return f;
}

std::vector<MorphId> enumerate_spanning(const Interval& window, const Presentation& A) {
    std::vector<MorphId> out;
    if (window.empty()) return out;
    int r = A.r(), N = A.N();
    int lo = window.lo, hi = window.hi;
    auto push_if = [&](MorphId id) {
        if (!morph_id_valid(id, A)) return;
        Interval d = morph_domain(id, A).support();
        Interval c = morph_codomain(id, A).support();
        if (window.contains(d) && window.contains(c)) out.push_back(id);
    };
    auto each_q = [&](auto&& fn) {
        for (int a = r; a < N; ++a) fn(a);
    };
    // Inclusions: i, j, i', iota, xi.
    for (int s = 0; s < r; ++s)
        for (int m = lo + 1; m <= hi; ++m)
            for (int n = m; n <= hi; ++n) push_if({MFam::i, s, 0, m, 0, n, 0, 0, 0, 0});
    for (int m = lo + 1; m <= hi; ++m)
        for (int n = m; n <= hi; ++n)
            each_q([&](int a) { push_if({MFam::j, 0, 0, m, 0, n, 0, a, 0, 0, 0}); });
    for (int m = lo + 1; m <= hi; ++m)
        for (int n = m; n <= hi; ++n)
            each_q([&](int b) { push_if({MFam::iprime, 0, 0, m, 0, n, 0, 0, b, 0, 0}); });
    for (int m = lo + 1; m <= hi; ++m)
        for (int n = m; n <= hi; ++n)
            each_q([&](int a) {
                each_q([&](int b) { push_if({MFam::iota, 0, 0, m, 0, n, 0, a, b, 0, 0}); });
            });
    for (int m = lo + 1; m <= hi; ++m)
        each_q([&](int a) {
            each_q([&](int b) { push_if({MFam::xi, 0, 0, m, 0, 0, 0, a, b, 0, 0}); });
        });
    // Projections: pi, pi', p, q, zeta.
    for (int s = 0; s < r; ++s)
        for (int m = lo; m <= hi; ++m)
            for (int n = m + 1; n <= hi; ++n) push_if({MFam::pi, s, 0, m, 0, n, 0, 0, 0, 0});
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            each_q([&](int a) { push_if({MFam::piprime, 0, 0, m, 0, n, 0, a, 0, 0, 0}); });
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            each_q([&](int b) { push_if({MFam::p, 0, 0, m, 0, n, 0, 0, b, 0, 0}); });
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            each_q([&](int a) {
                each_q([&](int b) { push_if({MFam::q, 0, 0, m, 0, n, 0, a, b, 0, 0}); });
            });
    for (int m = lo; m <= hi; ++m)
        each_q([&](int a) {
            each_q([&](int b) { push_if({MFam::zeta, 0, 0, m, 0, 0, 0, a, b, 0, 0}); });
        });
    // Connections.
    for (int l = lo; l <= hi; ++l)
        for (int m = l; m <= hi; ++m)
            for (int n = m; n <= hi; ++n)
                each_q([&](int a) {
                    each_q([&](int b) { push_if({MFam::c, 0, l, m, 0, n, 0, a, b, 0, 0}); });
                });
    // Mixed classes.
    for (int m = lo; m <= hi; ++m)
        for (int mp = m + 1; mp <= hi; ++mp)
            for (int n = mp + 1; n <= hi; ++n)
                each_q([&](int a) {
                    each_q([&](int b) { push_if({MFam::mxI, 0, 0, m, mp, n, 0, a, b, 0, 0}); });
                });
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            each_q([&](int a) {
                each_q([&](int b) { push_if({MFam::mxII, 0, 0, m, 0, n, 0, a, b, 0, 0}); });
            });
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            for (int np = n + 1; np <= hi; ++np)
                each_q([&](int a) {
                    each_q([&](int b) { push_if({MFam::mxIII, 0, 0, m, 0, n, np, a, b, 0, 0}); });
                });
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            each_q([&](int a) {
                each_q([&](int b) { push_if({MFam::mxIV, 0, 0, m, 0, n, 0, a, b, 0, 0}); });
            });
    auto each_q4 = [&](auto&& fn) {
        each_q([&](int a) {
            each_q([&](int b) {
                each_q([&](int ap) {
                    each_q([&](int bp) { fn(a, b, ap, bp); });
                });
            });
        });
    };
    for (int m = lo; m <= hi; ++m)
        for (int mp = m + 1; mp <= hi; ++mp)
            for (int n = mp + 1; n <= hi; ++n)
                for (int np = n + 1; np <= hi; ++np)
                    each_q4([&](int a, int b, int ap, int bp) {
                        push_if({MFam::mxV, 0, 0, m, mp, n, np, a, b, ap, bp});
                    });
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            for (int np = n + 1; np <= hi; ++np)
                each_q4([&](int a, int b, int ap, int bp) {
                    push_if({MFam::mxVI, 0, 0, m, 0, n, np, a, b, ap, bp});
                });
    for (int m = lo; m <= hi; ++m)
        for (int mp = m + 1; mp <= hi; ++mp)
            for (int n = mp + 1; n <= hi; ++n)
                each_q4([&](int a, int b, int ap, int bp) {
                    push_if({MFam::mxVII, 0, 0, m, mp, n, 0, a, b, ap, bp});
                });
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            each_q4([&](int a, int b, int ap, int bp) {
                push_if({MFam::mxVIII, 0, 0, m, 0, n, 0, a, b, ap, bp});
            });
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            each_q4([&](int a, int b, int ap, int bp) {
                push_if({MFam::mxIX, 0, 0, m, 0, n, 0, a, b, ap, bp});
            });
    for (int m = lo; m <= hi; ++m)
        for (int n = m + 1; n <= hi; ++n)
            each_q4([&](int a, int b, int ap, int bp) {
                push_if({MFam::mxX, 0, 0, m, 0, n, 0, a, b, ap, bp});
            });
    for (int m = lo; m <= hi; ++m)
        each_q4([&](int a, int b, int ap, int bp) {
            push_if({MFam::mxXI, 0, 0, m, 0, 0, 0, a, b, ap, bp});
        });
    return out;
}

bool crossing(const ChainMap& f, const CatalogId& X, const CatalogId& Y, const PresPtr& A) {
    Interval sx = X.support();
    Interval sy = Y.support();
    if (!(sx.lo <= sy.lo && sy.lo <= sx.hi && sx.hi <= sy.hi)) return false;
    ProjComplex dom = realize(X, A);
    ProjComplex cod = realize(Y, A);
    CoordLayout lay = layout_maps(dom, cod, 0);
    Vec fv = vectorize(f, lay);
    auto nulls = null_homotopics(dom, cod);
    if (fv == Vec(fv.size(), 0)) return false;
    for (int d : {sx.hi, sy.lo}) {
        // Can a homotopy cancel the degree-d block of f?
        std::vector<int> block_cols;
        for (int i = 0; i < lay.size(); ++i)
            if (lay.slots[i].n == d) block_cols.push_back(i);
        Mat m(static_cast<int>(block_cols.size()), static_cast<int>(nulls.size()), A->prime());
        Vec rhs(block_cols.size());
        for (size_t row = 0; row < block_cols.size(); ++row)
            rhs[row] = fp_neg(fv[block_cols[row]], A->prime());
        for (size_t col = 0; col < nulls.size(); ++col) {
            Vec nv = vectorize(nulls[col], lay);
            for (size_t row = 0; row < block_cols.size(); ++row)
                m.at(static_cast<int>(row), static_cast<int>(col)) = nv[block_cols[row]];
        }
        if (solve(m, rhs)) return false;  // some representative vanishes in degree d
    }
    return true;
}

namespace {

CatalogId truncate_top(const CatalogId& raw, const Presentation& A, int new_top) {
    CatalogId id = raw.canonical();
    Interval sup = id.support();
    if (new_top >= sup.hi) return id;
    if (new_top < sup.lo) throw std::invalid_argument("truncate_top: empty result");
    int r = A.r();
    switch (id.fam) {
        case Family::X:
            return {Family::X, id.s, id.m, new_top, 0, 0};
        case Family::L:
            return {Family::L, 0, id.m, new_top, id.a, 0};
        case Family::R:
            return CatalogId{Family::X, imod(id.n - id.m - 1, r), id.m, new_top, 0, 0};
        case Family::B:
            return {Family::L, 0, id.m, new_top, id.a, 0};
        case Family::Z:
            return {Family::L, 0, id.m, id.m, id.a, 0};
    }
    throw std::logic_error("truncate_top");
}

CatalogId truncate_bottom(const CatalogId& raw, const Presentation& A, int new_bottom) {
    CatalogId id = raw.canonical();
    Interval sup = id.support();
    if (new_bottom <= sup.lo) return id;
    if (new_bottom > sup.hi) throw std::invalid_argument("truncate_bottom: empty result");
    int r = A.r();
    switch (id.fam) {
        case Family::X:
            return {Family::X, imod(id.s - (new_bottom - id.m), r), new_bottom, id.n, 0, 0};
        case Family::L:
            return {Family::X, imod(r - (new_bottom - id.m), r), new_bottom, id.n, 0, 0};
        case Family::R:
            return CatalogId{Family::R, 0, new_bottom, id.n, 0, id.b}.canonical();
        case Family::B:
            return CatalogId{Family::R, 0, new_bottom, id.n, 0, id.b}.canonical();
        case Family::Z:
            return {Family::L, 0, id.m + 1, id.m + 1, id.b, 0};
    }
    throw std::logic_error("truncate_bottom");
}

}  // namespace

CrossingTruncation truncate_to_crossing(const CatalogId& X, const CatalogId& Y,
                                        const PresPtr& A) {
    Interval sx = X.support();
    Interval sy = Y.support();
    if (sy.lo > sx.hi || sy.hi < sx.lo)
        throw std::invalid_argument("truncate_to_crossing: supports do not meet");
    CrossingTruncation out;
    out.x1 = truncate_top(X, *A, std::min(sx.hi, sy.hi));
    out.y1 = truncate_bottom(Y, *A, std::max(sx.lo, sy.lo));
    ProjComplex dx = realize(X, A), dx1 = realize(out.x1, A);
    ProjComplex dy = realize(Y, A), dy1 = realize(out.y1, A);
    out.pr = identity_overlap(dx, dx1);
    out.inc = identity_overlap(dy1, dy);
    out.pr.validate();
    out.inc.validate();
    return out;
}

}  // namespace arn
