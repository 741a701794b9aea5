// Constructors for the generating morphisms between catalog objects:
// bottom-extending inclusions (i, j, i', iota, xi), top-truncating
// projections (pi, pi', p, q, zeta), the one-degree connections c, and the
// eleven mixed classes mx.I..mx.XI. Every realized morphism is validated as
// a chain map; enumerated ids that fail validation indicate a bug, not bad
// input.
#pragma once

#include "arn/catalog.hpp"

namespace arn {

enum class MFam {
    i,
    j,
    iprime,
    iota,
    xi,
    pi,
    piprime,
    p,
    q,
    zeta,
    c,
    mxI,
    mxII,
    mxIII,
    mxIV,
    mxV,
    mxVI,
    mxVII,
    mxVIII,
    mxIX,
    mxX,
    mxXI,
};

std::string mfam_name(MFam f);

struct MorphId {
    MFam fam = MFam::i;
    int s = 0, l = 0, m = 0, mp = 0, n = 0, np = 0;
    int a = 0, b = 0, ap = 0, bp = 0;
    auto operator<=>(const MorphId&) const = default;
};

// Error message naming the violated constraint, or empty when valid.
std::string morph_id_error(const MorphId& id, const Presentation& A);
bool morph_id_valid(const MorphId& id, const Presentation& A);

CatalogId morph_domain(const MorphId& id, const Presentation& A);
CatalogId morph_codomain(const MorphId& id, const Presentation& A);

std::string print_morph_id(const MorphId& id, const Presentation& A);
MorphId parse_morph_id(const std::string& text, const Presentation& A);

ChainMap realize_morph(const MorphId& id, const PresPtr& A);

// All generator ids whose domain and codomain supports lie inside the
// window, in deterministic (family, parameter) order.
std::vector<MorphId> enumerate_spanning(const Interval& window, const Presentation& A);

// The chain map with identity components on every shared degree; domain and
// codomain must carry equal vertices there (all truncation maps and most
// generators have this shape).
ChainMap identity_overlap(const ProjComplex& X, const ProjComplex& Y);

// Support-crossing test for a nonzero morphism f: X -> Y with supports
// [m,n], [p,q]: the pair must satisfy m <= p <= n <= q and no homotopic
// representative may vanish in degree n or degree p.
bool crossing(const ChainMap& f, const CatalogId& X, const CatalogId& Y,
              const PresPtr& A);

struct CrossingTruncation {
    CatalogId x1, y1;
    ChainMap pr;   // X -> X'
    ChainMap inc;  // Y' -> Y
};

// Truncates X from the top and Y from the bottom until the support pair
// crosses; composing with pr and inc then hits every class of Hom(X, Y).
// Throws when the supports do not meet at all.
CrossingTruncation truncate_to_crossing(const CatalogId& X, const CatalogId& Y,
                                        const PresPtr& A);

}  // namespace arn
