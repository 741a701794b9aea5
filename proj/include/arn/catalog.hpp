// The catalog of indecomposable complexes over A(r,N) and the canonical
// maps between projectives their differentials are built from. Family X is
// a tower of projective-injectives, L/R attach a Q at the bottom/top, B at
// both ends, Z is the two-term Q complex. Indices follow the CLI syntax
// X[m,n] / X[s=S;m,n] / L[m,n;a=A] / R[m,n;b=B] / B[m,n;a=A,b=B] /
// Z[m;a=A,b=B].
#pragma once

#include <string>
#include <vector>

#include "arn/complex.hpp"

namespace arn {

enum class Family { X, L, R, B, Z };

std::string family_name(Family f);

struct CatalogId {
    Family fam = Family::X;
    int s = 0;  // Z/rZ index of the top projective (family X, meaningful for r > 1)
    int m = 0;
    int n = 0;  // unused for Z
    int a = 0;  // bottom Q vertex (L, B) or first Z vertex
    int b = 0;  // top Q vertex (R, B) or second Z vertex

    // R[m,m;b] and L[m,m;a] are the same stalk; L is the canonical name.
    CatalogId canonical() const;
    Interval support() const;
    bool operator==(const CatalogId&) const = default;
    auto operator<=>(const CatalogId&) const = default;
};

// Validity of the index combination for the given algebra; returns an error
// message naming the violated constraint, or empty for valid ids.
std::string catalog_id_error(const CatalogId& id, const Presentation& A);
bool catalog_id_valid(const CatalogId& id, const Presentation& A);

std::string print_catalog_id(const CatalogId& id, const Presentation& A);
// Throws std::invalid_argument with a position note on parse failure.
CatalogId parse_catalog_id(const std::string& text, const Presentation& A);

// ---- canonical maps between projectives (used as differential entries) -----
// down_P(i): P_i -> P_{i-1 mod r}; the wrap-around P_0 -> P_{r-1} is the
// long path through the tail of the cycle.
AlgElem down_P(const Presentation& A, int i);
AlgElem q_to_p(const Presentation& A, int a);   // Q_a -> P_{r-1}
AlgElem p_to_q(const Presentation& A, int a);   // P_0 -> Q_a
AlgElem q_to_q(const Presentation& A, int a, int b);  // Q_a -> Q_b, b <= a (identity at b = a)

// Vertex of the catalog complex in each degree of its support.
int catalog_vertex(const CatalogId& id, const Presentation& A, int degree);

ProjComplex realize(const CatalogId& id, const PresPtr& A);

// All valid ids with support inside the window, in deterministic order
// (family, then indices).
std::vector<CatalogId> enumerate_window(const Interval& window, const Presentation& A);

// The nonzero radical endomorphism of X[m,n] for r = 1: the full-cycle
// component concentrated in the bottom degree m.
ChainMap delta(int m, int n, const PresPtr& A);

// For r = 1: the diagonal-sign isomorphism Sigma X[m,n] -> X[m-1,n-1] with
// (-1)^p in degree p. Its inverse has the same components.
ChainMap t_iso(int m, int n, const PresPtr& A);

// Catalog id of the object isomorphic to Sigma(realize(id)); defined for
// every family and every r.
CatalogId shift_id(const CatalogId& id, const Presentation& A);
// The diagonal-sign equivalence Sigma(realize(id)) -> realize(shift_id(id)).
ChainMap shift_identification(const CatalogId& id, const PresPtr& A);

}  // namespace arn
