// Hom computation in the bounded homotopy category: the space of chain
// maps, the null-homotopic subspace, quotient bases with deterministic
// representatives, composition on classes, and equivalence tests.
#pragma once

#include <optional>

#include "arn/complex.hpp"

namespace arn {

// Fixed coordinate layout for maps X -> Y of a given degree shift: one
// coordinate per (degree, source summand, target summand, basis path).
struct CoordLayout {
    struct Slot {
        int n;       // degree in X
        int s, t;    // summand indices in X^n and Y^{n+shift}
        int path;    // path id within e_{v(s)} A e_{w(t)}
    };
    std::vector<Slot> slots;
    int size() const { return static_cast<int>(slots.size()); }
};

CoordLayout layout_maps(const ProjComplex& X, const ProjComplex& Y, int shift);

// Degree-preserving map as a coordinate vector (layout shift 0).
Vec vectorize(const ChainMap& f, const CoordLayout& lay);
ChainMap devectorize(const ProjComplex& X, const ProjComplex& Y, const CoordLayout& lay,
                     const Vec& v);

// Basis of all chain maps X -> Y (solution space of the commuting squares).
std::vector<ChainMap> chain_maps(const ProjComplex& X, const ProjComplex& Y);

// Basis of the null-homotopic maps {d_Y s + s d_X}.
std::vector<ChainMap> null_homotopics(const ProjComplex& X, const ProjComplex& Y);

class HomSpace {
  public:
    HomSpace() = default;
    HomSpace(const ProjComplex& X, const ProjComplex& Y);

    const ProjComplex& domain() const { return X_; }
    const ProjComplex& codomain() const { return Y_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int chain_dim() const { return chain_dim_; }
    int null_dim() const { return null_dim_; }
    const std::vector<ChainMap>& basis() const { return basis_; }
    const CoordLayout& layout() const { return lay_; }

    // Coordinates of [f] in the quotient basis; throws if f is not a valid
    // chain map X -> Y.
    Vec reduce(const ChainMap& f) const;
    Vec reduce_vec(const Vec& coords) const;
    bool is_null_homotopic(const ChainMap& f) const {
        Vec c = reduce(f);
        for (u32 x : c) if (x) return false;
        return true;
    }
    // A representative chain map with the given quotient coordinates.
    ChainMap from_coords(const Vec& coords) const;

  private:
    ProjComplex X_, Y_;
    CoordLayout lay_;
    int chain_dim_ = 0;
    int null_dim_ = 0;
    std::vector<ChainMap> basis_;
    std::vector<Vec> basis_vecs_;
    RowBasis span_{0, kDefaultPrime};  // nulls first, then representatives
    std::vector<int> rep_index_;       // insertion indices of the representatives
};

// f after g on homotopy classes: reduce(compose(f, g)) in H(X->Z).
Vec compose_classes(const HomSpace& H, const ChainMap& f, const ChainMap& g);

// id_{cone(f)} null-homotopic <=> f is an isomorphism in the homotopy
// category.
bool is_homotopy_equivalence(const ChainMap& f);

// Local endomorphism ring test: the identity class is nonzero and every
// basis class minus its identity coefficient is nilpotent modulo homotopy.
bool is_indecomposable(const ProjComplex& X);

// Multiplication table of End(X) classes: [b_i o b_j] for b_j applied first.
std::vector<std::vector<Vec>> end_structure(const HomSpace& end);

// Coordinates of [id_X] in the End basis.
Vec identity_class(const HomSpace& end);

// Is the class u in Hom(X,Y) an isomorphism? Sound and complete when X and
// Y are indecomposable with local End rings: u is invertible iff
// [u o v] = [id_Y] is solvable over v in Hom(Y,X).
bool class_invertible(const HomSpace& h_xy, const HomSpace& h_yx, const HomSpace& end_y,
                      const Vec& u);

// Search for an invertible class in Hom(X,Y). For indecomposable endpoints
// the non-isomorphisms form a subspace, so scanning the basis elements is
// complete; this is how pairwise non-isomorphism of catalog objects is
// certified.
bool spaces_isomorphic(const HomSpace& h_xy, const HomSpace& h_yx, const HomSpace& end_y);

}  // namespace arn
