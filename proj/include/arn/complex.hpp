// Bounded complexes of indecomposable projectives over A(r,N), chain maps
// between them, and the standard constructions: suspension (with sign flip
// on the differential), stalks, direct sums and mapping cones.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arn/pathalg.hpp"

namespace arn {

// Entry (s,t) of a block is the map from summand s of the source degree to
// summand t of the target degree.
using Block = std::vector<std::vector<AlgElem>>;

struct Interval {
    int lo = 0;
    int hi = -1;  // empty when hi < lo
    bool empty() const { return hi < lo; }
    bool contains(const Interval& o) const { return o.empty() || (lo <= o.lo && o.hi <= hi); }
    bool operator==(const Interval&) const = default;
};

class ProjComplex {
  public:
    ProjComplex() = default;
    // verts[k] lists the projective vertices in degree lo+k; diffs[k] is the
    // block d^{lo+k} (one fewer entry than verts).
    ProjComplex(PresPtr A, int lo, std::vector<std::vector<int>> verts,
                std::vector<Block> diffs);

    static ProjComplex zero(PresPtr A);
    // Sigma^n of the projective at `vertex`, concentrated in degree -n.
    static ProjComplex stalk(PresPtr A, int vertex, int n);

    const PresPtr& pres() const { return A_; }
    bool is_zero() const { return verts_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(verts_.size()) - 1; }
    bool in_range(int n) const { return !is_zero() && n >= lo() && n <= hi(); }
    int summands(int n) const {
        return in_range(n) ? static_cast<int>(verts_[n - lo_].size()) : 0;
    }
    int vertex(int n, int s) const { return verts_[n - lo_][s]; }
    const std::vector<int>& degree_vertices(int n) const { return verts_[n - lo_]; }
    // d^n as a block; empty when either side has no summands.
    const Block& diff(int n) const;
    AlgElem diff_entry(int n, int s, int t) const;

    // Least/greatest degree carrying a nonzero term, or nullopt for zero.
    std::optional<Interval> support() const;

    ProjComplex shifted(int k) const;  // Sigma^k
    // d o d = 0 and block shapes; throws std::invalid_argument on failure.
    void validate() const;

    bool operator==(const ProjComplex&) const;

  private:
    PresPtr A_;
    int lo_ = 0;
    std::vector<std::vector<int>> verts_;
    std::vector<Block> diffs_;
    static const Block kEmptyBlock;
};

class ChainMap {
  public:
    ChainMap() = default;
    ChainMap(ProjComplex X, ProjComplex Y);  // zero map

    const ProjComplex& domain() const { return X_; }
    const ProjComplex& codomain() const { return Y_; }
    const PresPtr& pres() const { return X_.pres(); }

    AlgElem comp(int n, int s, int t) const;
    void set_comp(int n, int s, int t, AlgElem e);
    bool is_zero_map() const;

    static ChainMap identity(const ProjComplex& X);
    ChainMap shifted(int k) const;  // Sigma^k f : Sigma^k X -> Sigma^k Y
    ChainMap scaled(u32 c) const;
    ChainMap plus(const ChainMap& other) const;

    // Commuting squares f d_X = d_Y f; throws std::invalid_argument on failure.
    void validate() const;
    bool is_valid() const;

    bool operator==(const ChainMap&) const;

  private:
    ProjComplex X_, Y_;
    // comps_[n - nlo_] has shape summands_X(n) x summands_Y(n); stored only
    // on the overlap of the degree ranges.
    int nlo_ = 0;
    std::vector<Block> comps_;
    friend ChainMap compose(const ChainMap&, const ChainMap&);
};

// f after g (apply g first). Domains must match up: g: X->Y, f: Y->Z.
ChainMap compose(const ChainMap& f, const ChainMap& g);

ProjComplex direct_sum(const ProjComplex& X, const ProjComplex& Y);
// Canonical injections/projections of X (+) Y.
struct SumMaps {
    ProjComplex sum;
    ChainMap inj_x, inj_y;   // X -> sum, Y -> sum
    ChainMap proj_x, proj_y; // sum -> X, sum -> Y
};
SumMaps direct_sum_with_maps(const ProjComplex& X, const ProjComplex& Y);

// Mapping cone of f: X -> Y. C^n = X^{n+1} (+) Y^n with differential
// [[-d_X, 0], [-f, d_Y]], plus the canonical maps Y -> C -> Sigma X.
struct ConeTriangle {
    ProjComplex cone;
    ChainMap inc;   // Y -> cone
    ChainMap proj;  // cone -> Sigma X
};
ConeTriangle cone(const ChainMap& f);

std::string complex_brief(const ProjComplex& X);

}  // namespace arn
