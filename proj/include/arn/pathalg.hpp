// The Nakayama algebra A(r,N): cyclic quiver on N vertices with arrows
// alpha_i : i -> i+1 (mod N) and the r quadratic monomial relations that
// kill every length-2 path whose middle vertex lies in {0,...,r-1}.
// Concatenation is written right to left: in a product x*y the factor y
// acts first.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arn/mat.hpp"

namespace arn {

struct Arrow {
    int id;   // alpha_id
    int src;  // id
    int tgt;  // id+1 mod N
};

// A nonzero path is determined by (source vertex, length) because each
// vertex has a unique outgoing arrow.
struct Path {
    int src = 0;
    int len = 0;
};

// An element of e_i A e_j, equivalently the module map Ae_i -> Ae_j given
// by e_i |-> (the element). Supported paths run from vertex j to vertex i.
struct AlgElem {
    int from_v = 0;  // i: the domain projective Ae_i
    int to_v = 0;    // j: the codomain projective Ae_j
    std::vector<std::pair<int, u32>> terms;  // (path id, coefficient), sorted by path id

    bool is_zero() const { return terms.empty(); }
    bool operator==(const AlgElem&) const = default;
};

// A general element of A, used for center computations.
struct AlgebraElem {
    Vec coeffs;  // indexed by path id
    bool operator==(const AlgebraElem&) const = default;
};

class Presentation {
  public:
    static Presentation make_arn(int r, int N, u32 prime = kDefaultPrime);

    int r() const { return r_; }
    int N() const { return N_; }
    u32 prime() const { return p_; }

    // Verification suites need r < N; r = N is accepted for construction only.
    bool suites_supported() const { return r_ < N_; }

    const std::vector<Arrow>& arrows() const { return arrows_; }
    // Forbidden length-2 paths as (later arrow, earlier arrow) pairs.
    const std::vector<std::pair<int, int>>& forbidden() const { return forbidden_; }

    int path_count() const { return static_cast<int>(paths_.size()); }
    const std::vector<Path>& paths() const { return paths_; }
    const Path& path(int id) const { return paths_[id]; }
    int path_target(int id) const { return (paths_[id].src + paths_[id].len) % N_; }
    // Path id for (src, len), or -1 if that walk is zero in A.
    int path_id(int src, int len) const;
    // Arrow ids of a path in order of application (source side first).
    std::vector<int> path_word(int id) const;
    std::string path_str(int id) const;

    // Ids of the paths from vertex j to vertex i, increasing length;
    // these span e_i A e_j.
    const std::vector<int>& hom_paths(int i, int j) const;
    int hom_dim(int i, int j) const { return static_cast<int>(hom_paths(i, j).size()); }

    int dim() const { return path_count(); }
    // dim Ae_v = number of paths with source v.
    int projective_dim(int v) const;
    // The projective-injective vertices {0, ..., r-1}.
    std::vector<int> projective_injective_vertices() const;

    // --- element arithmetic -------------------------------------------------
    AlgElem zero_elem(int from_v, int to_v) const;
    AlgElem idempotent(int v) const;         // e_v as an element of e_v A e_v
    AlgElem elem_of_path(int path_id) const;  // single path, coefficient 1
    AlgElem scale(const AlgElem& x, u32 c) const;
    AlgElem add(const AlgElem& x, const AlgElem& y) const;
    // Composite of the module maps Ae_i -> Ae_j -> Ae_l for x in e_iAe_j,
    // y in e_jAe_l; concatenations that hit a relation are dropped.
    AlgElem multiply(const AlgElem& x, const AlgElem& y) const;
    bool is_identity(const AlgElem& x) const;

    AlgebraElem unit() const;
    AlgebraElem algebra_multiply(const AlgebraElem& x, const AlgebraElem& y) const;
    // Multiplicative inverse in A via a linear solve; nullopt if singular.
    std::optional<AlgebraElem> algebra_inverse(const AlgebraElem& x) const;
    bool is_central(const AlgebraElem& x) const;

    // Basis of the center of A, computed from the commutation linear system.
    std::vector<AlgebraElem> center_basis() const;

  private:
    int r_ = 1;
    int N_ = 1;
    u32 p_ = kDefaultPrime;
    std::vector<Arrow> arrows_;
    std::vector<std::pair<int, int>> forbidden_;
    std::vector<Path> paths_;
    std::vector<std::vector<int>> path_id_by_src_len_;   // [src][len] -> id or -1
    std::vector<std::vector<std::vector<int>>> hom_paths_;  // [i][j]
};

using PresPtr = std::shared_ptr<const Presentation>;

PresPtr make_arn_shared(int r, int N, u32 prime = kDefaultPrime);

}  // namespace arn
