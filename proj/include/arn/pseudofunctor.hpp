// Scalar models of pseudo-identities: a nonzero scalar per generator
// morphism of a window, the relations such scalars must satisfy (forced by
// composition, by morphisms inside a single shifted copy of the projectives,
// and by exactness of the projection triangles), trivialization by
// per-object scalars, and the telescoping constructions for connecting
// isomorphisms and the radical-coefficient adjustment.
#pragma once

#include "arn/verify.hpp"

namespace arn {

struct ScalarSystem {
    // Printed MorphId -> nonzero scalar; must cover enumerate_spanning(window).
    std::map<std::string, u32> scalars;
    // Optional per-degree connecting scalars (scalar parts of the connecting
    // center elements); absent degrees mean 1.
    std::map<int, u32> connecting;
};

// Relations among generator scalars over one window, extracted once and
// reusable across many systems. Each relation asserts
//   prod scalars(edge)^exp * prod connecting(degree)^exp = 1.
class SpanGraph {
  public:
    SpanGraph(PresPtr A, Interval window);

    struct Edge {
        MorphId id;
        int from = -1, to = -1;  // object indices in ctx()
        bool nonzero = false;    // class nonzero in the homotopy category
    };
    struct Relation {
        std::vector<std::pair<int, int>> edge_factors;  // (edge index, exponent)
        std::vector<std::pair<int, int>> conn_factors;  // (degree, exponent)
        std::string origin;
    };

    const WindowContext& ctx() const { return *ctx_; }
    const PresPtr& pres() const { return ctx_->pres(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int edge_index(const MorphId& id) const;
    std::string edge_name(int e) const { return print_morph_id(edges_[e].id, *pres()); }

  private:
    std::shared_ptr<WindowContext> ctx_;
    std::vector<Edge> edges_;
    std::vector<Relation> relations_;
    std::map<MorphId, int> index_;

    void explore_compositions();
    void add_stalk_relations();
    void add_triangle_relations();
};

struct ConsistencyReport {
    bool consistent = true;
    std::string violated;  // description of the first violated relation
};

// Validates totality and nonzero-ness, then evaluates every relation.
ConsistencyReport check_consistency(const ScalarSystem& sys, const SpanGraph& graph);

struct Trivialization {
    bool ok = false;
    std::map<std::string, u32> object_scalars;  // printed CatalogId -> adjusting scalar
    std::map<std::string, u32> delta_coeffs;    // optional radical coefficients (r = 1)
    std::vector<std::string> violated_cycle;    // tree path + edge on failure
};

// Spanning-tree propagation of per-object scalars; every nonzero-class edge
// must conjugate to 1, otherwise the violated cycle is returned.
Trivialization trivialize(const ScalarSystem& sys, const SpanGraph& graph);

// Multiplies a coboundary system out of per-object scalars (stalk objects
// pinned to 1, as a normalized pseudo-identity fixes stalk complexes).
ScalarSystem coboundary_system(const SpanGraph& graph,
                               const std::map<std::string, u32>& object_scalars);
// Random coboundary data and single-edge perturbations for round-trip tests.
std::map<std::string, u32> random_object_scalars(const SpanGraph& graph, u64 seed);
ScalarSystem perturb_one_edge(const ScalarSystem& sys, const SpanGraph& graph, u64 seed);

// Telescoped sequence a_n with a_0 = 1 and lambda_n = a_n^{-1} a_{n+1},
// in the center of A; throws on non-invertible input.
std::map<int, AlgebraElem> normalize_connecting(const std::map<int, AlgebraElem>& lambda,
                                                const Presentation& A);

struct EtaReport {
    bool ok = false;
    std::map<std::string, u32> phi;  // chosen coefficients per X object
    std::string witness;             // failing object, if any
};

// Radical-coefficient telescoping for r = 1: given b(X) per window X-object,
// choose phi with phi(X) - phi(shift X) = b(X) along each orbit segment
// (anchored at the segment's minimal element) and verify that
// eta = 1 + phi * delta intertwines omega = Sigma(1 + b * delta) with the
// identity connecting isomorphism.
EtaReport prop_a2_eta(const std::map<std::string, u32>& b, const WindowContext& ctx);
// The verification half alone, for negative controls.
EtaReport verify_eta(const std::map<std::string, u32>& b, const std::map<std::string, u32>& phi,
                     const WindowContext& ctx);

}  // namespace arn
