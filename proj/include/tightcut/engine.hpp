#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightcut/altpath.hpp"
#include "tightcut/decomposition.hpp"
#include "tightcut/graph.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/towers.hpp"

namespace tightcut {

// Result of fattening a cut of a brick. When the input matching is not
// already fat the circuit documents the switch: output = input ^ E(circuit),
// and the circuit alternates with respect to the input matching.
struct CutWitness {
    VertexSet shore;
    Matching input;
    std::optional<Circuit> circuit;
    Matching output;
    std::vector<std::string> trace;
};

// Produces a perfect matching with at least two edges across the shore.
// Requires a brick and 1 < |shore| < n - 1; the matching, when given, must
// be perfect, and defaults to the deterministic solver.
CutWitness fat_witness(const Graph& g, const VertexSet& shore);
CutWitness fat_witness(const Graph& g, const VertexSet& shore, const Matching& m);

// The two main construction branches, exposed for direct testing. Inputs
// describe the reduction of the host brick by its single matched crossing
// edge uv: g = host - u - v, s = shore side minus u (separating in g),
// m = the surviving matching, d = the decomposition of g. Both return an
// alternating circuit of the host whose switch fattens the cut and append
// the fired case label to trace.

// Some minimal component lies beyond s while a border lies inside s.
Circuit case_mixed(const Graph& host, const Matching& host_m, const Graph& g, const VertexSet& s,
                   int u, int v, const Matching& m, const CanonicalDecomposition& d,
                   std::vector<std::string>& trace);

// Every minimal component lies inside s.
Circuit case_contained(const Graph& host, const Matching& host_m, const Graph& g,
                       const VertexSet& s, int u, int v, const Matching& m,
                       const CanonicalDecomposition& d, std::vector<std::string>& trace);

// Union of the vertex sets of the largest lower ideal of the component
// order whose members all sit inside s. Requires every minimal component
// inside s; the result is then non-empty and separating.
VertexSet compute_s0(const CanonicalDecomposition& d, const VertexSet& s);

// Ear relative to s0 whose vertex set meets the minimal component h of the
// piece decomposition dc (one connected component of d.graph() - s0),
// obtained through an immediate lower bound in the host order and split at
// s0. g and m are the host of dc's piece, i.e. d.graph() and its matching.
Ear ear_for_min_component(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                          const VertexSet& s0, const CanonicalDecomposition& dc, int h);

// Balanced path from y (inside the tower of h in the piece decomposition
// dc) to an end of the ear p_h, every vertex but that end inside the piece.
AltPath balanced_to_ear_end(const Graph& g, const Matching& m, const CanonicalDecomposition& dc,
                            int h, int y, const Ear& p_h);

}  // namespace tightcut
