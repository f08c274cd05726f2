#pragma once

#include "myc/graph.hpp"
#include "myc/report.hpp"

#include <string>
#include <vector>

namespace myc {

/// Abstract simplicial complex, given by its facets, with a free involution nu.
/// Faces are derived from facets on demand. Facets are kept sorted (each facet
/// ascending, the list lexicographic) so that equal complexes compare equal.
struct SymmetricComplex {
    int dim = 0;
    std::vector<std::string> names;
    std::vector<int> nu;
    std::vector<Simplex> facets;

    int vertex_count() const { return static_cast<int>(nu.size()); }
    Simplex image(const Simplex& s) const; ///< nu(s), sorted

    /// Sorts every facet and the facet list, drops duplicates.
    void canonicalize();
    friend bool operator==(const SymmetricComplex&, const SymmetricComplex&) = default;
};

/// H_0 ⊂ ... ⊂ H_n, each subcomplex given by its facets (sorted, canonical).
struct HemisphereFlag {
    std::vector<std::vector<Simplex>> H;
    friend bool operator==(const HemisphereFlag&, const HemisphereFlag&) = default;
};

enum class Colour : unsigned char { black = 0, white = 1 };

inline Colour opposite(Colour c) { return c == Colour::black ? Colour::white : Colour::black; }

struct TwoColouring {
    std::vector<Colour> kappa;
    friend bool operator==(const TwoColouring&, const TwoColouring&) = default;
};

// ---------------------------------------------------------------------------
// Shipped complexes

/// Boundary of the (n+1)-dimensional cross-polytope with the standard flag.
/// Vertex 2j is +e_{j+1}, vertex 2j+1 is -e_{j+1}.
struct CrossPolytope {
    SymmetricComplex complex;
    HemisphereFlag flag;
};
CrossPolytope cross_polytope(int n);

/// A symmetric sphere with a proper antisymmetric 2-colouring and a hemisphere flag.
struct AlignedSphere {
    SymmetricComplex complex;
    TwoColouring kappa;
    HemisphereFlag flag;
};
/// C_{4r+2} as a symmetric triangulation of S^1, nu(v_i) = v_{i+2r+1}, colours
/// alternating, H_0 = {v_0}, H_1 = the path v_0 ... v_{2r+1}.
AlignedSphere circle_complex(int r);

// ---------------------------------------------------------------------------
// Face utilities

/// All faces (nonempty) of the given facets, sorted and deduplicated.
std::vector<Simplex> all_faces(const std::vector<Simplex>& facets);
/// Faces of exactly the given dimension.
std::vector<Simplex> faces_of_dim(const std::vector<Simplex>& facets, int d);
/// Ridges contained in exactly one facet.
std::vector<Simplex> boundary(const std::vector<Simplex>& facets);
/// 1-skeleton edges in canonical (lexicographic) order.
std::vector<Edge> skeleton_edges(const SymmetricComplex& k);
/// f-vector f_0, ..., f_dim.
std::vector<long long> f_vector(const SymmetricComplex& k);

// ---------------------------------------------------------------------------
// Verifiers

Report verify_symmetric(const SymmetricComplex& k);
/// Purity, ridges in exactly two facets, connected dual graph, Euler characteristic
/// 1 + (-1)^n. Passing means "consistent with S^n", not a homeomorphism proof.
Report verify_sphere_necessary(const SymmetricComplex& k);
Report verify_flag(const SymmetricComplex& k, const HemisphereFlag& flag);
/// Antisymmetric and no monochromatic facet.
Report verify_two_colouring(const SymmetricComplex& k, const TwoColouring& kappa);

// ---------------------------------------------------------------------------
// Quotient graph

struct Quotient {
    Graph graph;                ///< G(K, kappa)
    std::vector<int> projection; ///< p: V(K) -> V(G), exactly two preimages per vertex
};

/// The 1-skeleton with monochromatic edges deleted.
Graph bichromatic_skeleton(const SymmetricComplex& k, const TwoColouring& kappa);

/// G(K, kappa) = bichromatic skeleton / nu. Quotient vertices are ordered by their
/// smallest preimage; each takes the name of its black preimage.
/// Throws ContractError (naming the witness) if K is not symmetric or kappa is
/// not a proper antisymmetric 2-colouring.
Quotient quotient_graph(const SymmetricComplex& k, const TwoColouring& kappa);

} // namespace myc
