#pragma once

#include "myc/graph.hpp"
#include "myc/simplicial.hpp"

namespace myc {

/// An aligned symmetric sphere (K, kappa, flag) together with its quotient graph.
struct SphereModel {
    SymmetricComplex complex;
    TwoColouring kappa;
    HemisphereFlag flag;
    Graph graph;                 ///< G(K, kappa)
    std::vector<int> projection; ///< p: V(K) -> V(G)
    MycielskiSpec spec;          ///< provenance: G ≅ build_family(spec)
};

/// Every structural check a model must pass: symmetric, sphere-consistent, flag,
/// proper antisymmetric kappa, stored graph/projection equal to the recomputed
/// quotient, dim(K) = k - 2, and G ≅ build_family(spec).
Report verify_model(const SphereModel& model);

/// Join of K with two apexes z+ (black) and z- (white). Flag gains
/// H_{n+1} = all facets containing z+. Throws ContractError on invalid input.
AlignedSphere suspension_lift(const SymmetricComplex& k, const TwoColouring& kappa,
                              const HemisphereFlag& flag);

/// Symmetric triangulation K' of S^{n+1} with G(K', kappa') ≅ M_r(G(K, kappa)).
///
/// K' is the union of a ball T and its antipodal image, glued along K. T is built
/// upward from K in r-1 sweeps: at step i every vertex of colour c_i is pushed to
/// a fresh copy (v, i) whose star replaces the old one (facets F ∪ {(v,i)} fill the
/// swept region), with c_i alternating so that c_{r-1} is white. T is then coned off
/// by the black apex z+. Only level 0 and the copies (v, i) with colour c_i live
/// in T; their antipodes (nu(v), i) live in nu(T).
///
/// The result is checked before it is returned; any verifier or isomorphism
/// failure throws ContractError with the failing report. r = 1 reproduces
/// suspension_lift exactly.
AlignedSphere general_lift(const SymmetricComplex& k, const TwoColouring& kappa,
                           const HemisphereFlag& flag, int r);

/// Builds the model for spec from circle_complex(rs[0]) by general_lift with
/// rs[1], rs[2], ... Throws ContractError if spec.rs is empty.
SphereModel sphere_model(const MycielskiSpec& spec);

/// Lifts an existing model by one more Mycielski step.
SphereModel lift_model(const SphereModel& model, int r);

} // namespace myc
