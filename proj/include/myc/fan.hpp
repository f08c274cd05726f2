#pragma once

#include "myc/chromatic.hpp"
#include "myc/errors.hpp"
#include "myc/simplicial.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace myc {

/// Antisymmetric labelling lambda: V(K) -> ±{1..k}.
struct Labelling {
    std::vector<int> lambda;
    int k = 0;
    friend bool operator==(const Labelling&, const Labelling&) = default;
};

/// Nonzero labels within ±k and lambda(nu(v)) == -lambda(v).
Report verify_labelling(const SymmetricComplex& complex, const Labelling& lam);

/// mu(v) = (-1)^{|lambda(v)|} lambda(v).
Labelling mu_transform(const Labelling& lam);

/// True when the facet's labels, sorted by magnitude, have strictly increasing
/// magnitudes and signs alternating from `leading` (+1 or -1).
bool is_alternating(const Simplex& facet, const Labelling& lam, int leading = +1);

struct AlternatingCount {
    long long count = 0;
    std::vector<Simplex> facets;
};

/// Facets whose labels read +j0, -j1, +j2, ... with 0 < j0 < j1 < ...
AlternatingCount positive_alternating_count(const SymmetricComplex& complex, const Labelling& lam);
/// Same with the leading sign negative.
AlternatingCount negative_alternating_count(const SymmetricComplex& complex, const Labelling& lam);

/// First edge {u,v} with lambda(u) + lambda(v) == 0. Edges are scanned in colex
/// order (by larger endpoint, then smaller), so on C_n the scan follows the cycle.
std::optional<Edge> find_balanced_edge(const SymmetricComplex& complex, const Labelling& lam);

/// lambda(v) = +c(p(v)) for black v, -c(p(v)) for white v.
/// Throws DomainError if c does not cover the quotient graph.
Labelling labelling_from_colouring(const SymmetricComplex& complex, const TwoColouring& kappa,
                                   const KColouring& c, const std::vector<int>& projection);

/// Witness that a colouring of G(K, kappa) is improper, lifted to K.
struct MonochromeEdgeCert {
    Edge g_edge;        ///< edge of G(K, kappa), sorted
    int colour = 0;     ///< repeated colour
    Edge lifted_edge;   ///< balanced edge of K, sorted
    std::pair<int, int> labels; ///< (lambda(u), lambda(v)) on lifted_edge
};

/// Checks lambda(u) + lambda(v) == 0, p(lifted) == g_edge and the colour equality.
bool self_verify(const MonochromeEdgeCert& cert, const Labelling& lam,
                 const std::vector<int>& projection, const Graph& g, const KColouring& c);

/// Carries the offending input when a balanced edge is missing.
class BalancedEdgeMissing : public TheoremViolation {
public:
    BalancedEdgeMissing(SymmetricComplex complex, HemisphereFlag flag, Labelling lam);
    SymmetricComplex complex;
    HemisphereFlag flag;
    Labelling lambda;
};

/// Finds a monochromatic edge of G(K, kappa) under c through a balanced edge of
/// the labelling lambda built from c.
///
/// Requires verify_symmetric and verify_flag to pass, kappa proper antisymmetric,
/// and c.m <= dim(K) + 1 (ContractError otherwise). If no balanced edge exists it
/// throws BalancedEdgeMissing, which the Fan lemma rules out for valid input.
MonochromeEdgeCert refute_colouring(const SymmetricComplex& complex, const TwoColouring& kappa,
                                    const HemisphereFlag& flag, const KColouring& c);

/// refute_colouring with the input checks and quotient computed once, for
/// refuting many colourings of the same model.
class Refuter {
public:
    Refuter(SymmetricComplex complex, TwoColouring kappa, HemisphereFlag flag);

    MonochromeEdgeCert refute(const KColouring& c) const;
    const Quotient& quotient() const { return quotient_; }
    const SymmetricComplex& complex() const { return complex_; }

private:
    SymmetricComplex complex_;
    TwoColouring kappa_;
    HemisphereFlag flag_;
    Quotient quotient_;
    std::vector<Edge> edges_; // colex order
};

/// Uniform antisymmetric labelling over ±{1..k} (one draw per antipodal pair).
Labelling random_labelling(const SymmetricComplex& complex, int k, std::mt19937_64& rng);

/// Rejection-samples a labelling with no balanced edge. Throws SamplingFailure
/// after max_retries rejected draws.
Labelling sample_balanced_free(const SymmetricComplex& complex, int k, std::mt19937_64& rng,
                               int max_retries = 100'000);

} // namespace myc
