#pragma once

#include "myc/graph.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace myc {

/// Vertex colouring with colours in {1, ..., m}.
struct KColouring {
    std::vector<int> colours;
    int m = 0;
};

/// Edges {u,v} with c(u) == c(v), in canonical edge order. Empty iff c is proper.
/// Throws DomainError if a vertex is uncoloured or out of palette.
std::vector<Edge> verify_colouring(const Graph& g, const KColouring& c);

inline constexpr int kDefaultChiCap = 64;

struct LowerBoundWitness {
    enum class Kind { clique, exhaustion };
    Kind kind = Kind::clique;
    std::vector<int> clique;      ///< clique of size chi when kind == clique
    int refuted_colours = 0;      ///< no proper colouring with this many colours exists
    std::uint64_t nodes = 0;      ///< search nodes spent on the refutation
};

struct ChromaticCertificate {
    enum class Status { exact, inconclusive };
    Status status = Status::exact;
    int chi = 0;      ///< exact value; meaningful only when status == exact
    int lower = 0;    ///< best lower bound found
    int upper = 0;    ///< best upper bound found (colours used by `colouring`)
    KColouring colouring;
    LowerBoundWitness witness;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0;

    bool exact() const { return status == Status::exact; }
};

struct ChiOptions {
    std::chrono::milliseconds budget{60'000};
    int cap = kDefaultChiCap;
};

/// Exact chromatic number via DSATUR branch and bound.
///
/// Starts from a greedy clique bound and a greedy DSATUR colouring, then asks the
/// decision question "is G (upper-1)-colourable?" until it fails. Vertices are
/// picked by (saturation, degree, lowest index); a new colour is only opened as
/// the first unused one. Running out of budget yields status inconclusive with the
/// bounds found so far. Throws SizeError above opts.cap vertices.
ChromaticCertificate chi_exact(const Graph& g, const ChiOptions& opts = {});

/// Decision search only: a proper colouring with at most k colours, or nullopt if
/// none exists. Throws std::runtime_error if the deadline passes.
std::optional<KColouring> find_k_colouring(const Graph& g, int k,
                                           std::chrono::steady_clock::time_point deadline,
                                           std::uint64_t* nodes = nullptr);

} // namespace myc
