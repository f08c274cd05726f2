#pragma once

#include "myc/graph.hpp"
#include "myc/report.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace myc {

using Vec = std::vector<double>;

double norm(std::span<const double> x);
Vec add(std::span<const double> a, std::span<const double> b);
Vec sub(std::span<const double> a, std::span<const double> b);

/// Graph with a map V(G) -> S^n. defect = max over edges of ||f(u) + f(v)||.
struct EmbeddedGraph {
    Graph graph;
    std::vector<Vec> coords; ///< unit vectors in R^{n+1}
    double defect = 0;
    int n = 0;               ///< sphere dimension
    MycielskiSpec spec;
};

double compute_defect(const Graph& g, const std::vector<Vec>& coords);

/// Per-level Mycielski parameters for a member of M_{n+2} embedded in S^n with
/// every edge satisfying ||f(u) + f(v)|| < delta.
///
/// The last level targets delta, each level below it half the target of the level
/// above. A level with target t uses r = max(2, floor(2*pi/t) + 1), so that the
/// step angle pi/2r stays below t/4. The base cycle C_{2r+1} uses the least r >= 2
/// with 2 sin(pi/(4r+2)) below its target. Throws DomainError unless n >= 1 and
/// 0 < delta < 2.
MycielskiSpec choose_rs(int n, double delta);

/// Embeds build_family(spec) into S^n with n = len(spec). The base odd cycle goes
/// around S^1 in steps of pi - pi/(2r+1); each later step places (v, i) at (f(v) cos(pi i/2r), (-1)^i sin(pi i/2r)) and
/// the apex at (0, ..., 0, (-1)^r). Throws DomainError if spec is empty.
EmbeddedGraph embed_family(const MycielskiSpec& spec);

/// Unit norms, stored defect, ||f(u)+f(v)|| < delta on every edge and the
/// Borsuk-graph form ||f(u)-f(v)|| >= sqrt(4 - delta^2) (1e-9 slack).
Report verify_embedding(const EmbeddedGraph& e, double delta);

/// Vertices of a regular simplex with d+1 vertices inscribed in S^{d-1} ⊂ R^d.
/// The first vertex is e_d; the rest have last coordinate -1/d and a negated,
/// rescaled (d-1)-dimensional simplex in front. For d = 2 the vertices sit at
/// 90, 210 and 330 degrees.
std::vector<Vec> simplex_vertices(int d);

/// Colour in {1, ..., d+1} of a unit vector x in R^d: argmax_j <x, w_j>, ties
/// (within 1e-12) to the lowest index. Throws DomainError if |x| != 1.
int simplex_colouring(std::span<const double> x);

/// ||x - y|| < delta(eps) implies ||m(x) - m(y)|| < eps, as declared by the
/// map's author. An empty optional means the declaration does not cover eps.
struct Modulus {
    struct Entry {
        double epsilon;
        double delta;
    };
    std::vector<Entry> table;     ///< declared pairs; used when lipschitz == 0
    double lipschitz = 0;         ///< declares delta(eps) = eps / lipschitz
    std::optional<double> delta_for(double eps) const;
    std::string describe() const;
};

/// A candidate antipodal map S^n -> S^{n-1}.
struct CandidateMap {
    std::string name;
    int n = 1; ///< domain sphere dimension
    std::function<Vec(std::span<const double>)> eval;
    Modulus modulus;
};

/// Built-ins: "sign" (S^1 -> S^0, +1 at ties) and "drop-normalize" (drops the
/// last coordinate and rescales; poles go to e_1). Throws DomainError for
/// unknown names.
CandidateMap builtin_map(const std::string& name, int n);

/// Nearest-point evaluation of a table of samples. Throws DomainError unless
/// points are unit vectors in R^{n+1} and images unit vectors in R^n.
CandidateMap tabulated_map(std::vector<Vec> points, std::vector<Vec> images, Modulus modulus);

struct ProbeReport {
    enum class Tag { antipodality, continuity, cell_diameter };
    Edge witness;
    Vec gu, gv;        ///< embedding of the witness endpoints in S^n
    Vec fu, fv;        ///< map values m(g(u)), m(g(v)) in S^{n-1}
    double plus_norm = 0;  ///< ||m(g(u)) + m(g(v))||
    double minus_norm = 0; ///< ||m(g(u)) - m(g(v))||
    int colour = 0;
    Tag tag = Tag::continuity;
    double margin = 0; ///< amount by which the tagged inequality fails
    double epsilon = 0;
    double delta = 0;
    MycielskiSpec spec;
    std::string map_name;
    std::string modulus;
};

std::string to_string(ProbeReport::Tag tag);

/// Runs the Borsuk-Ulam refutation against m: builds a member of M_{n+2} embedded
/// with defect below delta(2/sqrt(n+2)), colours it through m and the regular
/// simplex, and reports which inequality breaks on a monochromatic edge. The
/// verdict holds relative to the declared modulus. Throws ContractError if the
/// modulus does not cover 2/sqrt(n+2), TheoremViolation if no monochromatic edge
/// exists.
ProbeReport probe_map(const CandidateMap& m, int n);

} // namespace myc
