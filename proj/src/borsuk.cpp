#include "myc/borsuk.hpp"

#include "myc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace myc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTol = 1e-9;

double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Vec negate(std::span<const double> a)
{
    Vec out(a.begin(), a.end());
    for (double& x : out)
        x = -x;
    return out;
}

bool is_unit(std::span<const double> x) { return std::abs(norm(x) - 1.0) <= kUnitTol; }

int base_r(double target)
{
    int r = 2;
    while (2 * std::sin(kPi / (4.0 * r + 2)) >= target)
        ++r;
    return r;
}

int level_r(double target) { return std::max(2, static_cast<int>(std::floor(2 * kPi / target)) + 1); }

/// Positions of C_{2r+1} (as built by mycielski(K2, r)) around S^1.
std::vector<Vec> embed_cycle(const Graph& g)
{
    const int len = g.order();
    const double step = kPi - kPi / len;
    std::vector<Vec> coords(len);
    int prev = -1, cur = 0;
    for (int j = 0; j < len; ++j) {
        coords[cur] = {std::cos(j * step), std::sin(j * step)};
        auto nb = g.neighbours(cur);
        int next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
    }
    return coords;
}

} // namespace

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

Vec add(std::span<const double> a, std::span<const double> b)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Vec sub(std::span<const double> a, std::span<const double> b)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

double compute_defect(const Graph& g, const std::vector<Vec>& coords)
{
    double worst = 0;
    for (auto [u, v] : g.edges())
        worst = std::max(worst, norm(add(coords[u], coords[v])));
    return worst;
}

MycielskiSpec choose_rs(int n, double delta)
{
    if (n < 1)
        throw DomainError("choose_rs needs n >= 1");
    if (!(delta > 0 && delta < 2))
        throw DomainError("choose_rs needs 0 < delta < 2");
    MycielskiSpec spec;
    spec.rs.push_back(base_r(delta / std::ldexp(1.0, n - 1)));
    for (int level = 1; level < n; ++level)
        spec.rs.push_back(level_r(delta / std::ldexp(1.0, n - 1 - level)));
    return spec;
}

EmbeddedGraph embed_family(const MycielskiSpec& spec)
{
    if (spec.rs.empty())
        throw DomainError("embed_family needs at least one Mycielski step");
    EmbeddedGraph e;
    e.spec = spec;
    e.graph = mycielski(complete(2), spec.rs[0]);
    e.coords = embed_cycle(e.graph);
    e.n = 1;
    for (std::size_t step = 1; step < spec.rs.size(); ++step) {
        const int r = spec.rs[step];
        const int order = e.graph.order();
        std::vector<Vec> next;
        next.reserve(r * order + 1);
        for (int i = 0; i < r; ++i) {
            const double angle = kPi * i / (2.0 * r);
            const double c = std::cos(angle), s = (i % 2 == 0 ? 1 : -1) * std::sin(angle);
            for (int v = 0; v < order; ++v) {
                Vec x = e.coords[v];
                for (double& t : x)
                    t *= c;
                x.push_back(s);
                next.push_back(std::move(x));
            }
        }
        Vec apex(e.n + 2, 0.0);
        apex.back() = r % 2 == 0 ? 1.0 : -1.0;
        next.push_back(std::move(apex));
        e.graph = mycielski(e.graph, r);
        e.coords = std::move(next);
        ++e.n;
    }
    e.defect = compute_defect(e.graph, e.coords);
    return e;
}

Report verify_embedding(const EmbeddedGraph& e, double delta)
{
    Report rep;
    if (static_cast<int>(e.coords.size()) != e.graph.order()) {
        rep.fail("coords", "coordinate count does not match graph order");
        return rep;
    }
    for (int v = 0; v < e.graph.order(); ++v) {
        if (static_cast<int>(e.coords[v].size()) != e.n + 1)
            rep.fail("dimension", "coordinate vector has wrong length", {v});
        else if (!is_unit(e.coords[v]))
            rep.fail("unit-norm", "|f(v)| differs from 1", {v});
    }
    if (!rep.ok())
        return rep;
    if (std::abs(compute_defect(e.graph, e.coords) - e.defect) > 1e-12)
        rep.fail("defect", "stored defect does not match the coordinates");
    const double threshold = std::sqrt(std::max(0.0, 4 - delta * delta));
    for (auto [u, v] : e.graph.edges()) {
        double plus = norm(add(e.coords[u], e.coords[v]));
        double minus = norm(sub(e.coords[u], e.coords[v]));
        if (!(plus < delta)) {
            std::ostringstream os;
            os << "|f(u)+f(v)| = " << plus << " >= " << delta;
            rep.fail("near-antipodal", os.str(), {u, v});
        }
        if (minus < threshold - kUnitTol) {
            std::ostringstream os;
            os << "|f(u)-f(v)| = " << minus << " < " << threshold;
            rep.fail("borsuk-membership", os.str(), {u, v});
        }
    }
    return rep;
}

std::vector<Vec> simplex_vertices(int d)
{
    if (d < 1)
        throw DomainError("simplex_vertices needs d >= 1");
    if (d == 1)
        return {{1.0}, {-1.0}};
    auto lower = simplex_vertices(d - 1);
    const double scale = std::sqrt(1.0 - 1.0 / (double(d) * d));
    std::vector<Vec> out;
    Vec apex(d, 0.0);
    apex.back() = 1.0;
    out.push_back(std::move(apex));
    for (const auto& w : lower) {
        Vec x;
        for (double t : w)
            x.push_back(-scale * t);
        x.push_back(-1.0 / d);
        out.push_back(std::move(x));
    }
    return out;
}

int simplex_colouring(std::span<const double> x)
{
    if (x.empty() || !is_unit(x))
        throw DomainError("simplex_colouring needs a unit vector");
    auto w = simplex_vertices(static_cast<int>(x.size()));
    std::vector<double> score;
    for (const auto& wj : w)
        score.push_back(dot(x, wj));
    double best = *std::max_element(score.begin(), score.end());
    for (std::size_t j = 0; j < score.size(); ++j)
        if (score[j] >= best - 1e-12)
            return static_cast<int>(j) + 1;
    return 1;
}

std::optional<double> Modulus::delta_for(double eps) const
{
    if (lipschitz > 0)
        return eps / lipschitz;
    std::optional<double> best;
    for (const auto& e : table)
        if (e.epsilon <= eps && e.delta > 0 && (!best || e.delta > *best))
            best = e.delta;
    return best;
}

std::string Modulus::describe() const
{
    std::ostringstream os;
    if (lipschitz > 0) {
        os << "delta(eps) = eps / " << lipschitz;
        return os.str();
    }
    os << "table";
    for (const auto& e : table)
        os << " (eps " << e.epsilon << ", delta " << e.delta << ")";
    return os.str();
}

CandidateMap builtin_map(const std::string& name, int n)
{
    if (n < 1)
        throw DomainError("candidate maps need n >= 1");
    auto drop = [n](std::span<const double> x) {
        Vec y(x.begin(), x.begin() + n);
        double len = norm(y);
        if (len == 0) {
            std::fill(y.begin(), y.end(), 0.0);
            y[0] = 1.0;
            return y;
        }
        for (double& t : y)
            t /= len;
        return y;
    };
    if (name == "sign") {
        if (n != 1)
            throw DomainError("the sign map is defined on S^1 only");
        return {"sign", 1, [](std::span<const double> x) { return Vec{x[0] >= 0 ? 1.0 : -1.0}; },
                Modulus{{}, 2.0}};
    }
    if (name == "drop-normalize")
        return {"drop-normalize", n, drop, Modulus{{}, 2.0}};
    throw DomainError("unknown candidate map: " + name);
}

CandidateMap tabulated_map(std::vector<Vec> points, std::vector<Vec> images, Modulus modulus)
{
    if (points.empty() || points.size() != images.size())
        throw DomainError("tabulated map needs matching, nonempty points and images");
    const std::size_t dim = points[0].size();
    if (dim < 2)
        throw DomainError("tabulated map points must live in R^{n+1}, n >= 1");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim || !is_unit(points[i]))
            throw DomainError("tabulated point " + std::to_string(i) + " is not a unit vector in R^" +
                              std::to_string(dim));
        if (images[i].size() != dim - 1 || !is_unit(images[i]))
            throw DomainError("tabulated image " + std::to_string(i) + " is not a unit vector in R^" +
                              std::to_string(dim - 1));
    }
    const int n = static_cast<int>(dim) - 1;
    auto eval = [points = std::move(points), images = std::move(images)](std::span<const double> x) {
        std::size_t best = 0;
        double score = dot(points[0], x);
        for (std::size_t i = 1; i < points.size(); ++i) {
            double s = dot(points[i], x);
            if (s > score + 1e-12) {
                score = s;
                best = i;
            }
        }
        return images[best];
    };
    return {"tabulated", n, std::move(eval), std::move(modulus)};
}

std::string to_string(ProbeReport::Tag tag)
{
    switch (tag) {
    case ProbeReport::Tag::antipodality:
        return "antipodality";
    case ProbeReport::Tag::continuity:
        return "continuity";
    case ProbeReport::Tag::cell_diameter:
        return "cell-diameter";
    }
    return "?";
}

ProbeReport probe_map(const CandidateMap& m, int n)
{
    if (n < 1)
        throw ContractError("probe_map needs n >= 1");
    if (m.n != n)
        throw ContractError("candidate map is declared on S^" + std::to_string(m.n) + ", not S^" +
                            std::to_string(n));
    ProbeReport rep;
    rep.map_name = m.name;
    rep.modulus = m.modulus.describe();
    rep.epsilon = 1.0 / std::sqrt(n + 2.0);
    auto delta = m.modulus.delta_for(2 * rep.epsilon);
    if (!delta || !(*delta > 0))
        throw ContractError("declared modulus gives no delta for epsilon " + std::to_string(2 * rep.epsilon));
    rep.delta = std::min(*delta, 2.0 - 1e-9);
    rep.spec = choose_rs(n, rep.delta);
    EmbeddedGraph e = embed_family(rep.spec);
    if (auto check = verify_embedding(e, rep.delta); !check.ok())
        throw TheoremViolation("THEOREM-VIOLATION: embedding misses its target: " + check.summary());

    auto image = [&](const Vec& x) {
        Vec y = m.eval(x);
        if (static_cast<int>(y.size()) != n || !is_unit(y))
            throw DomainError("candidate map returned a non-unit vector");
        return y;
    };
    std::vector<Vec> values;
    std::vector<int> colour;
    for (const auto& x : e.coords) {
        values.push_back(image(x));
        colour.push_back(simplex_colouring(values.back()));
    }

    auto mono = std::find_if(e.graph.edges().begin(), e.graph.edges().end(),
                             [&](const Edge& ed) { return colour[ed.first] == colour[ed.second]; });
    if (mono == e.graph.edges().end())
        throw TheoremViolation("THEOREM-VIOLATION: " + std::to_string(n + 1) + "-colouring of a member of M_" +
                               std::to_string(n + 2) + " is proper");

    auto [u, v] = *mono;
    rep.witness = {u, v};
    rep.colour = colour[u];
    rep.gu = e.coords[u];
    rep.gv = e.coords[v];
    rep.fu = values[u];
    rep.fv = values[v];
    rep.plus_norm = norm(add(rep.fu, rep.fv));
    rep.minus_norm = norm(sub(rep.fu, rep.fv));

    // Antipodality at the witness endpoints.
    double skew = std::max(norm(add(image(negate(rep.gu)), rep.fu)), norm(add(image(negate(rep.gv)), rep.fv)));
    if (skew > kUnitTol) {
        rep.tag = ProbeReport::Tag::antipodality;
        rep.margin = skew;
        return rep;
    }
    // g(u) and -g(v) are within delta; the modulus promises their images within 2 eps.
    double jump = norm(sub(rep.fu, image(negate(rep.gv))));
    if (jump >= 2 * rep.epsilon) {
        rep.tag = ProbeReport::Tag::continuity;
        rep.margin = jump - 2 * rep.epsilon;
        return rep;
    }
    // Otherwise the two same-coloured images are farther apart than a colour cell allows.
    rep.tag = ProbeReport::Tag::cell_diameter;
    rep.margin = rep.minus_norm - 2 * std::sqrt(1 - rep.epsilon * rep.epsilon);
    return rep;
}

} // namespace myc
