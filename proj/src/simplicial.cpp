#include "myc/simplicial.hpp"

#include "myc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace myc {

namespace {

std::string show(const Simplex& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::vector<Simplex> canonical(std::vector<Simplex> facets)
{
    for (auto& f : facets)
        std::sort(f.begin(), f.end());
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return facets;
}

bool contains(const Simplex& big, const Simplex& small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool face_of_any(const std::vector<Simplex>& facets, const Simplex& s)
{
    return std::any_of(facets.begin(), facets.end(), [&](const Simplex& f) { return contains(f, s); });
}

std::vector<Simplex> image_all(const SymmetricComplex& k, const std::vector<Simplex>& facets)
{
    std::vector<Simplex> out;
    out.reserve(facets.size());
    for (const auto& f : facets)
        out.push_back(k.image(f));
    return canonical(std::move(out));
}

/// Maximal elements of a downward-closed face set.
std::vector<Simplex> maximal(const std::set<Simplex>& faces)
{
    std::set<Simplex> covered;
    for (const auto& f : faces) {
        if (f.size() < 2)
            continue;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Simplex sub = f;
            sub.erase(sub.begin() + static_cast<long>(i));
            covered.insert(sub);
        }
    }
    std::vector<Simplex> out;
    for (const auto& f : faces)
        if (!covered.count(f))
            out.push_back(f);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

Simplex SymmetricComplex::image(const Simplex& s) const
{
    Simplex out;
    out.reserve(s.size());
    for (int v : s)
        out.push_back(nu.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

void SymmetricComplex::canonicalize()
{
    facets = canonical(std::move(facets));
}

void Report::fail(std::string check, std::string detail, Simplex witness)
{
    violations.push_back({std::move(check), std::move(detail), std::move(witness)});
}

void Report::merge(const Report& other)
{
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

bool Report::has(const std::string& check) const
{
    for (const auto& v : violations)
        if (v.check == check)
            return true;
    return false;
}

std::string Report::summary() const
{
    if (ok())
        return "ok";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.check << ": " << v.detail;
        if (!v.witness.empty())
            os << " " << show(v.witness);
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Shipped complexes

CrossPolytope cross_polytope(int n)
{
    if (n < 1)
        throw ContractError("cross_polytope needs n >= 1");
    const int axes = n + 1;
    CrossPolytope out;
    auto& k = out.complex;
    k.dim = n;
    for (int j = 1; j <= axes; ++j) {
        k.names.push_back("+e" + std::to_string(j));
        k.names.push_back("-e" + std::to_string(j));
    }
    k.nu.resize(2 * axes);
    for (int v = 0; v < 2 * axes; ++v)
        k.nu[v] = v ^ 1;

    // Facets: one of ±e_j per axis. Cells of the flag: sign choices on the
    // first d axes, then +e_{d+1}.
    auto signed_choices = [](int count, int extra) {
        std::vector<Simplex> out;
        for (int mask = 0; mask < (1 << count); ++mask) {
            Simplex s;
            for (int j = 0; j < count; ++j)
                s.push_back(2 * j + ((mask >> j) & 1));
            if (extra >= 0)
                s.push_back(extra);
            out.push_back(s);
        }
        return canonical(std::move(out));
    };
    k.facets = signed_choices(axes, -1);
    for (int d = 0; d <= n; ++d)
        out.flag.H.push_back(signed_choices(d, 2 * d));
    return out;
}

AlignedSphere circle_complex(int r)
{
    if (r < 1)
        throw ContractError("circle_complex needs r >= 1");
    const int len = 4 * r + 2;
    AlignedSphere out;
    auto& k = out.complex;
    k.dim = 1;
    for (int i = 0; i < len; ++i) {
        k.names.push_back("v" + std::to_string(i));
        k.nu.push_back((i + 2 * r + 1) % len);
        k.facets.push_back({i, (i + 1) % len});
        out.kappa.kappa.push_back(i % 2 == 0 ? Colour::black : Colour::white);
    }
    k.canonicalize();
    out.flag.H.push_back({{0}});
    std::vector<Simplex> arc;
    for (int i = 0; i <= 2 * r; ++i)
        arc.push_back({i, i + 1});
    out.flag.H.push_back(canonical(std::move(arc)));
    return out;
}

// ---------------------------------------------------------------------------
// Face utilities

std::vector<Simplex> all_faces(const std::vector<Simplex>& facets)
{
    std::set<Simplex> faces;
    for (const auto& f : facets) {
        const int m = static_cast<int>(f.size());
        for (long mask = 1; mask < (1L << m); ++mask) {
            Simplex s;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1)
                    s.push_back(f[i]);
            faces.insert(std::move(s));
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<Simplex> faces_of_dim(const std::vector<Simplex>& facets, int d)
{
    std::set<Simplex> out;
    const int size = d + 1;
    for (const auto& f : facets) {
        const int m = static_cast<int>(f.size());
        if (m < size)
            continue;
        // Combinations of `size` positions out of m.
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Simplex s;
            for (int i : idx)
                s.push_back(f[i]);
            out.insert(std::move(s));
            int i = size - 1;
            while (i >= 0 && idx[i] == m - size + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Simplex> boundary(const std::vector<Simplex>& facets)
{
    std::map<Simplex, int> count;
    for (const auto& f : facets) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            Simplex ridge = f;
            ridge.erase(ridge.begin() + static_cast<long>(i));
            if (!ridge.empty())
                ++count[ridge];
        }
    }
    std::vector<Simplex> out;
    for (const auto& [ridge, c] : count)
        if (c == 1)
            out.push_back(ridge);
    return out;
}

std::vector<Edge> skeleton_edges(const SymmetricComplex& k)
{
    std::vector<Edge> edges;
    for (const auto& s : faces_of_dim(k.facets, 1))
        edges.emplace_back(s[0], s[1]);
    return edges;
}

std::vector<long long> f_vector(const SymmetricComplex& k)
{
    std::vector<long long> f(k.dim + 1, 0);
    for (const auto& s : all_faces(k.facets)) {
        int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(f.size()))
            f.resize(d + 1, 0);
        ++f[d];
    }
    return f;
}

// ---------------------------------------------------------------------------
// Verifiers

Report verify_symmetric(const SymmetricComplex& k)
{
    Report rep;
    const int n = k.vertex_count();
    if (!k.names.empty() && static_cast<int>(k.names.size()) != n)
        rep.fail("names", "name count does not match vertex count");
    if (!k.names.empty()) {
        std::set<std::string> seen(k.names.begin(), k.names.end());
        if (static_cast<int>(seen.size()) != static_cast<int>(k.names.size()))
            rep.fail("names", "vertex names are not unique");
    }
    bool nu_ok = true;
    for (int v = 0; v < n; ++v) {
        int w = k.nu[v];
        if (w < 0 || w >= n) {
            rep.fail("involution", "nu maps outside the vertex set", {v});
            nu_ok = false;
        } else if (w == v) {
            rep.fail("free", "nu fixes a vertex", {v});
            nu_ok = false;
        } else if (k.nu[w] != v) {
            rep.fail("involution", "nu(nu(v)) != v", {v});
            nu_ok = false;
        }
    }
    std::set<Simplex> facet_set;
    for (const auto& f : k.facets) {
        bool in_range = std::all_of(f.begin(), f.end(), [&](int v) { return v >= 0 && v < n; });
        if (!in_range) {
            rep.fail("vertex-range", "facet uses an unknown vertex", f);
            nu_ok = false;
            continue;
        }
        if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
            rep.fail("canonical", "facet not sorted or has a repeated vertex", f);
        facet_set.insert(f);
    }
    if (!nu_ok)
        return rep;
    for (const auto& f : k.facets) {
        for (int v : f) {
            if (std::binary_search(f.begin(), f.end(), k.nu[v]) && v < k.nu[v]) {
                rep.fail("antipodal-pair-free", "simplex contains a vertex and its antipode", f);
                break;
            }
        }
        Simplex img = k.image(f);
        if (!facet_set.count(img) && !face_of_any(k.facets, img))
            rep.fail("closure-under-nu", "antipode of facet is not in the complex", f);
    }
    return rep;
}

Report verify_sphere_necessary(const SymmetricComplex& k)
{
    Report rep;
    if (k.facets.empty()) {
        rep.fail("nonempty", "complex has no facets");
        return rep;
    }
    for (const auto& f : k.facets)
        if (static_cast<int>(f.size()) != k.dim + 1)
            rep.fail("purity", "facet has wrong dimension", f);

    std::map<Simplex, std::vector<int>> ridge_facets;
    for (int i = 0; i < static_cast<int>(k.facets.size()); ++i) {
        const auto& f = k.facets[i];
        for (std::size_t j = 0; j < f.size(); ++j) {
            Simplex ridge = f;
            ridge.erase(ridge.begin() + static_cast<long>(j));
            ridge_facets[ridge].push_back(i);
        }
    }
    for (const auto& [ridge, fs] : ridge_facets)
        if (fs.size() != 2)
            rep.fail("ridge-degree-2",
                     "ridge lies in " + std::to_string(fs.size()) + " facets", ridge);

    // Facet adjacency through shared ridges.
    const int m = static_cast<int>(k.facets.size());
    std::vector<std::vector<int>> adj(m);
    for (const auto& [ridge, fs] : ridge_facets)
        for (std::size_t a = 0; a < fs.size(); ++a)
            for (std::size_t b = a + 1; b < fs.size(); ++b) {
                adj[fs[a]].push_back(fs[b]);
                adj[fs[b]].push_back(fs[a]);
            }
    std::vector<char> seen(m, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                q.push(y);
            }
    }
    if (reached != m) {
        int lost = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
        rep.fail("connected", "facet adjacency graph is disconnected", k.facets[lost]);
    }

    auto f = f_vector(k);
    long long chi = 0;
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * f[d];
    rep.euler = chi;
    long long expected = 1 + (k.dim % 2 == 0 ? 1 : -1);
    if (chi != expected)
        rep.fail("euler", "Euler characteristic " + std::to_string(chi) + ", expected " +
                              std::to_string(expected));
    return rep;
}

Report verify_flag(const SymmetricComplex& k, const HemisphereFlag& flag)
{
    Report rep;
    if (static_cast<int>(flag.H.size()) != k.dim + 1) {
        rep.fail("flag-length", "flag has " + std::to_string(flag.H.size()) + " levels, expected " +
                                    std::to_string(k.dim + 1));
        return rep;
    }
    const int n = k.vertex_count();
    for (const auto& level : flag.H)
        for (const auto& f : level)
            for (int v : f)
                if (v < 0 || v >= n) {
                    rep.fail("vertex-range", "flag uses an unknown vertex", f);
                    return rep;
                }

    if (flag.H[0].size() != 1 || flag.H[0][0].size() != 1)
        rep.fail("H0-point", "H_0 must be a single vertex");

    std::vector<std::vector<Simplex>> H;
    for (const auto& level : flag.H)
        H.push_back(canonical(level));

    for (int d = 0; d <= k.dim; ++d) {
        const std::string tag = "H_" + std::to_string(d);
        for (const auto& f : H[d]) {
            if (static_cast<int>(f.size()) != d + 1)
                rep.fail("pure", tag + " facet has wrong dimension", f);
            if (!face_of_any(k.facets, f))
                rep.fail("skeleton", tag + " cell is not a face of K", f);
        }
        if (d >= 1) {
            for (const auto& f : H[d - 1])
                if (!face_of_any(H[d], f))
                    rep.fail("chain", "H_" + std::to_string(d - 1) + " not contained in " + tag, f);

            // Manifold-with-boundary: no ridge in more than two cells.
            std::map<Simplex, int> count;
            for (const auto& f : H[d])
                for (std::size_t j = 0; j < f.size(); ++j) {
                    Simplex ridge = f;
                    ridge.erase(ridge.begin() + static_cast<long>(j));
                    ++count[ridge];
                }
            for (const auto& [ridge, c] : count)
                if (c > 2)
                    rep.fail("ridge-degree", tag + " ridge in more than two cells", ridge);

            auto bd = boundary(H[d]);
            auto expected = H[d - 1];
            auto mirrored = image_all(k, H[d - 1]);
            expected.insert(expected.end(), mirrored.begin(), mirrored.end());
            expected = canonical(std::move(expected));
            if (bd != expected)
                rep.fail("boundary-identity",
                         "boundary of " + tag + " differs from H_" + std::to_string(d - 1) +
                             " ∪ -H_" + std::to_string(d - 1));

            auto own = all_faces(H[d]);
            auto other = all_faces(image_all(k, H[d]));
            std::set<Simplex> common;
            std::set_intersection(own.begin(), own.end(), other.begin(), other.end(),
                                  std::inserter(common, common.end()));
            if (maximal(common) != bd)
                rep.fail("intersection", tag + " ∩ -" + tag + " differs from its boundary");
        } else {
            auto mirrored = image_all(k, H[0]);
            if (!H[0].empty() && mirrored == H[0])
                rep.fail("H0-point", "H_0 coincides with its antipode");
        }
    }

    auto cover = H[k.dim];
    auto mirrored = image_all(k, H[k.dim]);
    cover.insert(cover.end(), mirrored.begin(), mirrored.end());
    if (canonical(std::move(cover)) != canonical(k.facets))
        rep.fail("cover", "H_n ∪ -H_n differs from K");
    return rep;
}

Report verify_two_colouring(const SymmetricComplex& k, const TwoColouring& kappa)
{
    Report rep;
    if (static_cast<int>(kappa.kappa.size()) != k.vertex_count()) {
        rep.fail("kappa-size", "colouring does not cover every vertex");
        return rep;
    }
    for (int v = 0; v < k.vertex_count(); ++v)
        if (v < k.nu[v] && kappa.kappa[v] == kappa.kappa[k.nu[v]])
            rep.fail("antisymmetric", "antipodal vertices share a colour", {v, k.nu[v]});
    for (const auto& f : k.facets) {
        bool mono = std::all_of(f.begin(), f.end(),
                                [&](int v) { return kappa.kappa[v] == kappa.kappa[f[0]]; });
        if (mono)
            rep.fail("proper", "monochromatic facet", f);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quotient

Graph bichromatic_skeleton(const SymmetricComplex& k, const TwoColouring& kappa)
{
    std::vector<Edge> edges;
    for (auto [u, v] : skeleton_edges(k))
        if (kappa.kappa.at(u) != kappa.kappa.at(v))
            edges.emplace_back(u, v);
    std::vector<VertexName> names;
    for (int v = 0; v < k.vertex_count(); ++v)
        names.push_back(VertexName::base(std::to_string(v)));
    return Graph(k.vertex_count(), std::move(edges), std::move(names));
}

Quotient quotient_graph(const SymmetricComplex& k, const TwoColouring& kappa)
{
    if (auto rep = verify_symmetric(k); !rep.ok())
        throw ContractError("quotient_graph: complex is not symmetric: " + rep.summary());
    if (auto rep = verify_two_colouring(k, kappa); !rep.ok())
        throw ContractError("quotient_graph: kappa is not proper antisymmetric: " + rep.summary());

    const int n = k.vertex_count();
    Quotient q;
    q.projection.assign(n, -1);
    std::vector<int> black_rep;
    for (int v = 0; v < n; ++v) {
        if (q.projection[v] != -1)
            continue;
        int id = static_cast<int>(black_rep.size());
        q.projection[v] = id;
        q.projection[k.nu[v]] = id;
        black_rep.push_back(kappa.kappa[v] == Colour::black ? v : k.nu[v]);
    }

    std::set<Edge> edges;
    for (auto [u, v] : skeleton_edges(k)) {
        if (kappa.kappa[u] == kappa.kappa[v])
            continue;
        int a = q.projection[u], b = q.projection[v];
        edges.emplace(std::min(a, b), std::max(a, b));
    }

    std::vector<VertexName> names;
    for (int id = 0; id < static_cast<int>(black_rep.size()); ++id) {
        const int v = black_rep[id];
        try {
            names.push_back(k.names.empty() ? VertexName::base("q" + std::to_string(id))
                                            : VertexName::parse(k.names[v]));
        } catch (const DomainError&) {
            names.push_back(VertexName::base("q" + std::to_string(id)));
        }
    }
    q.graph = Graph(static_cast<int>(black_rep.size()), {edges.begin(), edges.end()},
                    std::move(names));
    return q;
}

} // namespace myc
