#include "myc/graph.hpp"

#include "myc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace myc {

// ---------------------------------------------------------------------------
// VertexName

namespace {

bool looks_like_apex(const std::string& s)
{
    if (s.empty() || s[0] != 'z')
        return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int parse_int(const std::string& s)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw DomainError("not an integer: '" + s + "'");
    return value;
}

} // namespace

VertexName VertexName::base(std::string tag)
{
    if (tag.empty())
        throw DomainError("empty base tag");
    if (tag.find_first_of("().") != std::string::npos)
        throw DomainError("base tag may not contain '(', ')' or '.': " + tag);
    if (looks_like_apex(tag))
        throw DomainError("base tag collides with apex syntax: " + tag);
    return VertexName(Base{std::move(tag)});
}

VertexName VertexName::level(VertexName parent, int index)
{
    if (index < 0)
        throw DomainError("negative level index");
    return VertexName(Level{std::make_shared<const VertexName>(std::move(parent)), index});
}

VertexName VertexName::apex(int depth)
{
    if (depth < 1)
        throw DomainError("apex depth must be >= 1");
    return VertexName(Apex{depth});
}

int VertexName::iterations() const
{
    if (is_base())
        return 0;
    if (is_apex())
        return as_apex().depth;
    return 1 + as_level().parent->iterations();
}

std::string VertexName::to_string() const
{
    if (is_base())
        return as_base().tag;
    if (is_apex()) {
        int d = as_apex().depth;
        return d == 1 ? std::string("z") : "z" + std::to_string(d);
    }
    const auto& lv = as_level();
    return level_text(lv.parent->to_string(), lv.index);
}

std::string level_text(const std::string& parent, int index)
{
    bool wrap = parent.find('.') != std::string::npos;
    return (wrap ? "(" + parent + ")" : parent) + "." + std::to_string(index);
}

VertexName VertexName::parse(const std::string& text)
{
    if (text.empty())
        throw DomainError("empty vertex name");
    // The level index follows the last '.' outside parentheses.
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else if (c == '.' && depth == 0)
            split = i;
        if (depth < 0)
            throw DomainError("unbalanced parentheses in name: " + text);
    }
    if (depth != 0)
        throw DomainError("unbalanced parentheses in name: " + text);
    if (split == std::string::npos) {
        if (text.front() == '(' && text.back() == ')')
            return parse(text.substr(1, text.size() - 2));
        if (looks_like_apex(text))
            return apex(text.size() == 1 ? 1 : parse_int(text.substr(1)));
        return base(text);
    }
    std::string head = text.substr(0, split);
    int index = parse_int(text.substr(split + 1));
    if (head.size() >= 2 && head.front() == '(' && head.back() == ')')
        head = head.substr(1, head.size() - 2);
    return level(parse(head), index);
}

bool operator==(const VertexName& a, const VertexName& b)
{
    if (a.value_.index() != b.value_.index())
        return false;
    if (a.is_base())
        return a.as_base().tag == b.as_base().tag;
    if (a.is_apex())
        return a.as_apex().depth == b.as_apex().depth;
    return a.as_level().index == b.as_level().index && *a.as_level().parent == *b.as_level().parent;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int order, std::vector<Edge> edges, std::vector<VertexName> names)
    : order_(order), edges_(std::move(edges)), names_(std::move(names))
{
    if (order < 0)
        throw ContractError("negative order");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw ContractError("edge endpoint out of range");
        if (u == v)
            throw ContractError("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ContractError("duplicate edge");

    if (names_.empty()) {
        names_.reserve(order);
        for (int v = 0; v < order; ++v)
            names_.push_back(VertexName::base(std::to_string(v)));
    }
    if (static_cast<int>(names_.size()) != order)
        throw ContractError("name count does not match order");

    adjacency_.assign(order, {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end());
}

bool Graph::has_edge(int u, int v) const
{
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool operator==(const Graph& a, const Graph& b)
{
    return a.order_ == b.order_ && a.edges_ == b.edges_ && a.names_ == b.names_;
}

// ---------------------------------------------------------------------------
// Basic graphs

Graph cycle(int n)
{
    if (n < 3)
        throw ContractError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph complete(int n)
{
    if (n < 1)
        throw ContractError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph complement_of(const Graph& g)
{
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v))
                edges.emplace_back(u, v);
    return Graph(g.order(), std::move(edges), {g.names().begin(), g.names().end()});
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);               // spokes
    }
    return Graph(10, std::move(edges));
}

// ---------------------------------------------------------------------------
// Mycielski

MycielskiSpec MycielskiSpec::parse(const std::string& text)
{
    MycielskiSpec spec;
    if (text.empty() || text == "[]")
        return spec;
    std::string body = text;
    if (body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        int r = parse_int(item);
        if (r < 1)
            throw DomainError("Mycielski parameter r must be >= 1");
        spec.rs.push_back(r);
    }
    return spec;
}

std::string MycielskiSpec::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < rs.size(); ++i)
        out += (i ? "," : "") + std::to_string(rs[i]);
    return out;
}

Graph mycielski(const Graph& g, int r)
{
    if (r < 1)
        throw ContractError("mycielski needs r >= 1");
    const int n = g.order();
    auto id = [n](int u, int i) { return i * n + u; };
    const int apex = r * n;

    std::vector<Edge> edges;
    edges.reserve(g.size() * (2 * r - 1) + n);
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(id(u, 0), id(v, 0));
        for (int i = 0; i + 1 < r; ++i) {
            edges.emplace_back(id(u, i), id(v, i + 1));
            edges.emplace_back(id(v, i), id(u, i + 1));
        }
    }
    for (int u = 0; u < n; ++u)
        edges.emplace_back(id(u, r - 1), apex);

    int depth = 0;
    std::vector<VertexName> names;
    names.reserve(r * n + 1);
    for (int i = 0; i < r; ++i)
        for (int u = 0; u < n; ++u)
            names.push_back(VertexName::level(g.name(u), i));
    for (int u = 0; u < n; ++u)
        depth = std::max(depth, g.name(u).iterations());
    names.push_back(VertexName::apex(depth + 1));
    return Graph(r * n + 1, std::move(edges), std::move(names));
}

Graph build_family(const MycielskiSpec& spec)
{
    Graph g = complete(2);
    for (int r : spec.rs)
        g = mycielski(g, r);
    return g;
}

Graph double_cover(const Graph& g)
{
    const int n = g.order();
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    std::vector<VertexName> names;
    for (int s = 0; s < 2; ++s)
        for (int v = 0; v < n; ++v)
            names.push_back(VertexName::base(std::to_string(v) + (s == 0 ? "+" : "-")));
    return Graph(2 * n, std::move(edges), std::move(names));
}

std::optional<std::vector<int>> bipartition(const Graph& g)
{
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbours(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

/// Joint colour refinement over the disjoint union of g (0..n-1) and h (n..2n-1).
class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {}

    std::optional<std::vector<int>> run()
    {
        std::vector<int> colour(2 * n_);
        for (int v = 0; v < n_; ++v) {
            colour[v] = g_.degree(v);
            colour[n_ + v] = h_.degree(v);
        }
        if (!refine(colour))
            return std::nullopt;
        return search(colour);
    }

private:
    std::span<const int> nbrs(int x) const
    {
        return x < n_ ? g_.neighbours(x) : h_.neighbours(x - n_);
    }

    // Refines to the coarsest equitable partition; false if the two halves diverge.
    bool refine(std::vector<int>& colour) const
    {
        int classes = -1;
        std::vector<std::vector<int>> keys(2 * n_);
        while (true) {
            for (int x = 0; x < 2 * n_; ++x) {
                const int offset = x < n_ ? 0 : n_;
                auto& key = keys[x];
                key.clear();
                key.push_back(colour[x]);
                for (int y : nbrs(x))
                    key.push_back(colour[y + offset]);
                std::sort(key.begin() + 1, key.end());
            }
            std::map<std::vector<int>, int> ids;
            for (const auto& key : keys)
                ids.emplace(key, 0);
            int next = 0;
            for (auto& [key, id] : ids)
                id = next++;
            std::vector<int> balance(next, 0);
            for (int x = 0; x < 2 * n_; ++x) {
                colour[x] = ids[keys[x]];
                balance[colour[x]] += x < n_ ? 1 : -1;
            }
            if (std::any_of(balance.begin(), balance.end(), [](int c) { return c != 0; }))
                return false;
            if (next == classes)
                return true;
            classes = next;
        }
    }

    std::optional<std::vector<int>> search(const std::vector<int>& colour) const
    {
        // Smallest non-singleton cell, first g-vertex in it.
        std::map<int, std::vector<int>> cells;
        for (int x = 0; x < 2 * n_; ++x)
            cells[colour[x]].push_back(x);
        const std::vector<int>* target = nullptr;
        for (const auto& [c, members] : cells)
            if (members.size() > 2 && (!target || members.size() < target->size()))
                target = &members;

        if (!target) {
            std::vector<int> phi(n_);
            for (const auto& [c, members] : cells)
                phi[members[0]] = members[1] - n_;
            if (verify_isomorphism(g_, h_, phi))
                return phi;
            return std::nullopt;
        }

        int v = (*target)[0];
        int fresh = *std::max_element(colour.begin(), colour.end()) + 1;
        for (int w : *target) {
            if (w < n_)
                continue;
            std::vector<int> next = colour;
            next[v] = fresh;
            next[w] = fresh;
            if (!refine(next))
                continue;
            if (auto phi = search(next))
                return phi;
        }
        return std::nullopt;
    }

    const Graph& g_;
    const Graph& h_;
    int n_;
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, int cap)
{
    if (g.order() > cap || h.order() > cap)
        throw SizeError("isomorphism test limited to " + std::to_string(cap) + " vertices");
    if (g.order() != h.order() || g.size() != h.size())
        return std::nullopt;
    if (g.order() == 0)
        return std::vector<int>{};
    return IsoSearch(g, h).run();
}

bool verify_isomorphism(const Graph& g, const Graph& h, std::span<const int> phi)
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    if (static_cast<int>(phi.size()) != g.order())
        return false;
    std::vector<char> hit(h.order(), 0);
    for (int x : phi) {
        if (x < 0 || x >= h.order() || hit[x])
            return false;
        hit[x] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!h.has_edge(phi[u], phi[v]))
            return false;
    return true;
}

} // namespace myc
