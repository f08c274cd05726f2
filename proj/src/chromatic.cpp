#include "myc/chromatic.hpp"

#include "myc/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace myc {

std::vector<Edge> verify_colouring(const Graph& g, const KColouring& c)
{
    if (static_cast<int>(c.colours.size()) != g.order())
        throw DomainError("colouring does not cover every vertex");
    for (int v = 0; v < g.order(); ++v)
        if (c.colours[v] < 1 || c.colours[v] > c.m)
            throw DomainError("vertex " + std::to_string(v) + " uncoloured or outside palette");
    std::vector<Edge> bad;
    for (auto e : g.edges())
        if (c.colours[e.first] == c.colours[e.second])
            bad.push_back(e);
    return bad;
}

namespace {

struct Timeout {};

std::vector<int> greedy_clique(const Graph& g)
{
    std::vector<int> best;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> cand(g.neighbours(s).begin(), g.neighbours(s).end());
        std::stable_sort(cand.begin(), cand.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> clique{s};
        for (int v : cand)
            if (std::all_of(clique.begin(), clique.end(), [&](int u) { return g.has_edge(u, v); }))
                clique.push_back(v);
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

/// DSATUR state with per-vertex neighbour colour counts.
class Dsatur {
public:
    Dsatur(const Graph& g, int k) : g_(g), k_(k), colour_(g.order(), -1),
        seen_(g.order(), std::vector<int>(k, 0)), sat_(g.order(), 0) {}

    int pick() const
    {
        int best = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (colour_[v] != -1)
                continue;
            if (best == -1 || sat_[v] > sat_[best] ||
                (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

    bool allowed(int v, int c) const { return seen_[v][c] == 0; }

    void assign(int v, int c)
    {
        colour_[v] = c;
        for (int w : g_.neighbours(v))
            if (seen_[w][c]++ == 0)
                ++sat_[w];
    }

    void unassign(int v)
    {
        int c = colour_[v];
        colour_[v] = -1;
        for (int w : g_.neighbours(v))
            if (--seen_[w][c] == 0)
                --sat_[w];
    }

    const std::vector<int>& colours() const { return colour_; }

private:
    const Graph& g_;
    int k_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> seen_;
    std::vector<int> sat_;
};

class Search {
public:
    Search(const Graph& g, int k, std::chrono::steady_clock::time_point deadline)
        : g_(g), k_(k), state_(g, k), deadline_(deadline) {}

    bool run() { return extend(0, 0); }
    const std::vector<int>& colours() const { return state_.colours(); }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool extend(int coloured, int used)
    {
        if (coloured == g_.order())
            return true;
        if ((++nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_)
            throw Timeout{};
        int v = state_.pick();
        int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (!state_.allowed(v, c))
                continue;
            state_.assign(v, c);
            if (extend(coloured + 1, std::max(used, c + 1)))
                return true;
            state_.unassign(v);
        }
        return false;
    }

    const Graph& g_;
    int k_;
    Dsatur state_;
    std::chrono::steady_clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
};

KColouring greedy_dsatur(const Graph& g)
{
    Dsatur state(g, std::max(1, g.order()));
    int used = 0;
    for (int step = 0; step < g.order(); ++step) {
        int v = state.pick();
        int c = 0;
        while (!state.allowed(v, c))
            ++c;
        state.assign(v, c);
        used = std::max(used, c + 1);
    }
    KColouring out{state.colours(), used};
    for (int& c : out.colours)
        ++c;
    return out;
}

} // namespace

std::optional<KColouring> find_k_colouring(const Graph& g, int k,
                                           std::chrono::steady_clock::time_point deadline,
                                           std::uint64_t* nodes)
{
    if (k <= 0)
        return g.order() == 0 ? std::optional<KColouring>(KColouring{{}, 0}) : std::nullopt;
    Search search(g, k, deadline);
    bool found = false;
    try {
        found = search.run();
    } catch (const Timeout&) {
        if (nodes)
            *nodes += search.nodes();
        throw std::runtime_error("colouring search exceeded its budget");
    }
    if (nodes)
        *nodes += search.nodes();
    if (!found)
        return std::nullopt;
    KColouring out{search.colours(), k};
    for (int& c : out.colours)
        ++c;
    return out;
}

ChromaticCertificate chi_exact(const Graph& g, const ChiOptions& opts)
{
    if (g.order() > opts.cap)
        throw SizeError("chi_exact limited to " + std::to_string(opts.cap) + " vertices");
    const auto start = std::chrono::steady_clock::now();
    const auto deadline = start + opts.budget;

    ChromaticCertificate cert;
    auto clique = greedy_clique(g);
    cert.lower = static_cast<int>(clique.size());
    cert.colouring = greedy_dsatur(g);
    cert.upper = cert.colouring.m;
    cert.witness.kind = LowerBoundWitness::Kind::clique;
    cert.witness.clique = clique;

    while (cert.upper > cert.lower) {
        std::optional<KColouring> better;
        std::uint64_t nodes = 0;
        try {
            better = find_k_colouring(g, cert.upper - 1, deadline, &nodes);
        } catch (const std::runtime_error&) {
            cert.nodes += nodes;
            cert.status = ChromaticCertificate::Status::inconclusive;
            break;
        }
        cert.nodes += nodes;
        if (better) {
            cert.colouring = *better;
            cert.colouring.m = *std::max_element(better->colours.begin(), better->colours.end());
            cert.upper = cert.colouring.m;
        } else {
            cert.lower = cert.upper;
            cert.witness = {LowerBoundWitness::Kind::exhaustion, {}, cert.upper - 1, nodes};
        }
    }
    if (cert.status == ChromaticCertificate::Status::exact)
        cert.chi = cert.upper;
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
    return cert;
}

} // namespace myc
