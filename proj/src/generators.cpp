#include "usched/generators.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "usched/errors.hpp"

namespace usched {

Instance gen_random(int n, int m, double density, int layers, uint64_t seed) {
    if (n < 0 || m < 1 || layers < 1 || density < 0.0 || density > 1.0)
        throw std::invalid_argument("gen_random: bad parameters");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_layer(0, layers - 1);
    std::bernoulli_distribution coin(density);
    std::vector<int> layer(n);
    for (int& l : layer) l = pick_layer(rng);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (layer[u] < layer[v] && coin(rng)) arcs.push_back({u, v});
    return Instance::create(n, m, arcs);
}

void check_dks(const DksInstance& dks) {
    if (dks.vertices < 1) throw InstanceError("DkS graph needs at least one vertex");
    std::vector<int> degree(dks.vertices, 0);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : dks.edges) {
        if (u < 0 || v < 0 || u >= dks.vertices || v >= dks.vertices) throw InstanceError("DkS edge out of range");
        if (u == v) throw InstanceError("DkS edge is a loop");
        if (!seen.insert(std::minmax(u, v)).second) throw InstanceError("DkS edge repeated");
        ++degree[u];
        ++degree[v];
    }
    for (int d : degree) {
        if (d == 0) throw InstanceError("DkS graph has an isolated vertex");
        if (d > dks.delta) throw InstanceError("DkS degree exceeds delta");
    }
    if (dks.kappa < 0 || dks.kappa > dks.vertices) throw InstanceError("kappa out of range");
}

Instance reduce_dks(const DksInstance& dks) {
    check_dks(dks);
    const int big_n = dks.vertices;
    const int big_m = static_cast<int>(dks.edges.size());
    const int m = 2 * dks.delta * big_n + 1;
    const int l1 = m - dks.kappa;
    const int l2 = m + dks.kappa - dks.ell - big_n;
    const int l3 = m + dks.ell - big_m;
    if (l1 < 0 || l2 < 0 || l3 < 0)
        throw InstanceError("DkS parameters give a negative filler layer (" + std::to_string(l1) + ", " +
                            std::to_string(l2) + ", " + std::to_string(l3) + ")");
    const int edge_base = big_n;
    const int l1_base = edge_base + big_m;
    const int l2_base = l1_base + l1;
    const int l3_base = l2_base + l2;
    const int n = l3_base + l3;
    std::vector<Arc> arcs;
    for (int e = 0; e < big_m; ++e) {
        arcs.push_back({dks.edges[e].first, edge_base + e});
        arcs.push_back({dks.edges[e].second, edge_base + e});
    }
    for (int a = 0; a < l1; ++a)
        for (int b = 0; b < l2; ++b) arcs.push_back({l1_base + a, l2_base + b});
    for (int b = 0; b < l2; ++b)
        for (int c = 0; c < l3; ++c) arcs.push_back({l2_base + b, l3_base + c});
    return Instance::create(n, m, arcs, 3);
}

int densest_subgraph_edges(const DksInstance& dks) {
    if (dks.vertices > 30) throw CapacityError("densest_subgraph_edges enumerates at most 30 vertices");
    int best = -1;
    const uint32_t limit = uint32_t{1} << dks.vertices;
    for (uint32_t s = 0; s < limit; ++s) {
        if (std::popcount(s) != dks.kappa) continue;
        int inside = 0;
        for (auto [u, v] : dks.edges) inside += (s >> u & 1u) && (s >> v & 1u);
        best = std::max(best, inside);
    }
    return best;
}

DksInstance gen_random_dks(int vertices, int delta, int kappa, int ell, uint64_t seed) {
    if (vertices < 2 || delta < 1) throw std::invalid_argument("gen_random_dks: need two vertices and delta >= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        DksInstance d;
        d.vertices = vertices;
        d.delta = delta;
        d.kappa = kappa;
        d.ell = ell;
        std::vector<int> degree(vertices, 0);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < vertices; ++u)
            for (int v = u + 1; v < vertices; ++v) pairs.emplace_back(u, v);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        std::bernoulli_distribution keep(0.5);
        // first give every vertex an edge, then add more at random
        for (auto [u, v] : pairs)
            if ((degree[u] == 0 || degree[v] == 0) && degree[u] < delta && degree[v] < delta) {
                d.edges.emplace_back(u, v);
                ++degree[u];
                ++degree[v];
            }
        for (auto [u, v] : pairs) {
            if (degree[u] >= delta || degree[v] >= delta || !keep(rng)) continue;
            if (std::find(d.edges.begin(), d.edges.end(), std::make_pair(u, v)) != d.edges.end()) continue;
            d.edges.emplace_back(u, v);
            ++degree[u];
            ++degree[v];
        }
        if (std::count(degree.begin(), degree.end(), 0) == 0) {
            std::sort(d.edges.begin(), d.edges.end());
            return d;
        }
    }
    throw std::runtime_error("gen_random_dks: no graph without isolated vertices found");
}

DksInstance parse_dks(std::istream& in) {
    DksInstance d;
    bool header = false;
    std::string text;
    int line_no = 0;
    while (std::getline(in, text)) {
        ++line_no;
        std::istringstream ls(text);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> d.vertices >> d.delta >> d.kappa >> d.ell) || kind != "dks")
                throw ParseError(line_no, "header must be 'p dks <N> <delta> <kappa> <ell>'");
            header = true;
        } else if (tag == "e") {
            int u = 0, v = 0;
            if (!header) throw ParseError(line_no, "edge before the header line");
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > d.vertices || v > d.vertices)
                throw ParseError(line_no, "edge line must be 'e <u> <v>' with vertices in range");
            d.edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!header) throw ParseError(line_no, "missing header line");
    return d;
}

void emit_dks(const DksInstance& d, std::ostream& out) {
    out << "p dks " << d.vertices << ' ' << d.delta << ' ' << d.kappa << ' ' << d.ell << '\n';
    for (auto [u, v] : d.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace usched
