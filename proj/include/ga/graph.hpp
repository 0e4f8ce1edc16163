#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ga/error.hpp"

namespace ga {

// Simple undirected graph with named vertices; no self-loops.
class Graph {
public:
    Graph() = default;

    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges)
        : names_(std::move(vertices)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (index_.count(names_[i])) fail(errc::domain, "duplicate vertex '" + names_[i] + "'");
            index_[names_[i]] = i;
        }
        for (const auto& [a, b] : edges) add_edge(a, b);
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::size_t index_of(const std::string& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) fail(errc::domain, "unknown vertex '" + v + "'");
        return it->second;
    }

    void add_edge(const std::string& a, const std::string& b) {
        std::size_t i = index_of(a), j = index_of(b);
        if (i == j) fail(errc::domain, "self-loop on '" + a + "'");
        edges_.insert(std::minmax(i, j));
    }

    bool adjacent(std::size_t i, std::size_t j) const {
        if (i == j) return false;
        return edges_.count(std::minmax(i, j)) > 0;
    }

    const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (const auto& [a, b] : edges_)
            if (a == v || b == v) ++d;
        return d;
    }

    // Connectivity of the induced subgraph on `subset`; the empty set counts
    // as disconnected, singletons as connected.
    bool connected_subset(const std::set<std::size_t>& subset) const {
        if (subset.empty()) return false;
        std::set<std::size_t> seen;
        std::vector<std::size_t> stack{*subset.begin()};
        seen.insert(*subset.begin());
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (auto w : subset) {
                if (!seen.count(w) && adjacent(v, w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        return seen.size() == subset.size();
    }

    bool is_automorphism(const std::vector<std::size_t>& perm) const {
        if (perm.size() != size()) return false;
        for (const auto& [a, b] : edges_)
            if (!adjacent(perm[a], perm[b])) return false;
        return true;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

// All adjacency-preserving vertex permutations, identity included, in
// lexicographic order. Brute force with degree pruning; meant for the small
// hardware fragments used here.
inline std::vector<std::vector<std::size_t>> find_automorphisms(const Graph& g) {
    const std::size_t n = g.size();
    if (n > 10) fail(errc::resource_limit, "automorphism search limited to 10 vertices");
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> perm(n, n);
    std::vector<bool> used(n, false);

    std::function<void(std::size_t)> place = [&](std::size_t v) {
        if (v == n) {
            out.push_back(perm);
            return;
        }
        for (std::size_t img = 0; img < n; ++img) {
            if (used[img] || deg[img] != deg[v]) continue;
            bool ok = true;
            for (std::size_t w = 0; w < v && ok; ++w)
                if (g.adjacent(v, w) != g.adjacent(img, perm[w])) ok = false;
            if (!ok) continue;
            perm[v] = img;
            used[img] = true;
            place(v + 1);
            used[img] = false;
        }
        perm[v] = n;
    };
    place(0);
    return out;
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_names();
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({g.name(a), g.name(b)});
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (e.size() != 2) fail(errc::syntax, "edge must be a two-element array");
        edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
    return Graph(std::move(vertices), edges);
}

} // namespace ga
