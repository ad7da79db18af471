#include "usched/matching.hpp"

#include <limits>
#include <queue>

namespace usched {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

class HopcroftKarp {
public:
    HopcroftKarp(int left, int right, const std::vector<std::vector<int>>& adj)
        : adj_(adj), dist_(left), next_edge_(left) {
        result_.left_mate.assign(left, -1);
        result_.right_mate.assign(right, -1);
    }

    Matching run() {
        while (layer()) {
            std::fill(next_edge_.begin(), next_edge_.end(), 0);
            for (int u = 0; u < static_cast<int>(adj_.size()); ++u)
                if (result_.left_mate[u] < 0 && augment(u)) ++result_.size;
        }
        return std::move(result_);
    }

private:
    // BFS from free left vertices; true when some free right vertex is reachable.
    bool layer() {
        std::queue<int> q;
        for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
            if (result_.left_mate[u] < 0) {
                dist_[u] = 0;
                q.push(u);
            } else {
                dist_[u] = kUnreached;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj_[u]) {
                int w = result_.right_mate[v];
                if (w < 0) {
                    found = true;
                } else if (dist_[w] == kUnreached) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool augment(int u) {
        for (int& i = next_edge_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
            int v = adj_[u][i];
            int w = result_.right_mate[v];
            if (w < 0 || (dist_[w] == dist_[u] + 1 && augment(w))) {
                result_.left_mate[u] = v;
                result_.right_mate[v] = u;
                ++i;
                return true;
            }
        }
        dist_[u] = kUnreached;
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> dist_;
    std::vector<int> next_edge_;
    Matching result_;
};

}  // namespace

Matching max_bipartite_matching(int left, int right, const std::vector<std::vector<int>>& adjacency) {
    return HopcroftKarp(left, right, adjacency).run();
}

}  // namespace usched
