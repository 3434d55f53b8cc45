#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "planarcut/plane_graph.hpp"

namespace planarcut {

// Dijkstra over Cost with lowest-node-id tie breaking. Labels are stamped so a
// workspace can be reused across many small searches without O(n) resets.
class Dijkstra {
public:
    explicit Dijkstra(const PlaneGraph& g) : g_(&g), dist_(g.num_nodes()), parent_(g.num_nodes()), stamp_(g.num_nodes(), 0), done_(g.num_nodes(), 0) {}

    // Forward: dist(v) = d(source, v), parent(v) is the dart entering v.
    // Reverse: dist(v) = d(v, source), parent(v) is the dart leaving v.
    // allow(edge) filters usable edges; the search stops once target settles.
    template <class Allow>
    void run(int source, bool reverse, Allow&& allow, int target = -1) {
        ++cur_;
        reverse_ = reverse;
        source_ = source;
        settled_.clear();
        using Item = std::pair<Cost, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        label(source, Cost{}, -1);
        pq.push({Cost{}, source});
        while (!pq.empty()) {
            auto [c, v] = pq.top();
            pq.pop();
            if (c != dist_[v] || done_[v] == cur_) continue;
            done_[v] = cur_;
            settled_.push_back(v);
            if (v == target) break;
            for (int d : g_->rotation(v)) {
                if (!allow(edge_of(d))) continue;
                int x = g_->head(d);
                Cost nc = c + g_->cost(reverse ? twin(d) : d);
                if (stamp_[x] != cur_ || nc < dist_[x]) {
                    label(x, nc, reverse ? twin(d) : d);
                    pq.push({nc, x});
                }
            }
        }
    }

    void run(int source, bool reverse = false, int target = -1) {
        run(source, reverse, [](int) { return true; }, target);
    }

    bool reached(int v) const { return stamp_[v] == cur_; }
    Cost dist(int v) const { return reached(v) ? dist_[v] : Cost::unreached(); }
    int parent(int v) const { return reached(v) ? parent_[v] : -1; }
    const std::vector<int>& settled() const { return settled_; }

    // Darts source->v (forward) or v->source (reverse).
    std::vector<int> path(int v) const {
        std::vector<int> out;
        if (!reached(v)) return out;
        if (!reverse_) {
            for (int x = v; x != source_; x = g_->tail(parent_[x])) out.push_back(parent_[x]);
            std::reverse(out.begin(), out.end());
        } else {
            for (int x = v; x != source_; x = g_->head(parent_[x])) out.push_back(parent_[x]);
        }
        return out;
    }

private:
    void label(int v, Cost c, int p) {
        stamp_[v] = cur_;
        dist_[v] = c;
        parent_[v] = p;
    }

    const PlaneGraph* g_;
    std::vector<Cost> dist_;
    std::vector<int> parent_;
    std::vector<unsigned> stamp_;
    std::vector<unsigned> done_;
    std::vector<int> settled_;
    unsigned cur_ = 0;
    bool reverse_ = false;
    int source_ = -1;
};

}  // namespace planarcut
