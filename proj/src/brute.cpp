#include "tridecomp/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace tridecomp {

namespace {

class RollbackDsu {
  public:
    explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int v) const {
        while (parent_[v] != v) {
            v = parent_[v];
        }
        return v;
    }
    bool same(int a, int b) const { return find(a) == find(b); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
    }
    void undo() {
        const int b = history_.back();
        history_.pop_back();
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
    }

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

class Search {
  public:
    Search(const PlaneMap& map, const DecisionSpec& spec, std::uint64_t budget)
        : map_(map),
          spec_(spec),
          n_(map.vertex_count()),
          edges_(map.edges()),
          budget_(budget),
          forest_{RollbackDsu(n_), RollbackDsu(n_)},
          h_dsu_(n_),
          deg_h_(n_, 0),
          choice_(edges_.size(), -1) {
        acyclic_ = spec.third == ThirdPart::Forest || spec.third == ThirdPart::Tree;
        connected_ = spec.third == ThirdPart::Connected || spec.third == ThirdPart::Tree;
        in_regions_.resize(edges_.size());
        for (std::size_t r = 0; r < spec.forest_regions.size(); ++r) {
            region_dsu_.emplace_back(n_);
            for (const auto& e : spec.forest_regions[r]) {
                const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
                if (it != edges_.end() && *it == e) {
                    in_regions_[it - edges_.begin()].push_back(static_cast<int>(r));
                }
            }
        }
    }

    Verdict run() {
        Verdict v;
        if (dfs(0)) {
            v.status = Status::Sat;
            std::array<std::vector<Edge>, 3> parts;
            for (std::size_t i = 0; i < edges_.size(); ++i) {
                parts[choice_[i]].push_back(edges_[i]);
            }
            v.witness = parts;
        } else {
            v.status = out_of_budget_ ? Status::Unknown : Status::Unsat;
        }
        v.nodes_explored = nodes_;
        return v;
    }

  private:
    bool dfs(std::size_t i) {
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            return false;
        }
        if (i == edges_.size()) {
            return leaf_ok();
        }
        if (!counting_ok(i) || (connected_ && !reachable(i))) {
            return false;
        }
        const Edge& e = edges_[i];
        for (int part = 0; part < 3; ++part) {
            if (part == 1 && i == 0) {
                continue;  // F1 and F2 are interchangeable
            }
            if (part < 2) {
                if (forest_[part].same(e.u, e.v)) {
                    continue;
                }
                forest_[part].unite(e.u, e.v);
                ++size_[part];
                choice_[i] = part;
                if (dfs(i + 1)) {
                    return true;
                }
                forest_[part].undo();
                --size_[part];
            } else {
                if (!h_allowed(i)) {
                    continue;
                }
                push_h(i);
                choice_[i] = 2;
                if (dfs(i + 1)) {
                    return true;
                }
                pop_h(i);
            }
            choice_[i] = -1;
            if (out_of_budget_) {
                return false;
            }
        }
        return false;
    }

    bool h_allowed(std::size_t i) const {
        const Edge& e = edges_[i];
        if (deg_h_[e.u] >= spec_.d || deg_h_[e.v] >= spec_.d) {
            return false;
        }
        if (acyclic_ && h_dsu_.same(e.u, e.v)) {
            return false;
        }
        for (int r : in_regions_[i]) {
            if (region_dsu_[r].same(e.u, e.v)) {
                return false;
            }
        }
        return true;
    }

    void push_h(std::size_t i) {
        const Edge& e = edges_[i];
        ++deg_h_[e.u];
        ++deg_h_[e.v];
        ++size_[2];
        if (acyclic_) {
            h_dsu_.unite(e.u, e.v);
        }
        for (int r : in_regions_[i]) {
            region_dsu_[r].unite(e.u, e.v);
        }
    }

    void pop_h(std::size_t i) {
        const Edge& e = edges_[i];
        --deg_h_[e.u];
        --deg_h_[e.v];
        --size_[2];
        if (acyclic_) {
            h_dsu_.undo();
        }
        for (int r : in_regions_[i]) {
            region_dsu_[r].undo();
        }
    }

    bool counting_ok(std::size_t i) const {
        const long remaining = static_cast<long>(edges_.size() - i);
        long slack = 0;
        for (int v = 0; v < n_; ++v) {
            slack += spec_.d - deg_h_[v];
        }
        long cap_h = slack / 2;
        if (acyclic_) {
            cap_h = std::min<long>(cap_h, n_ - 1 - size_[2]);
        }
        return remaining <= (n_ - 1 - size_[0]) + (n_ - 1 - size_[1]) + cap_h;
    }

    // H-edges plus still assignable edges must connect every vertex.
    bool reachable(std::size_t i) const {
        RollbackDsu dsu(n_);
        int comps = n_;
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            const Edge& e = edges_[k];
            const bool usable = k < i ? choice_[k] == 2
                                      : deg_h_[e.u] < spec_.d && deg_h_[e.v] < spec_.d;
            if (usable && !dsu.same(e.u, e.v)) {
                dsu.unite(e.u, e.v);
                --comps;
            }
        }
        return comps == 1;
    }

    bool leaf_ok() const {
        std::array<std::vector<Edge>, 3> parts;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            parts[choice_[i]].push_back(edges_[i]);
        }
        return check_decomposition(map_, parts, spec_).empty();
    }

    const PlaneMap& map_;
    const DecisionSpec& spec_;
    int n_;
    std::vector<Edge> edges_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
    bool acyclic_ = false;
    bool connected_ = false;
    std::array<RollbackDsu, 2> forest_;
    RollbackDsu h_dsu_;
    std::vector<RollbackDsu> region_dsu_;
    std::vector<std::vector<int>> in_regions_;
    std::vector<int> deg_h_;
    std::array<int, 3> size_{};
    std::vector<int> choice_;
};

}  // namespace

Verdict brute_decide(const PlaneMap& map, const DecisionSpec& spec, std::uint64_t budget) {
    if (spec.d < 0) {
        throw InputError("degree bound must be non-negative");
    }
    return Search(map, spec, budget).run();
}

}  // namespace tridecomp
