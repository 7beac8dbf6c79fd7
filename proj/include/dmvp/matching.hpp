#pragma once

#include <vector>

namespace dmvp {

// Maximum bipartite matching via augmenting paths (Kuhn's algorithm).
class BipartiteMatcher {
  public:
    BipartiteMatcher(int left, int right)
        : adj_(static_cast<std::size_t>(left)),
          matchLeft_(static_cast<std::size_t>(left), -1),
          matchRight_(static_cast<std::size_t>(right), -1) {}

    void add_edge(int l, int r) { adj_[static_cast<std::size_t>(l)].push_back(r); }

    int solve() {
        int matched = 0;
        for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
            std::vector<char> used(matchRight_.size(), 0);
            if (try_augment(l, used)) ++matched;
        }
        return matched;
    }

    int match_of_left(int l) const { return matchLeft_[static_cast<std::size_t>(l)]; }
    int match_of_right(int r) const { return matchRight_[static_cast<std::size_t>(r)]; }

  private:
    bool try_augment(int l, std::vector<char>& used) {
        for (int r : adj_[static_cast<std::size_t>(l)]) {
            if (used[static_cast<std::size_t>(r)]) continue;
            used[static_cast<std::size_t>(r)] = 1;
            if (matchRight_[static_cast<std::size_t>(r)] == -1 ||
                try_augment(matchRight_[static_cast<std::size_t>(r)], used)) {
                matchLeft_[static_cast<std::size_t>(l)] = r;
                matchRight_[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> matchLeft_;
    std::vector<int> matchRight_;
};

}  // namespace dmvp
