#pragma once

#include "dmvp/types.hpp"

namespace dmvp {

// d(t,u,v) = temporal length of the foremost journey u -> v departing at or
// after t, for every t in [0, T']; next(t,u,v) is the first action achieving
// it, for reconstruction.
class ForemostTable {
  public:
    static constexpr int kNone = -2;
    static constexpr int kWait = -1;

    ForemostTable(int n, Time totalSteps)
        : n_(n),
          steps_(totalSteps),
          d_(static_cast<std::size_t>((totalSteps + 1)) * static_cast<std::size_t>(n) *
                 static_cast<std::size_t>(n),
             kUnreachable),
          next_(d_.size(), kNone) {}

    Time d(Time t, Vertex u, Vertex v) const { return d_[index(t, u, v)]; }
    int next(Time t, Vertex u, Vertex v) const { return next_[index(t, u, v)]; }

    Time& d_mut(Time t, Vertex u, Vertex v) { return d_[index(t, u, v)]; }
    int& next_mut(Time t, Vertex u, Vertex v) { return next_[index(t, u, v)]; }

    int vertex_count() const { return n_; }
    Time total_steps() const { return steps_; }

  private:
    std::size_t index(Time t, Vertex u, Vertex v) const {
        return (static_cast<std::size_t>(t) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(u)) *
                   static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    int n_;
    Time steps_;
    std::vector<Time> d_;
    std::vector<int> next_;
};

// Backward recurrence from t = T'. When edgeMask is given, only edges with a
// nonzero mask entry exist (used to restrict the instance to a subgraph).
ForemostTable build_foremost_table(const NormalizedTvg& tvg,
                                   const std::vector<char>* edgeMask = nullptr);

// Reconstructs the witness journey for a reachable (t,u,v) entry; departs at
// or after t and arrives at t + d(t,u,v).
Journey foremost_journey(const ForemostTable& table, const NormalizedTvg& tvg, Vertex u,
                         Vertex v, Time t);

}  // namespace dmvp
