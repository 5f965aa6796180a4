#pragma once
// The potential-query list: a min-heap of candidates keyed by
// (score, insertion index). Scores are computed once at push time and never
// revised, so float non-associativity cannot reorder ties; equal scores pop
// FIFO, and the plus-child of each split is pushed first.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holopt/geometry.hpp"

namespace holopt {

// Split history as a binary string: '1' = plus child, '0' = minus child,
// empty = the root rectangle.
using BinaryCode = std::string;

struct Candidate {
    HyperRect rect;
    double score = 0.0;
    BinaryCode code;
    std::uint64_t insertion_index = 0;
};

// s = f_a - C0 ||v_a||: the parent's value minus the exploration bonus on the
// parent's edge norm. Both children of one split share this score.
inline double score(double parent_value, const EdgeVector& parent_edge, double c0) {
    return parent_value - c0 * edge_norm(parent_edge);
}

class Frontier {
  public:
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

    // Heap-ordered view; fine for volume/disjointness checks, which do not
    // care about ordering.
    const std::vector<Candidate>& entries() const { return heap_; }

    void push(HyperRect rect, double s, BinaryCode code) {
        heap_.push_back(Candidate{std::move(rect), s, std::move(code), next_index_++});
        std::push_heap(heap_.begin(), heap_.end(), later);
    }

    // Split the just-sampled rectangle and insert both halves with the shared
    // sibling score; plus-child first. `score_offset` shifts every score by a
    // constant (the sampled sequence is invariant to it).
    void push_children(const HyperRect& parent, const BinaryCode& parent_code,
                       double parent_value, double c0, double score_offset = 0.0,
                       SplitRule rule = SplitRule::largest_edge) {
        const double s = score(parent_value, parent.edge, c0) + score_offset;
        SplitResult halves = split_rect(parent, rule);
        push(std::move(halves.plus), s, parent_code + '1');
        push(std::move(halves.minus), s, parent_code + '0');
    }

    Candidate pop_min() {
        if (heap_.empty()) throw std::logic_error("pop_min on an empty frontier");
        std::pop_heap(heap_.begin(), heap_.end(), later);
        Candidate out = std::move(heap_.back());
        heap_.pop_back();
        return out;
    }

  private:
    // "a pops after b": strict weak order for a min-heap on (score, index).
    static bool later(const Candidate& a, const Candidate& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.insertion_index > b.insertion_index;
    }

    std::vector<Candidate> heap_;
    std::uint64_t next_index_ = 0;
};

// Replay a binary code from the root rectangle.
inline HyperRect decode(const BinaryCode& code, const DomainSpec& spec,
                        SplitRule rule = SplitRule::largest_edge) {
    HyperRect rect = initial_rect(spec);
    for (char bit : code) {
        if (bit != '0' && bit != '1')
            throw std::invalid_argument("decode: code bits must be '0' or '1'");
        SplitResult halves = split_rect(rect, rule);
        rect = bit == '1' ? std::move(halves.plus) : std::move(halves.minus);
    }
    return rect;
}

} // namespace holopt
