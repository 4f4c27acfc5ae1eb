#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kingpack {

// Non-decreasing color-distance sequence S = (a_1, a_2, ...), stored as
// explicit head values plus an eventually-constant tail. Two squares of
// color i must be at distance greater than a_i.
class SSequence {
public:
    SSequence(std::vector<int> head, int tail);

    // Parses "1,6*": comma-separated head values, the starred value is the
    // tail repeated forever.
    static SSequence parse(std::string_view text);

    // a_i, 1-based. Rejects i < 1.
    int value(int i) const;

    int tail() const { return tail_; }
    const std::vector<int>& head() const { return head_; }

    std::string to_string() const;

    friend bool operator==(const SSequence&, const SSequence&) = default;

private:
    std::vector<int> head_;
    int tail_;
};

}  // namespace kingpack
