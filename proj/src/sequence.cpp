#include "kingpack/sequence.hpp"

#include <charconv>
#include <stdexcept>

namespace kingpack {

SSequence::SSequence(std::vector<int> head, int tail)
    : head_(std::move(head)), tail_(tail) {
    int prev = 0;
    for (int v : head_) {
        if (v < 1) throw std::invalid_argument("sequence values must be >= 1");
        if (v < prev) throw std::invalid_argument("sequence must be non-decreasing");
        prev = v;
    }
    if (tail_ < 1) throw std::invalid_argument("sequence values must be >= 1");
    if (tail_ < prev) throw std::invalid_argument("sequence must be non-decreasing");
}

static int parse_int(std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad sequence token: " + std::string(tok));
    return v;
}

SSequence SSequence::parse(std::string_view text) {
    std::vector<int> head;
    int tail = -1;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty sequence token");
        if (tok.back() == '*') {
            if (comma != std::string_view::npos)
                throw std::invalid_argument("tail must be the last token");
            tail = parse_int(tok.substr(0, tok.size() - 1));
            return SSequence(std::move(head), tail);
        }
        head.push_back(parse_int(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    throw std::invalid_argument("sequence needs a trailing 'tail*' token");
}

int SSequence::value(int i) const {
    if (i < 1) throw std::invalid_argument("sequence index must be >= 1");
    if (i <= static_cast<int>(head_.size())) return head_[i - 1];
    return tail_;
}

std::string SSequence::to_string() const {
    std::string out;
    for (int v : head_) {
        out += std::to_string(v);
        out += ',';
    }
    out += std::to_string(tail_);
    out += '*';
    return out;
}

}  // namespace kingpack
