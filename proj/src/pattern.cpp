#include "kingpack/pattern.hpp"

#include <algorithm>
#include <map>

namespace kingpack {

Pattern::Pattern(int rows, int cols, std::vector<uint8_t> ones)
    : rows_(rows), cols_(cols), ones_(std::move(ones)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("degenerate pattern");
    if (ones_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("pattern cell count mismatch");
    if (one_count() == 0) throw std::invalid_argument("pattern needs a ONE cell");
}

Pattern Pattern::parse(std::string_view text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        if (!line.empty()) lines.emplace_back(line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (lines.empty()) throw std::invalid_argument("empty pattern text");
    size_t cols = lines[0].size();
    std::vector<uint8_t> ones;
    for (const auto& line : lines) {
        if (line.size() != cols) throw std::invalid_argument("ragged pattern lines");
        for (char ch : line) {
            if (ch == '1')
                ones.push_back(1);
            else if (ch == 'x')
                ones.push_back(0);
            else
                throw std::invalid_argument("pattern characters must be '1' or 'x'");
        }
    }
    return Pattern(static_cast<int>(lines.size()), static_cast<int>(cols),
                   std::move(ones));
}

int Pattern::one_count() const {
    int n = 0;
    for (uint8_t v : ones_) n += v;
    return n;
}

Pattern Pattern::rotated_cw() const {
    std::vector<uint8_t> out(ones_.size());
    // (r, c) of the rotated cols_ x rows_ matrix pulls from (rows_+1-c, r).
    for (int r = 1; r <= cols_; ++r)
        for (int c = 1; c <= rows_; ++c)
            out[static_cast<size_t>(r - 1) * rows_ + (c - 1)] =
                one_at(rows_ + 1 - c, r) ? 1 : 0;
    return Pattern(cols_, rows_, std::move(out));
}

Pattern Pattern::mirrored() const {
    std::vector<uint8_t> out(ones_.size());
    for (int r = 1; r <= rows_; ++r)
        for (int c = 1; c <= cols_; ++c)
            out[static_cast<size_t>(r - 1) * cols_ + (c - 1)] =
                one_at(r, cols_ + 1 - c) ? 1 : 0;
    return Pattern(rows_, cols_, std::move(out));
}

static std::vector<Pattern> all_images(const Pattern& p) {
    std::vector<Pattern> images;
    Pattern cur = p;
    for (int i = 0; i < 4; ++i) {
        images.push_back(cur);
        images.push_back(cur.mirrored());
        cur = cur.rotated_cw();
    }
    return images;
}

Pattern Pattern::canonical() const {
    auto images = all_images(*this);
    return *std::min_element(images.begin(), images.end());
}

std::string Pattern::to_string() const {
    std::string out;
    for (int r = 1; r <= rows_; ++r) {
        for (int c = 1; c <= cols_; ++c) out += one_at(r, c) ? '1' : 'x';
        out += '\n';
    }
    return out;
}

PatternSet dihedral_closure(const Pattern& p, std::string name) {
    auto images = all_images(p);
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return PatternSet{std::move(name), std::move(images)};
}

const std::vector<PatternSet>& lemma4_library() {
    static const std::vector<PatternSet> library = [] {
        const std::pair<const char*, const char*> entries[] = {
            {"i", "1x1x1"},
            {"ii", "1xx1"},
            {"iii", "1x1\nxxx\n1x1"},
            {"iv", "xxx1\n1xxx\nxxxx\n1x1x"},
            {"v", "1xx\nxxx\n1x1"},
            {"vi", "1x1x\nxxxx\nx1x1"},
            {"vii", "x1x\nxxx\n1x1"},
            {"viii", "1x1"},
            {"ix", "xx1\n1xx"},
        };
        std::vector<PatternSet> out;
        for (auto [tag, text] : entries)
            out.push_back(dihedral_closure(Pattern::parse(text), tag));
        return out;
    }();
    return library;
}

const PatternSet& lemma4_entry(std::string_view tag) {
    for (const auto& ps : lemma4_library())
        if (ps.name == tag) return ps;
    throw std::invalid_argument("unknown pattern tag: " + std::string(tag));
}

const PatternSet& independence_patterns() {
    static const PatternSet set = [] {
        PatternSet out{"independence", {}};
        for (const char* text : {"11", "1\n1", "1x\nx1", "x1\n1x"})
            out.patterns.push_back(Pattern::parse(text));
        std::sort(out.patterns.begin(), out.patterns.end());
        return out;
    }();
    return set;
}

std::vector<PatternSet> lemma4_entries(const std::vector<std::string>& tags) {
    std::vector<PatternSet> out;
    for (const auto& tag : tags) out.push_back(lemma4_entry(tag));
    return out;
}

}  // namespace kingpack
