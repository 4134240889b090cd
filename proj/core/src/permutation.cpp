#include "genbound/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace genbound::perm {

Permutation::Permutation(uint32_t degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), static_cast<Point>(0));
}

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point p : img_) {
        if (p >= img_.size() || seen[p])
            throw std::invalid_argument("Permutation: image vector is not a bijection");
        seen[p] = true;
    }
}

Permutation Permutation::then(const Permutation& q) const {
    std::vector<Point> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[i] = q.img_[img_[i]];
    Permutation out(0);
    out.img_ = std::move(r);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<Point> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<Point>(i);
    Permutation out(0);
    out.img_ = std::move(r);
    return out;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    return g.inverse().then(*this).then(g);
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<Point> cyc;
        Point j = static_cast<Point>(i);
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(j);
            j = img_[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

uint64_t Permutation::order() const {
    uint64_t ord = 1;
    for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<uint64_t>(c.size()));
    return ord;
}

std::string Permutation::to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream out;
    for (const auto& c : cs) {
        out << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out << ' ';
            out << (c[i] + 1);
        }
        out << ')';
    }
    return out.str();
}

Permutation parse_permutation(const std::string& text, uint32_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), static_cast<Point>(0));
    std::vector<bool> used(degree, false);

    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
    };
    skip_ws();
    bool any_cycle = false;
    while (i < text.size()) {
        if (text[i] != '(') throw parse_error("cycle notation: expected '(' in \"" + text + "\"");
        ++i;
        any_cycle = true;
        std::vector<Point> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("cycle notation: unexpected character '" + std::string(1, text[i]) +
                                  "' in \"" + text + "\"");
            uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1'000'000) throw parse_error("cycle notation: point out of range");
                ++i;
            }
            if (v < 1 || v > degree)
                throw parse_error("cycle notation: point " + std::to_string(v) +
                                  " outside degree " + std::to_string(degree));
            Point p = static_cast<Point>(v - 1);
            if (used[p])
                throw parse_error("cycle notation: repeated point " + std::to_string(v));
            used[p] = true;
            cyc.push_back(p);
            skip_ws();
        }
        if (i >= text.size()) throw parse_error("cycle notation: missing ')' in \"" + text + "\"");
        ++i; // consume ')'
        for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    if (!any_cycle) throw parse_error("cycle notation: empty input");
    return Permutation(std::move(img));
}

size_t PermHash::operator()(const Permutation& p) const {
    // FNV-1a over the image bytes
    uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
        h = (h ^ (x & 0xff)) * 1099511628211ull;
        h = (h ^ (x >> 8)) * 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

} // namespace genbound::perm
