#include "shapes.hpp"

#include <algorithm>
#include <sstream>

namespace macuv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0) throw Error("Partition: negative part");
        if (k > 0 && parts_[k] > parts_[k - 1]) throw Error("Partition: parts not weakly decreasing");
    }
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::nonzero_length() const {
    int l = 0;
    for (int p : parts_) {
        if (p > 0) ++l;
    }
    return l;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) out << ",";
        out << parts_[k];
    }
    out << ")";
    return out.str();
}

Partition sort_to_partition(const Composition& mu) {
    std::vector<int> parts = mu;
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

std::vector<Composition> orbit(const Partition& lambda, int n) {
    std::vector<int> parts = lambda.parts();
    if (static_cast<int>(parts.size()) > n) {
        if (lambda.nonzero_length() > n)
            throw Error("orbit: n smaller than the number of nonzero parts");
        parts.resize(n);
    }
    parts.resize(n, 0);
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> result;
    do {
        result.push_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return result;
}

int multiplicity(const Composition& mu, int i) {
    int m = 0;
    for (int p : mu) {
        if (p == i) ++m;
    }
    return m;
}

Partition conjugate(const Partition& lambda) {
    int r = lambda.rank();
    std::vector<int> conj(r, 0);
    for (int i = 1; i <= r; ++i) {
        for (int p : lambda.parts()) {
            if (p >= i) ++conj[i - 1];
        }
    }
    return Partition(conj);
}

RatFunc omega(const Partition& lambda) {
    int r = lambda.rank();
    if (r <= 1) return RatFunc(1);
    Partition conj = conjugate(lambda);
    RatFunc result(1);
    for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            result *= one_minus_monomial(j - i, conj.parts()[i - 1] - conj.parts()[j - 1]);
        }
    }
    return result;
}

Composition parse_composition(const std::string& text) {
    Composition mu;
    if (text.empty()) return mu;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        size_t used = 0;
        int val;
        try {
            val = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw Error("parse_composition: bad part '" + piece + "'");
        }
        if (used != piece.size() || val < 0)
            throw Error("parse_composition: bad part '" + piece + "'");
        mu.push_back(val);
    }
    return mu;
}

namespace {
void collect_partitions(int remaining, int max_part, std::vector<int>& cur, int max_len,
                        std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    int top = std::min(remaining, max_part);
    if (!cur.empty()) top = std::min(top, cur.back());
    for (int p = top; p >= 1; --p) {
        cur.push_back(p);
        collect_partitions(remaining - p, max_part, cur, max_len, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int w, int max_len, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    collect_partitions(w, max_part, cur, max_len, out);
    return out;
}

} // namespace macuv
