#ifndef TROP_PARTITION_HPP
#define TROP_PARTITION_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "trop/errors.hpp"

namespace trop {

// Ramification profile: weakly decreasing positive integers. Parts are
// normalized on construction so two equal profiles compare equal.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) fail(errk::MalformedProfile, "partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    static Partition single(int n) { return Partition(std::vector<int>{n}); }
    static Partition ones(int n) { return Partition(std::vector<int>(static_cast<size_t>(n), 1)); }
    // (2,1,...,1) summing to d; the simple-ramification profile.
    static Partition simple(int d) {
        std::vector<int> p(static_cast<size_t>(d - 1), 1);
        if (d >= 2) p[0] = 2;
        return Partition(std::move(p));
    }

    const std::vector<int>& parts() const { return parts_; }
    int sum() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    // Size of the centralizer of a permutation of this cycle type in S_d:
    // prod k^{m_k} * m_k!.
    std::int64_t centralizer_order() const {
        std::int64_t z = 1;
        size_t i = 0;
        while (i < parts_.size()) {
            size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            std::int64_t mult = static_cast<std::int64_t>(j - i);
            for (std::int64_t m = 1; m <= mult; ++m) z *= m * parts_[i];
            i = j;
        }
        return z;
    }

private:
    std::vector<int> parts_;
};

// All partitions of n in reverse lexicographic order, (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n <= 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Sub-multisets of `pool` (a weakly decreasing part list) with a given sum.
// Returned as part lists; used when distributing tooth strands over fiber
// vertices.
inline std::vector<std::vector<int>> submultisets_with_sum(const std::vector<int>& pool, int target) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t idx, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (idx >= pool.size()) return;
        // skip the whole run of equal parts or take k of them
        size_t j = idx;
        while (j < pool.size() && pool[j] == pool[idx]) ++j;
        int run = static_cast<int>(j - idx);
        int p = pool[idx];
        for (int take = 0; take <= run && take * p <= rem; ++take) {
            for (int t = 0; t < take; ++t) cur.push_back(p);
            self(self, j, rem - take * p);
            for (int t = 0; t < take; ++t) cur.pop_back();
        }
    };
    rec(rec, 0, target);
    return out;
}

// "a,b,c|d,e|..." -> normalized profiles; all sums must agree.
inline std::vector<Partition> parse_profiles(const std::string& text) {
    std::vector<Partition> out;
    std::vector<int> parts;
    std::string token;
    auto flush_token = [&]() {
        if (token.empty()) fail(errk::MalformedProfile, "empty part in profile string");
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            fail(errk::MalformedProfile, "bad part '" + token + "'");
        }
        if (used != token.size()) fail(errk::MalformedProfile, "bad part '" + token + "'");
        parts.push_back(value);
        token.clear();
    };
    for (char c : text + "|") {
        if (c == ' ') continue;
        if (c == ',') {
            flush_token();
        } else if (c == '|') {
            flush_token();
            out.emplace_back(parts);
            parts.clear();
        } else {
            token += c;
        }
    }
    if (out.empty()) fail(errk::MalformedProfile, "no profiles given");
    int d = out.front().sum();
    for (const auto& p : out)
        if (p.sum() != d)
            fail(errk::UnequalSums, "profile " + p.str() + " does not sum to " + std::to_string(d));
    return out;
}

// pool minus sub (both weakly decreasing multisets); sub must be contained.
inline std::vector<int> multiset_minus(const std::vector<int>& pool, const std::vector<int>& sub) {
    std::vector<int> out;
    size_t i = 0, j = 0;
    while (i < pool.size()) {
        if (j < sub.size() && pool[i] == sub[j]) { ++i; ++j; }
        else out.push_back(pool[i++]);
    }
    if (j != sub.size()) fail(errk::InvalidDivisor, "multiset_minus: not a sub-multiset");
    return out;
}

} // namespace trop

#endif
