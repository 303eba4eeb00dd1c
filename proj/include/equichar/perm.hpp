#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "equichar/error.hpp"

namespace equichar {

/// A permutation of {0, ..., degree-1}, stored by images.
/// Products compose as functions: (a * b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int x : images_) {
            if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
                throw InvariantError("images do not form a permutation");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    static Perm identity(int degree) {
        std::vector<int> v(static_cast<std::size_t>(degree));
        std::iota(v.begin(), v.end(), 0);
        return Perm(std::move(v));
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
        std::vector<int> v(static_cast<std::size_t>(degree));
        std::iota(v.begin(), v.end(), 0);
        for (const auto& c : cycles)
            for (std::size_t i = 0; i < c.size(); ++i)
                v[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
        return Perm(std::move(v));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != static_cast<int>(i)) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> v(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
        Perm p;
        p.images_ = std::move(v);
        return p;
    }

    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.degree() != b.degree()) throw InvariantError("permutation degrees differ");
        Perm p;
        p.images_.resize(a.images_.size());
        for (std::size_t i = 0; i < a.images_.size(); ++i)
            p.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
        return p;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

    std::string cycle_string() const {
        std::string out;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i] || images_[i] == static_cast<int>(i)) continue;
            out += "(";
            std::size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += " ";
                out += std::to_string(j);
                first = false;
                j = static_cast<std::size_t>(images_[j]);
            }
            out += ")";
        }
        return out.empty() ? "()" : out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.cycle_string(); }

private:
    std::vector<int> images_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int x : p.images()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace equichar
