#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "equichar/error.hpp"
#include "equichar/perm.hpp"
#include "equichar/rational.hpp"

namespace equichar {

/// Largest group order `PermGroup::enumerate` will build (default 20000).
inline std::atomic<std::size_t>& group_order_cap() {
    static std::atomic<std::size_t> cap{20000};
    return cap;
}

/// A conjugacy class of group elements, referenced by element index.
struct ConjClass {
    int representative = 0;  // smallest element index in the class
    int order = 1;           // element order of the members
    std::vector<int> elements;
    std::size_t size() const { return elements.size(); }
};

/// A conjugacy class of cyclic subgroups of order prime to the characteristic,
/// with a marked generator fixing the identification with mu_r.
struct CyclicSubgroupClass {
    int id = 0;                  // position in cyclic_subgroup_classes()
    int generator = 0;           // element index of the marked generator s
    int order = 1;               // r
    std::vector<int> elements;   // s^0, s^1, ..., s^(r-1) as element indices
    std::size_t centralizer_order = 0;
    std::size_t normalizer_order = 0;
    std::size_t conjugates = 0;  // number of subgroups in the class

    /// Number of conjugacy classes of monomorphisms mu_r -> G with image in
    /// this subgroup class: phi(r) |C(s)| / |N(<s>)|.
    std::int64_t marking_count() const {
        return euler_phi(order) * static_cast<std::int64_t>(centralizer_order) /
               static_cast<std::int64_t>(normalizer_order);
    }
};

/// A finite permutation group with all elements enumerated.
/// Element 0 is the identity; the rest follow in breadth-first order from the
/// identity, applying the generators in the order given (x -> g * x).
class PermGroup {
public:
    static std::shared_ptr<const PermGroup> enumerate(int degree, std::vector<Perm> generators,
                                                      int characteristic = 0) {
        if (degree < 0) throw InvariantError("negative degree");
        if (characteristic < 0 || (characteristic > 0 && !is_prime(characteristic)))
            throw InvariantError("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
        for (const auto& g : generators)
            if (g.degree() != degree) throw InvariantError("generator degree does not match group degree");
        auto G = std::shared_ptr<PermGroup>(new PermGroup);
        G->degree_ = degree;
        G->characteristic_ = characteristic;
        G->generators_ = std::move(generators);
        G->build();
        return G;
    }

    /// Same group, different characteristic.
    std::shared_ptr<const PermGroup> with_characteristic(int p) const {
        return enumerate(degree_, generators_, p);
    }

    int degree() const { return degree_; }
    int characteristic() const { return characteristic_; }
    const std::vector<Perm>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }
    int size() const { return static_cast<int>(elements_.size()); }
    const Perm& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<Perm>& elements() const { return elements_; }

    /// Index of a permutation, or -1 when it is not in the group.
    int index_of(const Perm& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

    /// Index of element(a) * element(b).
    int mul(int a, int b) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
        return index_.at(element(a) * element(b));
    }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int element_order(int a) const { return order_[static_cast<std::size_t>(a)]; }
    int pow(int a, std::int64_t k) const {
        const int o = element_order(a);
        k = mod(k, o);
        int r = 0;
        for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }
    /// t^-1 g t
    int conjugate(int g, int t) const { return mul(inv(t), mul(g, t)); }

    /// Least common multiple of the orders of the elements of order prime to p.
    std::int64_t exponent(int p = 0) const {
        std::int64_t e = 1;
        for (int o : order_)
            if (p == 0 || o % p != 0) e = lcm(e, o);
        return e;
    }

    bool is_regular(int a) const { return characteristic_ == 0 || element_order(a) % characteristic_ != 0; }

    bool is_abelian() const {
        for (std::size_t i = 0; i < generators_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
        return true;
    }

    /// Conjugacy classes of all elements (or only p-regular ones), sorted by
    /// element order, then class size, then smallest element index.
    const std::vector<ConjClass>& conjugacy_classes(bool p_regular_only) const {
        std::call_once(classes_once_, [this] { build_classes(); });
        return p_regular_only ? regular_classes_ : all_classes_;
    }

    /// Position of the element's class in conjugacy_classes(false).
    int class_of(int a) const {
        std::call_once(classes_once_, [this] { build_classes(); });
        return class_of_[static_cast<std::size_t>(a)];
    }

    /// Position of the element's class in conjugacy_classes(true), or -1 when
    /// the element is p-singular.
    int regular_class_of(int a) const {
        std::call_once(classes_once_, [this] { build_classes(); });
        return regular_class_of_[static_cast<std::size_t>(a)];
    }

    /// One entry per conjugacy class of cyclic subgroups of order prime to p
    /// (p = characteristic()), trivial subgroup first, sorted by order and then
    /// by the smallest element index of the representative generator.
    const std::vector<CyclicSubgroupClass>& cyclic_subgroup_classes() const {
        std::call_once(cyclic_once_, [this] { build_cyclic(); });
        return cyclic_;
    }

    std::vector<int> cyclic_elements(int g) const {
        std::vector<int> out{0};
        for (int x = g; x != 0; x = mul(x, g)) out.push_back(x);
        return out;
    }

private:
    PermGroup() = default;

    void build() {
        const std::size_t cap = group_order_cap().load();
        Perm id = Perm::identity(degree_);
        elements_.push_back(id);
        index_.emplace(id, 0);
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const auto& g : generators_) {
                Perm y = g * elements_[static_cast<std::size_t>(x)];
                if (index_.count(y)) continue;
                if (elements_.size() >= cap)
                    throw CapError("group closure exceeds cap of " + std::to_string(cap) + " elements");
                index_.emplace(y, static_cast<int>(elements_.size()));
                elements_.push_back(std::move(y));
                queue.push_back(static_cast<int>(elements_.size()) - 1);
            }
        }
        const std::size_t n = elements_.size();
        if (n <= 1024) {
            table_.resize(n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
        }
        inverse_.resize(n);
        order_.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            inverse_[a] = index_.at(elements_[a].inverse());
            int o = 1;
            for (int x = static_cast<int>(a); x != 0; x = mul(x, static_cast<int>(a))) ++o;
            order_[a] = o;
        }
    }

    void build_classes() const {
        const int n = size();
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        std::vector<ConjClass> classes;
        for (int g = 0; g < n; ++g) {
            if (owner[static_cast<std::size_t>(g)] >= 0) continue;
            ConjClass c;
            c.representative = g;
            c.order = element_order(g);
            for (int t = 0; t < n; ++t) {
                int h = conjugate(g, t);
                if (owner[static_cast<std::size_t>(h)] < 0) {
                    owner[static_cast<std::size_t>(h)] = static_cast<int>(classes.size());
                    c.elements.push_back(h);
                }
            }
            std::sort(c.elements.begin(), c.elements.end());
            classes.push_back(std::move(c));
        }
        std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
            if (a.order != b.order) return a.order < b.order;
            if (a.size() != b.size()) return a.size() < b.size();
            return a.representative < b.representative;
        });
        class_of_.assign(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (int e : classes[i].elements) class_of_[static_cast<std::size_t>(e)] = static_cast<int>(i);
        all_classes_ = classes;
        regular_class_of_.assign(static_cast<std::size_t>(n), -1);
        for (auto& c : classes) {
            if (!is_regular(c.representative)) continue;
            for (int e : c.elements) regular_class_of_[static_cast<std::size_t>(e)] = static_cast<int>(regular_classes_.size());
            regular_classes_.push_back(std::move(c));
        }
    }

    void build_cyclic() const {
        const int n = size();
        std::map<std::vector<int>, int> seen;  // sorted subgroup -> class slot
        std::vector<CyclicSubgroupClass> out;
        for (int g = 0; g < n; ++g) {
            if (!is_regular(g)) continue;
            std::vector<int> sub = cyclic_elements(g);
            std::vector<int> key = sub;
            std::sort(key.begin(), key.end());
            if (seen.count(key)) continue;
            CyclicSubgroupClass c;
            c.generator = g;  // smallest-index generator, since g is scanned in order
            c.order = element_order(g);
            c.elements = sub;
            std::size_t normalizer = 0, centralizer = 0;
            std::vector<std::vector<int>> conjugates;
            for (int t = 0; t < n; ++t) {
                if (mul(g, t) == mul(t, g)) ++centralizer;
                std::vector<int> conj;
                conj.reserve(key.size());
                for (int x : key) conj.push_back(conjugate(x, t));
                std::sort(conj.begin(), conj.end());
                if (conj == key) ++normalizer;
                if (!seen.count(conj)) {
                    seen.emplace(conj, static_cast<int>(out.size()));
                    conjugates.push_back(std::move(conj));
                }
            }
            c.centralizer_order = centralizer;
            c.normalizer_order = normalizer;
            c.conjugates = conjugates.size();
            out.push_back(std::move(c));
        }
        std::stable_sort(out.begin(), out.end(), [](const CyclicSubgroupClass& a, const CyclicSubgroupClass& b) {
            if (a.order != b.order) return a.order < b.order;
            return a.generator < b.generator;
        });
        for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
        cyclic_ = std::move(out);
    }

    int degree_ = 0;
    int characteristic_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    std::unordered_map<Perm, int, PermHash> index_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<int> order_;

    mutable std::once_flag classes_once_;
    mutable std::vector<ConjClass> all_classes_;
    mutable std::vector<ConjClass> regular_classes_;
    mutable std::vector<int> class_of_;
    mutable std::vector<int> regular_class_of_;
    mutable std::once_flag cyclic_once_;
    mutable std::vector<CyclicSubgroupClass> cyclic_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

inline GroupPtr enumerate(int degree, std::vector<Perm> generators, int characteristic = 0) {
    return PermGroup::enumerate(degree, std::move(generators), characteristic);
}

inline const std::vector<ConjClass>& conjugacy_classes(const PermGroup& G, bool p_regular_only) {
    return G.conjugacy_classes(p_regular_only);
}

inline const std::vector<CyclicSubgroupClass>& cyclic_subgroup_classes(const PermGroup& G) {
    return G.cyclic_subgroup_classes();
}

/// An injective homomorphism H -> G given by the identity on permutations.
struct SubgroupEmbedding {
    GroupPtr sub;
    GroupPtr ambient;
    std::vector<int> to_ambient;    // sub index -> ambient index
    std::vector<int> from_ambient;  // ambient index -> sub index or -1

    int image(int h) const { return to_ambient[static_cast<std::size_t>(h)]; }
    bool contains(int g) const { return from_ambient[static_cast<std::size_t>(g)] >= 0; }
};

/// The subgroup of G generated by the given elements (indices into G).
/// Generators are thinned greedily so that the subgroup's element order
/// depends only on the input list.
inline SubgroupEmbedding subgroup(const GroupPtr& G, const std::vector<int>& element_indices) {
    std::vector<Perm> gens;
    std::vector<bool> inside(G->order(), false);
    inside[0] = true;
    std::vector<int> members{0};
    for (int e : element_indices) {
        if (e < 0 || e >= G->size()) throw InvariantError("subgroup generator index out of range");
        if (inside[static_cast<std::size_t>(e)]) continue;
        gens.push_back(G->element(e));
        // Re-close: multiply everything by all generators until stable.
        std::deque<int> queue(members.begin(), members.end());
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const auto& gp : gens) {
                int y = G->mul(G->index_of(gp), x);
                if (!inside[static_cast<std::size_t>(y)]) {
                    inside[static_cast<std::size_t>(y)] = true;
                    members.push_back(y);
                    queue.push_back(y);
                }
            }
        }
    }
    SubgroupEmbedding emb;
    emb.ambient = G;
    emb.sub = PermGroup::enumerate(G->degree(), std::move(gens), G->characteristic());
    emb.to_ambient.resize(emb.sub->order());
    emb.from_ambient.assign(G->order(), -1);
    for (int h = 0; h < emb.sub->size(); ++h) {
        int g = G->index_of(emb.sub->element(h));
        if (g < 0) throw InvariantError("subgroup element not in ambient group");
        emb.to_ambient[static_cast<std::size_t>(h)] = g;
        emb.from_ambient[static_cast<std::size_t>(g)] = h;
    }
    return emb;
}

/// Embedding of a group built independently on the same points (e.g. parsed
/// from a file) into G; fails unless every element lies in G.
inline SubgroupEmbedding embed(const GroupPtr& H, const GroupPtr& G) {
    if (H->degree() != G->degree()) throw InvariantError("embedding: degrees differ");
    if (H->characteristic() != G->characteristic()) throw InvariantError("embedding: characteristics differ");
    SubgroupEmbedding emb{H, G, std::vector<int>(H->order()), std::vector<int>(G->order(), -1)};
    for (int h = 0; h < H->size(); ++h) {
        int g = G->index_of(H->element(h));
        if (g < 0) throw InvariantError("embedding: element " + H->element(h).cycle_string() + " not in ambient group");
        emb.to_ambient[static_cast<std::size_t>(h)] = g;
        emb.from_ambient[static_cast<std::size_t>(g)] = h;
    }
    return emb;
}

/// The cyclic subgroup <s> with element k equal to s^k.
inline SubgroupEmbedding cyclic_subgroup(const GroupPtr& G, int s) { return subgroup(G, {s}); }

/// C_G(s) for the marked generator s of sigma.
inline SubgroupEmbedding centralizer(const GroupPtr& G, const CyclicSubgroupClass& sigma) {
    std::vector<int> members;
    for (int t = 0; t < G->size(); ++t)
        if (G->mul(t, sigma.generator) == G->mul(sigma.generator, t)) members.push_back(t);
    return subgroup(G, members);
}

}  // namespace equichar
