#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "equichar/cyclotomic.hpp"
#include "equichar/error.hpp"
#include "equichar/group.hpp"

namespace equichar {

/// A virtual character with cyclotomic values, one per conjugacy class of the
/// group. In characteristic p > 0 only the p-regular classes carry values
/// (Brauer-type class functions). Class order is the group's deterministic
/// class order.
class ClassFunction {
public:
    ClassFunction() = default;

    ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
        : group_(std::move(group)), values_(std::move(values)) {
        if (values_.size() != classes().size())
            throw InvariantError("class function has " + std::to_string(values_.size()) + " values, group has " +
                                 std::to_string(classes().size()) + " classes");
        const std::int64_t e = group_->exponent(group_->characteristic());
        for (auto& v : values_)
            if (e % v.conductor() == 0) v = v.lift(e);
    }

    static ClassFunction zero(const GroupPtr& G) {
        return ClassFunction(G, std::vector<Cyclotomic>(G->conjugacy_classes(G->characteristic() > 0).size()));
    }
    static ClassFunction constant(const GroupPtr& G, const Cyclotomic& c) {
        return ClassFunction(G, std::vector<Cyclotomic>(G->conjugacy_classes(G->characteristic() > 0).size(), c));
    }
    static ClassFunction trivial(const GroupPtr& G) { return constant(G, 1); }

    /// The character of kG: |G| at the identity, 0 elsewhere.
    static ClassFunction regular(const GroupPtr& G) {
        ClassFunction f = zero(G);
        f.values_[0] = Cyclotomic(static_cast<long>(G->order()));
        return f;
    }

    /// Builds a class function from its value on each class representative.
    static ClassFunction from_representatives(const GroupPtr& G, const std::function<Cyclotomic(int)>& value) {
        const auto& cls = G->conjugacy_classes(G->characteristic() > 0);
        std::vector<Cyclotomic> v;
        v.reserve(cls.size());
        for (const auto& c : cls) v.push_back(value(c.representative));
        return ClassFunction(G, std::move(v));
    }

    const GroupPtr& group() const { return group_; }
    int characteristic() const { return group_->characteristic(); }
    const std::vector<ConjClass>& classes() const { return group_->conjugacy_classes(group_->characteristic() > 0); }
    const std::vector<Cyclotomic>& values() const { return values_; }
    const Cyclotomic& value(std::size_t class_index) const { return values_[class_index]; }

    /// Value at an element (index into the group). Throws on p-singular elements.
    const Cyclotomic& at(int element) const {
        if (!group_->is_regular(element))
            throw InvariantError("class function evaluated at a p-singular element");
        return values_[static_cast<std::size_t>(regular_class_index(element))];
    }

    /// Value at the identity.
    const Cyclotomic& degree() const { return values_[0]; }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
        a.check_same(b);
        ClassFunction r = a;
        for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] += b.values_[i];
        return r;
    }
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
        a.check_same(b);
        ClassFunction r = a;
        for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] -= b.values_[i];
        return r;
    }
    ClassFunction operator-() const {
        ClassFunction r = *this;
        for (auto& v : r.values_) v = -v;
        return r;
    }
    /// Pointwise product (tensor product of virtual representations).
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
        a.check_same(b);
        ClassFunction r = a;
        for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] *= b.values_[i];
        return r;
    }
    friend ClassFunction operator*(const Cyclotomic& c, const ClassFunction& a) {
        ClassFunction r = a;
        for (auto& v : r.values_) v *= c;
        return r;
    }
    ClassFunction& operator+=(const ClassFunction& b) { return *this = *this + b; }
    ClassFunction& operator-=(const ClassFunction& b) { return *this = *this - b; }

    /// Pointwise power; negative exponents require nonvanishing values.
    ClassFunction pow(std::int64_t k) const {
        ClassFunction r = *this;
        for (auto& v : r.values_) v = v.pow(k);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : values_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        if (a.group_ != b.group_ && (a.group_->elements() != b.group_->elements() ||
                                     a.characteristic() != b.characteristic()))
            return false;
        return a.values_ == b.values_;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) s += ", ";
            s += values_[i].str();
        }
        return s + ")";
    }

private:
    int regular_class_index(int element) const {
        return group_->characteristic() == 0 ? group_->class_of(element) : group_->regular_class_of(element);
    }

    void check_same(const ClassFunction& b) const {
        if (group_ != b.group_ && (group_->elements() != b.group_->elements() ||
                                   characteristic() != b.characteristic()))
            throw InvariantError("class functions live on different groups");
    }

    GroupPtr group_;
    std::vector<Cyclotomic> values_;
};

/// Value at h of the restriction to H is f at the image of h.
inline ClassFunction restrict(const ClassFunction& f, const SubgroupEmbedding& H) {
    if (f.group() != H.ambient) throw InvariantError("restrict: function is not on the ambient group");
    return ClassFunction::from_representatives(H.sub, [&](int h) { return f.at(H.image(h)); });
}

/// Frobenius induction, (Ind f)(g) = (1/|H|) sum over t in G with t^-1 g t in H
/// of f(t^-1 g t), evaluated class-wise as (|C_G(g)|/|H|) times the sum of f
/// over H intersected with the class of g.
inline ClassFunction induce(const ClassFunction& f, const SubgroupEmbedding& H) {
    if (f.group() != H.sub) throw InvariantError("induce: function is not on the subgroup");
    const GroupPtr& G = H.ambient;
    const bool reg = G->characteristic() > 0;
    const auto& gcls = G->conjugacy_classes(reg);
    const auto& all = G->conjugacy_classes(false);
    std::vector<Cyclotomic> sums(gcls.size());
    // Position of each full class in the (possibly p-regular) list.
    std::vector<int> slot(all.size(), -1);
    for (std::size_t i = 0; i < gcls.size(); ++i) slot[static_cast<std::size_t>(G->class_of(gcls[i].representative))] = static_cast<int>(i);
    for (int h = 0; h < H.sub->size(); ++h) {
        if (!H.sub->is_regular(h)) continue;
        const int s = slot[static_cast<std::size_t>(G->class_of(H.image(h)))];
        sums[static_cast<std::size_t>(s)] += f.at(h);
    }
    std::vector<Cyclotomic> values(gcls.size());
    for (std::size_t i = 0; i < gcls.size(); ++i) {
        Rational w(static_cast<long>(G->order() / gcls[i].size()), static_cast<long>(H.sub->order()));
        w.canonicalize();
        values[i] = sums[i].scaled(w);
    }
    return ClassFunction(G, std::move(values));
}

/// (1/|G|) sum_g f(g) conj(h(g)), over the classes the functions live on.
inline Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
    if (f.group()->elements() != h.group()->elements() || f.characteristic() != h.characteristic())
        throw InvariantError("inner_product: different groups");
    const auto& cls = f.classes();
    Cyclotomic acc;
    for (std::size_t i = 0; i < cls.size(); ++i)
        acc += (f.value(i) * h.value(i).conj()).scaled(Rational(static_cast<long>(cls[i].size())));
    Rational inv(1, static_cast<long>(f.group()->order()));
    return acc.scaled(inv);
}

/// Dimension of the chi^i-isotypic part of the restriction of f to <s>,
/// where s is an element of order r prime to the characteristic and chi is
/// the character s -> zeta_r:  (1/r) sum_k f(s^k) zeta_r^(-ik).
inline Rational isotypic_dim(const ClassFunction& f, int s, std::int64_t i) {
    const GroupPtr& G = f.group();
    const int r = G->element_order(s);
    if (G->characteristic() > 0 && r % G->characteristic() == 0)
        throw InvariantError("isotypic_dim: order of s is divisible by the characteristic");
    Cyclotomic acc;
    int x = 0;
    for (int k = 0; k < r; ++k, x = G->mul(x, s))
        acc += f.at(x) * Cyclotomic::root_of_unity(r, -i * k);
    Cyclotomic d = acc.scaled(frac(1, r));
    if (!d.is_rational())
        throw DomainError("isotypic dimension is not rational: " + d.str());
    return d.rational();
}

inline Rational isotypic_dim(const ClassFunction& f, const CyclicSubgroupClass& sigma, std::int64_t i) {
    return isotypic_dim(f, sigma.generator, i);
}

/// Projection to the geometric part: (f(1)/|G|) kG, i.e. f(1) at the identity
/// and 0 elsewhere.
inline ClassFunction geometric_project(const ClassFunction& f) {
    std::vector<Cyclotomic> v(f.values().size());
    v[0] = f.degree();
    return ClassFunction(f.group(), std::move(v));
}

/// True when f(g^k) = galois(f(g), k) for all g and all k prime to ord(g),
/// which holds for every genuine virtual character.
inline bool is_galois_stable(const ClassFunction& f) {
    const GroupPtr& G = f.group();
    for (const auto& c : f.classes()) {
        const int g = c.representative;
        const int o = G->element_order(g);
        const Cyclotomic& v = f.at(g);
        for (int k = 2; k < o; ++k) {
            if (gcd(k, o) != 1) continue;
            // Pick k' = k mod o that is also prime to the value's conductor.
            std::int64_t kk = k;
            while (gcd(kk, v.conductor()) != 1) kk += o;
            if (f.at(G->pow(g, k)) != v.galois(kk)) return false;
        }
    }
    return true;
}

}  // namespace equichar
