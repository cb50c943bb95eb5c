#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algser/rational.hpp"

namespace algser {

// Ordered list of distinct variable names. The order is part of the identity:
// every polynomial or series value is built over one VarSet and exponent
// vectors are indexed by it. Diagonal semantics depend on this order (the
// last variable plays the role of t for the big diagonal).
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);

    // "x1,x2,t" -> VarSet{x1,x2,t}
    static VarSet split(const std::string& comma_list);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::size_t index_of(const std::string& name) const;  // throws UsageError
    std::optional<std::size_t> find(const std::string& name) const;
    bool contains(const std::string& name) const { return find(name).has_value(); }

    VarSet without(std::size_t i) const;
    VarSet with_appended(const std::string& name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

// Exponent vector; always the same length as the owning VarSet.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic: lower total degree first, ties broken by
// lexicographic comparison of the exponent vectors. Gives the deterministic
// iteration order all output serialization relies on.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : e) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using TermMap = std::map<Exponents, Rational, GrlexLess>;

// All exponent vectors of `nvars` entries with total degree <= bound, in
// grlex order.
std::vector<Exponents> exponents_up_to(std::size_t nvars, int bound);

}  // namespace algser
