#include "algser/varset.hpp"

#include <algorithm>
#include <set>

#include "algser/errors.hpp"

namespace algser {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw UsageError("empty variable name");
        if (!seen.insert(n).second) throw UsageError("duplicate variable name: '" + n + "'");
    }
}

VarSet VarSet::split(const std::string& comma_list) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : comma_list) {
        if (c == ',') {
            names.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    names.push_back(cur);
    return VarSet(std::move(names));
}

std::size_t VarSet::index_of(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw UsageError("unknown variable: '" + name + "'");
}

std::optional<std::size_t> VarSet::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

VarSet VarSet::without(std::size_t i) const {
    std::vector<std::string> names = names_;
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(i));
    return VarSet(std::move(names));
}

VarSet VarSet::with_appended(const std::string& name) const {
    std::vector<std::string> names = names_;
    names.push_back(name);
    return VarSet(std::move(names));
}

int total_degree(const Exponents& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

static void enumerate_degree(std::size_t nvars, int degree, Exponents& scratch, std::size_t pos,
                             std::vector<Exponents>& out) {
    if (pos + 1 == nvars) {
        scratch[pos] = degree;
        out.push_back(scratch);
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        scratch[pos] = e;
        enumerate_degree(nvars, degree - e, scratch, pos + 1, out);
    }
}

std::vector<Exponents> exponents_up_to(std::size_t nvars, int bound) {
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (bound >= 0) out.push_back({});
        return out;
    }
    Exponents scratch(nvars, 0);
    for (int d = 0; d <= bound; ++d) enumerate_degree(nvars, d, scratch, 0, out);
    return out;
}

}  // namespace algser
