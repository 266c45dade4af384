#include "groot/local_class.hpp"

namespace groot {

std::string LocalClass::str() const {
    if (is_zero()) return "0";
    std::string s;
    auto append = [&s](Int coeff, const std::string& sym, bool coeff_always) {
        if (coeff == 0) return;
        if (s.empty())
            s += coeff < 0 ? "-" : "";
        else
            s += coeff < 0 ? " - " : " + ";
        Int a = coeff < 0 ? -coeff : coeff;
        if (a != 1 || coeff_always) s += std::to_string(a) + "*";
        s += sym;
    };
    for (auto it = x.rbegin(); it != x.rend(); ++it)
        append(it->second, "X_" + std::to_string(it->first), false);
    append(t, "T", true);
    return s;
}

LocalClass& LocalClass::operator+=(const LocalClass& o) {
    t = checked_add(t, o.t);
    for (const auto& [k, c] : o.x) {
        Int v = checked_add(x.count(k) ? x[k] : 0, c);
        if (v == 0)
            x.erase(k);
        else
            x[k] = v;
    }
    shift_rule_used = shift_rule_used || o.shift_rule_used;
    return *this;
}

LocalClass& LocalClass::operator-=(const LocalClass& o) { return *this += -o; }

LocalClass LocalClass::operator-() const {
    LocalClass r;
    r.t = checked_neg(t);
    for (const auto& [k, c] : x) r.x[k] = checked_neg(c);
    r.shift_rule_used = shift_rule_used;
    return r;
}

LocalClass operator*(Int c, const LocalClass& a) {
    LocalClass r;
    if (c == 0) {
        r.shift_rule_used = a.shift_rule_used;
        return r;
    }
    r.t = checked_mul(c, a.t);
    for (const auto& [k, v] : a.x) r.x[k] = checked_mul(c, v);
    r.shift_rule_used = a.shift_rule_used;
    return r;
}

LocalClass class_T(Int coefficient) {
    LocalClass r;
    r.t = coefficient;
    return r;
}

LocalClass class_X(Int k, Int coefficient) {
    if (k < 1) throw InvalidParams("X_k requires k >= 1");
    LocalClass r;
    if (coefficient != 0) r.x[k] = coefficient;
    return r;
}

LocalClass class_of_atom(Int h, Int r) {
    if (h % 2 != 0 || r % 2 != 0) throw OddGrading("atom gradings must be even");
    if (h < r) throw InvalidParams("atom requires h >= r");
    if (h == r) return class_T(h / 2);
    if (r == 0) return class_X(h / 2);
    LocalClass c = class_X((h - r) / 2) + class_T(r / 2);
    c.shift_rule_used = true;
    return c;
}

LocalClass class_of_subroot(const MonotoneSubroot& m) {
    LocalClass c;
    const auto& p = m.params;
    for (std::size_t i = 0; i < p.size(); ++i) {
        c += class_of_atom(p[i].first, p[i].second);
        if (i + 1 < p.size()) c -= class_of_atom(p[i + 1].first, p[i].second);
    }
    return c;
}

LocalClass class_of_manifold(const BrieskornTriple& t) {
    BrieskornTriple pos = t.positive() ? t : t.reversed();
    LocalClass c = class_of_subroot(extract_monotone(graded_root_of(pos)));
    return t.positive() ? c : -c;
}

std::pair<bool, LocalClass> is_kernel_element(const std::vector<std::pair<BrieskornTriple, Int>>& summands) {
    LocalClass total;
    for (const auto& [triple, mult] : summands) total += mult * class_of_manifold(triple);
    return {total.is_zero(), total};
}

std::vector<std::string> vanishing_report(const LocalClass& c, bool sw_equivalence_pair) {
    if (!c.is_zero()) return {};
    std::vector<std::string> names = {"d_lower", "d", "d_bar", "phi_n (all n >= 1)", "mu_bar"};
    if (sw_equivalence_pair) {
        for (const char* n : {"alpha", "beta", "gamma", "delta_lower", "delta", "delta_bar", "kappa"})
            names.emplace_back(n);
        for (int i = 0; i <= 7; ++i) names.push_back("kappa_o_" + std::to_string(i));
    }
    return names;
}

}  // namespace groot
