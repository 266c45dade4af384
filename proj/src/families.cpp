#include "groot/families.hpp"

#include <algorithm>
#include <cctype>

namespace groot {

namespace {

Int parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw ParseError("trailing characters in integer '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::B: return "B";
        case Family::Y1: return "Y1";
        case Family::Y2: return "Y2";
        case Family::Y3: return "Y3";
    }
    throw Error("unreachable");
}

BrieskornTriple family_triple(Family f, Int n) {
    switch (f) {
        case Family::B:
            if (n < 0) throw ParseError("B(n) requires n >= 0");
            if (n == 0) return {2, 3, 5};
            return {checked_add(checked_mul(2, n), 1), checked_add(checked_mul(4, n), 1),
                    checked_add(checked_mul(4, n), 3)};
        case Family::Y1:
            if (n < 1) throw ParseError("Y1(n) requires n >= 1");
            return {checked_add(checked_mul(4, n), 1), checked_add(checked_mul(6, n), 2),
                    checked_add(checked_mul(12, n), 1)};
        case Family::Y2:
            if (n < 1) throw ParseError("Y2(n) requires n >= 1");
            return {checked_sub(checked_mul(4, n), 1), checked_sub(checked_mul(6, n), 2),
                    checked_sub(checked_mul(12, n), 1)};
        case Family::Y3:
            if (n < 1) throw ParseError("Y3(n) requires n >= 1");
            return {checked_add(checked_mul(8, n), 1), checked_add(checked_mul(12, n), 1),
                    checked_add(checked_mul(24, n), 5)};
    }
    throw Error("unreachable");
}

MonotoneSubroot family_subroot(Family f, Int n) {
    switch (f) {
        case Family::B:
            if (n < 0) throw ParseError("B(n) requires n >= 0");
            if (n == 0) return MonotoneSubroot({{2, 2}});
            return MonotoneSubroot({{2 * n, 0}});
        case Family::Y1:
            if (n < 1) throw ParseError("Y1(n) requires n >= 1");
            return MonotoneSubroot({{4 * n, 0}, {2 * n, 2 * n}});
        case Family::Y2:
            if (n < 1) throw ParseError("Y2(n) requires n >= 1");
            // At n = 1 the pair (4n-2, 0) ties the fixed leaf (2n, 2n) in
            // height, so the canonical form collapses to the single tower.
            if (n == 1) return MonotoneSubroot({{2, 2}});
            return MonotoneSubroot({{4 * n - 2, 0}, {2 * n, 2 * n}});
        case Family::Y3:
            if (n < 1) throw ParseError("Y3(n) requires n >= 1");
            return MonotoneSubroot({{8 * n, 0}});
    }
    throw Error("unreachable");
}

BrieskornTriple parse_triple(const std::string& text) {
    std::string s = strip_spaces(text);
    Orientation o = Orientation::Positive;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') o = Orientation::Negative;
        s = s.substr(1);
    }
    if (s.empty()) throw ParseError("empty manifold spec");

    // Family token
    for (Family f : {Family::B, Family::Y1, Family::Y2, Family::Y3}) {
        const std::string name = family_name(f);
        if (s.rfind(name + "(", 0) == 0 && s.back() == ')') {
            Int n = parse_int(s.substr(name.size() + 1, s.size() - name.size() - 2));
            BrieskornTriple t = family_triple(f, n);
            t.orientation = o;
            return t;
        }
    }

    // Raw triple "a,b,c"
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        parts.push_back(s.substr(start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) throw ParseError("expected 'a,b,c' or a family token, got '" + text + "'");
    return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]), o};
}

std::vector<SumTerm> parse_connected_sum(const std::string& expr) {
    std::vector<SumTerm> terms;
    std::size_t start = 0;
    while (start <= expr.size()) {
        std::size_t hash = expr.find('#', start);
        std::string piece =
            strip_spaces(expr.substr(start, hash == std::string::npos ? hash : hash - start));
        if (piece.empty()) throw ParseError("empty term in connected sum expression");

        SumTerm term;
        Int sign = 1;
        if (piece[0] == '-' || piece[0] == '+') {
            if (piece[0] == '-') sign = -1;
            piece = piece.substr(1);
        }
        Int count = 1;
        std::size_t star = piece.find('*');
        // Avoid eating the comma of a raw triple: a multiplier is digits only.
        if (star != std::string::npos &&
            std::all_of(piece.begin(), piece.begin() + static_cast<long>(star),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            count = parse_int(piece.substr(0, star));
            piece = piece.substr(star + 1);
        }

        for (Family f : {Family::B, Family::Y1, Family::Y2, Family::Y3}) {
            const std::string name = family_name(f);
            if (piece.rfind(name + "(", 0) == 0 && piece.back() == ')') {
                Int n = parse_int(piece.substr(name.size() + 1, piece.size() - name.size() - 2));
                term.token = {f, n};
                break;
            }
        }
        BrieskornTriple t = parse_triple(piece);
        // Orientation folds into the multiplicity; triples are kept positive.
        if (!t.positive()) {
            sign = checked_neg(sign);
            t = t.reversed();
        }
        term.triple = t;
        term.multiplicity = checked_mul(sign, count);
        terms.push_back(term);

        if (hash == std::string::npos) break;
        start = hash + 1;
    }
    return terms;
}

std::vector<std::pair<BrieskornTriple, Int>> kernel_family(int which, Int n) {
    if (n < 1) throw ParseError("kernel families require n >= 1");
    switch (which) {
        case 1:
            return {{family_triple(Family::Y1, n), 1},
                    {family_triple(Family::B, 2 * n), -1},
                    {family_triple(Family::B, n), 1},
                    {family_triple(Family::B, 0), -n}};
        case 2:
            return {{family_triple(Family::Y2, n), 1},
                    {family_triple(Family::B, 2 * n - 1), -1},
                    {family_triple(Family::B, n), 1},
                    {family_triple(Family::B, 0), -n}};
        case 3:
            return {{family_triple(Family::Y3, n), 1}, {family_triple(Family::B, 4 * n), -1}};
        default:
            throw ParseError("kernel family index must be 1, 2 or 3");
    }
}

}  // namespace groot
