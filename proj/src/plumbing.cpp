#include "groot/plumbing.hpp"

namespace groot {

namespace {

// Determinants of the leading tridiagonal blocks of a weight chain:
// T[0] = 1, T[j] = w_j T[j-1] - T[j-2].
std::vector<Int> continuants(const std::vector<Int>& weights) {
    std::vector<Int> T(weights.size() + 1);
    T[0] = 1;
    Int prev = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        Int cur = checked_sub(checked_mul(weights[j], T[j]), prev);
        prev = T[j];
        T[j + 1] = cur;
    }
    return T;
}

}  // namespace

PlumbingGraph build_plumbing(const SeifertData& d) {
    PlumbingGraph g;
    g.center_weight = d.e0;
    for (const auto& [alpha, omega] : d.legs) g.legs.push_back(neg_continued_fraction(alpha, omega));
    verify_negative_definite(g);
    return g;
}

std::vector<Int> leading_principal_minors(const PlumbingGraph& g) {
    std::vector<Int> minors;
    minors.reserve(static_cast<std::size_t>(g.vertex_count()));

    Int done = 1;                 // product of determinants of completed legs
    std::vector<Int> leg_det;     // D_i = det(leg i)
    std::vector<Int> leg_det_in;  // E_i = det(leg i minus center-adjacent vertex)
    for (const auto& leg : g.legs) {
        auto T = continuants(leg);
        for (std::size_t j = 1; j <= leg.size(); ++j) minors.push_back(checked_mul(done, T[j]));
        leg_det.push_back(T[leg.size()]);
        std::vector<Int> inner(leg.begin() + 1, leg.end());
        leg_det_in.push_back(continuants(inner)[inner.size()]);
        done = checked_mul(done, T[leg.size()]);
    }

    // Expansion along the central row: det Q = e0 prod D_i - sum_i E_i prod_{j!=i} D_j.
    Int det = checked_mul(g.center_weight, done);
    for (std::size_t i = 0; i < g.legs.size(); ++i) {
        Int cross = leg_det_in[i];
        for (std::size_t j = 0; j < g.legs.size(); ++j)
            if (j != i) cross = checked_mul(cross, leg_det[j]);
        det = checked_sub(det, cross);
    }
    minors.push_back(det);
    return minors;
}

void verify_negative_definite(const PlumbingGraph& g) {
    auto minors = leading_principal_minors(g);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        const bool want_negative = (k % 2 == 0);  // minor of order k+1
        if (minors[k] == 0 || (minors[k] < 0) != want_negative)
            throw NegativeDefinitenessFailure("leading principal minor " + std::to_string(k + 1) +
                                              " has wrong sign: " + std::to_string(minors[k]));
    }
}

Rational k_squared(const PlumbingGraph& g) {
    // Solve Q x = b by eliminating each leg from its tip toward the center:
    // on a chain, x_j = p_j + q_j x_{j-1} with x_0 the central value.
    const Rational minus_one(-1);
    std::vector<std::vector<Rational>> leg_p(g.legs.size()), leg_q(g.legs.size());
    Rational center_p_sum, center_q_sum;
    for (std::size_t i = 0; i < g.legs.size(); ++i) {
        const auto& leg = g.legs[i];
        const std::size_t len = leg.size();
        leg_p[i].resize(len);
        leg_q[i].resize(len);
        Rational p_next, q_next;  // of vertex j+1; zero beyond the tip
        for (std::size_t jj = len; jj-- > 0;) {
            Rational b = Rational(checked_sub(checked_neg(leg[jj]), 2));
            Rational denom = Rational(leg[jj]) + q_next;
            if (denom.is_zero()) throw Error("k_squared: singular chain elimination");
            leg_q[i][jj] = minus_one / denom;
            leg_p[i][jj] = (b - p_next) / denom;
            p_next = leg_p[i][jj];
            q_next = leg_q[i][jj];
        }
        center_p_sum += leg_p[i][0];
        center_q_sum += leg_q[i][0];
    }

    Rational b_center(checked_sub(checked_neg(g.center_weight), 2));
    Rational denom = Rational(g.center_weight) + center_q_sum;
    if (denom.is_zero()) throw Error("k_squared: singular central elimination");
    Rational x_center = (b_center - center_p_sum) / denom;

    Rational k2 = b_center * x_center;
    for (std::size_t i = 0; i < g.legs.size(); ++i) {
        Rational x_prev = x_center;
        for (std::size_t j = 0; j < g.legs[i].size(); ++j) {
            Rational x = leg_p[i][j] + leg_q[i][j] * x_prev;
            k2 += Rational(checked_sub(checked_neg(g.legs[i][j]), 2)) * x;
            x_prev = x;
        }
    }
    return k2;
}

Int grading_shift_sigma(const PlumbingGraph& g) {
    Rational k2 = k_squared(g);
    if (!k2.is_integer()) throw NonIntegralShift("K^2 is not an integer: " + k2.str());
    Int total = checked_add(k2.num(), g.vertex_count());
    if (total % 8 != 0)
        throw NonIntegralShift("(K^2 + s)/4 = " + Rational(total, 4).str() + " is not an even integer");
    return total / 4;
}

Int fintushel_stern_R(const PlumbingGraph& g) {
    return checked_sub(checked_mul(-2, g.center_weight), 3);
}

IntMatrix intersection_matrix(const PlumbingGraph& g, Int max_size) {
    const Int s = g.vertex_count();
    if (s > max_size)
        throw Error("intersection_matrix: graph with " + std::to_string(s) + " vertices exceeds max_size");
    IntMatrix Q = IntMatrix::Zero(s, s);
    const Int center = s - 1;
    Q(center, center) = g.center_weight;
    Int base = 0;
    for (const auto& leg : g.legs) {
        for (std::size_t j = 0; j < leg.size(); ++j) {
            const Int v = base + static_cast<Int>(j);
            Q(v, v) = leg[j];
            const Int prev = (j == 0) ? center : v - 1;
            Q(v, prev) = 1;
            Q(prev, v) = 1;
        }
        base += static_cast<Int>(leg.size());
    }
    return Q;
}

}  // namespace groot
