#include "recurkit/recurrence.hpp"

#include <stdexcept>

#include "recurkit/error.hpp"

namespace recurkit {

namespace {

// Linear iteration is fine up to this many steps; beyond it the companion
// matrix is raised by binary powering instead.
constexpr long long kIterationCutoff = 10000;

ExactMatrix matrix_pow(ExactMatrix base, unsigned long long e) {
    ExactMatrix result = ExactMatrix::identity(base.rows());
    while (e > 0) {
        if (e & 1ULL) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

ExactMatrix invert_matrix(const ExactMatrix& m) {
    std::size_t n = m.rows();
    ExactMatrix inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<ExactScalar> e(n, ExactScalar(0));
        e[col] = ExactScalar(1);
        auto x = solve(m, e);
        if (!x) throw std::logic_error("singular companion matrix");
        for (std::size_t i = 0; i < n; ++i) inv.at(i, col) = (*x)[i];
    }
    return inv;
}

}  // namespace

LinearRecurrence::LinearRecurrence(std::vector<ExactScalar> c) : c_(std::move(c)) {
    if (!c_.empty() && c_.back().is_zero())
        throw DomainError("InvalidRecurrence", "last coefficient c_d must be nonzero");
}

Polynomial LinearRecurrence::char_poly() const {
    int d = order();
    std::vector<ExactScalar> coeffs(static_cast<std::size_t>(d) + 1, ExactScalar(0));
    coeffs[static_cast<std::size_t>(d)] = ExactScalar(1);
    for (int i = 1; i <= d; ++i)
        coeffs[static_cast<std::size_t>(d - i)] = -c_[static_cast<std::size_t>(i - 1)];
    return Polynomial(std::move(coeffs));
}

LinearRecurrence LinearRecurrence::from_char_poly(const Polynomial& p) {
    if (p.is_zero() || !p.is_monic())
        throw DomainError("InvalidRecurrence", "characteristic polynomial must be monic");
    int d = p.degree();
    if (d > 0 && p.coeff(0).is_zero())
        throw DomainError("InvalidRecurrence", "characteristic polynomial needs P(0) != 0");
    std::vector<ExactScalar> c(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) c[static_cast<std::size_t>(i - 1)] = -p.coeff(d - i);
    return LinearRecurrence(std::move(c));
}

RecurrentSequence::RecurrentSequence(LinearRecurrence rec, std::vector<ExactScalar> initial)
    : rec_(std::move(rec)), initial_(std::move(initial)) {
    if (static_cast<int>(initial_.size()) != rec_.order())
        throw DomainError("InvalidRecurrence", "need exactly d initial values");
}

std::vector<ExactScalar> eval_range(const RecurrentSequence& seq, long long lo, long long hi) {
    if (lo > hi) return {};
    std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<ExactScalar> out(count, ExactScalar(0));
    int d = seq.order();
    if (d == 0) return out;  // zero sequence
    const auto& c = seq.rec().c();
    auto store = [&](long long a, const ExactScalar& v) {
        if (a >= lo && a <= hi) out[static_cast<std::size_t>(a - lo)] = v;
    };

    // Forward sweep from the initial window.
    std::vector<ExactScalar> window = seq.initial();  // u(base..base+d-1)
    for (int j = 0; j < d; ++j) store(j, window[static_cast<std::size_t>(j)]);
    for (long long a = d; a <= hi; ++a) {
        ExactScalar next(0);
        for (int i = 1; i <= d; ++i)
            next += c[static_cast<std::size_t>(i - 1)] * window[static_cast<std::size_t>(d - i)];
        window.erase(window.begin());
        window.push_back(next);
        store(a, next);
    }

    // Backward sweep below 0.
    if (lo < 0) {
        ExactScalar cd_inv = invert(c.back());
        window = seq.initial();  // u(b..b+d-1) with b = 0
        for (long long b = -1; b >= lo; --b) {
            // u(b) = (u(b+d) - c_1 u(b+d-1) - ... - c_{d-1} u(b+1)) / c_d
            ExactScalar acc = window[static_cast<std::size_t>(d - 1)];
            for (int i = 1; i < d; ++i)
                acc -= c[static_cast<std::size_t>(i - 1)] * window[static_cast<std::size_t>(d - 1 - i)];
            ExactScalar ub = acc * cd_inv;
            window.pop_back();
            window.insert(window.begin(), ub);
            store(b, ub);
        }
    }
    return out;
}

ExactMatrix companion_matrix(const LinearRecurrence& rec) {
    int d = rec.order();
    ExactMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 0; i + 1 < d; ++i)
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = ExactScalar(1);
    for (int i = 0; i < d; ++i)
        m.at(static_cast<std::size_t>(d - 1), static_cast<std::size_t>(i)) =
            rec.c()[static_cast<std::size_t>(d - 1 - i)];
    return m;
}

ExactScalar eval_at(const RecurrentSequence& seq, long long a) {
    int d = seq.order();
    if (d == 0) return ExactScalar(0);
    if (a >= 0 && a < d) return seq.initial()[static_cast<std::size_t>(a)];
    if (a >= -kIterationCutoff && a <= kIterationCutoff) {
        return eval_range(seq, a, a)[0];
    }
    // Far indices: binary powering, backward through the inverse matrix.
    ExactMatrix c = companion_matrix(seq.rec());
    ExactMatrix p = a >= 0 ? matrix_pow(c, static_cast<unsigned long long>(a))
                           : matrix_pow(invert_matrix(c), static_cast<unsigned long long>(-a));
    auto state = p.apply(seq.initial());
    return state[0];
}

ExactScalar companion_eval(const RecurrentSequence& seq, long long a) {
    if (a < 0) throw std::logic_error("companion_eval needs a >= 0");
    int d = seq.order();
    if (d == 0) return ExactScalar(0);
    ExactMatrix p = matrix_pow(companion_matrix(seq.rec()), static_cast<unsigned long long>(a));
    return p.apply(seq.initial())[0];
}

std::pair<LinearRecurrence, Polynomial> minimal_recurrence(const RecurrentSequence& seq) {
    int d = seq.order();
    if (d == 0) return {LinearRecurrence(), Polynomial::one()};
    // Window matrix of shifted terms: row j = u(j .. j+2d-1), j = 0..d.
    std::size_t width = static_cast<std::size_t>(2 * d);
    auto terms = eval_range(seq, 0, 3LL * d - 1);
    auto row_of = [&](int j) {
        std::vector<ExactScalar> r(width);
        for (std::size_t k = 0; k < width; ++k) r[k] = terms[static_cast<std::size_t>(j) + k];
        return r;
    };

    // Incremental elimination, tracking each reduced row as a combination of
    // the original shifted rows; the first dependent row yields the minimal
    // relation.
    std::vector<std::vector<ExactScalar>> basis;       // reduced independent rows
    std::vector<std::vector<ExactScalar>> combos;      // basis[i] = sum combos[i][j] * row_j
    std::vector<std::size_t> pivots;
    for (int r = 0; r <= d; ++r) {
        std::vector<ExactScalar> v = row_of(r);
        std::vector<ExactScalar> combo(static_cast<std::size_t>(d) + 1, ExactScalar(0));
        combo[static_cast<std::size_t>(r)] = ExactScalar(1);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const ExactScalar& lead = v[pivots[b]];
            if (lead.is_zero()) continue;
            ExactScalar f = lead;  // basis rows are pivot-normalized
            for (std::size_t k = 0; k < width; ++k) v[k] -= f * basis[b][k];
            for (std::size_t k = 0; k < combo.size(); ++k) combo[k] -= f * combos[b][k];
        }
        std::size_t piv = 0;
        while (piv < width && v[piv].is_zero()) ++piv;
        if (piv == width) {
            // Row r is dependent: u(a+r) = sum_{i<r} x_i u(a+i) on the window,
            // hence everywhere. combo has coefficient 1 at position r.
            if (r == 0) return {LinearRecurrence(), Polynomial::one()};
            std::vector<ExactScalar> c(static_cast<std::size_t>(r));
            for (int i = 1; i <= r; ++i)
                c[static_cast<std::size_t>(i - 1)] = -combo[static_cast<std::size_t>(r - i)];
            LinearRecurrence minimal(std::move(c));
            return {minimal, minimal.char_poly()};
        }
        ExactScalar inv = invert(v[piv]);
        for (std::size_t k = 0; k < width; ++k) v[k] *= inv;
        for (std::size_t k = 0; k < combo.size(); ++k) combo[k] *= inv;
        basis.push_back(std::move(v));
        combos.push_back(std::move(combo));
        pivots.push_back(piv);
    }
    throw std::logic_error("minimal_recurrence: defining relation not found on window");
}

bool satisfies(const RecurrentSequence& seq, const LinearRecurrence& candidate,
               IndexRange window) {
    if (window.lo > window.hi) throw std::logic_error("empty window");
    int r = candidate.order();
    auto terms = eval_range(seq, window.lo, window.hi + r);
    auto term = [&](long long a) { return terms[static_cast<std::size_t>(a - window.lo)]; };
    for (long long a = window.lo; a <= window.hi; ++a) {
        ExactScalar acc(0);
        for (int i = 1; i <= r; ++i)
            acc += candidate.c()[static_cast<std::size_t>(i - 1)] * term(a + r - i);
        if (term(a + r) != acc) return false;
    }
    return true;
}

}  // namespace recurkit
