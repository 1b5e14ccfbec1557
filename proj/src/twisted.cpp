#include "recurkit/twisted.hpp"

#include <algorithm>
#include <stdexcept>

#include "recurkit/error.hpp"

namespace recurkit {

namespace {

// Visit every h-element subset of {0..d-1} (lexicographic index order).
template <typename Fn>
void for_each_subset(int d, int h, Fn&& fn) {
    if (h > d) return;
    std::vector<int> idx(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (h == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        int i = h - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == d - h + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < h; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<ExactScalar> sorted_unique(std::vector<ExactScalar> v) {
    std::sort(v.begin(), v.end(), lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// All h-fold products of the eps components, deduplicated and sorted.
std::vector<ExactScalar> e_set(const TwistedFamily& fam, int h) {
    std::vector<ExactScalar> products;
    for_each_subset(fam.d(), h, [&](const std::vector<int>& idx) {
        ExactScalar p(1);
        for (int i : idx) p *= fam.eps()[static_cast<std::size_t>(i)];
        products.push_back(p);
    });
    return sorted_unique(std::move(products));
}

Polynomial charpoly_of_set(const std::vector<ExactScalar>& set) {
    std::vector<RootFactor> roots;
    roots.reserve(set.size());
    for (const auto& eta : set) roots.push_back({eta, 1});
    return expand_root_factors(roots);
}

// Relation check on raw values: u(a+r) = sum c_i u(a+r-i) for each anchor a.
bool values_satisfy(const std::vector<ExactScalar>& values, const std::vector<ExactScalar>& c) {
    std::size_t r = c.size();
    if (values.size() < r + 1) throw std::logic_error("window too small");
    for (std::size_t a = 0; a + r < values.size(); ++a) {
        ExactScalar acc(0);
        for (std::size_t i = 1; i <= r; ++i) acc += c[i - 1] * values[a + r - i];
        if (values[a + r] != acc) return false;
    }
    return true;
}

}  // namespace

TwistedFamily::TwistedFamily(std::vector<ExactScalar> alpha, std::vector<ExactScalar> eps)
    : alpha_(std::move(alpha)), eps_(std::move(eps)) {
    if (alpha_.empty() || alpha_.size() != eps_.size())
        throw DomainError("InvalidFamily", "alpha and eps must have the same positive length");
    for (const auto& e : eps_)
        if (e.is_zero()) throw DomainError("InvalidFamily", "twists eps_i must be nonzero");
}

std::vector<ExactScalar> form_coefficients(const TwistedFamily& fam, long long a) {
    int d = fam.d();
    std::vector<ExactScalar> beta(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        beta[static_cast<std::size_t>(i)] =
            fam.alpha()[static_cast<std::size_t>(i)] * pow(fam.eps()[static_cast<std::size_t>(i)], a);

    // Route one: expand prod (X - beta_i); U_h = e_h = (-1)^h coeff(d-h).
    std::vector<ExactScalar> poly{ExactScalar(1)};
    for (const auto& b : beta) {
        std::vector<ExactScalar> next(poly.size() + 1, ExactScalar(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= b * poly[k];
        }
        poly = std::move(next);
    }
    std::vector<ExactScalar> u(static_cast<std::size_t>(d));
    for (int h = 1; h <= d; ++h) {
        ExactScalar e = poly[static_cast<std::size_t>(d - h)];
        if (h % 2 != 0) e = -e;
        u[static_cast<std::size_t>(h - 1)] = e;
    }

    // Route two: the explicit sum over index subsets.
    for (int h = 1; h <= d; ++h) {
        ExactScalar sum(0);
        for_each_subset(d, h, [&](const std::vector<int>& idx) {
            ExactScalar p(1);
            for (int i : idx) p *= beta[static_cast<std::size_t>(i)];
            sum += p;
        });
        if (sum != u[static_cast<std::size_t>(h - 1)])
            throw std::logic_error("symmetric-function and subset-sum routes disagree");
    }
    return u;
}

CoefficientSpec coefficient_spec(const TwistedFamily& fam, int h) {
    int d = fam.d();
    if (h < 1 || h > d) throw DomainError("InvalidIndex", "need 1 <= h <= d");

    CoefficientSpec spec;
    spec.h = h;
    spec.e_set = e_set(fam, h);
    spec.m = static_cast<int>(spec.e_set.size());
    spec.charpoly = charpoly_of_set(spec.e_set);

    // m_h = m_{d-h} and the three-way binomial bound.
    int m_dual = static_cast<int>(e_set(fam, d - h).size());
    if (spec.m != m_dual) throw std::logic_error("m_h != m_{d-h}");
    int m1 = static_cast<int>(e_set(fam, 1).size());
    Integer bound = binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(h));
    Integer b2 = binomial(static_cast<unsigned long>(m1 + h - 1), static_cast<unsigned long>(h));
    Integer b3 = binomial(static_cast<unsigned long>(m1 + d - h - 1),
                          static_cast<unsigned long>(d - h));
    if (b2 < bound) bound = b2;
    if (b3 < bound) bound = b3;
    if (Integer(spec.m) > bound) throw std::logic_error("cardinality bound violated");
    spec.bound = bound;

    // Membership: the order-m_h relation with char poly prod (T - eta) holds
    // on the true coefficient values (all eta nonzero, so the constant term
    // is nonzero and this is a genuine recurrence).
    LinearRecurrence rec = LinearRecurrence::from_char_poly(spec.charpoly);
    std::vector<ExactScalar> window;
    for (long long a = -5; a <= 20 + spec.m; ++a)
        window.push_back(form_coefficients(fam, a)[static_cast<std::size_t>(h - 1)]);
    if (!values_satisfy(window, rec.c()))
        throw std::logic_error("U_h does not satisfy its announced recurrence");
    return spec;
}

RecurrentSequence uh_sequence(const TwistedFamily& fam, int h) {
    CoefficientSpec spec = coefficient_spec(fam, h);
    LinearRecurrence rec = LinearRecurrence::from_char_poly(spec.charpoly);
    std::vector<ExactScalar> initial(static_cast<std::size_t>(spec.m));
    for (int a = 0; a < spec.m; ++a)
        initial[static_cast<std::size_t>(a)] =
            form_coefficients(fam, a)[static_cast<std::size_t>(h - 1)];
    return RecurrentSequence(std::move(rec), std::move(initial));
}

bool duality_check(const TwistedFamily& fam, int h, IndexRange window) {
    int d = fam.d();
    if (h < 1 || h > d - 1) throw DomainError("InvalidIndex", "need 1 <= h <= d-1");

    ExactScalar full(1);
    for (const auto& e : fam.eps()) full *= e;

    // eta -> eps_1...eps_d / eta must biject E_h onto E_{d-h}.
    std::vector<ExactScalar> image;
    for (const auto& eta : e_set(fam, h)) image.push_back(full * invert(eta));
    bool bijection_ok = sorted_unique(std::move(image)) == e_set(fam, d - h);

    for (const auto& a : fam.alpha())
        if (a.is_zero())
            throw DomainError("ZeroAlpha", "the duality identity divides by alpha products");

    bool identity_ok = true;
    for (long long a = window.lo; a <= window.hi && identity_ok; ++a) {
        auto u = form_coefficients(fam, a);
        ExactScalar sum(0);
        for_each_subset(d, d - h, [&](const std::vector<int>& idx) {
            ExactScalar p(1);
            for (int i : idx)
                p *= invert(fam.alpha()[static_cast<std::size_t>(i)]) *
                     pow(fam.eps()[static_cast<std::size_t>(i)], -a);
            sum += p;
        });
        identity_ok = u[static_cast<std::size_t>(h - 1)] ==
                      u[static_cast<std::size_t>(d - 1)] * sum;
    }
    return bijection_ok && identity_ok;
}

TwoBlockReport two_block_family(const ExactScalar& eps, const ExactScalar& eta, int l, int d,
                                const std::vector<ExactScalar>& alpha) {
    if (eps == eta) throw DomainError("EqualTwists", "eps and eta must differ");
    if (eps.is_zero() || eta.is_zero())
        throw DomainError("InvalidFamily", "twists must be nonzero");
    if (d < 2 || l < 1 || l > d - 1)
        throw DomainError("InvalidIndex", "need d >= 2 and 1 <= l <= d-1");
    if (static_cast<int>(alpha.size()) != d)
        throw DomainError("InvalidFamily", "need d alpha values");

    std::vector<ExactScalar> twists(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) twists[static_cast<std::size_t>(i)] = i < l ? eps : eta;
    TwistedFamily fam(alpha, twists);

    TwoBlockReport report;
    report.family = fam;
    report.e1 = coefficient_spec(fam, 1).e_set;
    report.e2 = coefficient_spec(fam, 2).e_set;
    report.ed1 = coefficient_spec(fam, d - 1).e_set;
    report.charpoly_u1 = charpoly_of_set(report.e1);
    report.charpoly_u2 = charpoly_of_set(report.e2);
    report.charpoly_ud1 = charpoly_of_set(report.ed1);
    if (d >= 3) {
        report.ed2 = coefficient_spec(fam, d - 2).e_set;
        report.charpoly_ud2 = charpoly_of_set(report.ed2);
    }

    // Closed-form descriptions of the sets, deduplicated the same way.
    auto expect = [&](std::vector<ExactScalar> v) { return sorted_unique(std::move(v)); };
    if (report.e1 != expect({eps, eta})) throw std::logic_error("E_1 mismatch");
    {
        std::vector<ExactScalar> v{pow(eps, l - 1) * pow(eta, d - l),
                                   pow(eps, l) * pow(eta, d - l - 1)};
        if (report.ed1 != expect(std::move(v))) throw std::logic_error("E_{d-1} mismatch");
    }
    {
        std::vector<ExactScalar> v;
        if (l >= 2) v.push_back(eps * eps);
        v.push_back(eps * eta);
        if (d - l >= 2) v.push_back(eta * eta);
        if (report.e2 != expect(std::move(v))) throw std::logic_error("E_2 mismatch");
    }
    if (d >= 3) {
        std::vector<ExactScalar> v;
        if (l >= 2) v.push_back(pow(eps, l - 2) * pow(eta, d - l));
        v.push_back(pow(eps, l - 1) * pow(eta, d - l - 1));
        if (d - l >= 2) v.push_back(pow(eps, l) * pow(eta, d - l - 2));
        if (report.ed2 != expect(std::move(v))) throw std::logic_error("E_{d-2} mismatch");
    }

    // Order-d annihilator of U_{d-1} written with repetitions:
    // prod_i (T - eps_1...eps_d / eps_i).
    ExactScalar full(1);
    for (const auto& e : twists) full *= e;
    Polynomial ud1_full = Polynomial::one();
    for (int i = 0; i < d; ++i) {
        ExactScalar root = full * invert(twists[static_cast<std::size_t>(i)]);
        ud1_full = ud1_full * Polynomial({-root, ExactScalar(1)});
    }
    report.charpoly_ud1_full = ud1_full;

    report.a_coeff = eps * eps + eta * eta;
    report.b_coeff = -(eps * eps * eta * eta);
    {
        // (T - eps^2)(T - eta^2) = T^2 - A T - B
        Polynomial lhs = Polynomial({-(eps * eps), ExactScalar(1)}) *
                         Polynomial({-(eta * eta), ExactScalar(1)});
        Polynomial rhs({-report.b_coeff, -report.a_coeff, ExactScalar(1)});
        if (lhs != rhs) throw std::logic_error("A/B expansion mismatch");
    }

    std::vector<ExactScalar> u2;
    for (long long a = 0; a <= 12; ++a)
        u2.push_back(form_coefficients(fam, a)[1]);
    ExactScalar eps_eta = eps * eta;
    report.c_constant = u2[2] - report.a_coeff * u2[1] - report.b_coeff * u2[0];
    for (long long a = 0; a <= 10; ++a) {
        ExactScalar lhs = u2[static_cast<std::size_t>(a + 2)];
        ExactScalar rhs = report.a_coeff * u2[static_cast<std::size_t>(a + 1)] +
                          report.b_coeff * u2[static_cast<std::size_t>(a)] +
                          report.c_constant * pow(eps_eta, a);
        if (lhs != rhs) throw std::logic_error("two-block constant relation fails");
    }

    // U_{d-1} satisfies the order-d annihilator with repetitions as well.
    {
        LinearRecurrence rec = LinearRecurrence::from_char_poly(ud1_full);
        std::vector<ExactScalar> window;
        for (long long a = 0; a <= d + 10; ++a)
            window.push_back(form_coefficients(fam, a)[static_cast<std::size_t>(d - 2)]);
        if (!values_satisfy(window, rec.c()))
            throw std::logic_error("U_{d-1} fails its order-d annihilator");
    }
    return report;
}

}  // namespace recurkit
