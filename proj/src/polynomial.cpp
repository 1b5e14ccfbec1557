#include "recurkit/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "recurkit/error.hpp"

namespace recurkit {

void Polynomial::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::x() { return Polynomial({ExactScalar(0), ExactScalar(1)}); }

Polynomial Polynomial::constant(const ExactScalar& v) {
    return Polynomial(std::vector<ExactScalar>{v});
}

Polynomial Polynomial::of(std::initializer_list<ExactScalar> coeffs) {
    return Polynomial(std::vector<ExactScalar>(coeffs));
}

ExactScalar Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return ExactScalar(0);
    return c_[static_cast<std::size_t>(k)];
}

const ExactScalar& Polynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
}

ExactScalar Polynomial::eval(const ExactScalar& z) const {
    ExactScalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    return acc;
}

ApproxScalar Polynomial::eval(const ApproxScalar& z) const {
    auto prec = z.precision();
    ApproxScalar acc(prec);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * z + approximate(*it, prec);
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<ExactScalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = ExactScalar(Rational(static_cast<long>(k))) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const ExactScalar& c) const {
    // Horner on p(z) with z := (x + c).
    Polynomial result;
    Polynomial xc = Polynomial({c, ExactScalar(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        result = result * xc + Polynomial::constant(*it);
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::logic_error("monic() of zero polynomial");
    if (is_monic()) return *this;
    ExactScalar inv = invert(leading());
    return inv * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<ExactScalar> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& a) {
    std::vector<ExactScalar> c(a.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = -a.coeffs()[k];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<ExactScalar> c(a.coeffs().size() + b.coeffs().size() - 1, ExactScalar(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const ExactScalar& s, const Polynomial& a) {
    std::vector<ExactScalar> c(a.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * a.coeffs()[k];
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::logic_error("division by zero polynomial");
    std::vector<ExactScalar> rem = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Polynomial(), a};
    std::vector<ExactScalar> quo(static_cast<std::size_t>(da - db + 1), ExactScalar(0));
    ExactScalar lead_inv = invert(b.leading());
    for (int k = da; k >= db; --k) {
        ExactScalar& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        ExactScalar f = top * lead_inv;
        quo[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(j);
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("div_exact: nonzero remainder");
    return q;
}

std::string to_string(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        ExactScalar c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string cs = to_string(c);
        if (!first) {
            if (cs[0] == '-' && c.is_real()) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        bool parens = !c.is_real();
        if (k == 0) {
            os << (parens ? "(" + cs + ")" : cs);
        } else {
            if (cs == "1")
                ;  // implicit coefficient
            else if (cs == "-1")
                os << "-";
            else
                os << (parens ? "(" + cs + ")" : cs);
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

Polynomial expand_root_factors(const std::vector<RootFactor>& roots) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i].gamma == roots[j].gamma)
                throw DomainError("DuplicateRoot",
                                  "repeated root " + to_string(roots[i].gamma));
    Polynomial p = Polynomial::one();
    for (const auto& rf : roots) {
        if (rf.multiplicity < 1) throw std::logic_error("multiplicity must be positive");
        Polynomial lin({-rf.gamma, ExactScalar(1)});
        for (int k = 0; k < rf.multiplicity; ++k) p = p * lin;
    }
    return p;
}

Polynomial monic_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("BothZero", "gcd(0, 0) undefined");
    Polynomial a = p, b = q;
    while (!b.is_zero()) {
        auto [quo, rem] = divmod(a, b);
        (void)quo;
        a = b;
        b = rem;
    }
    return a.monic();
}

int root_multiplicity(const Polynomial& p, const ExactScalar& gamma) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "multiplicity in zero polynomial");
    Polynomial lin({-gamma, ExactScalar(1)});
    Polynomial cur = p;
    int t = 0;
    while (cur.degree() > 0 && cur.eval(gamma).is_zero()) {
        cur = div_exact(cur, lin);
        ++t;
    }
    return t;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DomainError("ZeroDenominator", "denominator is zero");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = monic_gcd(num, den);
    if (g.degree() > 0) {
        num = div_exact(num, g);
        den = div_exact(den, g);
    }
    ExactScalar lead_inv = invert(den.leading());
    num_ = lead_inv * num;
    den_ = lead_inv * den;
}

std::optional<ExactScalar> RationalFunction::eval(const ExactScalar& z) const {
    ExactScalar d = den_.eval(z);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(z) / d;
}

ApproxScalar RationalFunction::eval(const ApproxScalar& z) const {
    return num_.eval(z) / den_.eval(z);
}

RationalFunction RationalFunction::derivative() const {
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFunction(n, den_ * den_);
}

Polynomial taylor_truncate(const RationalFunction& g, const ExactScalar& z0, int t) {
    if (t < 1) throw std::logic_error("taylor_truncate: t must be positive");
    if (g.den().eval(z0).is_zero())
        throw DomainError("PoleAtNode", "pole at expansion point " + to_string(z0));
    // Series division in the local variable w = z - z0.
    Polynomial ns = g.num().shifted(z0);
    Polynomial ds = g.den().shifted(z0);
    ExactScalar d0_inv = invert(ds.coeff(0));
    std::vector<ExactScalar> q(static_cast<std::size_t>(t), ExactScalar(0));
    for (int k = 0; k < t; ++k) {
        ExactScalar acc = ns.coeff(k);
        for (int i = 1; i <= k; ++i) acc -= ds.coeff(i) * q[static_cast<std::size_t>(k - i)];
        q[static_cast<std::size_t>(k)] = acc * d0_inv;
    }
    return Polynomial(std::move(q)).shifted(-z0);
}

namespace {

// All Gaussian integers of the given norm (x^2 + y^2 = n), every sign
// combination included.
std::vector<ExactScalar> gaussian_of_norm(const Integer& n) {
    std::vector<ExactScalar> out;
    Integer x = 0;
    Integer x2;
    while (true) {
        x2 = x * x;
        if (x2 > n) break;
        Integer y2 = n - x2;
        Integer y;
        mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
        if (y * y == y2) {
            Rational rx(x), ry(y);
            out.emplace_back(rx, ry);
            if (y != 0) out.emplace_back(rx, Rational(-y));
            if (x != 0) {
                out.emplace_back(Rational(-x), ry);
                if (y != 0) out.emplace_back(Rational(-x), Rational(-y));
            }
        }
        x += 1;
    }
    return out;
}

// Trial-division factorization; nullopt when a composite cofactor survives
// the bound (the caller then reports an honest search failure).
std::optional<std::map<Integer, int>> factor_integer(Integer n) {
    std::map<Integer, int> fac;
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    for (Integer p = 2; p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++fac[p];
            n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 32) == 0) return std::nullopt;
        ++fac[n];
    }
    return fac;
}

constexpr std::size_t kMaxRootCandidates = 200000;

std::optional<std::vector<Integer>> divisors_of(const Integer& n) {
    auto fac = factor_integer(n);
    if (!fac) return std::nullopt;
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : *fac) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > kMaxRootCandidates) return std::nullopt;
            }
        }
    }
    return divs;
}

Integer gaussian_norm_int(const ExactScalar& g) {
    // g must be a Gaussian integer here.
    Integer x = g.re.get_num();
    Integer y = g.im.get_num();
    return x * x + y * y;
}

}  // namespace

std::optional<std::vector<RootFactor>> gaussian_root_factors(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "cannot factor zero polynomial");
    std::vector<RootFactor> found;
    Polynomial cur = p;

    // Powers of z split off first so the constant term below is nonzero.
    int zero_mult = 0;
    while (!cur.is_zero() && cur.coeff(0).is_zero() && cur.degree() > 0) {
        cur = div_exact(cur, Polynomial::x());
        ++zero_mult;
    }
    if (zero_mult > 0) found.push_back({ExactScalar(0), zero_mult});

    if (cur.degree() > 0) {
        // Clear denominators: L * cur has Gaussian-integer coefficients.
        Integer lcm = 1;
        for (const auto& c : cur.coeffs()) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re.get_den().get_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im.get_den().get_mpz_t());
        }
        Polynomial g = ExactScalar(Rational(lcm)) * cur;

        Integer n0 = gaussian_norm_int(g.coeff(0));
        Integer nd = gaussian_norm_int(g.leading());
        auto divs0 = divisors_of(n0);
        auto divsd = divisors_of(nd);
        if (!divs0 || !divsd) return std::nullopt;

        std::vector<ExactScalar> nums, dens;
        for (const auto& d : *divs0) {
            auto gs = gaussian_of_norm(d);
            nums.insert(nums.end(), gs.begin(), gs.end());
            if (nums.size() > kMaxRootCandidates) return std::nullopt;
        }
        for (const auto& d : *divsd) {
            auto gs = gaussian_of_norm(d);
            dens.insert(dens.end(), gs.begin(), gs.end());
            if (dens.size() > kMaxRootCandidates) return std::nullopt;
        }
        if (nums.size() * dens.size() > kMaxRootCandidates * 4) return std::nullopt;

        std::vector<ExactScalar> candidates;
        candidates.reserve(nums.size() * dens.size());
        for (const auto& nu : nums)
            for (const auto& de : dens) candidates.push_back(nu / de);
        std::sort(candidates.begin(), candidates.end(), lex_less);
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const auto& r : candidates) {
            if (cur.degree() == 0) break;
            if (!cur.eval(r).is_zero()) continue;
            Polynomial lin({-r, ExactScalar(1)});
            int mult = 0;
            while (cur.degree() > 0 && cur.eval(r).is_zero()) {
                cur = div_exact(cur, lin);
                ++mult;
            }
            found.push_back({r, mult});
        }
        if (cur.degree() > 0) return std::nullopt;
    }

    std::sort(found.begin(), found.end(),
              [](const RootFactor& a, const RootFactor& b) { return lex_less(a.gamma, b.gamma); });
    return found;
}

}  // namespace recurkit
