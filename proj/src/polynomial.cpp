#include "hodgecalc/polynomial.hpp"

#include "hodgecalc/errors.hpp"

#include <algorithm>
#include <set>

namespace hodgecalc {

int Polynomial::degree() const
{
    for (std::size_t k = coeffs.size(); k > 0; --k)
        if (!coeffs[k - 1].is_zero())
            return static_cast<int>(k) - 1;
    return -1;
}

bool Polynomial::is_real() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_real(); });
}

Scalar Polynomial::operator()(const Scalar& t) const
{
    Scalar acc;
    for (std::size_t k = coeffs.size(); k > 0; --k)
        acc = acc * t + coeffs[k - 1];
    return acc;
}

Polynomial characteristic_polynomial(const Matrix& a)
{
    if (!a.is_square())
        throw DimensionError("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    Polynomial p;
    p.coeffs.assign(n + 1, Scalar(0));
    p.coeffs[n] = Scalar(1);
    Matrix m = Matrix::zero(n, n);
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + p.coeffs[n - k + 1] * id;
        Matrix am = a * m;
        Scalar trace;
        for (std::size_t d = 0; d < n; ++d)
            trace += am(d, d);
        p.coeffs[n - k] = -trace / Scalar(static_cast<long>(k));
    }
    return p;
}

namespace {

using RealPoly = std::vector<mpq_class>;

void trim(RealPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

RealPoly derivative(const RealPoly& p)
{
    RealPoly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<RealPoly, RealPoly> divmod(RealPoly a, const RealPoly& b)
{
    trim(a);
    RealPoly q;
    if (a.size() < b.size())
        return {q, a};
    q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        mpq_class f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k)
            a[shift + k] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return {q, a};
}

RealPoly gcd(RealPoly a, RealPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        RealPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int sign_changes(const std::vector<int>& signs)
{
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

RealPoly real_part(const Polynomial& p)
{
    RealPoly r;
    for (const auto& c : p.coeffs)
        r.push_back(c.re());
    trim(r);
    return r;
}

} // namespace

bool all_roots_positive_real(const Polynomial& poly)
{
    if (!poly.is_real() || poly.degree() < 1)
        return false;
    RealPoly p = real_part(poly);
    RealPoly sqf = divmod(p, gcd(p, derivative(p))).first;
    trim(sqf);
    if (sgn(sqf[0]) == 0)
        return false; // zero is a root
    std::vector<RealPoly> chain{sqf, derivative(sqf)};
    while (!chain.back().empty()) {
        RealPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        for (auto& c : r)
            c = -c;
        if (r.empty())
            break;
        chain.push_back(std::move(r));
    }
    std::vector<int> at_zero;
    std::vector<int> at_infinity;
    for (const auto& q : chain) {
        if (q.empty())
            continue;
        at_zero.push_back(sgn(q[0]));
        at_infinity.push_back(sgn(q.back()));
    }
    int positive_roots = sign_changes(at_zero) - sign_changes(at_infinity);
    return positive_roots == static_cast<int>(sqf.size()) - 1;
}

std::vector<mpq_class> rational_roots(const Polynomial& poly)
{
    if (!poly.is_real())
        throw InvalidStructure("rational_roots needs real coefficients");
    RealPoly p = real_part(poly);
    std::set<mpq_class> roots;
    if (p.empty())
        return {};
    std::size_t low = 0;
    while (sgn(p[low]) == 0)
        ++low;
    if (low > 0) {
        roots.insert(mpq_class(0));
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (p.size() <= 1)
        return {roots.begin(), roots.end()};
    mpz_class common = 1;
    for (const auto& c : p)
        common = lcm(common, mpz_class(c.get_den()));
    mpz_class a0 = abs(mpz_class(p.front() * common));
    mpz_class an = abs(mpz_class(p.back() * common));
    auto divisors = [](const mpz_class& v) {
        std::vector<mpz_class> out;
        for (mpz_class d = 1; d * d <= v; ++d) {
            if (v % d == 0) {
                out.push_back(d);
                if (d * d != v)
                    out.push_back(v / d);
            }
        }
        return out;
    };
    Polynomial rp;
    for (const auto& c : p)
        rp.coeffs.emplace_back(c);
    for (const auto& num : divisors(a0)) {
        for (const auto& den : divisors(an)) {
            for (int s : {1, -1}) {
                mpq_class cand(num * s, den);
                cand.canonicalize();
                if (rp(Scalar(cand)).is_zero())
                    roots.insert(cand);
            }
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace hodgecalc
