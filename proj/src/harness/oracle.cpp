#include "hodgecalc/harness/oracle.hpp"

#include "hodgecalc/errors.hpp"
#include "hodgecalc/harness/generator.hpp"

#include <algorithm>

namespace hodgecalc::harness {

namespace {

bool contains_subspace(const std::vector<Subspace>& set, const Subspace& s)
{
    return std::find(set.begin(), set.end(), s) != set.end();
}

struct Search {
    const Matrix& a;
    int center;
    int m;
    std::vector<Subspace> lattice;
    std::vector<Matrix> powers; // a^0 .. a^m
    std::map<int, Subspace> steps;
    std::vector<std::map<int, Subspace>> solutions;

    const Subspace* known(int k) const
    {
        auto it = steps.find(k);
        return it == steps.end() ? nullptr : &it->second;
    }

    // a W_j ⊆ W_{j-2} wherever both steps are already fixed.
    bool lowering_ok() const
    {
        for (const auto& [j, s] : steps) {
            const Subspace* below = known(j - 2);
            if (below && !below->contains(apply(a, s)))
                return false;
        }
        return true;
    }

    // a^k maps W_{c+k} onto gr_{c-k} modulo W_{c-k-1}, injectively on gr_{c+k}.
    bool power_ok(int k) const
    {
        const Subspace& hi = steps.at(center + k);
        const Subspace& hi_prev = steps.at(center + k - 1);
        const Subspace& lo = steps.at(center - k);
        const Subspace& lo_prev = steps.at(center - k - 1);
        const Matrix& p = powers[static_cast<std::size_t>(k)];
        Subspace img = apply(p, hi);
        if (!lo.contains(img) || !lo_prev.contains(apply(p, hi_prev)))
            return false;
        std::size_t gr_hi = hi.dim() - hi_prev.dim();
        std::size_t gr_lo = lo.dim() - lo_prev.dim();
        return gr_hi == gr_lo && sum(img, lo_prev).dim() - lo_prev.dim() == gr_lo;
    }

    void level(int k)
    {
        if (solutions.size() > 1)
            return;
        if (k == 0) {
            solutions.push_back(steps);
            return;
        }
        const Subspace& outer_lo = steps.at(center - k - 1);
        const Subspace& outer_hi = steps.at(center + k);
        for (const Subspace& lo : lattice) {
            if (!lo.contains(outer_lo) || !outer_hi.contains(lo))
                continue;
            for (const Subspace& hi : lattice) {
                if (!hi.contains(lo) || !outer_hi.contains(hi))
                    continue;
                steps[center - k] = lo;
                steps[center + k - 1] = hi;
                if (power_ok(k) && lowering_ok())
                    level(k - 1);
                steps.erase(center - k);
                steps.erase(center + k - 1);
            }
        }
    }
};

} // namespace

std::vector<Subspace> oracle_lattice(const Matrix& a)
{
    const std::size_t n = a.rows();
    std::vector<Subspace> set;
    Matrix p = Matrix::identity(n);
    for (std::size_t e = 0; e <= n; ++e) {
        for (const Subspace& s : {kernel(p), image(p)})
            if (!contains_subspace(set, s))
                set.push_back(s);
        p = p * a;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t size = set.size();
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j)
                for (const Subspace& s : {intersect(set[i], set[j]), sum(set[i], set[j])})
                    if (!contains_subspace(set, s)) {
                        set.push_back(s);
                        grew = true;
                    }
    }
    std::stable_sort(set.begin(), set.end(), [](const Subspace& x, const Subspace& y) { return x.dim() < y.dim(); });
    return set;
}

IncreasingFiltration oracle_weight_filtration(const Matrix& a, int center)
{
    if (!a.is_square())
        throw DimensionError("oracle needs a square matrix");
    const std::size_t n = a.rows();
    if (!a.pow(static_cast<unsigned>(n)).is_zero())
        throw InvalidStructure("oracle input is not nilpotent");
    if (n == 0)
        return IncreasingFiltration(0, {});
    int m = 0;
    Matrix p = a;
    while (!p.is_zero()) {
        p = p * a;
        ++m;
    }
    Search s{a, center, m, oracle_lattice(a), {}, {}, {}};
    Matrix q = Matrix::identity(n);
    for (int k = 0; k <= m; ++k) {
        s.powers.push_back(q);
        q = q * a;
    }
    // Outside the range [c-m, c+m] the graded pieces vanish: a^k = 0 for k > m.
    s.steps[center - m - 1] = Subspace::zero(n);
    s.steps[center + m] = Subspace::full(n);
    if (m == 0) {
        s.solutions.push_back(s.steps);
    } else {
        s.level(m);
    }
    if (s.solutions.size() != 1)
        throw CounterexampleAlarm("oracle found " + std::string(s.solutions.empty() ? "no" : "several") +
                                  " filtrations satisfying the defining properties");
    return IncreasingFiltration(n, s.solutions.front());
}

std::vector<Matrix> small_nilpotent_family(std::size_t max_dim)
{
    std::vector<Matrix> out;
    for (std::size_t n = 1; n <= max_dim; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c)
                slots.emplace_back(r, c);
        std::size_t total = 1;
        for (std::size_t s = 0; s < slots.size(); ++s)
            total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            Matrix m(n, n);
            std::size_t rest = code;
            for (const auto& [r, c] : slots) {
                long v = static_cast<long>(rest % 3);
                rest /= 3;
                m(r, c) = Scalar(v == 2 ? -1 : v);
            }
            out.push_back(m);
        }
    }
    return out;
}

Matrix random_nilpotent(std::size_t n, std::mt19937_64& rng)
{
    Matrix j(n, n);
    std::size_t start = 0;
    while (start < n) {
        std::size_t len = 1 + rng() % (n - start);
        for (std::size_t r = start; r + 1 < start + len; ++r)
            j(r, r + 1) = Scalar(1);
        start += len;
    }
    Matrix p = unimodular(n, rng);
    return p * j * inverse(p);
}

} // namespace hodgecalc::harness
