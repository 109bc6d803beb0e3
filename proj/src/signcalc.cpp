#include "hodgecalc/signcalc.hpp"

#include "hodgecalc/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace hodgecalc {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

FormalTerm term(std::string symbol, std::vector<int> degrees) { return FormalTerm{std::move(symbol), std::move(degrees), 1}; }

std::string tuple(int i, int j, int k, int l)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

} // namespace

int epsilon(long k)
{
    // k(k-1)/2 mod 2 depends on k mod 4: 0,1 -> even, 2,3 -> odd.
    long r = ((k % 4) + 4) % 4;
    return r < 2 ? 1 : -1;
}

int FormalTerm::total_degree() const
{
    int d = 0;
    for (int x : multidegree)
        d += x;
    return d;
}

FormalTerm tensor(const FormalTerm& a, const FormalTerm& b)
{
    FormalTerm out;
    out.symbol = a.symbol + "⊗" + b.symbol;
    out.multidegree.assign(std::max(a.multidegree.size(), b.multidegree.size()), 0);
    for (std::size_t k = 0; k < a.multidegree.size(); ++k)
        out.multidegree[k] += a.multidegree[k];
    for (std::size_t k = 0; k < b.multidegree.size(); ++k)
        out.multidegree[k] += b.multidegree[k];
    out.sign = a.sign * b.sign;
    return out;
}

FormalTerm SignRule::apply(const FormalTerm& a, const FormalTerm& b) const
{
    FormalTerm out = tensor(a, b);
    int s = sign(a, b);
    if (s != 1 && s != -1)
        throw InvalidStructure("sign rule " + name + " returned " + std::to_string(s));
    out.sign *= s;
    return out;
}

int koszul_sign(const std::vector<FormalTerm>& terms, const std::vector<std::size_t>& order)
{
    if (order.size() != terms.size())
        throw DimensionError("permutation length does not match the number of terms");
    // position[t] = where term t must end up; bubble sort by target position.
    std::vector<std::size_t> position(terms.size());
    std::vector<bool> seen(terms.size(), false);
    for (std::size_t slot = 0; slot < order.size(); ++slot) {
        if (order[slot] >= terms.size() || seen[order[slot]])
            throw InvalidStructure("not a permutation");
        seen[order[slot]] = true;
        position[order[slot]] = slot;
    }
    std::vector<std::size_t> current(terms.size());
    for (std::size_t t = 0; t < terms.size(); ++t)
        current[t] = t;
    int sign = 1;
    for (std::size_t pass = 0; pass < current.size(); ++pass) {
        for (std::size_t s = 0; s + 1 < current.size(); ++s) {
            if (position[current[s]] > position[current[s + 1]]) {
                sign *= parity_sign(static_cast<long>(terms[current[s]].total_degree()) *
                                    terms[current[s + 1]].total_degree());
                std::swap(current[s], current[s + 1]);
            }
        }
    }
    return sign;
}

int pushforward_pairing_sign_model(int i, int j)
{
    std::vector<FormalTerm> terms{term("A", {i}), term("B", {j}), term("C", {-i}), term("D", {-j})};
    return koszul_sign(terms, {0, 2, 1, 3});
}

Report check_epsilon_cocycle(int bound)
{
    if (bound < 0)
        throw InvalidStructure("range bound must be non-negative");
    Report r("epsilon cocycle on |i|,|j| <= " + std::to_string(bound));
    int violations = 0;
    for (int i = -bound; i <= bound; ++i)
        for (int j = -bound; j <= bound; ++j)
            if (epsilon(i + j) != epsilon(i) * epsilon(j) * parity_sign(static_cast<long>(i) * j)) {
                if (violations++ == 0)
                    r.fail("violated at (i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
    r.note(std::to_string(violations) + " violations");
    return r;
}

Report check_pushforward_model(int bound)
{
    Report r("pushforward pairing sign on |i|,|j| <= " + std::to_string(bound));
    for (int i = -bound; i <= bound && r.passed; ++i) {
        for (int j = -bound; j <= bound && r.passed; ++j) {
            int model = pushforward_pairing_sign_model(i, j);
            if (model != parity_sign(static_cast<long>(i) * j))
                r.fail("model sign " + std::to_string(model) + " at (" + std::to_string(i) + "," + std::to_string(j) +
                       ")");
            else if (epsilon(i) * epsilon(j) * model != epsilon(i + j))
                r.fail("ε(i)ε(j)·sign != ε(i+j) at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return r;
}

Report check_triple_composition(int bound)
{
    Report r("triple composition on |a|,|b|,|c| <= " + std::to_string(bound));
    for (int a = -bound; a <= bound; ++a) {
        for (int b = -bound; b <= bound; ++b) {
            for (int c = -bound; c <= bound; ++c) {
                std::vector<FormalTerm> terms{term("A1", {a}), term("A2", {b}), term("A3", {c}),
                                              term("B1", {-a}), term("B2", {-b}), term("B3", {-c})};
                int interleaved = epsilon(a) * epsilon(b) * epsilon(c) * koszul_sign(terms, {0, 3, 1, 4, 2, 5});
                int left = epsilon(a) * epsilon(b) * pushforward_pairing_sign_model(a, b);
                left = left * epsilon(c) * pushforward_pairing_sign_model(a + b, c);
                int right = epsilon(b) * epsilon(c) * pushforward_pairing_sign_model(b, c);
                right = epsilon(a) * right * pushforward_pairing_sign_model(a, b + c);
                int direct = epsilon(a + b + c);
                if (interleaved != direct || left != direct || right != direct) {
                    r.fail("routes disagree at (a,b,c) = (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
                    return r;
                }
            }
        }
    }
    return r;
}

int godement_phi_sign(int a, int n) { return parity_sign(static_cast<long>(a) * n); }

GodementPaths godement_paths(int i, int j, int k, int l)
{
    // Multidegree (outer Godement, inner Godement, constructible); A and B
    // are sheaves, so the constructible degree is 0.
    const FormalTerm alpha = term("α", {i, j, 0});
    const FormalTerm beta = term("β", {k, l, 0});
    auto godement = [](const FormalTerm& t) { return t.multidegree[0] + t.multidegree[1]; };

    // Top: the vertical map identifies G^i f_* G^j with part of (g∘f)_* G^{i+j},
    // then phi for g∘f sees β as a degree-0 complex.
    SignRule phi_gf{"phi(g∘f)", [&](const FormalTerm& x, const FormalTerm& y) {
                        return godement_phi_sign(godement(x), y.multidegree[2]);
                    }};
    // Bottom: phi for g treats f_* G^• B as a complex, so β sits in degree l;
    // then phi for f inside.
    SignRule phi_g{"phi(g)", [](const FormalTerm& x, const FormalTerm& y) {
                       return godement_phi_sign(x.multidegree[0], y.multidegree[1] + y.multidegree[2]);
                   }};
    SignRule phi_f{"phi(f)", [](const FormalTerm& x, const FormalTerm& y) {
                       return godement_phi_sign(x.multidegree[1], y.multidegree[2]);
                   }};

    GodementPaths p;
    p.top = phi_gf.apply(alpha, beta).sign;
    FormalTerm outer = phi_g.apply(alpha, beta);
    p.bottom = outer.sign * phi_f.apply(alpha, beta).sign;
    return p;
}

int godement_diagram_defect(int i, int j, int k, int l)
{
    if (i < 0 || j < 0 || k < 0 || l < 0)
        throw InvalidStructure("Godement degrees are non-negative");
    return godement_paths(i, j, k, l).defect();
}

std::vector<GodementRow> godement_table(int box)
{
    std::vector<GodementRow> rows;
    for (int i = 0; i <= box; ++i)
        for (int j = 0; j <= box; ++j)
            for (int k = 0; k <= box; ++k)
                for (int l = 0; l <= box; ++l)
                    rows.push_back({{i, j, k, l}, godement_diagram_defect(i, j, k, l)});
    return rows;
}

Report check_godement(int box)
{
    Report r("Godement defect on 0 <= i,j,k,l <= " + std::to_string(box));
    std::map<std::pair<int, int>, int> by_il;
    auto rows = godement_table(box);
    for (const auto& row : rows) {
        auto [i, j, k, l] = row.degrees;
        if (row.defect != parity_sign(static_cast<long>(i) * l)) {
            r.fail("defect " + std::to_string(row.defect) + " at " + tuple(i, j, k, l));
            return r;
        }
        auto [it, fresh] = by_il.emplace(std::make_pair(i, l), row.defect);
        if (!fresh && it->second != row.defect) {
            r.fail("defect depends on (j,k) at " + tuple(i, j, k, l));
            return r;
        }
    }
    r.note(std::to_string(rows.size()) + " tuples");
    return r;
}

} // namespace hodgecalc
