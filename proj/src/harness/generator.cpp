#include "hodgecalc/harness/generator.hpp"

#include "hodgecalc/errors.hpp"

#include <set>

namespace hodgecalc::harness {

namespace {

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

Subspace kron(const Subspace& a, const Subspace& b)
{
    std::size_t n = a.ambient_dim() * b.ambient_dim();
    if (a.is_zero() || b.is_zero())
        return Subspace::zero(n);
    return Subspace(n, kron(a.basis(), b.basis()));
}

DecreasingFiltration kron(const DecreasingFiltration& a, const DecreasingFiltration& b)
{
    std::size_t n = a.ambient_dim() * b.ambient_dim();
    std::map<int, Subspace> steps;
    if (n == 0)
        return DecreasingFiltration(0, steps);
    for (int r = a.bottom() + b.bottom(); r <= a.top() + b.top(); ++r) {
        Subspace step = Subspace::zero(n);
        for (int s = a.bottom(); s <= a.top(); ++s)
            step = sum(step, kron(a.at(s), b.at(r - s)));
        steps.emplace(r, step);
    }
    return DecreasingFiltration(n, steps);
}

Matrix block_diag(const std::vector<Matrix>& blocks)
{
    std::size_t n = 0;
    for (const auto& b : blocks)
        n += b.rows();
    Matrix out(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(off + r, off + c) = b(r, c);
        off += b.rows();
    }
    return out;
}

Matrix embedding(std::size_t rows, std::size_t offset, std::size_t total)
{
    Matrix e(rows, total);
    for (std::size_t r = 0; r < rows; ++r)
        e(r, offset + r) = Scalar(1);
    return e;
}

Subspace embed(const Subspace& s, const Matrix& e)
{
    if (s.is_zero())
        return Subspace::zero(e.cols());
    return Subspace(e.cols(), s.basis() * e);
}

Scalar gaussian_unit_entry(std::mt19937_64& rng)
{
    long re = static_cast<long>(rng() % 3) - 1;
    long im = static_cast<long>(rng() % 3) - 1;
    return Scalar(mpq_class(re), mpq_class(im));
}

} // namespace

PolarizedSl2 irrep(const IrrepSpec& spec)
{
    if (spec.m < 0)
        throw InvalidStructure("irrep highest weight must be non-negative");
    if (spec.scale <= 0)
        throw InvalidStructure("irrep pairing scale must be positive");
    const int m = spec.m;
    const std::size_t n = static_cast<std::size_t>(m) + 1;
    auto span_from = [n](int first) {
        std::vector<Vector> vecs;
        for (std::size_t j = static_cast<std::size_t>(first); j < n; ++j) {
            Vector v(n);
            v[j] = Scalar(1);
            vecs.push_back(v);
        }
        return Subspace::span(n, vecs);
    };
    std::map<int, Subspace> fp;
    std::map<int, Subspace> fpp;
    for (int j = 0; j <= m; ++j) {
        fp.emplace(spec.p + j, span_from(j));
        fpp.emplace(spec.q + j, span_from(j));
    }
    PolarizedSl2 out;
    Sl2HodgeData& d = out.data;
    d.dim = n;
    d.fprime = DecreasingFiltration(n, fp);
    d.fsecond = DecreasingFiltration(n, fpp);
    d.central_weight = spec.p + spec.q + m;
    Matrix x(n, n);
    Matrix y(n, n);
    Matrix h(n, n);
    Matrix g(n, n);
    Scalar c(spec.q % 2 == 0 ? spec.scale : -spec.scale);
    for (int j = 0; j <= m; ++j) {
        std::size_t uj = static_cast<std::size_t>(j);
        Vector e(n);
        e[uj] = Scalar(1);
        d.grading.emplace(-m + 2 * j, Subspace::span(n, {e}));
        h(uj, uj) = Scalar(-m + 2 * j);
        if (j < m)
            x(uj + 1, uj) = Scalar(1);
        if (j > 0)
            y(uj - 1, uj) = Scalar(static_cast<long>(j) * (m - j + 1));
        g(uj, static_cast<std::size_t>(m - j)) = c;
    }
    d.triple = Sl2Triple{x, h, y};
    out.form = SesquilinearForm{g, d.central_weight};
    return out;
}

PolarizedSl2 direct_sum(const std::vector<PolarizedSl2>& parts)
{
    if (parts.empty())
        throw InvalidStructure("direct sum of no summands");
    PolarizedSl2 out;
    Sl2HodgeData& d = out.data;
    d.central_weight = parts.front().data.central_weight;
    for (const auto& p : parts) {
        if (p.data.central_weight != d.central_weight)
            throw InvalidStructure("summands have different central weights");
        d.dim += p.data.dim;
    }
    std::vector<DecreasingFiltration> fp;
    std::vector<DecreasingFiltration> fpp;
    std::vector<Matrix> embeds;
    std::vector<Matrix> xs, hs, ys, gs;
    std::size_t off = 0;
    for (const auto& p : parts) {
        Matrix e = embedding(p.data.dim, off, d.dim);
        off += p.data.dim;
        fp.push_back(p.data.fprime);
        fpp.push_back(p.data.fsecond);
        embeds.push_back(e);
        for (const auto& [k, piece] : p.data.grading) {
            auto it = d.grading.find(k);
            Subspace add = embed(piece, e);
            if (it == d.grading.end())
                d.grading.emplace(k, add);
            else
                it->second = sum(it->second, add);
        }
        xs.push_back(p.data.triple.x);
        hs.push_back(p.data.triple.h);
        ys.push_back(p.data.triple.y);
        gs.push_back(p.form.gram);
    }
    d.fprime = hodgecalc::direct_sum(fp, embeds, d.dim);
    d.fsecond = hodgecalc::direct_sum(fpp, embeds, d.dim);
    d.triple = Sl2Triple{block_diag(xs), block_diag(hs), block_diag(ys)};
    out.form = SesquilinearForm{block_diag(gs), d.central_weight};
    return out;
}

PolarizedBiSl2 tensor(const PolarizedSl2& a, const PolarizedSl2& b)
{
    PolarizedBiSl2 out;
    BiSl2HodgeData& d = out.data;
    const std::size_t na = a.data.dim;
    const std::size_t nb = b.data.dim;
    d.dim = na * nb;
    d.central_weight = a.data.central_weight + b.data.central_weight;
    d.fprime = kron(a.data.fprime, b.data.fprime);
    d.fsecond = kron(a.data.fsecond, b.data.fsecond);
    for (const auto& [i, pa] : a.data.grading)
        for (const auto& [j, pb] : b.data.grading)
            d.bigrading.emplace(std::make_pair(i, j), kron(pa, pb));
    const Matrix ia = Matrix::identity(na);
    const Matrix ib = Matrix::identity(nb);
    d.first = Sl2Triple{kron(a.data.triple.x, ib), kron(a.data.triple.h, ib), kron(a.data.triple.y, ib)};
    d.second = Sl2Triple{kron(ia, b.data.triple.x), kron(ia, b.data.triple.h), kron(ia, b.data.triple.y)};
    out.form = SesquilinearForm{kron(a.form.gram, b.form.gram), d.central_weight};
    return out;
}

PolarizedBiSl2 direct_sum(const std::vector<PolarizedBiSl2>& parts)
{
    if (parts.empty())
        throw InvalidStructure("direct sum of no summands");
    PolarizedBiSl2 out;
    BiSl2HodgeData& d = out.data;
    d.central_weight = parts.front().data.central_weight;
    for (const auto& p : parts) {
        if (p.data.central_weight != d.central_weight)
            throw InvalidStructure("summands have different central weights");
        d.dim += p.data.dim;
    }
    std::vector<DecreasingFiltration> fp, fpp;
    std::vector<Matrix> embeds;
    std::vector<Matrix> x1, h1, y1, x2, h2, y2, gs;
    std::size_t off = 0;
    for (const auto& p : parts) {
        Matrix e = embedding(p.data.dim, off, d.dim);
        off += p.data.dim;
        fp.push_back(p.data.fprime);
        fpp.push_back(p.data.fsecond);
        embeds.push_back(e);
        for (const auto& [key, piece] : p.data.bigrading) {
            auto it = d.bigrading.find(key);
            Subspace add = embed(piece, e);
            if (it == d.bigrading.end())
                d.bigrading.emplace(key, add);
            else
                it->second = sum(it->second, add);
        }
        x1.push_back(p.data.first.x);
        h1.push_back(p.data.first.h);
        y1.push_back(p.data.first.y);
        x2.push_back(p.data.second.x);
        h2.push_back(p.data.second.h);
        y2.push_back(p.data.second.y);
        gs.push_back(p.form.gram);
    }
    d.fprime = hodgecalc::direct_sum(fp, embeds, d.dim);
    d.fsecond = hodgecalc::direct_sum(fpp, embeds, d.dim);
    d.first = Sl2Triple{block_diag(x1), block_diag(h1), block_diag(y1)};
    d.second = Sl2Triple{block_diag(x2), block_diag(h2), block_diag(y2)};
    out.form = SesquilinearForm{block_diag(gs), d.central_weight};
    return out;
}

Matrix unimodular(std::size_t n, std::mt19937_64& rng)
{
    Matrix l = Matrix::identity(n);
    Matrix u = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) {
            l(r, c) = gaussian_unit_entry(rng);
            u(c, r) = gaussian_unit_entry(rng);
        }
    return l * u;
}

Subspace transport(const Subspace& s, const Matrix& p)
{
    if (s.is_zero())
        return s;
    return Subspace(s.ambient_dim(), s.basis() * p.transpose());
}

DecreasingFiltration transport(const DecreasingFiltration& f, const Matrix& p)
{
    std::map<int, Subspace> steps;
    for (const auto& [k, s] : f.jumps())
        steps.emplace(k, transport(s, p));
    return DecreasingFiltration(f.ambient_dim(), steps);
}

IncreasingFiltration transport(const IncreasingFiltration& f, const Matrix& p)
{
    std::map<int, Subspace> steps;
    for (const auto& [k, s] : f.jumps())
        steps.emplace(k, transport(s, p));
    return IncreasingFiltration(f.ambient_dim(), steps);
}

Matrix transport_operator(const Matrix& a, const Matrix& p, const Matrix& p_inv) { return p * a * p_inv; }

Matrix transport_gram(const Matrix& g, const Matrix& p_inv) { return p_inv.transpose() * g * p_inv.conj(); }

PolarizedSl2 scramble(const PolarizedSl2& f, const Matrix& p)
{
    Matrix pi = inverse(p);
    PolarizedSl2 out = f;
    out.data.fprime = transport(f.data.fprime, p);
    out.data.fsecond = transport(f.data.fsecond, p);
    for (auto& entry : out.data.grading)
        entry.second = transport(entry.second, p);
    out.data.triple = Sl2Triple{transport_operator(f.data.triple.x, p, pi), transport_operator(f.data.triple.h, p, pi),
                                transport_operator(f.data.triple.y, p, pi)};
    out.form.gram = transport_gram(f.form.gram, pi);
    return out;
}

PolarizedBiSl2 scramble(const PolarizedBiSl2& f, const Matrix& p)
{
    Matrix pi = inverse(p);
    PolarizedBiSl2 out = f;
    out.data.fprime = transport(f.data.fprime, p);
    out.data.fsecond = transport(f.data.fsecond, p);
    for (auto& entry : out.data.bigrading)
        entry.second = transport(entry.second, p);
    for (auto* t : {&out.data.first, &out.data.second})
        *t = Sl2Triple{transport_operator(t->x, p, pi), transport_operator(t->h, p, pi), transport_operator(t->y, p, pi)};
    out.form.gram = transport_gram(f.form.gram, pi);
    return out;
}

ConeData scramble(const ConeData& c, const Matrix& p)
{
    Matrix pi = inverse(p);
    ConeData out = c;
    out.fprime = transport(c.fprime, p);
    out.fsecond = transport(c.fsecond, p);
    out.weightfil = transport(c.weightfil, p);
    out.pairing.gram = transport_gram(c.pairing.gram, pi);
    for (auto& g : out.generators)
        g = transport_operator(g, p, pi);
    return out;
}

ConeData cone_from_bisl2(const PolarizedBiSl2& f)
{
    const BiSl2HodgeData& d = f.data;
    std::set<int> totals;
    for (const auto& entry : d.bigrading)
        totals.insert(entry.first.first + entry.first.second);
    std::map<int, Subspace> steps;
    for (int t : totals) {
        Subspace step = Subspace::zero(d.dim);
        for (const auto& [key, piece] : d.bigrading)
            if (key.first + key.second <= t)
                step = sum(step, piece);
        steps.emplace(d.central_weight + t, step);
    }
    return ConeData{d.dim, d.fprime, d.fsecond, IncreasingFiltration(d.dim, steps), f.form, {d.first.y, d.second.y}};
}

PolarizedSl2 generate_polarized_fixture(std::uint64_t seed, const std::vector<IrrepSpec>& spec)
{
    std::mt19937_64 rng(seed);
    std::vector<PolarizedSl2> parts;
    for (const auto& s : spec)
        parts.push_back(irrep(s));
    PolarizedSl2 sum_ = direct_sum(parts);
    return scramble(sum_, unimodular(sum_.data.dim, rng));
}

PolarizedBiSl2 generate_polarized_bisl2(std::uint64_t seed,
                                        const std::vector<std::pair<IrrepSpec, IrrepSpec>>& spec)
{
    std::mt19937_64 rng(seed);
    std::vector<PolarizedBiSl2> parts;
    for (const auto& [a, b] : spec)
        parts.push_back(tensor(irrep(a), irrep(b)));
    PolarizedBiSl2 sum_ = direct_sum(parts);
    return scramble(sum_, unimodular(sum_.data.dim, rng));
}

std::vector<std::pair<IrrepSpec, IrrepSpec>> random_bisl2_spec(std::mt19937_64& rng, std::size_t max_dim)
{
    auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    const int weight = pick(0, 4);
    const int summands = pick(1, 3);
    std::vector<std::pair<IrrepSpec, IrrepSpec>> out;
    std::size_t used = 0;
    for (int s = 0; s < summands; ++s) {
        IrrepSpec a;
        IrrepSpec b;
        a.m = pick(0, 2);
        b.m = pick(0, 2);
        std::size_t dim = static_cast<std::size_t>((a.m + 1) * (b.m + 1));
        if (used + dim > max_dim) {
            if (!out.empty())
                break;
            a.m = 0;
            b.m = 0;
            dim = 1;
        }
        used += dim;
        a.p = pick(-1, 2);
        b.p = pick(-1, 2);
        int rest = weight - a.m - b.m - a.p - b.p;
        a.q = pick(-1, 2);
        b.q = rest - a.q;
        a.scale = pick(1, 3);
        b.scale = pick(1, 3);
        out.emplace_back(a, b);
    }
    return out;
}

LefschetzRatioFixture lefschetz_ratio_fixture(const Matrix& m)
{
    if (m.rows() != 2 || m.cols() != 2)
        throw DimensionError("ratio fixture expects a 2x2 multiplicity matrix");
    LefschetzRatioFixture out;
    PolarizedSl2 v1 = irrep(IrrepSpec{1, 0, 0, 1});
    PolarizedSl2 a = direct_sum({v1, v1});
    out.bisl2 = tensor(a, v1);
    const Matrix& xb = v1.data.triple.x;
    out.l = out.bisl2.data.second.x;
    out.eta_minus2 = kron(kron(m, Matrix::identity(2)), xb);
    for (int i : {-1, 1})
        out.pieces.emplace_back(out.bisl2.data.bigrading.at({i, -1}), out.bisl2.data.bigrading.at({i, 1}));
    return out;
}

} // namespace hodgecalc::harness
