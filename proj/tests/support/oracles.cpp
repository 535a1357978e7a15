#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

Integer cofactor_determinant(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = m(i, k);
        Integer term = m(0, j) * cofactor_determinant(minor);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace

std::vector<Integer> determinantal_invariants(const IntMatrix& m)
{
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Integer g = 0;
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k)) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
                g = gcd(g, cofactor_determinant(sub));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::vector<Integer> naive_elementary_divisors(IntMatrix m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Integer> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows && pr == rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rows) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pr, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));
        for (;;) {
            bool changed = false;
            for (std::size_t i = t + 1; i < rows; ++i)
                while (m(i, t) != 0) {
                    Integer q = m(i, t) / m(t, t);
                    for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                    if (m(i, t) != 0) {
                        for (std::size_t j = t; j < cols; ++j) std::swap(m(i, j), m(t, j));
                        changed = true;
                    }
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                while (m(t, j) != 0) {
                    Integer q = m(t, j) / m(t, t);
                    for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                    if (m(t, j) != 0) {
                        for (std::size_t i = t; i < rows; ++i) std::swap(m(i, j), m(i, t));
                        changed = true;
                    }
                }
            if (changed) continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            for (std::size_t j = t; j < cols; ++j) m(t, j) += m(bad, j);
        }
        out.push_back(abs(m(t, t)));
    }
    return out;
}

std::size_t rational_rank(const IntMatrix& input)
{
    IntMatrix m = input;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(p, j));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Integer a = m(rank, c), b = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = a * m(i, j) - b * m(rank, j);
            Integer g = 0;
            for (std::size_t j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
            if (g > 1)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) /= g;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(const IntMatrix& input, unsigned p)
{
    std::vector<std::vector<long>> m(input.rows(), std::vector<long>(input.cols()));
    for (std::size_t i = 0; i < input.rows(); ++i)
        for (std::size_t j = 0; j < input.cols(); ++j) {
            Integer r = input(i, j) % p;
            if (r < 0) r += p;
            m[i][j] = r.get_si();
        }
    auto inverse = [p](long a) {
        long r = 1;
        for (unsigned e = 0; e + 2 < p + 0u; ++e) r = r * a % p;
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < input.cols() && rank < input.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < input.rows() && m[piv][c] == 0) ++piv;
        if (piv == input.rows()) continue;
        std::swap(m[rank], m[piv]);
        const long inv = inverse(m[rank][c]);
        for (std::size_t i = rank + 1; i < input.rows(); ++i) {
            const long f = m[i][c] * inv % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < input.cols(); ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::uint64_t count_homs_to_cyclic(const IntMatrix& m, unsigned k)
{
    const std::size_t r = m.rows();
    std::vector<long> red(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Integer v = m(i, j) % k;
            if (v < 0) v += k;
            red[i * m.cols() + j] = v.get_si();
        }
    std::vector<unsigned> y(r, 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; j < m.cols() && ok; ++j) {
            long s = 0;
            for (std::size_t i = 0; i < r; ++i) s += static_cast<long>(y[i]) * red[i * m.cols() + j];
            ok = s % k == 0;
        }
        if (ok) ++count;
        std::size_t i = 0;
        while (i < r && ++y[i] == k) y[i++] = 0;
        if (i == r) break;
    }
    return count;
}

std::uint64_t predicted_hom_count(const bwc::GroupInvariants& g, unsigned k)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < g.free_rank; ++i) out *= k;
    for (const auto& d : g.torsion) out *= gcd(d, Integer(k)).get_ui();
    return out;
}

bwc::GroupInvariants integer_cohomology(const FreeComplex& c, std::size_t k)
{
    const std::size_t out_rank = rational_rank(c.d.at(k));
    const std::size_t in_rank = k ? rational_rank(c.d[k - 1]) : 0;
    bwc::GroupInvariants g;
    g.free_rank = c.dims[k] - out_rank - in_rank;
    if (k)
        for (const auto& e : naive_elementary_divisors(c.d[k - 1]))
            if (e > 1) g.torsion.push_back(e);
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

std::size_t mod_p_cohomology(const FreeComplex& c, std::size_t k, unsigned p)
{
    return c.dims[k] - rank_mod_p(c.d.at(k), p) - (k ? rank_mod_p(c.d[k - 1], p) : 0);
}

FreeComplex normalized_bar_complex(unsigned n, std::size_t top)
{
    const std::size_t b = n - 1;
    FreeComplex c;
    for (std::size_t k = 0, dim = 1; k <= top; ++k, dim *= b) c.dims.push_back(dim);
    // Tuples of nonzero elements 1..n-1, digit i of the index is g_{i+1} - 1.
    auto decode = [b](std::size_t idx, std::size_t k) {
        std::vector<unsigned> g(k);
        for (std::size_t i = 0; i < k; ++i) {
            g[i] = static_cast<unsigned>(idx % b) + 1;
            idx /= b;
        }
        return g;
    };
    auto encode = [b](const std::vector<unsigned>& g) {
        std::size_t idx = 0;
        for (std::size_t i = g.size(); i-- > 0;) idx = idx * b + (g[i] - 1);
        return idx;
    };
    for (std::size_t k = 0; k < top; ++k) {
        IntMatrix d(c.dims[k + 1], c.dims[k]);
        for (std::size_t row = 0; row < c.dims[k + 1]; ++row) {
            const auto g = decode(row, k + 1);
            d(row, encode(std::vector<unsigned>(g.begin() + 1, g.end()))) += 1;
            for (std::size_t i = 1; i <= k; ++i) {
                const unsigned s = (g[i - 1] + g[i]) % n;
                if (s == 0) continue;
                std::vector<unsigned> face(g.begin(), g.begin() + static_cast<long>(i - 1));
                face.push_back(s);
                face.insert(face.end(), g.begin() + static_cast<long>(i + 1), g.end());
                d(row, encode(face)) += (i % 2) ? -1 : 1;
            }
            d(row, encode(std::vector<unsigned>(g.begin(), g.end() - 1))) += ((k + 1) % 2) ? -1 : 1;
        }
        c.d.push_back(std::move(d));
    }
    return c;
}

FreeComplex nerve_complex(const bwc::FiniteCategory& c, std::size_t top)
{
    using Chain = std::vector<std::size_t>;
    const std::size_t m = c.morphism_count();
    std::vector<bool> identity(m, false);
    for (std::size_t x = 0; x < c.object_count(); ++x) identity[c.identity(x)] = true;

    // level[k]: nondegenerate chains σ1..σk with source(σi) = target(σ{i+1});
    // level[0] holds objects as one-element "chains" {x}.
    std::vector<std::vector<Chain>> level(top + 1);
    std::vector<std::map<Chain, std::size_t>> index(top + 1);
    for (std::size_t x = 0; x < c.object_count(); ++x) level[0].push_back({x});
    for (std::size_t k = 1; k <= top; ++k) {
        if (k == 1) {
            for (std::size_t f = 0; f < m; ++f)
                if (!identity[f]) level[1].push_back({f});
        } else {
            for (const auto& ch : level[k - 1])
                for (std::size_t f = 0; f < m; ++f)
                    if (!identity[f] && c.target(f) == c.source(ch.back())) {
                        Chain next = ch;
                        next.push_back(f);
                        level[k].push_back(std::move(next));
                    }
        }
    }
    FreeComplex out;
    for (std::size_t k = 0; k <= top; ++k) {
        std::sort(level[k].begin(), level[k].end());
        for (std::size_t i = 0; i < level[k].size(); ++i) index[k][level[k][i]] = i;
        out.dims.push_back(level[k].size());
    }
    for (std::size_t k = 1; k <= top; ++k) {
        IntMatrix d(out.dims[k], out.dims[k - 1]);
        for (std::size_t row = 0; row < level[k].size(); ++row) {
            const Chain& s = level[k][row];
            auto add = [&](const Chain& face, int sign) {
                auto it = index[k - 1].find(face);
                if (it != index[k - 1].end()) d(row, it->second) += sign;
            };
            if (k == 1) {
                add({c.source(s[0])}, 1);
                add({c.target(s[0])}, -1);
                continue;
            }
            add(Chain(s.begin() + 1, s.end()), 1);
            for (std::size_t i = 1; i < k; ++i) {
                const std::size_t comp = c.table(s[i - 1], s[i]);
                if (identity[comp]) continue;
                Chain face(s.begin(), s.begin() + static_cast<long>(i - 1));
                face.push_back(comp);
                face.insert(face.end(), s.begin() + static_cast<long>(i + 1), s.end());
                add(face, (i % 2) ? -1 : 1);
            }
            add(Chain(s.begin(), s.end() - 1), (k % 2) ? -1 : 1);
        }
        out.d.push_back(std::move(d));
    }
    return out;
}

std::uint64_t count_chains(const bwc::FiniteCategory& c, std::size_t n)
{
    const std::size_t no = c.object_count();
    if (n == 0) return no;
    std::vector<std::uint64_t> homs(no * no, 0);
    for (std::size_t f = 0; f < c.morphism_count(); ++f) ++homs[c.source(f) * no + c.target(f)];
    // ending[x]: chains whose last arrow has source x
    std::vector<std::uint64_t> ending(no, 0);
    for (std::size_t x = 0; x < no; ++x)
        for (std::size_t y = 0; y < no; ++y) ending[x] += homs[x * no + y];
    for (std::size_t step = 1; step < n; ++step) {
        std::vector<std::uint64_t> next(no, 0);
        for (std::size_t x = 0; x < no; ++x)
            for (std::size_t y = 0; y < no; ++y) next[x] += ending[y] * homs[x * no + y];
        ending = std::move(next);
    }
    return std::accumulate(ending.begin(), ending.end(), std::uint64_t{0});
}

} // namespace oracle
