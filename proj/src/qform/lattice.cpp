#include "k3/qform/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace k3 {

GramMatrix e8_lattice()
{
    GramMatrix g(8, std::vector<Rat>(8, Rat(0)));
    for (int i = 0; i < 8; ++i)
        g[i][i] = 2;
    // Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4.
    const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (auto& e : edges) {
        g[e[0] - 1][e[1] - 1] = -1;
        g[e[1] - 1][e[0] - 1] = -1;
    }
    return g;
}

GramMatrix hyperbolic_plane() { return {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}; }

GramMatrix orthogonal_sum(const GramMatrix& a, const GramMatrix& b)
{
    const std::size_t n = a.size() + b.size();
    GramMatrix g(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            g[i][j] = a[i][j];
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            g[a.size() + i][a.size() + j] = b[i][j];
    return g;
}

GramMatrix scaled(const GramMatrix& g, const Rat& c)
{
    GramMatrix out = g;
    for (auto& row : out)
        for (auto& x : row)
            x *= c;
    return out;
}

GramMatrix k3_lattice()
{
    GramMatrix minus_e8 = scaled(e8_lattice(), Rat(-1));
    GramMatrix g = orthogonal_sum(minus_e8, minus_e8);
    for (int i = 0; i < 3; ++i)
        g = orthogonal_sum(g, hyperbolic_plane());
    return g;
}

Rat determinant(const GramMatrix& g)
{
    const std::size_t n = g.size();
    for (const auto& row : g)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix is not square");
    GramMatrix a = g;
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0)
                continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace k3
