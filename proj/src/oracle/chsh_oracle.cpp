#include "chsh_oracle.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <stdexcept>

namespace chsh_oracle {

namespace {

constexpr int kSlots = 16;
constexpr int kDim = kSlots + 1; // (y, t) homogenized

using Ray = std::array<mpq_class, kDim>;
// Constraint rows over (y, t): nonnegativity of each coordinate, then one
// row per global assignment (a0, a1, b0, b1).
constexpr int kRows = kDim + 16;
using Tight = std::bitset<kRows>;

std::vector<std::array<mpq_class, kDim>> constraint_rows() {
    std::vector<std::array<mpq_class, kDim>> rows;
    for (int i = 0; i < kDim; ++i) {
        std::array<mpq_class, kDim> r{};
        r[i] = 1;
        rows.push_back(r);
    }
    for (int g = 0; g < 16; ++g) {
        const int a[2] = {(g >> 3) & 1, (g >> 2) & 1};
        const int b[2] = {(g >> 1) & 1, g & 1};
        std::array<mpq_class, kDim> r{};
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                r[(x * 2 + y) * 4 + a[x] * 2 + b[y]] = 1;
            }
        }
        r[kSlots] = -1;
        rows.push_back(r);
    }
    return rows;
}

mpq_class dot(const std::array<mpq_class, kDim>& row, const Ray& ray) {
    mpq_class s = 0;
    for (int i = 0; i < kDim; ++i) {
        if (sgn(row[i]) != 0) {
            s += row[i] * ray[i];
        }
    }
    return s;
}

void normalize(Ray& ray) {
    mpq_class m = 0;
    for (const auto& x : ray) {
        m = std::max(m, mpq_class(abs(x)));
    }
    for (auto& x : ray) {
        x /= m;
    }
}

std::vector<std::vector<mpq_class>> enumerate() {
    const auto rows = constraint_rows();
    // The orthant rows come first, so the initial cone is the orthant itself.
    std::vector<Ray> rays;
    std::vector<Tight> tight;
    for (int i = 0; i < kDim; ++i) {
        Ray r{};
        r[i] = 1;
        rays.push_back(r);
        Tight t;
        for (int j = 0; j < kDim; ++j) {
            t[j] = j != i;
        }
        tight.push_back(t);
    }

    for (int k = kDim; k < kRows; ++k) {
        std::vector<mpq_class> val;
        for (const auto& r : rays) {
            val.push_back(dot(rows[k], r));
        }
        std::vector<Ray> next;
        std::vector<Tight> next_tight;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (sgn(val[i]) >= 0) {
                next.push_back(rays[i]);
                Tight t = tight[i];
                t[k] = sgn(val[i]) == 0;
                next_tight.push_back(t);
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (sgn(val[i]) <= 0) {
                continue;
            }
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (sgn(val[j]) >= 0) {
                    continue;
                }
                // combinatorial adjacency test
                const Tight common = tight[i] & tight[j];
                if (static_cast<int>(common.count()) < kDim - 2) {
                    continue;
                }
                bool adjacent = true;
                for (std::size_t l = 0; l < rays.size() && adjacent; ++l) {
                    if (l != i && l != j && (common & tight[l]) == common) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                Ray r;
                for (int c = 0; c < kDim; ++c) {
                    r[c] = val[i] * rays[j][c] - val[j] * rays[i][c];
                }
                normalize(r);
                Tight t = common;
                t[k] = true;
                next.push_back(r);
                next_tight.push_back(t);
            }
        }
        rays = std::move(next);
        tight = std::move(next_tight);
    }

    std::vector<std::vector<mpq_class>> vertices;
    for (const auto& r : rays) {
        if (sgn(r[kSlots]) == 0) {
            continue; // recession direction
        }
        std::vector<mpq_class> v(kSlots);
        for (int i = 0; i < kSlots; ++i) {
            v[i] = r[i] / r[kSlots];
        }
        vertices.push_back(std::move(v));
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

} // namespace

const std::vector<std::vector<mpq_class>>& dual_vertices() {
    static const auto vertices = enumerate();
    return vertices;
}

mpq_class noncontextual_fraction(const Tables& tables) {
    if (tables.size() != 4) {
        throw std::invalid_argument("expected four contexts");
    }
    std::vector<mpq_class> v;
    for (const auto& t : tables) {
        if (t.size() != 4) {
            throw std::invalid_argument("expected four outcomes per context");
        }
        for (const auto& p : t) {
            if (sgn(p) < 0) {
                throw std::invalid_argument("negative probability");
            }
            v.push_back(p);
        }
    }
    const auto& vertices = dual_vertices();
    mpq_class best = 0;
    bool first = true;
    for (const auto& y : vertices) {
        mpq_class s = 0;
        for (int i = 0; i < kSlots; ++i) {
            s += v[i] * y[i];
        }
        if (first || s < best) {
            best = s;
            first = false;
        }
    }
    return best;
}

} // namespace chsh_oracle
