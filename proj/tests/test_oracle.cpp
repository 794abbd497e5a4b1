#include "chsh_oracle.hpp"

#include <doctest.h>

#include <stdexcept>

namespace {

chsh_oracle::Tables pr(int gamma) {
    chsh_oracle::Tables t(4, std::vector<mpq_class>(4));
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    t[x * 2 + y][a * 2 + b] = ((a ^ b) == ((x & y) ^ gamma)) ? mpq_class(1, 2) : mpq_class(0);
                }
            }
        }
    }
    return t;
}

} // namespace

TEST_CASE("every dual vertex is feasible") {
    const auto& vertices = chsh_oracle::dual_vertices();
    CHECK(!vertices.empty());
    for (const auto& y : vertices) {
        for (const auto& v : y) {
            CHECK(sgn(v) >= 0);
        }
        for (int g = 0; g < 16; ++g) {
            const int a[2] = {(g >> 3) & 1, (g >> 2) & 1};
            const int b[2] = {(g >> 1) & 1, g & 1};
            mpq_class s = 0;
            for (int x = 0; x < 2; ++x) {
                for (int yy = 0; yy < 2; ++yy) {
                    s += y[(x * 2 + yy) * 4 + a[x] * 2 + b[yy]];
                }
            }
            CHECK(s >= 1);
        }
    }
}

TEST_CASE("oracle anchors") {
    CHECK(chsh_oracle::noncontextual_fraction(pr(0)) == 0);
    CHECK(chsh_oracle::noncontextual_fraction(pr(1)) == 0);
    chsh_oracle::Tables uniform(4, std::vector<mpq_class>(4, mpq_class(1, 4)));
    CHECK(chsh_oracle::noncontextual_fraction(uniform) == 1);
    // mixing PR with its complement gives a local model
    auto half = pr(0);
    const auto other = pr(1);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            half[i][j] = (half[i][j] + other[i][j]) / 2;
        }
    }
    CHECK(chsh_oracle::noncontextual_fraction(half) == 1);
    CHECK_THROWS_AS(chsh_oracle::noncontextual_fraction(chsh_oracle::Tables(3)), std::invalid_argument);
}
