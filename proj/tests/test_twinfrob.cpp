#include <doctest.h>

#include <random>

#include "twinfoam/twinfrob.hpp"

using namespace twinfoam;

namespace {

const GaussianRational I = GaussianRational::i();

Params random_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    auto gq = [&]() {
        return GaussianRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    };
    return Params{gq(), gq()};
}

std::vector<GaussianRational> basis_vec(int dim, int k) {
    std::vector<GaussianRational> v(dim);
    v[k] = GaussianRational(1);
    return v;
}

// internal q-degrees of the tensor basis: deg(1) = -1, deg(X) = +1 per factor
int degree_of_index(int idx, int factors) {
    int d = 0;
    for (int l = 0; l < factors; ++l) d += ((idx >> (factors - 1 - l)) & 1) ? 1 : -1;
    return d;
}

// checks every nonzero entry shifts internal degree by the same amount
void check_degree_shift(const LinMap& m, int src_factors, int tgt_factors, int expected) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            if (m.at(r, c).is_zero()) continue;
            int shift = degree_of_index(r, tgt_factors) - degree_of_index(c, src_factors);
            CHECK(shift == expected);
        }
}

} // namespace

TEST_CASE("structure map tables match the defining values") {
    Params p{GaussianRational::parse("2/3+i"), GaussianRational::parse("-1/2")};
    LinMap m = m_C(p);

    // m(X(x)X) = hX + a
    auto xx = m.apply(basis_vec(4, 3));
    CHECK(xx[0] == p.a);
    CHECK(xx[1] == p.h);
    // m(1(x)X) = X
    auto ox = m.apply(basis_vec(4, 1));
    CHECK(ox[0] == GaussianRational(0));
    CHECK(ox[1] == GaussianRational(1));

    // eps_C(1) = 0, eps_C(X) = 1; eps_W(X) = -i
    CHECK(eps_C(p).at(0, 0) == GaussianRational(0));
    CHECK(eps_C(p).at(0, 1) == GaussianRational(1));
    CHECK(eps_W(p).at(0, 1) == -I);

    // Delta_C(1) = 1(x)X + X(x)1 - h 1(x)1
    LinMap d = delta_C(p);
    CHECK(d.at(0, 0) == -p.h);
    CHECK(d.at(1, 0) == GaussianRational(1));
    CHECK(d.at(2, 0) == GaussianRational(1));
    CHECK(d.at(3, 0) == GaussianRational(0));
    // Delta_W(1) = i(1(x)X + X(x)1 - h 1(x)1)
    CHECK(delta_W(p) == d.scaled(I));

    // z2(X) = h - X, z2*(X) = i(h - X), f(1) = i, g(X) = -i(h - X)
    CHECK(z2(p).at(0, 1) == p.h);
    CHECK(z2(p).at(1, 1) == GaussianRational(-1));
    CHECK(z2s(p) == z2(p).scaled(I));
    CHECK(f_map(p).at(0, 0) == I);
    CHECK(g_map(p) == f_map(p).scaled(GaussianRational(-1)));

    // twisting identities restated
    CHECK(eps_W(p) == eps_C(p).scaled(-I));
    CHECK(delta_W(p) == delta_C(p).scaled(I));
}

TEST_CASE("zippers and basis changes") {
    std::mt19937_64 rng(424242);
    for (int t = 0; t < 10; ++t) {
        Params p = random_params(rng);
        LinMap id = LinMap::identity(2);
        CHECK(g_map(p) * f_map(p) == id);
        CHECK(f_map(p) * g_map(p) == id);
        CHECK(basis_to_plus(p) * basis_from_plus(p) == id);
    }
    Params h0{GaussianRational(0), GaussianRational(0)};
    CHECK(basis_to_plus(h0).apply(basis_vec(2, 1))[1] == GaussianRational(-1)); // X -> -X
    Params h2{GaussianRational(0), GaussianRational(2)};
    auto img = basis_to_plus(h2).apply(basis_vec(2, 1)); // X -> 2 - X
    CHECK(img[0] == GaussianRational(2));
    CHECK(img[1] == GaussianRational(-1));
}

TEST_CASE("splitting isomorphisms") {
    // closed forms at generic parameters
    Params p{GaussianRational::parse("1/3"), GaussianRational::parse("5-2i")};
    LinMap aC = alpha_C(p);
    CHECK(aC.at(0, 0) == GaussianRational(0)); // alpha_C(1) = (0, 1)
    CHECK(aC.at(1, 0) == GaussianRational(1));
    CHECK(aC.at(0, 1) == GaussianRational(1)); // alpha_C(X) = (1, h)
    CHECK(aC.at(1, 1) == p.h);
    LinMap bC = beta_C(p);
    CHECK(bC.at(0, 1) == GaussianRational(1)); // beta_C(0,1) = 1
    CHECK(bC.at(0, 0) == -p.h);                // beta_C(1,0) = X - h
    CHECK(bC.at(1, 0) == GaussianRational(1));
    CHECK(beta_W(p).at(0, 1) == I); // beta_W(0,1) = i * 1

    std::mt19937_64 rng(31337);
    for (int t = 0; t < 25; ++t) {
        Params q = random_params(rng);
        CHECK(beta_C(q) * alpha_C(q) == LinMap::identity(2));
        CHECK(alpha_C(q) * beta_C(q) == LinMap::identity(2));
        CHECK(beta_W(q) * alpha_W(q) == LinMap::identity(2));
        CHECK(alpha_W(q) * beta_W(q) == LinMap::identity(2));
    }
}

TEST_CASE("axioms and local relations hold at fixed and random parameters") {
    std::vector<Params> samples{{GaussianRational(0), GaussianRational(0)},
                                {GaussianRational(1), GaussianRational(0)}};
    std::mt19937_64 rng(777);
    for (int t = 0; t < 20; ++t) samples.push_back(random_params(rng));

    for (const Params& p : samples) {
        CheckReport ax = check_axioms(p);
        for (const auto& [name, ok] : ax.results) {
            INFO("axiom: ", name);
            CHECK(ok);
        }
        CheckReport loc = check_local_relations(p);
        for (const auto& [name, ok] : loc.results) {
            INFO("local relation: ", name);
            CHECK(ok);
        }
    }
}

TEST_CASE("local relation scalar values") {
    std::mt19937_64 rng(5150);
    Params p = random_params(rng);
    LinMap handle = m_C(p) * delta_C(p);

    LinMap torus = eps_C(p) * handle * iota_C(p);
    CHECK(torus.at(0, 0) == GaussianRational(2));

    LinMap ufo_upper = eps_C(p) * f_map(p) * handle * iota_C(p);
    CHECK(ufo_upper.at(0, 0) == -(GaussianRational(2) * I));

    // G2 at (a,h) = (1,0): h^2 + 4a = 4
    Params lee{GaussianRational(1), GaussianRational(0)};
    LinMap g2 = m_C(lee) * delta_C(lee) * m_C(lee) * delta_C(lee) * iota_C(lee);
    CHECK(g2 == iota_C(lee).scaled(GaussianRational(4)));
}

TEST_CASE("degree bookkeeping at a=h=0") {
    Params p{GaussianRational(0), GaussianRational(0)};
    check_degree_shift(m_C(p), 2, 1, 1);
    check_degree_shift(m_W(p), 2, 1, 1);
    check_degree_shift(delta_C(p), 1, 2, 1);
    check_degree_shift(delta_W(p), 1, 2, 1);
    check_degree_shift(iota_C(p), 0, 1, -1);
    check_degree_shift(eps_C(p), 1, 0, -1);
    check_degree_shift(eps_W(p), 1, 0, -1);
    check_degree_shift(z1(p), 1, 1, 0);
    check_degree_shift(z1s(p), 1, 1, 0);
    check_degree_shift(z2(p), 1, 1, 0);
    check_degree_shift(z2s(p), 1, 1, 0);
    check_degree_shift(f_map(p), 1, 1, 0);
    check_degree_shift(g_map(p), 1, 1, 0);
}

TEST_CASE("tensor and composition plumbing") {
    // flip is its own inverse and conjugating m_C by it is commutativity
    Params p{GaussianRational(2), GaussianRational(3)};
    CHECK(flip2() * flip2() == LinMap::identity(4));
    CHECK(m_C(p) * flip2() == m_C(p));

    LinMap a(1, 2), b(2, 1);
    a.at(0, 0) = GaussianRational(2);
    a.at(0, 1) = GaussianRational(3);
    b.at(0, 0) = GaussianRational(5);
    b.at(1, 0) = GaussianRational(7);
    LinMap ab = tensor(a, b);
    CHECK(ab.rows() == 2);
    CHECK(ab.cols() == 2);
    CHECK(ab.at(0, 0) == GaussianRational(10));
    CHECK(ab.at(1, 1) == GaussianRational(21));
}
