#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rtlink/errors.hpp"
#include "rtlink/exact_matrix.hpp"
#include "rtlink/polynomial.hpp"

using namespace rtlink;

namespace {

IntPoly ints(std::initializer_list<long> c) {
    IntPoly p;
    for (long x : c)
        p.emplace_back(x);
    return p;
}

AlgebraicNumber random_element(const FieldPtr& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-9, 9), q(1, 5);
    Coeffs c(ctx->degree());
    for (auto& x : c)
        x = Rational(d(rng), q(rng));
    return AlgebraicNumber(ctx, c);
}

double value_at(const Coeffs& c, double g) {
    double v = 0;
    for (std::size_t k = c.size(); k-- > 0;)
        v = v * g + c[k].convert_to<double>();
    return v;
}

}   // namespace

TEST_CASE("cyclotomic and folded moduli match textbook polynomials") {
    CHECK(cyclotomic(10) == ints({1, -1, 1, -1, 1}));
    CHECK(cyclotomic(12) == ints({1, 0, -1, 0, 1}));
    CHECK(cos_minimal_polynomial(5) == ints({-1, -1, 1}));        // golden ratio
    CHECK(cos_minimal_polynomial(7) == ints({1, -2, -1, 1}));     // 2cos(pi/7)
    CHECK(cos_minimal_polynomial(12) == ints({1, 0, -4, 0, 1}));
    CHECK(cos_minimal_polynomial(4) == ints({-2, 0, 1}));
}

TEST_CASE("field degree is phi(2L)/2 and the generator is a root") {
    for (int L = 3; L <= 40; ++L) {
        CAPTURE(L);
        auto ctx = make_context(L);
        CHECK(euler_phi(2 * L) == oracle::totient(2 * L));
        CHECK(ctx->degree() == oracle::totient(2 * L) / 2);
        double g = 2 * std::cos(std::numbers::pi / L);
        double r = 0;
        const auto& mod = ctx->modulus();
        for (std::size_t k = mod.size(); k-- > 0;)
            r = r * g + mod[k].convert_to<double>();
        CHECK(std::abs(r) < 1e-8 * std::pow(4.0, ctx->degree()));
        for (int j : ctx->conjugate_indices())
            CHECK(std::gcd(j, 2 * L) == 1);
    }
}

TEST_CASE("field operations agree with floating point and satisfy ring axioms") {
    std::mt19937 rng(7);
    for (int L : {5, 7, 9, 12, 15}) {
        auto ctx = make_context(L);
        double g = 2 * std::cos(std::numbers::pi / L);
        for (int trial = 0; trial < 25; ++trial) {
            auto a = random_element(ctx, rng), b = random_element(ctx, rng), c = random_element(ctx, rng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            CHECK(value_at((a * b).base(), g) == doctest::Approx(value_at(a.base(), g) * value_at(b.base(), g)).epsilon(1e-9));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == AlgebraicNumber::rational(ctx, 1));
                CHECK(a.sign() == (value_at(a.base(), g) > 0 ? 1 : -1));
            }
        }
    }
}

TEST_CASE("galois conjugates of 2cos(pi/L) are 2cos(j pi/L)") {
    auto ctx = make_context(9);
    Coeffs g = ctx->cos_multiple(1);
    for (int j : ctx->conjugate_indices()) {
        auto [v, mag] = ctx->evaluate<Real>(ctx->galois(g, j));
        CHECK(v.convert_to<double>() == doctest::Approx(2 * std::cos(j * std::numbers::pi / 9)));
    }
}

TEST_CASE("minimal polynomials annihilate and have the expected degree") {
    auto ctx = make_context(7);
    auto g = embed_cos(ctx, 7);
    auto mp = g.minimal_polynomial();
    CHECK(mp.size() == 4);
    CHECK(poly_to_string(mp) == "x^3 - x^2 - 2*x + 1");
    CHECK(g.is_algebraic_integer());
    CHECK_FALSE((g * Rational(1, 2)).is_algebraic_integer());

    // 4cos^2(pi/5) = (3 + sqrt5)/2 has minimal polynomial x^2 - 3x + 1.
    auto ctx5 = make_context(5);
    auto h = embed_cos(ctx5, 5);
    CHECK(poly_to_string((h * h).minimal_polynomial()) == "x^2 - 3*x + 1");
    CHECK_FALSE(is_rational(h * h));

    // Extension element sqrt(2) over Q(sqrt5): degree 2 over Q.
    auto r2 = oracle::sqrt_of(ctx5, 2);
    CHECK(r2.has_extension_part());
    CHECK(poly_to_string(r2.minimal_polynomial()) == "x^2 - 2");
    auto mixed = r2 + h;
    auto mpm = mixed.minimal_polynomial();
    CHECK(mpm.size() == 5);
    Real x = mixed.value(), acc = 0;
    for (std::size_t k = mpm.size(); k-- > 0;)
        acc = acc * x + to_real<Real>(mpm[k]);
    CHECK(abs(acc) < Real("1e-80"));
}

TEST_CASE("square roots are recognised in the base field or adjoined") {
    auto ctx = make_context(12);
    auto s3 = oracle::sqrt_of(ctx, 3);
    CHECK_FALSE(s3.has_extension_part());
    CHECK(s3 * s3 == AlgebraicNumber::rational(ctx, 3));
    CHECK(s3.sign() > 0);
    auto s6 = oracle::sqrt_of(ctx, 6);
    CHECK_FALSE(s6.has_extension_part());
    auto s5 = oracle::sqrt_of(ctx, 5);
    CHECK(s5.has_extension_part());
    CHECK(s5 * s5 == AlgebraicNumber::rational(ctx, 5));
    CHECK_THROWS_AS(oracle::sqrt_of(ctx, -1), GeometryError);
    // 2 + sqrt3 = ((sqrt6 + sqrt2)/2)^2 is a square in Q(2cos(pi/12)).
    auto t = AlgebraicNumber::rational(ctx, 2) + s3;
    auto rt = adjoin_sqrt(t);
    CHECK_FALSE(rt.has_extension_part());
    CHECK(rt * rt == t);
}

TEST_CASE("rational helpers") {
    auto d = squarefree_decompose(Integer(-3456));
    CHECK(d.core == -6);
    CHECK(d.root == 24);
    for (long long n : {-5184LL, 72LL, 96LL, 1LL, -1LL, 1536LL})
        CHECK(squarefree_decompose(Integer(n)).core == oracle::squarefree_part(n));
    CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(rational_sqrt(Rational(2)));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("exact determinant, rank and signature agree with Eigen") {
    std::mt19937 rng(11);
    auto ctx = make_context(8);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix a(4, std::vector<AlgebraicNumber>(4, AlgebraicNumber::rational(ctx, 0)));
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j)
                a[i][j] = a[j][i] = random_element(ctx, rng);
        Eigen::MatrixXd m = to_double(a);
        CHECK(determinant(a).approx() == doctest::Approx(m.determinant()).epsilon(1e-9));
        auto cp = characteristic_polynomial(a);
        REQUIRE(cp.size() == 5);
        CHECK(cp[0].approx() == doctest::Approx(m.determinant()).epsilon(1e-9));
        CHECK(-cp[3].approx() == doctest::Approx(m.trace()).epsilon(1e-9));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        int pos = 0, neg = 0;
        for (int k = 0; k < 4; ++k)
            (es.eigenvalues()[k] > 0 ? pos : neg)++;
        auto s = rank_and_signature(a);
        CHECK(s.rank == 4);
        CHECK(s.positive == pos);
        CHECK(s.negative == neg);
    }
    // A rank-2 matrix: two copies of the same rows.
    auto one = AlgebraicNumber::rational(ctx, 1), g = embed_cos(ctx, 8);
    ExactMatrix r = {{one, g, one, g}, {g, one, g, one}, {one, g, one, g}, {g, one, g, one}};
    CHECK(exact_rank(r) == 2);
    CHECK(determinant(r).is_zero());
}
