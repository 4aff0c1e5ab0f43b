#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ehall/coeff.hpp"
#include "ehall/shuffle.hpp"

using namespace ehall;

namespace {

AlgElem u(int d) { return AlgElem::gen(Generator::u(d)); }

// direct two-term formula for x^a * x^b at a point
std::uint64_t direct_pair(int a, int b, const EvalAssign& pt) {
    std::uint64_t p = pt.p;
    std::uint64_t q1i = ff_inv(pt.q1, p), q2i = ff_inv(pt.q2, p);
    std::uint64_t q3i = ff_mul(pt.q1, pt.q2, p);
    auto omega = [&](std::uint64_t z, std::uint64_t w) {
        std::uint64_t chi = ff_mul(ff_sub(z, ff_mul(q1i, w, p), p),
                                   ff_mul(ff_sub(z, ff_mul(q2i, w, p), p),
                                          ff_sub(z, ff_mul(q3i, w, p), p), p),
                                   p);
        std::uint64_t d = ff_sub(z, w, p);
        return ff_mul(chi, ff_inv(ff_mul(d, ff_mul(d, d, p), p), p), p);
    };
    std::uint64_t x1 = pt.x(0), x2 = pt.x(1);
    std::uint64_t t1 = ff_mul(ff_mul(ff_pow_signed(x1, a, p), ff_pow_signed(x2, b, p), p),
                              omega(x1, x2), p);
    std::uint64_t t2 = ff_mul(ff_mul(ff_pow_signed(x2, a, p), ff_pow_signed(x1, b, p), p),
                              omega(x2, x1), p);
    return ff_add(t1, t2, p);
}

} // namespace

TEST_CASE("shuffle_mul basics") {
    SymRat f = SymRat::x_power(2);
    CHECK(shuffle_mul(SymRat::one(), f) == f);
    CHECK(shuffle_mul(f, SymRat::one()) == f);

    SymRat prod = shuffle_mul(SymRat::x_power(0), SymRat::x_power(0));
    CHECK(prod.n_vars() == 2);
    CHECK(prod.denom_exp() == 2);
    XLaurent num(2);
    num.add_term({2, 0}, Scalar(2));
    num.add_term({1, 1}, Scalar(2) - elem_sym(1) - elem_sym(2));
    num.add_term({0, 2}, Scalar(2));
    CHECK(prod == SymRat(2, num, 2));

    CHECK_THROWS_AS(shuffle_mul(prod, prod), std::invalid_argument);
}

TEST_CASE("shuffle_mul matches the two-term formula at points") {
    EvalPointSet pts = draw_point_set(kDefaultPrimes[0], 17, 2, 6);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            SymRat prod = shuffle_mul(SymRat::x_power(a), SymRat::x_power(b));
            for (const auto& pt : pts.points) CHECK(prod.eval(pt) == direct_pair(a, b, pt));
        }
}

TEST_CASE("shuffle_mul associativity and invariants") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(-2, 3);
    for (int i = 0; i < 8; ++i) {
        SymRat a = SymRat::x_power(d(rng)), b = SymRat::x_power(d(rng)),
               c = SymRat::x_power(d(rng));
        SymRat lhs = shuffle_mul(shuffle_mul(a, b), c);
        SymRat rhs = shuffle_mul(a, shuffle_mul(b, c));
        CHECK(lhs == rhs);
        CHECK(lhs.is_symmetric());
        CHECK(lhs.max_pole_order() <= 2);
    }
}

TEST_CASE("can_map") {
    CHECK(can_map(u(5)) == SymRat::x_power(5));
    CHECK(can_map(u(0) * u(0)) == shuffle_mul(SymRat::x_power(0), SymRat::x_power(0)));
    // algebra map on random pairs
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int i = 0; i < 6; ++i) {
        AlgElem x = u(d(rng)), y = u(d(rng)) * u(d(rng));
        CHECK(can_map(x * y) == shuffle_mul(can_map(x), can_map(y)));
    }
    CHECK_THROWS_AS(can_map(AlgElem::gen(Generator::th(1))), std::invalid_argument);
}

TEST_CASE("cubic and quad relators die in the oracle") {
    for (int m = -3; m <= 3; ++m) CHECK(can_map(relator_cubic(m).elem).is_zero());
    for (int a = -2; a <= 1; ++a)
        for (int b = -2; b <= 1; ++b) CHECK(can_map(relator_quad(a, b).elem).is_zero());
}

TEST_CASE("theta_op") {
    SymRat f = SymRat::x_power(3);
    CHECK(theta_op(0, f) == f);
    CHECK(theta_op(2, SymRat::one()).is_zero()); // vacuum
    Scalar a1 = elem_sym(1) - elem_sym(2);
    XLaurent mult = XLaurent::monomial(1, {1}, a1);
    CHECK(theta_op(1, f) == f.times_poly(mult));
    CHECK(phi_coeffs(1)[1] == alpha(1));
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) CHECK(h_poly(k, n).is_symmetric());
}

TEST_CASE("rep_check_relator across families") {
    EvalPointSet pts = draw_point_set(kDefaultPrimes[1], 9, 6, 4);
    for (int lvl = 0; lvl <= 2; ++lvl) {
        CHECK(rep_check_relator(relator_theta_comm(1, 2), lvl, pts));
        CHECK(rep_check_relator(relator_mixed(-2, 0), lvl, pts));
        CHECK(rep_check_relator(relator_quad(-1, -1), lvl, pts));
        CHECK(rep_check_relator(relator_cubic(0), lvl, pts));
        CHECK(rep_check_relator(relator_R(1, 0, 0), lvl, pts));
    }
}

TEST_CASE("eval_word_image agrees with the exact operator picture") {
    EvalPointSet pts = draw_point_set(kDefaultPrimes[2], 31, 3, 5);
    std::vector<Word> words = {
        Word{{Generator::u(1), Generator::u(0)}},
        Word{{Generator::th(2), Generator::u(-1)}},
        Word{{Generator::u(2), Generator::th(1), Generator::u(0)}},
    };
    for (const Word& w : words) {
        SymRat probe = SymRat::x_power(1);
        SymRat exact = apply_word(w, probe);
        for (const auto& pt : pts.points)
            CHECK(eval_word_image(w, probe, pt) == exact.eval(pt));
    }
}

TEST_CASE("eval_rank") {
    EvalPointSet pts = draw_point_set(kDefaultPrimes[0], 7, 2, 8);
    std::vector<SymRat> mono = {SymRat::x_power(0), SymRat::x_power(1), SymRat::x_power(2)};
    CHECK(eval_rank(mono, pts) == 3);
    SymRat f = shuffle_mul(SymRat::x_power(1), SymRat::x_power(0));
    CHECK(eval_rank({f, Scalar(2) * f}, pts) == 1);

    // sandwich on the (2,1) component, window u in [-1,2]: lower bound meets
    // the quotient rank 3
    Window w{2, -1, 2, 0};
    std::vector<SymRat> imgs;
    for (const Word& word : component_words({2, 1}, w)) imgs.push_back(can_map(AlgElem::term(word, Scalar(1))));
    CHECK(eval_rank(imgs, pts) == 3);
}
