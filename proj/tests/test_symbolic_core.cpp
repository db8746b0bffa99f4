#include <doctest.h>

#include "wedgelab/parser.hpp"
#include "wedgelab/rng.hpp"
#include "wedgelab/selfcheck.hpp"
#include "wedgelab/series.hpp"

using namespace wedgelab;

namespace {

const Variable X = Variable::plain("x");
const Variable Y = Variable::plain("y");
const Variable Z = Variable::plain("z");

Polynomial parse(const std::string& text) {
    VariableTable table({X, Y, Z});
    return parse_polynomial(text, table);
}

}  // namespace

TEST_CASE("variable order: base, then kind, then superscripts") {
    CHECK(Variable::plain("w") < Variable::plain("x"));
    CHECK(Variable::plain("x") < Variable::jet("x", 0));
    CHECK(Variable::jet("x", 2) < Variable::wedge("x", 0, 0));
    CHECK(Variable::jet("x", 0) < Variable::jet("x", 1));
    // graded-lex on wedge superscripts
    CHECK(Variable::wedge("x", 0, 0) < Variable::wedge("x", 0, 1));
    CHECK(Variable::wedge("x", 0, 1) < Variable::wedge("x", 1, 0));
    CHECK(Variable::wedge("x", 1, 0) < Variable::wedge("x", 0, 2));
    CHECK(Variable::wedge("x", 2, 0) < Variable::wedge("y", 0, 0));
    CHECK(Variable::wedge("x", 1, 0).name() == "x_(1,0)");
    CHECK(Variable::jet("x", 3).name() == "x_(3)");
}

TEST_CASE("monomial divisibility and operations") {
    const Monomial xy2 = Monomial::from({{X, 1}, {Y, 2}});
    const Monomial xy = Monomial::from({{X, 1}, {Y, 1}});
    CHECK(xy.divides(xy2));
    CHECK_FALSE(xy2.divides(xy));
    CHECK(xy2.divided_by(xy) == Monomial::variable(Y));
    CHECK(Monomial::lcm(xy2, Monomial::from({{X, 2}})) == Monomial::from({{X, 2}, {Y, 2}}));
    CHECK(xy2.squarefree_part() == xy);
    CHECK(Monomial::one().divides(xy));
    CHECK(xy2.total_degree() == 3);
}

TEST_CASE("polynomial arithmetic identities") {
    const Polynomial x = Polynomial::variable(X);
    const Polynomial y = Polynomial::variable(Y);
    CHECK((x + y) * (x - y) == x * x - y * y);
    const Polynomial p = parse("3*x^2*y - 7");
    CHECK(p + Polynomial::zero() == p);
    CHECK((x * rational(1, 2)) * (x * Rational(2)) == x * x);
    CHECK((p - p).is_zero());
    CHECK(p.total_degree() == 3);
    CHECK(Polynomial::zero().total_degree() == -1);
}

TEST_CASE("ring axioms hold on random polynomials") {
    Rng rng(2024);
    const std::vector<Variable> vars = {X, Y, Z};
    for (int s = 0; s < 20; ++s) {
        const Polynomial f = random_polynomial(rng, vars, 3, 4);
        const Polynomial g = random_polynomial(rng, vars, 3, 4);
        const Polynomial h = random_polynomial(rng, vars, 3, 4);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f + g == g + f);
    }
}

TEST_CASE("series multiplication truncates eagerly") {
    auto s_var = [](int m) {
        TruncatedSeries s(m);
        s.set_coefficient(1, 0, Polynomial::constant(1));
        return s;
    };
    auto t_var = [](int m) {
        TruncatedSeries s(m);
        s.set_coefficient(0, 1, Polynomial::constant(1));
        return s;
    };
    CHECK((s_var(1) * t_var(1)).is_zero());  // st dies at order 1
    const TruncatedSeries st = s_var(2) * t_var(2);
    CHECK(st.coefficient(1, 1) == Polynomial::constant(1));
    CHECK(st.coefficient(1, 0).is_zero());

    TruncatedSeries a(1), b(1);
    a.set_coefficient(0, 0, Polynomial::variable(Variable::wedge("x", 0, 0)));
    a.set_coefficient(1, 0, Polynomial::variable(Variable::wedge("x", 1, 0)));
    b.set_coefficient(0, 0, Polynomial::variable(Variable::wedge("y", 0, 0)));
    b.set_coefficient(0, 1, Polynomial::variable(Variable::wedge("y", 0, 1)));
    const TruncatedSeries ab = a * b;
    VariableTable table;
    for (auto& v : {Variable::wedge("x", 0, 0), Variable::wedge("x", 1, 0),
                    Variable::wedge("y", 0, 0), Variable::wedge("y", 0, 1)})
        table.add(v);
    CHECK(ab.coefficient(0, 0) == parse_polynomial("x_(0,0)*y_(0,0)", table));
    CHECK(ab.coefficient(1, 0) == parse_polynomial("x_(1,0)*y_(0,0)", table));
    CHECK(ab.coefficient(0, 1) == parse_polynomial("x_(0,0)*y_(0,1)", table));

    CHECK_THROWS_AS(TruncatedSeries(1) * TruncatedSeries(2), std::invalid_argument);
}

TEST_CASE("generic substitution of truncated series") {
    const TruncatedSeries image_x = generic_wedge_image(X, 1);
    const TruncatedSeries image_y = generic_wedge_image(Y, 1);
    const std::map<Variable, TruncatedSeries> images = {{X, image_x}, {Y, image_y}};

    SUBCASE("a single variable maps to its generic series") {
        const TruncatedSeries s = substitute_truncated(parse("x"), images, 1);
        CHECK(s == image_x);
    }
    SUBCASE("a product expands coefficientwise") {
        const TruncatedSeries s = substitute_truncated(parse("x*y"), images, 1);
        VariableTable table;
        for (auto& v : s.coefficient(0, 0).variables()) table.add(v);
        for (auto& v : s.coefficient(1, 0).variables()) table.add(v);
        for (auto& v : s.coefficient(0, 1).variables()) table.add(v);
        CHECK(s.coefficient(0, 0) == parse_polynomial("x_(0,0)*y_(0,0)", table));
        CHECK(s.coefficient(1, 0) ==
              parse_polynomial("x_(0,0)*y_(1,0) + x_(1,0)*y_(0,0)", table));
        CHECK(s.coefficient(0, 1) ==
              parse_polynomial("x_(0,0)*y_(0,1) + x_(0,1)*y_(0,0)", table));
    }
    SUBCASE("order zero evaluates at the base point") {
        const std::map<Variable, TruncatedSeries> base = {{X, generic_wedge_image(X, 0)}};
        const TruncatedSeries s = substitute_truncated(parse("x^2"), base, 0);
        const Polynomial x00 = Polynomial::variable(Variable::wedge("x", 0, 0));
        CHECK(s.coefficient(0, 0) == x00 * x00);
    }
    SUBCASE("missing image is an error") {
        const std::map<Variable, TruncatedSeries> only_x = {{X, image_x}};
        CHECK_THROWS_AS(substitute_truncated(parse("x*y"), only_x, 1), std::invalid_argument);
    }
}

TEST_CASE("substitution is a ring homomorphism into the truncated ring") {
    Rng rng(99);
    const std::vector<Variable> vars = {X, Y};
    for (int m = 0; m <= 4; ++m) {
        std::map<Variable, TruncatedSeries> images;
        for (auto& v : vars) images.emplace(v, generic_wedge_image(v, m));
        for (int s = 0; s < 4; ++s) {
            const Polynomial f = random_polynomial(rng, vars, 2, 3);
            const Polynomial g = random_polynomial(rng, vars, 2, 3);
            CHECK(substitute_truncated(f * g, images, m) ==
                  substitute_truncated(f, images, m) * substitute_truncated(g, images, m));
        }
    }
}

TEST_CASE("eager truncation agrees with expanding first and truncating last") {
    // independent route: substitute polynomials in plain s,t variables,
    // expand without truncation, then read the coefficients
    const Variable S = Variable::plain("s");
    const Variable T = Variable::plain("t");
    Rng rng(271);
    const std::vector<Variable> vars = {X, Y};
    for (int m = 0; m <= 3; ++m) {
        std::map<Variable, TruncatedSeries> series_images;
        std::map<Variable, Polynomial> poly_images;
        for (auto& v : vars) {
            series_images.emplace(v, generic_wedge_image(v, m));
            Polynomial image;
            for (int i = 0; i <= m; ++i)
                for (int j = 0; i + j <= m; ++j)
                    image += Polynomial::variable(wedge_variable(v, i, j)) *
                             Polynomial::term(Monomial::from({{S, i}, {T, j}}), 1);
            poly_images.emplace(v, std::move(image));
        }
        for (int trial = 0; trial < 4; ++trial) {
            const Polynomial f = random_polynomial(rng, vars, 3, 3);
            const TruncatedSeries eager = substitute_truncated(f, series_images, m);
            const Polynomial late = f.substitute(poly_images);
            // collect the coefficient of s^i t^j from the full expansion
            std::map<std::pair<int, int>, Polynomial> coeffs;
            for (auto& [mono, c] : late.terms()) {
                const int i = mono.exponent(S);
                const int j = mono.exponent(T);
                if (i + j > m) continue;
                const Monomial rest =
                    mono.divided_by(Monomial::from({{S, i}, {T, j}}));
                coeffs[{i, j}] += Polynomial::term(rest, c);
            }
            for (int i = 0; i <= m; ++i)
                for (int j = 0; i + j <= m; ++j) {
                    auto it = coeffs.find({i, j});
                    const Polynomial want =
                        it == coeffs.end() ? Polynomial::zero() : it->second;
                    CHECK(eager.coefficient(i, j) == want);
                }
        }
    }
}

TEST_CASE("parser survives arbitrary input") {
    // no input may do anything but parse or raise parse_error
    Rng rng(555);
    const std::string alphabet = "xyq01+-*/^()_, \t";
    VariableTable table({X, Y});
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        const int len = static_cast<int>(rng.below(14));
        for (int k = 0; k < len; ++k) text += alphabet[rng.below(alphabet.size())];
        try {
            (void)parse_polynomial(text, table);
        } catch (const parse_error&) {
            // expected for most of these
        }
    }
}

TEST_CASE("parser handles the grammar") {
    CHECK(parse("x^1*y^2") == Polynomial::term(Monomial::from({{X, 1}, {Y, 2}}), 1));
    CHECK(parse("x*y - y*x").is_zero());
    CHECK(parse("(x+y)^2") == parse("x^2 + 2*x*y + y^2"));
    CHECK(parse("1/2*x + 1/2*x") == parse("x"));
    CHECK(parse("-x + 2") == parse("2 - x"));
    CHECK(parse(" x \t* y ") == parse("x*y"));
    CHECK(parse("7") == Polynomial::constant(7));
    CHECK(parse("x^0") == Polynomial::constant(1));
}

TEST_CASE("parser reports positions for bad input") {
    CHECK_THROWS_AS(parse("x + @"), parse_error);
    CHECK_THROWS_AS(parse("x +"), parse_error);
    CHECK_THROWS_AS(parse("q + 1"), parse_error);  // unknown variable
    CHECK_THROWS_AS(parse("x^-1"), parse_error);
    CHECK_THROWS_AS(parse("(x"), parse_error);
    CHECK_THROWS_AS(parse("x 1"), parse_error);
    try {
        parse("x + q");
    } catch (const parse_error& e) {
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("q") != std::string::npos);
    }
}

TEST_CASE("printer and parser are mutually inverse on canonical forms") {
    CHECK(parse("x^2 - 2*x*y + y^2").to_string() == "x^2 - 2*x*y + y^2");
    CHECK(parse("-x^2 + y").to_string() == "-x^2 + y");
    CHECK(Polynomial::zero().to_string() == "0");
    CHECK(parse("1/2*x").to_string() == "1/2*x");

    Rng rng(7);
    const std::vector<Variable> vars = {X, Y, Z};
    for (int s = 0; s < 30; ++s) {
        Polynomial f = random_polynomial(rng, vars, 4, 5);
        if (rng.below(2)) f = f * rational(1, static_cast<long>(1 + rng.below(5)));
        VariableTable table(f.variables());
        CHECK(parse_polynomial(f.to_string(), table) == f);
    }
    // wedge and jet names round-trip too
    const Polynomial g =
        Polynomial::variable(Variable::wedge("x", 1, 0)) * Polynomial::variable(Variable::jet("y", 2));
    VariableTable table(g.variables());
    CHECK(parse_polynomial(g.to_string(), table) == g);
}
