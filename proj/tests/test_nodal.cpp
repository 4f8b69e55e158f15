#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "singcat/nodal.hpp"

using namespace singcat;
using namespace singcat::nodal;

namespace {

const Sign kP = Sign::Plus, kM = Sign::Minus;

std::vector<std::string> modules(const ProjectiveComplex& c) {
    std::vector<std::string> out;
    for (const auto& t : c.terms) out.push_back("P" + t.vertex);
    return out;
}

std::vector<std::string> paths(const ProjectiveComplex& c) {
    std::vector<std::string> out;
    for (const auto& d : c.differentials) out.push_back(d.path.display());
    return out;
}

int zero_oracle(const ZeroIndecomposable& X, const ZeroIndecomposable& Y) {
    const int n = Y.shift - X.shift;
    if (X.projective && Y.projective) return n <= 0;
    if (X.projective) return 0 <= -n && -n < Y.length;
    const int l = X.length;
    if (Y.projective) return 2 <= n && n <= l + 1;
    const int lp = Y.length;
    return (n <= 0 && 0 < lp + n && lp + n <= l) || (2 <= n && n <= l + 1 && l + 1 < n + lp);
}

}  // namespace

TEST_CASE("delta") {
    CHECK(delta(0, kP) == kP);
    CHECK(delta(-1, kP) == kM);
    for (int n = -5; n <= 5; ++n)
        for (Sign s : {kP, kM}) CHECK(delta(n, delta(n, s)) == s);
}

TEST_CASE("printed Hom values") {
    CHECK(hom_dim(Indecomposable::P(kP), Indecomposable::P(kP, 0)) == 1);
    CHECK(hom_dim(Indecomposable::P(kP), Indecomposable::P(kM, -1)) == 1);
    CHECK(hom_dim(Indecomposable::P(kP), Indecomposable::P(kP, 1)) == 0);
    CHECK(hom_dim(Indecomposable::S(kP, 1), Indecomposable::P(kM, 2)) == 1);
    CHECK(hom_dim(Indecomposable::P(kP, 0), Indecomposable::S(kP, 2)) == 1);
    CHECK(hom_dim(Indecomposable::S(kP, 2), Indecomposable::S(kP, 2, 0)) == 1);
}

TEST_CASE("Hom dimensions agree with the formula oracle") {
    auto objs = fixtures::nodal_window(-4, 4, 4);
    for (const auto& X : objs)
        for (const auto& Y : objs) {
            const int d = hom_dim(X, Y);
            CHECK((d == 0 || d == 1));
            CHECK_MESSAGE(d == fixtures::hom_oracle(X, Y), X.str() << " -> " << Y.str());
        }
}

TEST_CASE("shift invariance") {
    std::mt19937_64 rng(5);
    auto objs = fixtures::nodal_window(-6, 6, 6);
    for (int k = 0; k < 2000; ++k) {
        const auto& X = objs[rng() % objs.size()];
        const auto& Y = objs[rng() % objs.size()];
        const int p = static_cast<int>(rng() % 11) - 5;
        CHECK(hom_dim(X.shifted(p), Y.shifted(p)) == hom_dim(X, Y));
    }
}

TEST_CASE("indecomposables are separated by Hom functors") {
    auto objs = fixtures::nodal_window(-4, 4, 4);
    auto probes = fixtures::nodal_window(-10, 10, 10);
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j) {
            bool separated = false;
            for (const auto& T : probes) {
                if (hom_dim(objs[i], T) != hom_dim(objs[j], T) || hom_dim(T, objs[i]) != hom_dim(T, objs[j])) {
                    separated = true;
                    break;
                }
            }
            CHECK_MESSAGE(separated, objs[i].str() << " vs " << objs[j].str());
        }
}

TEST_CASE("bilinear extension") {
    CHECK(hom_dim_sum({}, {Indecomposable::P(kP)}) == 0);
    CHECK(hom_dim_sum({Indecomposable::P(kP), Indecomposable::P(kM)}, {Indecomposable::P(kP)}) == 1);
}

TEST_CASE("printed minimal strings") {
    auto s1 = minimal_string_complex(kP, 1);
    CHECK(modules(s1) == std::vector<std::string>{"P-", "P*", "P+"});
    CHECK(paths(s1) == std::vector<std::string>{"β", "γ"});
    CHECK(s1.terms.back().degree == 0);

    auto s2 = minimal_string_complex(kP, 2);
    CHECK(modules(s2) == std::vector<std::string>{"P+", "P*", "P*", "P+"});
    CHECK(paths(s2) == std::vector<std::string>{"δ", "αβ", "γ"});

    CHECK(minimal_string_complex(kP, 3).terms.front().vertex == "-");
}

TEST_CASE("minimal strings are complexes of the right shape") {
    for (Sign t : {kP, kM})
        for (int l = 1; l <= 10; ++l) {
            auto c = minimal_string_complex(t, l);
            CHECK(c.terms.size() == static_cast<std::size_t>(l + 2));
            CHECK(c.differentials.size() == static_cast<std::size_t>(l + 1));
            CHECK(squares_to_zero(c));
            CHECK(c.terms.back().vertex == std::string(1, sign_char(t)));
            const Sign s = l % 2 == 0 ? t : flip(t);
            CHECK(c.terms.front().vertex == std::string(1, sign_char(s)));
            for (std::size_t k = 1; k + 1 < c.terms.size(); ++k) CHECK(c.terms[k].vertex == "*");
            // each differential is a nonzero path P_x -> P_y given by a path from y to x
            const Presentation& P = nodal_presentation();
            for (std::size_t k = 0; k < c.differentials.size(); ++k) {
                const Path& p = c.differentials[k].path;
                CHECK_FALSE(p.is_lazy());
                CHECK_FALSE(path_in_ideal(p, P));
                CHECK(p.source() == c.terms[k + 1].vertex);
                CHECK(p.target() == c.terms[k].vertex);
                CHECK(p.length() <= 2);
            }
        }
}

TEST_CASE("K0 classes") {
    CHECK(k0_class(Indecomposable::P(kP)) == K0Class{1, 0});
    CHECK(k0_class(Indecomposable::S(kP, 1)) == K0Class{1, 1});
    CHECK(k0_class(Indecomposable::S(kP, 2)) == K0Class{0, 0});
    CHECK(k0_class(Object{}) == K0Class{0, 0});

    for (const auto& X : fixtures::nodal_window(-4, 4, 10)) {
        CHECK(k0_class(X.shifted(1)) == K0Class{-k0_class(X)[0], -k0_class(X)[1]});
        if (X.is_projective()) continue;
        // alternating sum over the complex, [P*] = 0, degree 0 counted positively
        K0Class sum{0, 0};
        for (const auto& t : minimal_string_complex(X.sign, X.length).terms) {
            const long long e = ((t.degree + X.shift) % 2 == 0) ? 1 : -1;
            if (t.vertex == "+") sum[0] += e;
            if (t.vertex == "-") sum[1] += e;
        }
        CHECK_MESSAGE(k0_class(X) == sum, X.str());
        CHECK(k0_of_complex(minimal_string_complex(X.sign, X.length), X.shift) == sum);
    }
}

TEST_CASE("cluster subcategory") {
    CHECK(cluster_member(Indecomposable::P(kM, 5)));
    CHECK(cluster_member(Indecomposable::S(kM, 4, -2)));
    CHECK_FALSE(cluster_member(Indecomposable::S(kM, 3)));
    CHECK_FALSE(cluster_member(Indecomposable::S(kP, 2)));
    for (const auto& X : fixtures::nodal_window(-4, 4, 4)) {
        const bool want = X.sign == kM && (X.is_projective() || X.length % 2 == 0);
        CHECK(cluster_member(X) == want);
        CHECK(cluster_member(X.shifted(1)) == cluster_member(X));
    }
}

TEST_CASE("zero-dimensional block") {
    CHECK(hom_dim_zero(ZeroIndecomposable::P2(), ZeroIndecomposable::P2(-1)) == 1);
    CHECK(hom_dim_zero(ZeroIndecomposable::P2(), ZeroIndecomposable::P2(1)) == 0);
    CHECK(hom_dim_zero(ZeroIndecomposable::P2(1), ZeroIndecomposable::S(3)) == 1);
    CHECK(hom_dim_zero(ZeroIndecomposable::S(2), ZeroIndecomposable::S(2, 3)) == 1);
    std::vector<ZeroIndecomposable> objs;
    for (int n = -4; n <= 4; ++n) {
        objs.push_back(ZeroIndecomposable::P2(n));
        for (int l = 1; l <= 4; ++l) objs.push_back(ZeroIndecomposable::S(l, n));
    }
    for (const auto& X : objs)
        for (const auto& Y : objs) CHECK(hom_dim_zero(X, Y) == zero_oracle(X, Y));
}

TEST_CASE("object syntax") {
    CHECK(parse_object("P+") == Indecomposable::P(kP));
    CHECK(parse_object("P-[2]") == Indecomposable::P(kM, 2));
    CHECK(parse_object("S+(3)") == Indecomposable::S(kP, 3));
    CHECK(parse_object("S-(2)[-1]") == Indecomposable::S(kM, 2, -1));
    CHECK(parse_object("S−(2)[−1]") == Indecomposable::S(kM, 2, -1));
    CHECK(parse_object("P+ [1]") == Indecomposable::P(kP, 1));
    CHECK_THROWS_AS(parse_object("S+(0)"), UsageError);
    CHECK_THROWS_AS(parse_object("Q+"), UsageError);
    CHECK(parse_zero_object("S(2)[3]") == ZeroIndecomposable::S(2, 3));
    CHECK(is_zero_block_syntax("P2[1]"));
    CHECK_FALSE(is_zero_block_syntax("P+[1]"));
    for (const auto& X : fixtures::nodal_window(-3, 3, 3)) CHECK(parse_object(X.str()) == X);
}

TEST_CASE("Auslander-Reiten components") {
    auto w = ar_window(Component::ProjectivePlus, -2, 2, 0);
    // P+[2] -> P-[1] -> P+[0] -> P-[-1] -> P+[-2]
    REQUIRE(w.arrows.size() == 4);
    CHECK(w.arrows[0].first == Indecomposable::P(kP, 2));
    CHECK(w.arrows[0].second == Indecomposable::P(kM, 1));
    CHECK(w.arrows[3].second == Indecomposable::P(kP, -2));
    CHECK(w.translations.empty());

    CHECK(ar_window(Component::StringPlus, 1, 0, 3).vertices.empty());

    CHECK(ar_translate(Indecomposable::S(kP, 1)) == Indecomposable::S(kM, 1, 1));
    CHECK_THROWS_AS(ar_translate(Indecomposable::P(kP)), Error);

    // Irreducible maps between strings are nonzero morphisms.
    for (auto c : {Component::StringPlus, Component::StringMinus}) {
        auto s = ar_window(c, -3, 3, 4);
        CHECK_FALSE(s.arrows.empty());
        for (const auto& [x, y] : s.arrows) CHECK(hom_dim(x, y) == 1);
        for (const auto& [x, y] : s.translations) CHECK(ar_translate(x) == y);
        // a component is closed under tau within the window
        for (const auto& [x, y] : s.translations)
            CHECK(std::find(s.vertices.begin(), s.vertices.end(), y) != s.vertices.end());
    }
}

TEST_CASE("complex json") {
    json j = to_json(minimal_string_complex(kP, 2));
    CHECK(j["terms"][0]["module"] == "P+");
    CHECK(j["terms"][0]["degree"] == -3);
    CHECK(j["differentials"][1]["path"] == "αβ");
}
