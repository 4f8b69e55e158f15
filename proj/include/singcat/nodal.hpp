#pragma once

#include <array>
#include <string>
#include <vector>

#include "singcat/quiver.hpp"

namespace singcat::nodal {

enum class Sign { Plus, Minus };

Sign flip(Sign s);
char sign_char(Sign s);  // '+' or '-'

// Identity for even n, the swap for odd n.
Sign delta(int n, Sign s);

// Indecomposables of the one-dimensional block: P_sigma[n] and S_tau(l)[n].
struct Indecomposable {
    enum class Kind { Projective, String } kind = Kind::Projective;
    Sign sign = Sign::Plus;
    int length = 0;  // l >= 1 for strings, 0 for projectives
    int shift = 0;

    static Indecomposable P(Sign s, int n = 0) { return {Kind::Projective, s, 0, n}; }
    static Indecomposable S(Sign s, int l, int n = 0) { return {Kind::String, s, l, n}; }

    bool is_projective() const { return kind == Kind::Projective; }
    Indecomposable shifted(int k) const { return {kind, sign, length, shift + k}; }
    std::string str() const;  // "P+[2]", "S-(3)[-1]"

    bool operator==(const Indecomposable&) const = default;
    auto operator<=>(const Indecomposable&) const = default;
};

using Object = std::vector<Indecomposable>;  // finite direct sum; empty is zero

int hom_dim(const Indecomposable& X, const Indecomposable& Y);
int hom_dim_sum(const Object& X, const Object& Y);

// The nodal quiver - <-> * <-> + with alpha: - -> *, beta: * -> -,
// delta: * -> +, gamma: + -> * and relations "delta alpha", "beta gamma".
const Presentation& nodal_presentation();

struct Term {
    int degree;
    std::string vertex;  // "-", "*" or "+"
};

// A differential P_x -> P_y is left multiplication by a path from y to x.
struct Differential {
    int from_degree;
    Path path;
};

struct ProjectiveComplex {
    std::vector<Term> terms;                  // ascending degree
    std::vector<Differential> differentials;  // differentials[k]: terms[k] -> terms[k+1]
};

ProjectiveComplex minimal_string_complex(Sign tau, int l);

// Whether each composite of consecutive differentials lies in the ideal.
bool squares_to_zero(const ProjectiveComplex& c);

using K0Class = std::array<long long, 2>;  // coefficients of [P+], [P-]

K0Class k0_class(const Indecomposable& X);
K0Class k0_class(const Object& X);
// Alternating sum over the terms of a complex, with [P*] = 0.
K0Class k0_of_complex(const ProjectiveComplex& c, int shift = 0);

bool cluster_member(const Indecomposable& X);

// Zero-dimensional A1 block: P2[n] and S(l)[n].
struct ZeroIndecomposable {
    bool projective = true;
    int length = 0;
    int shift = 0;

    static ZeroIndecomposable P2(int n = 0) { return {true, 0, n}; }
    static ZeroIndecomposable S(int l, int n = 0) { return {false, l, n}; }
    std::string str() const;
    bool operator==(const ZeroIndecomposable&) const = default;
};

int hom_dim_zero(const ZeroIndecomposable& X, const ZeroIndecomposable& Y);

enum class Component { StringPlus, StringMinus, ProjectivePlus, ProjectiveMinus };

struct ARWindow {
    std::vector<Indecomposable> vertices;
    std::vector<std::pair<Indecomposable, Indecomposable>> arrows;       // irreducible maps
    std::vector<std::pair<Indecomposable, Indecomposable>> translations;  // X --> tau(X)
};

Indecomposable ar_translate(const Indecomposable& X);
ARWindow ar_window(Component c, int min_shift, int max_shift, int max_length);

// Every indecomposable with shift in [lo, hi] and string length <= max_length.
std::vector<Indecomposable> window(int lo, int hi, int max_length);

// Object syntax: "P+", "P-[2]", "S+(3)", "S-(2)[-1]"; ASCII or Unicode minus.
Indecomposable parse_object(const std::string& s);
// "P2[n]", "S(l)[n]".
ZeroIndecomposable parse_zero_object(const std::string& s);
bool is_zero_block_syntax(const std::string& s);

json to_json(const ProjectiveComplex& c);
json to_json(const ARWindow& w);

}  // namespace singcat::nodal
