#pragma once

#include <map>
#include <string>
#include <vector>

#include "genera/multiseq.hpp"
#include "genera/partition.hpp"
#include "genera/rational.hpp"

namespace genera {

// A closed manifold enters only through its characteristic-number map:
// real dimension plus J |-> <p_J, [N]> on partitions of dimension/4
// (Pontryagin) or dimension/2 (Chern). Dimensions with no partitions of
// the right weight carry the zero map.
struct Character {
    int dimension = 0;
    Variables variables = Variables::pontryagin;
    std::map<Partition, Rational, PartitionOrder> numbers;

    // weight of the indexing partitions; -1 when the map is identically zero
    int weight() const {
        const int d = variables == Variables::pontryagin ? 4 : 2;
        return dimension % d == 0 ? dimension / d : -1;
    }

    Rational number(const Partition& j) const {
        auto it = numbers.find(j);
        return it != numbers.end() ? it->second : Rational();
    }

    friend bool operator==(const Character& a, const Character& b) {
        return a.dimension == b.dimension && a.variables == b.variables && a.numbers == b.numbers;
    }
};

// the unit for products: dimension 0, <1,[pt]> = 1
Character point_character(Variables vars);

// <p_J, [CP^n]> = prod C(n+1, j_i) over partitions with sum 2j_i = n, from
// the total class (1+x^2)^{n+1}; Chern mode uses (1+x)^{n+1} and sum j_i = n.
Character cpn_character(int n, Variables vars);

// Whitney product: every part of J splits between the two factors.
Character character_product(const Character& a, const Character& b);

// Element of the rational oriented bordism ring, written in the generator
// monomials of Q[CP^2, CP^4, ...]. A monomial is stored as the partition of
// printed indices (so [CP^4][CP^2]^2 is (4,2,2)) and has real dimension
// 2 * weight. Homogeneous; zero coefficients are not stored.
struct BordismElement {
    int degree = 0;  // total real dimension
    std::map<Partition, Rational, PartitionOrder> terms;

    static BordismElement zero(int degree) { return BordismElement{degree, {}}; }
    static BordismElement generator(int n);  // [CP^n]

    bool is_zero() const { return terms.empty(); }
    void add_term(const Partition& mono, const Rational& c);

    friend bool operator==(const BordismElement& a, const BordismElement& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }
};

BordismElement element_add(const BordismElement& a, const BordismElement& b);
BordismElement element_scale(const BordismElement& a, const Rational& c);
BordismElement element_mul(const BordismElement& a, const BordismElement& b);

// character of one generator monomial, e.g. (4,2,2) for [CP^4][CP^2]^2;
// memoized, since deep products recur across evaluations
Character monomial_character(const Partition& mono, Variables vars);

// Q-linear extension of character_product over the monomials.
Character element_character(const BordismElement& e, Variables vars = Variables::pontryagin);

// true iff the Pontryagin characters agree; degree mismatch compares unequal
bool elements_equal(const BordismElement& a, const BordismElement& b);

// Generator monomials of a given real dimension (multiple of 4), canonical
// order: the even-part partitions of dimension/2.
std::vector<Partition> generator_monomials(int dimension);

// Matrix m[i][j] = <p_{J_i}, character of monomial_j> with rows the
// partitions of dimension/4 and columns the generator monomials, both in
// canonical order. Square by Thom's theorem.
std::vector<std::vector<Rational>> generator_character_matrix(int dimension);

Rational matrix_determinant(std::vector<std::vector<Rational>> m);

// Unique coefficients expressing a weight-complete Pontryagin character in
// the generator monomials; exact linear solve against the matrix above.
std::map<Partition, Rational, PartitionOrder> express_in_generator_basis(const Character& c);

// <K(p_1,...,p_m), [N]>: pair the top-weight K-polynomial with the numbers.
template <class S>
S genus_eval(const MultSeq<S>& ms, const Character& c) {
    const int w = c.weight();
    if (w < 0) return ScalarRing<S>::zero(ms.q_order);
    if (w > ms.max_weight)
        throw usage_error("genus_eval: K-table weight " + std::to_string(ms.max_weight) +
                          " below required weight " + std::to_string(w));
    S acc = ScalarRing<S>::zero(ms.q_order);
    for (const auto& [j, coeff] : ms.k[static_cast<size_t>(w)]) acc += scalar_mul(coeff, c.number(j));
    return acc;
}

template <class S>
S genus_eval(const MultSeq<S>& ms, const BordismElement& e, Variables vars = Variables::pontryagin) {
    return genus_eval(ms, element_character(e, vars));
}

// Parser for the CLI element syntax, e.g. "3*CP2^2 - 2*CP4"; whitespace
// insensitive; errors carry the character position. The element must be
// homogeneous.
BordismElement parse_element_expr(const std::string& text);

std::string render_element(const BordismElement& e);

}  // namespace genera
