#include "genera/bordism.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>

namespace genera {

Character point_character(Variables vars) {
    Character c;
    c.dimension = 0;
    c.variables = vars;
    c.numbers.emplace(Partition(), Rational(1));
    return c;
}

Character cpn_character(int n, Variables vars) {
    if (n < 1) throw usage_error("cpn_character: n must be at least 1");
    Character c;
    c.variables = vars;
    c.dimension = 2 * n;
    const int w = c.weight();
    if (w < 0) return c;  // odd or 2 mod 4 dimension: identically zero map
    for (const Partition& j : partitions_of(w)) {
        Rational v(1);
        for (int part : j.parts())
            v *= Rational::binomial(static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(part));
        c.numbers.emplace(j, v);
    }
    return c;
}

namespace {

// sum over all ways to split every part of j between the factors
Rational product_number(const Character& a, const Character& b, const Partition& j) {
    const std::vector<int>& parts = j.parts();
    Rational total;
    std::vector<int> left, right;
    std::function<void(size_t, int, int)> rec = [&](size_t i, int wl, int wr) {
        if (wl > std::max(a.weight(), 0) || wr > std::max(b.weight(), 0)) return;
        if (i == parts.size()) {
            if (wl != a.weight() || wr != b.weight()) return;
            Rational va = a.number(Partition(left));
            if (va.is_zero()) return;
            Rational vb = b.number(Partition(right));
            if (vb.is_zero()) return;
            total += va * vb;
            return;
        }
        for (int s = 0; s <= parts[i]; ++s) {
            if (s > 0) left.push_back(s);
            if (parts[i] - s > 0) right.push_back(parts[i] - s);
            rec(i + 1, wl + s, wr + parts[i] - s);
            if (s > 0) left.pop_back();
            if (parts[i] - s > 0) right.pop_back();
        }
    };
    rec(0, 0, 0);
    return total;
}

}  // namespace

Character character_product(const Character& a, const Character& b) {
    if (a.variables != b.variables)
        throw usage_error("character_product: mixed Pontryagin/Chern characters");
    Character c;
    c.variables = a.variables;
    c.dimension = a.dimension + b.dimension;
    const int w = c.weight();
    if (w < 0 || a.weight() < 0 || b.weight() < 0) return c;
    for (const Partition& j : partitions_of(w)) {
        Rational v = product_number(a, b, j);
        if (!v.is_zero()) c.numbers.emplace(j, v);
    }
    return c;
}

BordismElement BordismElement::generator(int n) {
    if (n < 1) throw usage_error("CP index must be at least 1");
    BordismElement e;
    e.degree = 2 * n;
    e.terms.emplace(Partition({n}), Rational(1));
    return e;
}

void BordismElement::add_term(const Partition& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

BordismElement element_add(const BordismElement& a, const BordismElement& b) {
    if (a.degree != b.degree) throw usage_error("element addition requires equal degrees");
    BordismElement out = a;
    for (const auto& [mono, c] : b.terms) out.add_term(mono, c);
    return out;
}

BordismElement element_scale(const BordismElement& a, const Rational& c) {
    BordismElement out = BordismElement::zero(a.degree);
    if (c.is_zero()) return out;
    for (const auto& [mono, v] : a.terms) out.terms.emplace(mono, v * c);
    return out;
}

BordismElement element_mul(const BordismElement& a, const BordismElement& b) {
    BordismElement out = BordismElement::zero(a.degree + b.degree);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) out.add_term(ma.merged(mb), ca * cb);
    return out;
}

Character monomial_character(const Partition& mono, Variables vars) {
    static std::mutex lock;
    static std::map<std::pair<int, std::vector<int>>, Character> cache;
    const std::pair<int, std::vector<int>> key{vars == Variables::pontryagin ? 0 : 1, mono.parts()};
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Character prod = point_character(vars);
    for (int n : mono.parts()) prod = character_product(prod, cpn_character(n, vars));
    std::lock_guard<std::mutex> guard(lock);
    return cache.emplace(key, std::move(prod)).first->second;
}

Character element_character(const BordismElement& e, Variables vars) {
    Character acc;
    acc.variables = vars;
    acc.dimension = e.degree;
    for (const auto& [mono, coeff] : e.terms) {
        const Character prod = monomial_character(mono, vars);
        for (const auto& [j, v] : prod.numbers) {
            auto [it, inserted] = acc.numbers.emplace(j, v * coeff);
            if (!inserted) it->second += v * coeff;
        }
    }
    for (auto it = acc.numbers.begin(); it != acc.numbers.end();)
        it = it->second.is_zero() ? acc.numbers.erase(it) : std::next(it);
    return acc;
}

bool elements_equal(const BordismElement& a, const BordismElement& b) {
    if (a.degree != b.degree) return false;
    return element_character(a) == element_character(b);
}

std::vector<Partition> generator_monomials(int dimension) {
    if (dimension % 4 != 0 || dimension < 0)
        throw usage_error("generator monomials exist in dimensions divisible by 4");
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(dimension / 2)) {
        bool even = true;
        for (int part : p.parts())
            if (part % 2 != 0) { even = false; break; }
        if (even) out.push_back(p);
    }
    return out;
}

std::vector<std::vector<Rational>> generator_character_matrix(int dimension) {
    const std::vector<Partition> monos = generator_monomials(dimension);
    const std::vector<Partition> rows = partitions_of(dimension / 4);
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(monos.size()));
    for (size_t col = 0; col < monos.size(); ++col) {
        BordismElement e = BordismElement::zero(dimension);
        e.terms.emplace(monos[col], Rational(1));
        Character c = element_character(e);
        for (size_t row = 0; row < rows.size(); ++row) m[row][col] = c.number(rows[row]);
    }
    return m;
}

Rational matrix_determinant(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rational inv = m[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational factor = m[r][col] * inv;
            for (size_t c2 = col; c2 < n; ++c2) m[r][c2] -= factor * m[col][c2];
        }
    }
    return det;
}

std::map<Partition, Rational, PartitionOrder> express_in_generator_basis(const Character& c) {
    if (c.variables != Variables::pontryagin)
        throw usage_error("express_in_generator_basis: Pontryagin characters only");
    if (c.dimension % 4 != 0)
        throw usage_error("express_in_generator_basis: dimension must be divisible by 4");
    const std::vector<Partition> monos = generator_monomials(c.dimension);
    const std::vector<Partition> rows = partitions_of(c.dimension / 4);
    std::vector<std::vector<Rational>> m = generator_character_matrix(c.dimension);
    std::vector<Rational> rhs(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) rhs[i] = c.number(rows[i]);

    // exact Gaussian elimination; the matrix is invertible by Thom's theorem,
    // so a singular pivot is an engine bug, not bad input
    const size_t n = rows.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("generator character matrix is singular");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational inv = m[col][col].inverse();
        for (size_t c2 = col; c2 < n; ++c2) m[col][c2] *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational factor = m[r][col];
            for (size_t c2 = col; c2 < n; ++c2) m[r][c2] -= factor * m[col][c2];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::map<Partition, Rational, PartitionOrder> out;
    for (size_t i = 0; i < n; ++i)
        if (!rhs[i].is_zero()) out.emplace(monos[i], rhs[i]);
    return out;
}

// --------------------------------------------------------------------------
// Expression parser: expr := ['-'] term (('+'|'-') term)*
//                    term := factor ('*' factor)*
//                    factor := number ['/' number] | CP<digits> ['^' digits]

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw usage_error("parse error at position " + std::to_string(pos + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool consume(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stol(s.substr(start, pos - start));
    }

    // one multiplicand: rational constant or CP power
    void parse_factor(Rational& coeff, std::vector<int>& gens) {
        skip_ws();
        if (pos + 1 < s.size() && s[pos] == 'C' && s[pos + 1] == 'P') {
            pos += 2;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected an index after CP");
            long n = parse_integer();
            long e = 1;
            if (consume('^')) {
                e = parse_integer();
                if (e < 1) fail("exponent must be positive");
            }
            for (long i = 0; i < e; ++i) gens.push_back(static_cast<int>(n));
            return;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            long num = parse_integer();
            if (consume('/')) {
                long den = parse_integer();
                if (den == 0) fail("zero denominator");
                coeff *= Rational(num, den);
            } else {
                coeff *= Rational(num);
            }
            return;
        }
        fail("expected CP<k> or a number");
    }

    // product of factors, returned as coefficient + generator multiset
    std::pair<Rational, Partition> parse_term() {
        Rational coeff(1);
        std::vector<int> gens;
        parse_factor(coeff, gens);
        while (consume('*')) parse_factor(coeff, gens);
        return {coeff, Partition(std::move(gens))};
    }

    BordismElement parse() {
        skip_ws();
        if (pos == s.size()) fail("empty expression");
        bool first = true;
        bool have_degree = false;
        BordismElement out;
        while (true) {
            skip_ws();
            Rational sign(1);
            if (consume('-')) sign = Rational(-1);
            else if (consume('+')) {
                if (first) fail("unexpected '+'");
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            size_t term_pos = pos;
            auto [coeff, mono] = parse_term();
            int d = 2 * mono.weight();
            if (!have_degree) {
                out.degree = d;
                have_degree = true;
            } else if (d != out.degree) {
                pos = term_pos;
                fail("inhomogeneous expression: term of dimension " + std::to_string(d) +
                     " in a dimension-" + std::to_string(out.degree) + " element");
            }
            out.add_term(mono, sign * coeff);
            first = false;
            skip_ws();
            if (pos == s.size()) break;
            if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
        }
        return out;
    }
};

}  // namespace

BordismElement parse_element_expr(const std::string& text) {
    return ExprParser(text).parse();
}

std::string render_element(const BordismElement& e) {
    if (e.terms.empty()) return "0";
    // positive terms first, canonical order inside each sign group
    std::vector<std::pair<Partition, Rational>> terms(e.terms.begin(), e.terms.end());
    std::stable_partition(terms.begin(), terms.end(),
                          [](const auto& kv) { return kv.second.sign() > 0; });
    std::string out;
    for (const auto& [mono, c] : terms) {
        Rational a = c;
        if (out.empty()) {
            if (a.sign() < 0) { out += "-"; a = -a; }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        std::string monostr;
        int run_val = 0, run_len = 0;
        auto flush = [&] {
            if (run_len == 0) return;
            if (!monostr.empty()) monostr += "*";
            monostr += "CP" + std::to_string(run_val);
            if (run_len > 1) monostr += "^" + std::to_string(run_len);
            run_len = 0;
        };
        for (int n : mono.parts()) {
            if (run_len && n == run_val) { ++run_len; continue; }
            flush();
            run_val = n;
            run_len = 1;
        }
        flush();
        if (monostr.empty()) {
            out += a.str();
        } else {
            if (!a.is_one()) out += a.str() + "*";
            out += monostr;
        }
    }
    return out;
}

}  // namespace genera
