#include "ptalg/algebra.hpp"

#include "ptalg/young.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ptalg {

AlgebraContext AlgebraContext::numeric(int n, int d) {
    if (n < 2)
        throw std::invalid_argument("AlgebraContext: n must be at least 2");
    if (d < 1)
        throw std::invalid_argument("AlgebraContext: d must be positive");
    return AlgebraContext{n, d, false};
}

AlgebraContext AlgebraContext::with_symbolic_d(int n) {
    if (n < 2)
        throw std::invalid_argument("AlgebraContext: n must be at least 2");
    return AlgebraContext{n, 0, true};
}

GeneratorProduct mul_generators(const Permutation &sigma, const Permutation &rho) {
    const int n = sigma.degree();
    if (rho.degree() != n)
        throw std::invalid_argument("mul_generators: degree mismatch");
    if (sigma.fixes(n) || rho.fixes(n))
        return {0, sigma * rho};
    const auto [a, b] = classify(sigma);
    const auto [p, q] = classify(rho);
    (void)b;
    Permutation result = Permutation::transposition(n, sigma(q), n) * sigma * rho * Permutation::transposition(n, p, n);
    return {a == q ? 1 : 0, std::move(result)};
}

namespace {

bool negligible(double c) { return std::abs(c) < 1e-12; }
bool negligible(const Polynomial &c) { return c.is_zero(); }

double d_factor(const AlgebraContext &ctx, double) { return static_cast<double>(ctx.d); }
Polynomial d_factor(const AlgebraContext &, const Polynomial &) { return Polynomial::d(); }

std::string scalar_string(double c) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, c);
    return std::string(buf, res.ptr);
}

std::string scalar_string(const Polynomial &c) {
    std::string s = to_string(c);
    return c.term_count() > 1 ? "(" + s + ")" : s;
}

bool is_one(double c) { return c == 1.0; }
bool is_one(const Polynomial &c) { return c == Polynomial(1); }
bool is_minus_one(double c) { return c == -1.0; }
bool is_minus_one(const Polynomial &c) { return c == Polynomial(-1); }

} // namespace

template <class Scalar>
BasicElement<Scalar>::BasicElement(AlgebraContext ctx) : ctx_(ctx) {}

template <class Scalar>
BasicElement<Scalar> BasicElement<Scalar>::generator(AlgebraContext ctx, const Permutation &sigma, Scalar c) {
    if (sigma.degree() != ctx.n)
        throw std::invalid_argument("generator: permutation degree differs from n");
    BasicElement e(ctx);
    e.add_term(sigma, c);
    return e;
}

template <class Scalar>
BasicElement<Scalar> BasicElement<Scalar>::unit(AlgebraContext ctx) {
    return generator(ctx, Permutation::identity(ctx.n));
}

template <class Scalar>
Scalar BasicElement<Scalar>::coefficient(const Permutation &sigma) const {
    auto it = terms_.find(sigma);
    return it == terms_.end() ? Scalar(0) : it->second;
}

template <class Scalar>
void BasicElement<Scalar>::add_term(const Permutation &sigma, const Scalar &c) {
    if (sigma.degree() != ctx_.n)
        throw std::invalid_argument("add_term: permutation degree differs from n");
    auto [it, inserted] = terms_.try_emplace(sigma, c);
    if (!inserted)
        it->second += c;
    if (negligible(it->second))
        terms_.erase(it);
}

template <class Scalar>
void BasicElement<Scalar>::check_context(const BasicElement &o) const {
    if (!(ctx_ == o.ctx_))
        throw std::invalid_argument("algebra elements belong to different contexts");
}

template <class Scalar>
BasicElement<Scalar> &BasicElement<Scalar>::operator+=(const BasicElement &o) {
    check_context(o);
    for (const auto &[p, c] : o.terms_)
        add_term(p, c);
    return *this;
}

template <class Scalar>
BasicElement<Scalar> &BasicElement<Scalar>::operator-=(const BasicElement &o) {
    check_context(o);
    for (const auto &[p, c] : o.terms_)
        add_term(p, Scalar(0) - c);
    return *this;
}

template <class Scalar>
BasicElement<Scalar> &BasicElement<Scalar>::operator*=(const Scalar &c) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second * c;
        if (negligible(it->second))
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

template <class Scalar>
BasicElement<Scalar> mul(const BasicElement<Scalar> &x, const BasicElement<Scalar> &y) {
    if (!(x.context() == y.context()))
        throw std::invalid_argument("mul: elements belong to different contexts");
    BasicElement<Scalar> out(x.context());
    for (const auto &[s, cs] : x.terms()) {
        for (const auto &[r, cr] : y.terms()) {
            auto prod = mul_generators(s, r);
            Scalar c = cs * cr;
            if (prod.power == 1)
                c = c * d_factor(x.context(), cs);
            out.add_term(prod.result, c);
        }
    }
    return out;
}

template <class Scalar>
BasicElement<Scalar> adjoint(const BasicElement<Scalar> &x) {
    BasicElement<Scalar> out(x.context());
    for (const auto &[s, c] : x.terms())
        out.add_term(s.inverse(), c);
    return out;
}

template <class Scalar>
std::string to_string(const BasicElement<Scalar> &x) {
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[p, c] : x.terms()) {
        std::string term;
        if (is_one(c))
            term = to_cycle_string(p);
        else if (is_minus_one(c))
            term = "-" + to_cycle_string(p);
        else
            term = scalar_string(c) + "*" + to_cycle_string(p);
        if (first)
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
        first = false;
    }
    return out;
}

template class BasicElement<double>;
template class BasicElement<Polynomial>;
template Element mul(const Element &, const Element &);
template SymbolicElement mul(const SymbolicElement &, const SymbolicElement &);
template Element adjoint(const Element &);
template SymbolicElement adjoint(const SymbolicElement &);
template std::string to_string(const Element &);
template std::string to_string(const SymbolicElement &);

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

/// Splits at binary '+'/'-' outside parentheses. Each piece keeps its sign.
std::vector<std::pair<int, std::string>> split_terms(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    int depth = 0;
    int sign = 1;
    std::string current;
    char prev = '\0';
    auto flush = [&] {
        std::string t = trim(current);
        if (!t.empty())
            out.emplace_back(sign, t);
        else if (!out.empty() || sign != 1)
            throw std::invalid_argument("parse_element: dangling operator");
        current.clear();
    };
    for (char c : text) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (depth == 0 && (c == '+' || c == '-') && prev != '*' && prev != '^') {
            bool leading = trim(current).empty();
            if (leading) {
                if (c == '-')
                    sign = -sign;
            } else {
                flush();
                sign = (c == '-') ? -1 : 1;
            }
        } else {
            current.push_back(c);
        }
        if (!std::isspace(static_cast<unsigned char>(c)))
            prev = c;
    }
    flush();
    return out;
}

template <class Scalar, class ParseCoeff>
BasicElement<Scalar> parse_generic(std::string_view text, AlgebraContext ctx, ParseCoeff parse_coeff) {
    BasicElement<Scalar> out(ctx);
    if (trim(text) == "0")
        return out;
    for (const auto &[sign, term] : split_terms(text)) {
        int depth = 0;
        std::size_t star = std::string::npos;
        for (std::size_t k = 0; k < term.size(); ++k) {
            if (term[k] == '(')
                ++depth;
            else if (term[k] == ')')
                --depth;
            else if (term[k] == '*' && depth == 0)
                star = k;
        }
        Scalar c(1);
        std::string perm_text = term;
        if (star != std::string::npos) {
            c = parse_coeff(trim(std::string_view(term).substr(0, star)));
            perm_text = trim(std::string_view(term).substr(star + 1));
        }
        if (sign < 0)
            c = Scalar(0) - c;
        out.add_term(parse_permutation(perm_text, ctx.n), c);
    }
    return out;
}

} // namespace

Element parse_element(std::string_view text, AlgebraContext ctx) {
    return parse_generic<double>(text, ctx, [](const std::string &s) {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument("parse_element: bad coefficient '" + s + "'");
        return v;
    });
}

SymbolicElement parse_symbolic_element(std::string_view text, int n) {
    return parse_generic<Polynomial>(text, AlgebraContext::with_symbolic_d(n),
                                     [](const std::string &s) { return parse_polynomial(s); });
}

Element evaluate(const SymbolicElement &x, int d) {
    Element out(AlgebraContext::numeric(x.context().n, d));
    for (const auto &[p, c] : x.terms())
        out.add_term(p, c.evaluate(d));
    return out;
}

Element u_element(const Partition &alpha, int a, int b, int i, int j, AlgebraContext ctx) {
    const int n = ctx.n;
    if (n < 3)
        throw std::invalid_argument("u_element: requires n >= 3");
    if (ctx.symbolic)
        throw std::invalid_argument("u_element: requires a numeric d");
    if (alpha.weight() != n - 2)
        throw std::invalid_argument("u_element: alpha must be a partition of n-2");
    auto rep = YoungIrrep::get(alpha);
    const int w = rep->dimension();
    if (a < 1 || a > n - 1 || b < 1 || b > n - 1 || i < 1 || i > w || j < 1 || j > w)
        throw std::out_of_range("u_element: index out of range");
    const double scale = static_cast<double>(w) / static_cast<double>(factorial(n - 2));
    const Permutation left = Permutation::transposition(n, a, n) * Permutation::transposition(n, a, n - 1);
    const Permutation right = Permutation::transposition(n, b, n - 1);
    Element out(ctx);
    for (const auto &s : all_permutations(n - 2)) {
        double c = scale * rep->entry(s.inverse(), j, i);
        if (c == 0.0)
            continue;
        out.add_term(left * s.extended(n) * right, c);
    }
    return out;
}

std::vector<std::vector<Element>> u_family(const Partition &alpha, AlgebraContext ctx) {
    const int w = YoungIrrep::get(alpha)->dimension();
    const int size = (ctx.n - 1) * w;
    std::vector<std::vector<Element>> family(static_cast<std::size_t>(size));
    for (int a = 1; a <= ctx.n - 1; ++a)
        for (int i = 1; i <= w; ++i)
            for (int b = 1; b <= ctx.n - 1; ++b)
                for (int j = 1; j <= w; ++j)
                    family[static_cast<std::size_t>((a - 1) * w + i - 1)].push_back(u_element(alpha, a, b, i, j, ctx));
    return family;
}

} // namespace ptalg
