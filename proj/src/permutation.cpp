#include "ptalg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptalg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = degree();
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: images are not a bijection of {1.." +
                                        std::to_string(m) + "}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int m) {
    if (m < 0)
        throw std::invalid_argument("Permutation::identity: negative degree");
    std::vector<int> im(static_cast<std::size_t>(m));
    std::iota(im.begin(), im.end(), 1);
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::transposition(int m, int x, int y) {
    if (x < 1 || y < 1 || x > m || y > m)
        throw std::invalid_argument("Permutation::transposition: point out of range");
    Permutation p = identity(m);
    std::swap(p.images_[static_cast<std::size_t>(x - 1)], p.images_[static_cast<std::size_t>(y - 1)]);
    return p;
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>> &cycles) {
    Permutation result = identity(m);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto &cyc = *it;
        std::vector<int> im = identity(m).images_;
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int x = cyc[k];
            if (x < 1 || x > m || used[static_cast<std::size_t>(x - 1)])
                throw std::invalid_argument("Permutation::from_cycles: invalid cycle");
            used[static_cast<std::size_t>(x - 1)] = true;
            im[static_cast<std::size_t>(x - 1)] = cyc[(k + 1) % cyc.size()];
        }
        result = compose(Permutation(std::move(im)), result);
    }
    return result;
}

Permutation Permutation::unrank(int m, std::size_t r) {
    if (r >= factorial(m))
        throw std::out_of_range("Permutation::unrank: rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(m));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> im;
    im.reserve(pool.size());
    for (int k = m; k >= 1; --k) {
        std::size_t f = factorial(k - 1);
        std::size_t idx = r / f;
        r %= f;
        im.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 1; x <= degree(); ++x)
        inv[static_cast<std::size_t>((*this)(x) - 1)] = x;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if ((*this)(x) != x)
            return false;
    return true;
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int count = 0;
    for (int x = 1; x <= degree(); ++x) {
        if (seen[static_cast<std::size_t>(x - 1)])
            continue;
        ++count;
        for (int y = x; !seen[static_cast<std::size_t>(y - 1)]; y = (*this)(y))
            seen[static_cast<std::size_t>(y - 1)] = true;
    }
    return count;
}

int Permutation::sign() const { return ((degree() - cycle_count()) % 2 == 0) ? 1 : -1; }

int Permutation::inversions() const {
    int inv = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)])
                ++inv;
    return inv;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int x = 1; x <= degree(); ++x) {
        if (seen[static_cast<std::size_t>(x - 1)] || (*this)(x) == x)
            continue;
        std::vector<int> cyc;
        for (int y = x; !seen[static_cast<std::size_t>(y - 1)]; y = (*this)(y)) {
            seen[static_cast<std::size_t>(y - 1)] = true;
            cyc.push_back(y);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    std::vector<bool> seen(images_.size(), false);
    for (int x = 1; x <= degree(); ++x) {
        if (seen[static_cast<std::size_t>(x - 1)])
            continue;
        int len = 0;
        for (int y = x; !seen[static_cast<std::size_t>(y - 1)]; y = (*this)(y)) {
            seen[static_cast<std::size_t>(y - 1)] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

Permutation Permutation::extended(int m) const {
    if (m < degree())
        throw std::invalid_argument("Permutation::extended: target degree too small");
    Permutation p = identity(m);
    std::copy(images_.begin(), images_.end(), p.images_.begin());
    return p;
}

Permutation Permutation::restricted(int m) const {
    if (m > degree())
        throw std::invalid_argument("Permutation::restricted: target degree too large");
    for (int x = m + 1; x <= degree(); ++x)
        if ((*this)(x) != x)
            throw std::invalid_argument("Permutation::restricted: " + to_cycle_string(*this) +
                                        " moves points above " + std::to_string(m));
    Permutation p;
    p.images_.assign(images_.begin(), images_.begin() + m);
    return p;
}

std::size_t Permutation::rank() const {
    const int m = degree();
    std::size_t r = 0;
    for (int i = 0; i < m; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < m; ++j)
            if (images_[static_cast<std::size_t>(j)] < images_[static_cast<std::size_t>(i)])
                ++smaller;
        r += static_cast<std::size_t>(smaller) * factorial(m - 1 - i);
    }
    return r;
}

std::vector<int> Permutation::adjacent_word() const {
    // Bubble sort from the right: p * s_{j1} * ... * s_{jk} = id, so
    // p = s_{jk} * ... * s_{j1}.
    std::vector<int> im = images_;
    std::vector<int> steps;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < im.size(); ++i) {
            if (im[i] > im[i + 1]) {
                std::swap(im[i], im[i + 1]);
                steps.push_back(static_cast<int>(i) + 1);
                swapped = true;
            }
        }
    }
    return {steps.rbegin(), steps.rend()};
}

Permutation compose(const Permutation &p, const Permutation &q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                    " vs " + std::to_string(q.degree()) + ")");
    std::vector<int> im(static_cast<std::size_t>(p.degree()));
    for (int x = 1; x <= p.degree(); ++x)
        im[static_cast<std::size_t>(x - 1)] = p(q(x));
    return Permutation(std::move(im));
}

ABLabel classify(const Permutation &p) {
    const int m = p.degree();
    if (m == 0)
        throw std::invalid_argument("classify: degree-0 permutation");
    return {p.inverse()(m), p(m)};
}

std::size_t factorial(int m) {
    std::size_t f = 1;
    for (int k = 2; k <= m; ++k)
        f *= static_cast<std::size_t>(k);
    return f;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<Permutation> out;
    out.reserve(factorial(m));
    std::vector<int> im(static_cast<std::size_t>(m));
    std::iota(im.begin(), im.end(), 1);
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Permutation> conjugacy_class(const Permutation &p) {
    std::vector<Permutation> out;
    const auto type = p.cycle_type();
    for (auto &q : all_permutations(p.degree()))
        if (q.cycle_type() == type)
            out.push_back(std::move(q));
    return out;
}

std::string to_one_line(const Permutation &p) {
    std::ostringstream os;
    for (int x = 1; x <= p.degree(); ++x)
        os << (x > 1 ? "," : "") << p(x);
    return os.str();
}

std::string to_cycle_string(const Permutation &p) {
    auto cyc = p.cycles();
    if (cyc.empty())
        return "id";
    const bool sep = p.degree() >= 10;
    std::ostringstream os;
    for (const auto &c : cyc) {
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k)
            os << (sep && k > 0 ? "," : "") << c[k];
        os << ')';
    }
    return os.str();
}

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            throw std::invalid_argument("parse: empty list entry in '" + s + "'");
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("parse: bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

Permutation parse_permutation(std::string_view text, int m) {
    const std::string s = strip(text);
    if (s.empty())
        throw std::invalid_argument("parse_permutation: empty input");
    if (s == "id" || s == "1" || s == "()") {
        if (m < 0)
            throw std::invalid_argument("parse_permutation: identity needs an explicit degree");
        return Permutation::identity(m);
    }
    if (s.front() != '(') {
        Permutation p(parse_int_list(s));
        if (m >= 0 && p.degree() != m)
            throw std::invalid_argument("parse_permutation: expected degree " + std::to_string(m));
        return p;
    }
    if (m < 0)
        throw std::invalid_argument("parse_permutation: cycle notation needs an explicit degree");
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(')
            throw std::invalid_argument("parse_permutation: expected '(' in '" + s + "'");
        auto close = s.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("parse_permutation: unbalanced '(' in '" + s + "'");
        std::string body = s.substr(pos + 1, close - pos - 1);
        std::vector<int> cyc;
        if (body.find(',') != std::string::npos) {
            cyc = parse_int_list(body);
        } else {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("parse_permutation: bad cycle '" + body + "'");
                cyc.push_back(c - '0');
            }
        }
        if (!cyc.empty())
            cycles.push_back(std::move(cyc));
        pos = close + 1;
        if (pos < s.size() && s.compare(pos, 2, "^t") == 0)
            pos += 2;
    }
    return Permutation::from_cycles(m, cycles);
}

} // namespace ptalg
