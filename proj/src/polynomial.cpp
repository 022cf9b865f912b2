#include "ptalg/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ptalg {

Polynomial::Polynomial(long long constant) {
    if (constant != 0)
        coeffs_.push_back(constant);
}

Polynomial Polynomial::from_coefficients(std::vector<long long> coeffs) {
    Polynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Polynomial Polynomial::d(int k) {
    std::vector<long long> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = 1;
    return from_coefficients(std::move(c));
}

long long Polynomial::coefficient(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)] : 0;
}

int Polynomial::term_count() const {
    int count = 0;
    for (long long c : coeffs_)
        count += (c != 0);
    return count;
}

double Polynomial::evaluate(double d) const {
    double value = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        value = value * d + static_cast<double>(*it);
    return value;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) { return *this += -o; }

Polynomial &Polynomial::operator*=(const Polynomial &o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<long long> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto &c : p.coeffs_)
        c = -c;
    return p;
}

std::string to_string(const Polynomial &p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        long long c = p.coefficient(k);
        if (c == 0)
            continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        long long mag = c < 0 ? -c : c;
        if (k == 0 || mag != 1)
            os << mag;
        if (k >= 1)
            os << 'd';
        if (k >= 2)
            os << '^' << k;
        first = false;
    }
    return os.str();
}

Polynomial parse_polynomial(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*')
            s.push_back(c);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    if (s.empty())
        throw std::invalid_argument("parse_polynomial: empty input");
    Polynomial result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        long long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        long long coeff = 1;
        bool has_digits = false;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos > start) {
            coeff = std::stoll(s.substr(start, pos - start));
            has_digits = true;
        }
        int power = 0;
        if (pos < s.size() && s[pos] == 'd') {
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                if (pos == start)
                    throw std::invalid_argument("parse_polynomial: missing exponent in '" + s + "'");
                power = std::stoi(s.substr(start, pos - start));
            }
        } else if (!has_digits) {
            throw std::invalid_argument("parse_polynomial: unexpected character in '" + s + "'");
        }
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            throw std::invalid_argument("parse_polynomial: unexpected character in '" + s + "'");
        result += Polynomial(sign * coeff) * Polynomial::d(power);
    }
    return result;
}

} // namespace ptalg
