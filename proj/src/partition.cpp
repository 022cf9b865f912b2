#include "ptalg/partition.hpp"

#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptalg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::rank() const {
    int r = 0;
    while (r < height() && parts_[static_cast<std::size_t>(r)] > r)
        ++r;
    return r;
}

int Partition::row(int i) const {
    return (i >= 1 && i <= height()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(static_cast<std::size_t>(parts_.front()), 0);
        for (int len : parts_)
            for (int c = 0; c < len; ++c)
                ++cols[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(cols));
}

std::pair<std::vector<int>, std::vector<int>> Partition::characteristic() const {
    const Partition conj = conjugate();
    std::vector<int> a, b;
    for (int i = 1; i <= rank(); ++i) {
        a.push_back(conj.row(i) - i);
        b.push_back(row(i) - i);
    }
    return {a, b};
}

long long Partition::dimension() const {
    // m! / prod(hooks), accumulated as a running product of exact quotients.
    const Partition conj = conjugate();
    std::vector<int> hooks;
    for (int i = 1; i <= height(); ++i)
        for (int j = 1; j <= row(i); ++j)
            hooks.push_back((row(i) - j) + (conj.row(j) - i) + 1);
    long double value = 1.0L;
    for (int k = 2; k <= weight_; ++k)
        value *= k;
    for (int h : hooks)
        value /= h;
    return static_cast<long long>(value + 0.5L);
}

bool Partition::contains(const Partition &other) const {
    if (other.height() > height())
        return false;
    for (int i = 1; i <= other.height(); ++i)
        if (other.row(i) > row(i))
            return false;
    return true;
}

std::vector<Partition> partitions_of(int m) {
    if (m < 0)
        throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::vector<AddedBox> add_box(const Partition &alpha) {
    std::vector<AddedBox> out;
    const int r = alpha.rank();
    for (int i = 1; i <= alpha.height() + 1; ++i) {
        if (i > 1 && alpha.row(i) >= alpha.row(i - 1))
            continue;
        std::vector<int> parts = alpha.parts();
        if (i > alpha.height())
            parts.push_back(1);
        else
            ++parts[static_cast<std::size_t>(i - 1)];
        AddedBox box;
        box.nu = Partition(std::move(parts));
        box.row = i;
        box.column = alpha.row(i) + 1;
        box.extends_diagonal = (i == r + 1 && box.column == i);
        out.push_back(std::move(box));
    }
    return out;
}

std::string to_string(const Partition &p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        os << (i ? "," : "") << p.parts()[i];
    return os.str();
}

Partition parse_partition(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']')
            continue;
        s.push_back(std::isspace(static_cast<unsigned char>(c)) ? ',' : c);
    }
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("parse_partition: bad part '" + tok + "'");
        }
        if (used != tok.size() || v < 0)
            throw std::invalid_argument("parse_partition: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

} // namespace ptalg
