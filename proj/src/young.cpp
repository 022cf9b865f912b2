#include "ptalg/young.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ptalg {

namespace {

constexpr int kCacheDegree = 6;

void build_tableaux(const Partition &shape, std::vector<Tableau> &out) {
    const int m = shape.weight();
    if (m == 0) {
        out.push_back(Tableau{});
        return;
    }
    for (int i = 1; i <= shape.height(); ++i) {
        if (shape.row(i) <= shape.row(i + 1))
            continue; // not a corner
        std::vector<int> parts = shape.parts();
        --parts[static_cast<std::size_t>(i - 1)];
        std::vector<Tableau> smaller;
        build_tableaux(Partition(std::move(parts)), smaller);
        for (auto &t : smaller) {
            t.row.push_back(i);
            t.column.push_back(shape.row(i));
            out.push_back(std::move(t));
        }
    }
}

std::size_t find_tableau(const std::vector<Tableau> &ts, const Tableau &t) {
    for (std::size_t k = 0; k < ts.size(); ++k)
        if (ts[k].row == t.row)
            return k;
    throw std::logic_error("YoungIrrep: swapped tableau not found");
}

} // namespace

YoungIrrep::YoungIrrep(Partition label) : label_(std::move(label)) {
    build_tableaux(label_, tableaux_);
    const int m = degree();
    const int dim = dimension();
    for (int i = 1; i < m; ++i) {
        Matrix g = Matrix::Zero(dim, dim);
        for (int k = 0; k < dim; ++k) {
            const Tableau &t = tableaux_[static_cast<std::size_t>(k)];
            const double r = t.content(i + 1) - t.content(i);
            g(k, k) = 1.0 / r;
            const auto si = static_cast<std::size_t>(i - 1);
            if (t.row[si] == t.row[si + 1] || t.column[si] == t.column[si + 1])
                continue;
            Tableau swapped = t;
            std::swap(swapped.row[si], swapped.row[si + 1]);
            std::swap(swapped.column[si], swapped.column[si + 1]);
            g(static_cast<Eigen::Index>(find_tableau(tableaux_, swapped)), k) = std::sqrt(1.0 - 1.0 / (r * r));
        }
        generators_.push_back(std::move(g));
    }
    if (m <= kCacheDegree) {
        const auto perms = all_permutations(m);
        cached_.reserve(perms.size());
        for (const auto &p : perms) {
            Matrix img = Matrix::Identity(dim, dim);
            for (int s : p.adjacent_word())
                img = img * generators_[static_cast<std::size_t>(s - 1)];
            cached_.push_back(std::move(img));
        }
    }
}

std::shared_ptr<const YoungIrrep> YoungIrrep::get(const Partition &label) {
    static std::mutex mutex;
    static std::map<Partition, std::shared_ptr<const YoungIrrep>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(label);
        if (it != cache.end())
            return it->second;
    }
    auto built = std::make_shared<const YoungIrrep>(label);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(label, std::move(built)).first->second;
}

const Matrix &YoungIrrep::generator(int i) const {
    if (i < 1 || i >= degree())
        throw std::out_of_range("YoungIrrep::generator: index out of range");
    return generators_[static_cast<std::size_t>(i - 1)];
}

Matrix YoungIrrep::image(const Permutation &p) const {
    if (p.degree() != degree())
        throw std::invalid_argument("YoungIrrep::image: permutation of degree " + std::to_string(p.degree()) +
                                    " applied to an irrep of S(" + std::to_string(degree()) + ")");
    if (!cached_.empty())
        return cached_[p.rank()];
    Matrix img = Matrix::Identity(dimension(), dimension());
    for (int s : p.adjacent_word())
        img = img * generators_[static_cast<std::size_t>(s - 1)];
    return img;
}

double YoungIrrep::entry(const Permutation &p, int i, int j) const {
    if (!cached_.empty() && p.degree() == degree())
        return cached_[p.rank()](i - 1, j - 1);
    return image(p)(i - 1, j - 1);
}

double character(const Partition &alpha, const Permutation &p) {
    return YoungIrrep::get(alpha)->image(p).trace();
}

double transposition_character_frobenius(const Partition &alpha) {
    const int m = alpha.weight();
    if (m < 2)
        throw std::invalid_argument("transposition_character_frobenius: weight must be at least 2");
    const auto [a, b] = alpha.characteristic();
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += b[i] * (b[i] + 1.0) - a[i] * (a[i] + 1.0);
    return static_cast<double>(alpha.dimension()) * sum / (m * (m - 1.0));
}

double class_sum_scalar(const Partition &alpha, const Permutation &class_rep, long long class_size) {
    return static_cast<double>(class_size) * character(alpha, class_rep) / static_cast<double>(alpha.dimension());
}

long long multiplicity_in_V(const Partition &alpha, int d) {
    if (d < 1)
        throw std::invalid_argument("multiplicity_in_V: d must be positive");
    const int m = alpha.weight();
    // The sum is a class function, so group permutations by cycle type.
    std::map<std::vector<int>, std::pair<long long, Permutation>> classes;
    for (const auto &p : all_permutations(m)) {
        auto [it, inserted] = classes.try_emplace(p.cycle_type(), 0, p);
        ++it->second.first;
    }
    double total = 0.0;
    for (const auto &[type, entry] : classes) {
        const auto &[count, rep] = entry;
        total += static_cast<double>(count) * character(alpha, rep.inverse()) *
                 std::pow(static_cast<double>(d), rep.cycle_count());
    }
    return std::llround(total / static_cast<double>(factorial(m)));
}

} // namespace ptalg
