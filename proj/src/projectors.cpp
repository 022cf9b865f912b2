#include "ptalg/projectors.hpp"

#include <stdexcept>

namespace ptalg {

std::vector<std::vector<Matrix>> matrix_operators_E(const std::vector<Matrix> &images, const Partition &alpha) {
    const int m = alpha.weight();
    const auto perms = all_permutations(m);
    if (images.size() != perms.size())
        throw std::invalid_argument("matrix_operators_E: expected one image per element of S(m)");
    auto rep = YoungIrrep::get(alpha);
    const int w = rep->dimension();
    const Eigen::Index size = images.front().rows();
    std::vector<std::vector<Matrix>> e(static_cast<std::size_t>(w),
                                       std::vector<Matrix>(static_cast<std::size_t>(w), Matrix::Zero(size, size)));
    const double scale = static_cast<double>(w) / static_cast<double>(perms.size());
    for (const auto &g : perms) {
        const Matrix phi = rep->image(g.inverse());
        const Matrix &dg = images[g.rank()];
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j)
                if (phi(j, i) != 0.0)
                    e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += (scale * phi(j, i)) * dg;
    }
    return e;
}

} // namespace ptalg
