#include "doctest.h"

#include "ptalg/partition.hpp"
#include "ptalg/permutation.hpp"
#include "ptalg/young.hpp"

#include <cmath>

using namespace ptalg;

namespace {

Permutation cyc(int m, const char *text) { return parse_permutation(text, m); }

} // namespace

TEST_CASE("composition applies the right factor first") {
    CHECK(cyc(3, "(12)") * cyc(3, "(13)") == cyc(3, "(132)"));
    CHECK(to_cycle_string(cyc(3, "(12)") * cyc(3, "(13)")) == "(132)");
    auto p = cyc(4, "(1432)");
    CHECK(p * Permutation::identity(4) == p);
    CHECK((cyc(3, "(123)") * cyc(3, "(132)")).is_identity());
    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("classify returns a = p^-1(m), b = p(m)") {
    CHECK(classify(Permutation({2, 3, 1})) == ABLabel{2, 1});
    CHECK(classify(cyc(4, "(12)(34)")) == ABLabel{3, 3});
    CHECK(classify(Permutation::identity(5)) == ABLabel{5, 5});
    for (const auto &p : all_permutations(4)) {
        auto [a, b] = classify(p);
        CHECK(p(a) == 4);
        CHECK((a == 4) == (b == 4));
        CHECK((a == 4) == p.fixes(4));
    }
}

TEST_CASE("cycle counts and signs") {
    CHECK(cycle_count(Permutation::identity(4)) == 4);
    CHECK(cycle_count(cyc(3, "(12)")) == 2);
    CHECK(cycle_count(cyc(3, "(123)")) == 1);
    CHECK(cyc(4, "(12)(34)").sign() == 1);
    CHECK(cyc(4, "(1234)").sign() == -1);
}

TEST_CASE("permutation parsing and printing") {
    CHECK(to_one_line(Permutation({2, 3, 1})) == "2,3,1");
    CHECK(parse_permutation("2,3,1") == Permutation({2, 3, 1}));
    CHECK(parse_permutation("(1,2,3)", 3) == Permutation({2, 3, 1}));
    CHECK(parse_permutation("(123)^t", 3) == Permutation({2, 3, 1}));
    CHECK(parse_permutation("id", 3).is_identity());
    CHECK(to_cycle_string(Permutation::identity(3)) == "id");
    CHECK(Permutation::transposition(3, 3, 3).is_identity());
    CHECK_THROWS(Permutation({1, 1, 2}));
    CHECK_THROWS(parse_permutation("(12)"));
    for (const auto &p : all_permutations(4))
        CHECK(parse_permutation(to_cycle_string(p), 4) == p);
}

TEST_CASE("rank, unrank and adjacent words") {
    const auto perms = all_permutations(5);
    for (std::size_t r = 0; r < perms.size(); ++r) {
        CHECK(perms[r].rank() == r);
        CHECK(Permutation::unrank(5, r) == perms[r]);
        Permutation w = Permutation::identity(5);
        for (int s : perms[r].adjacent_word())
            w = w * Permutation::transposition(5, s, s + 1);
        CHECK(w == perms[r]);
        CHECK(static_cast<int>(perms[r].adjacent_word().size()) == perms[r].inversions());
        CHECK(compose(perms[r], perms[r].inverse()).is_identity());
    }
}

TEST_CASE("partitions and their characteristics") {
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].height() == 0);
    CHECK(p0[0].dimension() == 1);

    Partition l({4, 2, 2});
    CHECK(l.rank() == 2);
    auto [a, b] = l.characteristic();
    CHECK(a == std::vector<int>{2, 1});
    CHECK(b == std::vector<int>{3, 0});

    for (int m = 0; m <= 8; ++m) {
        for (const auto &p : partitions_of(m)) {
            auto [aa, bb] = p.characteristic();
            int total = 0;
            for (std::size_t i = 0; i < aa.size(); ++i) {
                total += aa[i] + bb[i] + 1;
                if (i > 0) {
                    CHECK(aa[i] < aa[i - 1]);
                    CHECK(bb[i] < bb[i - 1]);
                }
            }
            CHECK(total == m);
            CHECK(parse_partition(to_string(p)) == p);
        }
    }
    CHECK(to_string(Partition({3, 1})) == "3,1");
    CHECK(parse_partition("(2,1)") == Partition({2, 1}));
    CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("add_box enumerates one-box extensions") {
    auto nus = [](const Partition &a) {
        std::vector<Partition> out;
        for (const auto &box : add_box(a))
            out.push_back(box.nu);
        return out;
    };
    CHECK(nus(Partition({1})) == std::vector<Partition>{Partition({2}), Partition({1, 1})});
    CHECK(nus(Partition({2})) == std::vector<Partition>{Partition({3}), Partition({2, 1})});
    CHECK(nus(Partition({2, 1})) ==
          std::vector<Partition>{Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})});
    auto boxes = add_box(Partition({2, 1}));
    CHECK(boxes[1].extends_diagonal);
    CHECK_FALSE(boxes[0].extends_diagonal);
    CHECK(boxes[1].content() == 0);
    CHECK(boxes[2].content() == -2);
    CHECK(add_box(Partition()).size() == 1);

    // Brute-force containment check.
    for (int m = 0; m <= 6; ++m) {
        for (const auto &alpha : partitions_of(m)) {
            std::vector<Partition> expected;
            for (const auto &nu : partitions_of(m + 1))
                if (nu.contains(alpha))
                    expected.push_back(nu);
            auto got = nus(alpha);
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            CHECK(got == expected);
        }
    }
}

TEST_CASE("Young's orthogonal representation") {
    for (int m = 1; m <= 5; ++m) {
        long long burnside = 0;
        const auto perms = all_permutations(m);
        for (const auto &alpha : partitions_of(m)) {
            auto rep = irrep(alpha);
            CHECK(rep->dimension() == alpha.dimension());
            burnside += alpha.dimension() * alpha.dimension();
            const Matrix id = Matrix::Identity(rep->dimension(), rep->dimension());
            for (int i = 1; i < m; ++i) {
                const Matrix &g = rep->generator(i);
                CHECK((g * g - id).norm() < 1e-12);
                CHECK((g.transpose() * g - id).norm() < 1e-12);
                if (i + 1 < m) {
                    const Matrix &h = rep->generator(i + 1);
                    CHECK((g * h * g - h * g * h).norm() < 1e-12);
                }
                for (int j = i + 2; j < m; ++j)
                    CHECK((g * rep->generator(j) - rep->generator(j) * g).norm() < 1e-12);
            }
            for (const auto &p : perms)
                for (const auto &q : perms)
                    CHECK((rep->image(p * q) - rep->image(p) * rep->image(q)).norm() < 1e-10);
        }
        CHECK(burnside == static_cast<long long>(factorial(m)));
    }
    for (const auto &p : all_permutations(4)) {
        CHECK(irrep(Partition({4}))->image(p)(0, 0) == doctest::Approx(1.0));
        CHECK(irrep(Partition({1, 1, 1, 1}))->image(p)(0, 0) == doctest::Approx(p.sign()));
    }
    for (const auto &t : {cyc(3, "(12)"), cyc(3, "(13)"), cyc(3, "(23)")}) {
        Matrix img = irrep(Partition({2, 1}))->image(t);
        CHECK(std::abs(img.trace()) < 1e-12);
        CHECK(img.determinant() == doctest::Approx(-1.0));
    }
}

TEST_CASE("orthogonality relations") {
    for (int m = 1; m <= 4; ++m) {
        const auto perms = all_permutations(m);
        const double order = static_cast<double>(perms.size());
        for (const auto &alpha : partitions_of(m)) {
            for (const auto &beta : partitions_of(m)) {
                auto ra = irrep(alpha);
                auto rb = irrep(beta);
                const int wa = ra->dimension();
                const int wb = rb->dimension();
                double worst = 0.0;
                for (int i = 0; i < wa; ++i)
                    for (int j = 0; j < wa; ++j)
                        for (int k = 0; k < wb; ++k)
                            for (int l = 0; l < wb; ++l) {
                                double s = 0.0;
                                for (const auto &p : perms)
                                    s += ra->image(p.inverse())(i, j) * rb->image(p)(k, l);
                                s /= order;
                                double expect = (alpha == beta && i == l && j == k) ? 1.0 / wa : 0.0;
                                worst = std::max(worst, std::abs(s - expect));
                            }
                CHECK(worst < 1e-10);
            }
        }
    }
}

TEST_CASE("characters and class sums") {
    CHECK(character(Partition({2, 1}), cyc(3, "(12)")) == doctest::Approx(0.0));
    CHECK(character(Partition({2, 1}), Permutation::identity(3)) == doctest::Approx(2.0));
    for (int m = 2; m <= 6; ++m) {
        for (const auto &alpha : partitions_of(m)) {
            double frob = transposition_character_frobenius(alpha);
            CHECK(std::abs(frob - character(alpha, Permutation::transposition(m, 1, 2))) < 1e-10);
        }
    }
    CHECK(transposition_character_frobenius(Partition({4})) == doctest::Approx(1.0));
    CHECK(transposition_character_frobenius(Partition({1, 1, 1, 1})) == doctest::Approx(-1.0));
    CHECK(transposition_character_frobenius(Partition({2, 1})) == doctest::Approx(0.0));
    CHECK_THROWS(transposition_character_frobenius(Partition({1})));

    CHECK(class_sum_scalar(Partition({2, 1}), Permutation::identity(3), 1) == doctest::Approx(1.0));
    CHECK(class_sum_scalar(Partition({2, 1}), cyc(3, "(123)"), 2) == doctest::Approx(-1.0));

    // Explicit class sums are scalar multiples of the identity.
    for (int m = 2; m <= 5; ++m) {
        for (const auto &alpha : partitions_of(m)) {
            auto rep = irrep(alpha);
            for (const auto &rep_perm : {Permutation::transposition(m, 1, 2), Permutation::identity(m)}) {
                auto cls = conjugacy_class(rep_perm);
                Matrix sum = Matrix::Zero(rep->dimension(), rep->dimension());
                for (const auto &p : cls)
                    sum += rep->image(p);
                double scalar = class_sum_scalar(alpha, rep_perm, static_cast<long long>(cls.size()));
                CHECK((sum - scalar * Matrix::Identity(rep->dimension(), rep->dimension())).norm() < 1e-10);
            }
        }
    }
}

TEST_CASE("multiplicity in the tensor representation") {
    CHECK(multiplicity_in_V(Partition({2}), 2) == 3);
    CHECK(multiplicity_in_V(Partition({1, 1, 1}), 2) == 0);
    CHECK(multiplicity_in_V(Partition({1, 1}), 2) == 1);
    for (int m = 1; m <= 5; ++m) {
        for (int d = 1; d <= 4; ++d) {
            long long total = 0;
            for (const auto &alpha : partitions_of(m)) {
                long long k = multiplicity_in_V(alpha, d);
                CHECK((k == 0) == (d < alpha.height()));
                total += k * alpha.dimension();
            }
            CHECK(total == static_cast<long long>(std::llround(std::pow(d, m))));
        }
    }
}
