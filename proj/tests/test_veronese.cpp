#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qgb/gbcheck.hpp"
#include "qgb/veronese.hpp"
#include "test_util.hpp"

using namespace qgb;

namespace {

struct Setup {
    ParamSet params;
    QuantumSpace space;
    explicit Setup(int n) : space(n, DeformationMatrix::generic(n, params)) {}
};

LaurentMonomial qpow(ParamSet& params, const std::string& name, std::int64_t e) {
    return LaurentMonomial::param(params.id_of(name), e);
}

}  // namespace

TEST_CASE("term table enumeration") {
    SUBCASE("n=1 d=3") {
        TermTable t(1, 3);
        REQUIRE(t.count() == 4);
        CHECK(t.term(0) == ExponentVector{{3, 0}});
        CHECK(t.term(1) == ExponentVector{{2, 1}});
        CHECK(t.term(2) == ExponentVector{{1, 2}});
        CHECK(t.term(3) == ExponentVector{{0, 3}});
    }
    SUBCASE("n=2 d=2") {
        TermTable t(2, 2);
        REQUIRE(t.count() == 6);
        CHECK(t.term(0) == ExponentVector{{2, 0, 0}});
        CHECK(t.term(1) == ExponentVector{{1, 1, 0}});
        CHECK(t.term(2) == ExponentVector{{1, 0, 1}});
        CHECK(t.term(3) == ExponentVector{{0, 2, 0}});
        CHECK(t.term(4) == ExponentVector{{0, 1, 1}});
        CHECK(t.term(5) == ExponentVector{{0, 0, 2}});
        CHECK(t.index_of(ExponentVector{{0, 1, 1}}) == 4);
    }
    SUBCASE("d=1 is the identity table") {
        TermTable t(3, 1);
        REQUIRE(t.count() == 4);
        for (int k = 0; k < 4; ++k) {
            CHECK(t.term(k).alpha[static_cast<std::size_t>(k)] == 1);
            CHECK(t.term(k).degree() == 1);
        }
    }
    SUBCASE("counts across a grid") {
        for (int n = 0; n <= 3; ++n)
            for (int d = 1; d <= 4; ++d)
                CHECK(TermTable(n, d).count() == binomial(n + d, d));
    }
    SUBCASE("strictly increasing in deglex") {
        TermTable t(3, 3);
        for (int k = 0; k + 1 < t.count(); ++k)
            CHECK(deglex_compare(t.word_of(k), t.word_of(k + 1)) == Ordering::LT);
    }
}

TEST_CASE("m and M of a term") {
    SUBCASE("paper example x2 x4^3 x7^2") {
        TermTable t(7, 6);
        const int j = t.index_of(ExponentVector{{0, 0, 1, 0, 3, 0, 0, 2}});
        CHECK(t.m_of(j) == 2);
        CHECK(t.M_of(j) == 7);
    }
    SUBCASE("pure power") {
        TermTable t(2, 4);
        CHECK(t.m_of(0) == 0);
        CHECK(t.M_of(0) == 0);
    }
    SUBCASE("n=1 d=3 j=1") {
        TermTable t(1, 3);
        CHECK(t.m_of(1) == 0);
        CHECK(t.M_of(1) == 1);
    }
}

TEST_CASE("pair classification") {
    SUBCASE("n=1 d=3 MV set") {
        const PairClassification pc = classify_pairs(TermTable(1, 3));
        CHECK(pc.mv == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}});
    }
    SUBCASE("n=2 d=2 has six MV pairs") {
        CHECK(classify_pairs(TermTable(2, 2)).mv.size() == 6);
    }
    SUBCASE("n=1 d=2") {
        const PairClassification pc = classify_pairs(TermTable(1, 2));
        CHECK(pc.c2.size() == 5);
        CHECK(pc.mv.size() == 1);
    }
    SUBCASE("cardinality laws over the grid") {
        for (int n = 0; n <= 3; ++n)
            for (int d = 1; d <= 4; ++d) {
                TermTable t(n, d);
                const PairClassification pc = classify_pairs(t);
                const BigInt c2 = binomial(n + 2 * d, n);
                const BigInt total = binomial(t.count() + 1, 2);
                CHECK(BigInt(pc.c2.size()) == c2);
                CHECK(BigInt(pc.mv.size()) == total - c2);
            }
    }
}

TEST_CASE("C(n,3,d) chains") {
    CHECK(c3_set(TermTable(1, 3)).size() == 10);
    CHECK(c3_set(TermTable(2, 2)).size() == 28);
    for (int n = 1; n <= 3; ++n)
        CHECK(BigInt(c3_set(TermTable(n, 1)).size()) == binomial(n + 3, n));
    for (int n = 0; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d)
            CHECK(BigInt(c3_set(TermTable(n, d)).size()) == binomial(n + 3 * d, n));
}

TEST_CASE("phi entries") {
    SUBCASE("twisted cubic (1,1)") {
        Setup s(1);
        TermTable t(1, 3);
        const PhiEntry e = phi(1, 1, s.space, t);
        CHECK(e.phi == qpow(s.params, "q", 2));
        CHECK(e.i_prime == 0);
        CHECK(e.j_prime == 2);
    }
    SUBCASE("veronese surface (2,3)") {
        Setup s(2);
        TermTable t(2, 2);
        const PhiEntry e = phi(2, 3, s.space, t);
        CHECK(e.phi == qpow(s.params, "q21", 2));
        CHECK(e.i_prime == 1);
        CHECK(e.j_prime == 4);
    }
    SUBCASE("C2 pairs have unit phi") {
        Setup s(2);
        TermTable t(2, 2);
        for (const auto& [i, j] : classify_pairs(t).c2) {
            const PhiEntry e = phi(i, j, s.space, t);
            CHECK(e.phi.is_unit());
            CHECK(e.i_prime == i);
            CHECK(e.j_prime == j);
        }
    }
}

TEST_CASE("phi table parallel kernel agrees with the serial reference") {
    for (int n = 1; n <= 2; ++n)
        for (int d = 1; d <= 3; ++d) {
            Setup s(n);
            TermTable t(n, d);
            CHECK(PhiTable(s.space, t, Exec::Parallel) == PhiTable(s.space, t, Exec::Serial));
        }
}

TEST_CASE("veronese presentation cardinalities") {
    SUBCASE("n=1 d=3") {
        Setup s(1);
        const VeronesePresentation vp = Veronese(s.space, 3).presentation();
        CHECK(vp.r1.relations.size() == 6);
        CHECK(vp.r2.relations.size() == 3);
        CHECK(vp.r1_prime.relations.size() == 6);
    }
    SUBCASE("n=2 d=2") {
        Setup s(2);
        const VeronesePresentation vp = Veronese(s.space, 2).presentation();
        CHECK(vp.r1.relations.size() == 15);
        CHECK(vp.r2.relations.size() == 6);
    }
    SUBCASE("counting law over the grid") {
        for (int n = 0; n <= 3; ++n)
            for (int d = 1; d <= 4; ++d) {
                Setup s(n);
                Veronese ver(s.space, d);
                const VeronesePresentation vp = ver.presentation();
                const BigInt total = BigInt(vp.r1.relations.size() + vp.r2.relations.size());
                const BigInt expect =
                    BigInt(ver.big_n() + 1) * (ver.big_n() + 1) - binomial(n + 2 * d, n);
                CHECK(total == expect);
            }
    }
    SUBCASE("d=1 yields the defining relations themselves") {
        Setup s(2);
        Veronese ver(s.space, 1);
        const VeronesePresentation vp = ver.presentation();
        CHECK(vp.r2.relations.empty());
        CHECK(vp.r1.relations == s.space.presentation().relations);
        CHECK(ver.derived_matrix() == s.space.matrix());
    }
}

TEST_CASE("derived matrices") {
    SUBCASE("twisted cubic 4x4 matrix of q powers") {
        Setup s(1);
        const DeformationMatrix g = Veronese(s.space, 3).derived_matrix();
        REQUIRE(g.n_plus_1() == 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(g.at(i, j) == qpow(s.params, "q", 3 * (i - j)));
    }
    SUBCASE("veronese surface spot entries") {
        Setup s(2);
        const DeformationMatrix g = Veronese(s.space, 2).derived_matrix();
        REQUIRE(g.n_plus_1() == 6);
        CHECK(g.at(1, 0) == qpow(s.params, "q10", 2));
        CHECK(g.at(2, 1) ==
              qpow(s.params, "q20", 1) * qpow(s.params, "q21", 1) * qpow(s.params, "q10", -1));
    }
    SUBCASE("matrix consistency over the grid") {
        for (int n = 1; n <= 2; ++n)
            for (int d = 1; d <= 3; ++d) {
                Setup s(n);
                const DeformationMatrix g = Veronese(s.space, d).derived_matrix();
                for (int i = 0; i < g.n_plus_1(); ++i) {
                    CHECK(g.at(i, i).is_unit());
                    for (int j = 0; j < g.n_plus_1(); ++j)
                        CHECK((g.at(i, j) * g.at(j, i)).is_unit());
                }
            }
    }
}

TEST_CASE("veronese kernel bases") {
    SUBCASE("twisted cubic") {
        Setup s(1);
        const Presentation k = Veronese(s.space, 3).kernel_gb();
        const LaurentMonomial q1 = qpow(s.params, "q", 1), q2 = qpow(s.params, "q", 2);
        REQUIRE(k.relations.size() == 3);
        CHECK(k.relations[0] == BinomialRelation{Word{1, 1}, q2, Word{0, 2}});
        CHECK(k.relations[1] == BinomialRelation{Word{1, 2}, q1, Word{0, 3}});
        CHECK(k.relations[2] == BinomialRelation{Word{2, 2}, q2, Word{1, 3}});
        CHECK(k.provenance == Provenance::VeroneseKernel);
    }
    SUBCASE("veronese surface") {
        Setup s(2);
        const Presentation k = Veronese(s.space, 2).kernel_gb();
        REQUIRE(k.relations.size() == 6);
        CHECK(k.relations[0] == BinomialRelation{Word{1, 1}, qpow(s.params, "q10", 1), Word{0, 3}});
        CHECK(k.relations[1] == BinomialRelation{Word{1, 2}, qpow(s.params, "q10", 1), Word{0, 4}});
        CHECK(k.relations[2] == BinomialRelation{Word{2, 2}, qpow(s.params, "q20", 1), Word{0, 5}});
        CHECK(k.relations[3] == BinomialRelation{Word{2, 3}, qpow(s.params, "q21", 2), Word{1, 4}});
        CHECK(k.relations[4] == BinomialRelation{Word{2, 4}, qpow(s.params, "q21", 1), Word{1, 5}});
        CHECK(k.relations[5] == BinomialRelation{Word{4, 4}, qpow(s.params, "q21", 1), Word{3, 5}});
    }
    SUBCASE("commutative degeneration keeps leads and tails") {
        QuantumSpace space(1, DeformationMatrix::ones(1));
        const Presentation k = Veronese(space, 3).kernel_gb();
        REQUIRE(k.relations.size() == 3);
        for (const auto& rel : k.relations) CHECK(rel.coeff.is_unit());
        CHECK(k.relations[0].lead == Word{1, 1});
        CHECK(k.relations[0].tail == Word{0, 2});
    }
    SUBCASE("lead words always beat tails in deglex") {
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= 3; ++d) {
                Setup s(n);
                for (const auto& rel : Veronese(s.space, d).kernel_gb().relations)
                    CHECK(deglex_compare(rel.tail, rel.lead) == Ordering::LT);
            }
    }
}

TEST_CASE("rational normal curve closed form") {
    // MV(1,d) = {(i,j) : 1 <= i <= j <= d-1}; the binomial for (i,j) is
    // y_i y_j - q^{i(d-j)} * (y_0 y_{i+j} when i+j <= d, else y_{i+j-d} y_d).
    for (int d = 2; d <= 6; ++d) {
        Setup s(1);
        const Presentation k = Veronese(s.space, d).kernel_gb();
        CHECK(BigInt(k.relations.size()) == binomial(d, 2));
        std::size_t idx = 0;
        for (int i = 1; i <= d - 1; ++i)
            for (int j = i; j <= d - 1; ++j, ++idx) {
                const BinomialRelation& rel = k.relations.at(idx);
                CHECK(rel.lead == Word{i, j});
                CHECK(rel.coeff == qpow(s.params, "q", static_cast<std::int64_t>(i) * (d - j)));
                if (i + j <= d)
                    CHECK(rel.tail == Word{0, i + j});
                else
                    CHECK(rel.tail == Word{i + j - d, d});
            }
        CHECK(idx == k.relations.size());
    }
}

TEST_CASE("lifted kernel in the free algebra") {
    SUBCASE("n=1 d=2") {
        Setup s(1);
        const LiftedKernel lk = Veronese(s.space, 2).lifted_kernel_gb();
        CHECK(lk.re1.relations.size() == 3);
        REQUIRE(lk.re2.relations.size() == 1);
        CHECK(lk.re2.relations[0] ==
              BinomialRelation{Word{1, 1}, qpow(s.params, "q", 1), Word{0, 2}});
        CHECK(lk.re1.provenance == Provenance::LiftedKernel);
    }
    SUBCASE("n=1 d=3 has nine relations") {
        Setup s(1);
        const LiftedKernel lk = Veronese(s.space, 3).lifted_kernel_gb();
        CHECK(lk.re1.relations.size() + lk.re2.relations.size() == 9);
    }
    SUBCASE("re1 on C2 pairs keeps tail y_i y_j") {
        Setup s(2);
        Veronese ver(s.space, 2);
        const LiftedKernel lk = ver.lifted_kernel_gb();
        const DeformationMatrix g = ver.derived_matrix();
        std::set<std::pair<int, int>> c2(ver.pairs().c2.begin(), ver.pairs().c2.end());
        for (const auto& rel : lk.re1.relations) {
            const int j = rel.lead[0], i = rel.lead[1];
            if (c2.count({i, j})) {
                CHECK(rel.tail == Word{i, j});
                CHECK(rel.coeff == g.at(j, i));
            }
        }
    }
}

TEST_CASE("image dimensions") {
    Setup s1(1);
    CHECK(Veronese(s1.space, 3).image_dim(2) == 7);
    CHECK(Veronese(s1.space, 3).image_dim(0) == 1);
    Setup s2(2);
    CHECK(Veronese(s2.space, 2).image_dim(3) == 28);
}

TEST_CASE("bijection between C2 and ordered words of length 2d") {
    for (int n = 0; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d) {
            TermTable t(n, d);
            const PairClassification pc = classify_pairs(t);
            std::set<std::vector<Letter>> images;
            for (const auto& [i, j] : pc.c2) {
                const Word w = t.word_of(i).concat(t.word_of(j));
                CHECK(std::is_sorted(w.letters.begin(), w.letters.end()));
                images.insert(w.letters);
            }
            CHECK(BigInt(images.size()) == BigInt(pc.c2.size()));
            CHECK(BigInt(images.size()) == binomial(n + 2 * d, n));
        }
}

TEST_CASE("phi split correctness") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            Setup s(n);
            TermTable t(n, d);
            for (int i = 0; i < t.count(); ++i)
                for (int j = 0; j < t.count(); ++j) {
                    const PhiEntry e = phi(i, j, s.space, t);
                    CHECK(t.M_of(e.i_prime) <= t.m_of(e.j_prime));
                    CHECK(e.i_prime <= e.j_prime);
                    if (std::pair(i, j) != std::pair(e.i_prime, e.j_prime))
                        CHECK(e.i_prime < e.j_prime);
                    ExponentVector sum = t.term(i);
                    for (std::size_t k = 0; k < sum.alpha.size(); ++k)
                        sum.alpha[k] += t.term(j).alpha[k];
                    ExponentVector split_sum = t.term(e.i_prime);
                    for (std::size_t k = 0; k < split_sum.alpha.size(); ++k)
                        split_sum.alpha[k] += t.term(e.j_prime).alpha[k];
                    CHECK(sum == split_sum);
                }
        }
}

TEST_CASE("the veronese map is a homomorphism onto the d-Veronese") {
    for (int n = 1; n <= 2; ++n)
        for (int d = 1; d <= 3; ++d) {
            Setup s(n);
            Veronese ver(s.space, d);
            const TermTable& t = ver.table();
            const DeformationMatrix g = ver.derived_matrix();

            // substituting y_k -> w_k into y_j y_i - g_{ji} y_i y_j vanishes
            for (int i = 0; i < t.count(); ++i)
                for (int j = i + 1; j < t.count(); ++j) {
                    const NormalTerm lhs = s.space.normal_form(t.word_of(j).concat(t.word_of(i)));
                    NormalTerm rhs = s.space.normal_form(t.word_of(i).concat(t.word_of(j)));
                    rhs.coeff = rhs.coeff * g.at(j, i);
                    CHECK(lhs == rhs);
                }

            // substituting into every kernel binomial vanishes
            for (const auto& rel : ver.kernel_gb().relations) {
                const NormalTerm lhs = s.space.normal_form(
                    t.word_of(rel.lead[0]).concat(t.word_of(rel.lead[1])));
                NormalTerm rhs = s.space.normal_form(
                    t.word_of(rel.tail[0]).concat(t.word_of(rel.tail[1])));
                rhs.coeff = rhs.coeff * rel.coeff;
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("kernel lead words do not depend on the deformation matrix") {
    for (int d = 1; d <= 3; ++d) {
        ParamSet params;
        QuantumSpace generic(2, DeformationMatrix::generic(2, params));
        QuantumSpace comm(2, DeformationMatrix::ones(2));
        const Presentation a = Veronese(generic, d).kernel_gb();
        const Presentation b = Veronese(comm, d).kernel_gb();
        REQUIRE(a.relations.size() == b.relations.size());
        const auto mv = classify_pairs(TermTable(2, d)).mv;
        REQUIRE(a.relations.size() == mv.size());
        for (std::size_t k = 0; k < mv.size(); ++k) {
            CHECK(a.relations[k].lead == Word{mv[k].first, mv[k].second});
            CHECK(a.relations[k].lead == b.relations[k].lead);
        }
    }
}

TEST_CASE("degree-3 normal words in the derived space") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d) {
            Setup s(n);
            Veronese ver(s.space, d);
            QuantumSpace derived(ver.big_n(), ver.derived_matrix());
            const auto sys = RewriteSystem::quantum_system(derived, ver.kernel_gb());
            CHECK(count_normal_ordered_words(sys, 3) == binomial(n + 3 * d, n));
        }
}
