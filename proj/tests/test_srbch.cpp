#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "sumrank/csc.hpp"
#include "sumrank/decoder.hpp"
#include "sumrank/srbch.hpp"
#include "sumrank/sum_rank.hpp"

using namespace sumrank;

TEST_CASE("coset tables") {
    CosetTable t15 = coset_table(15, 4);
    std::vector<std::vector<unsigned>> expected = {
        {0}, {1, 4}, {2, 8}, {3, 12}, {5}, {6, 9}, {7, 13}, {10}, {11, 14}};
    REQUIRE(t15.cosets.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        auto sorted = t15.cosets[i];
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == expected[i]);
    }
    CosetTable t1 = coset_table(1, 4);
    CHECK(t1.cosets == std::vector<std::vector<unsigned>>{{0}});
}

TEST_CASE("dimension bound values from the tables") {
    // s = 4, ell = 15, m = 2: the worked profile (k,d) = (2,2),(1,2),(1,2), bound 18
    CosetTable t15 = coset_table(15, 4);
    CHECK(bound_eq33(t15, 1, 5, 2, 4) == 18);
    CHECK(bound_eq33(t15, 0, 5, 2, 4) == 16);
    CHECK(bound_eq33(t15, 0, 2, 2, 4) == 28);
    CHECK(bound_eq33(t15, 1, 14, 2, 4) == 2);

    // s = 3, ell = 7
    CosetTable t7 = coset_table(7, 4);
    CHECK(bound_eq33(t7, 1, 5, 2, 3) == 5);
    CHECK(bound_eq33(t7, 0, 5, 2, 3) == 3);
    CHECK(bound_eq33(t7, 0, 7, 2, 3) == 0);
    CHECK(bound_eq33(t7, 1, 7, 2, 3) == 2);

    // s = 2, ell = 3
    CosetTable t3 = coset_table(3, 4);
    CHECK(bound_eq33(t3, 0, 3, 2, 2) == 2);
    CHECK(bound_eq33(t3, 0, 2, 2, 2) == 4);

    CHECK(bound_delsarte(30, 4, 5) == 14);
    CHECK(bound_delsarte(14, 3, 7) == -4);
    CHECK(bound_delsarte(6, 2, 2) == 4);
}

TEST_CASE("defining structure") {
    Tower tw = Tower::build(2, 1, 2, 4, 15);
    CycFactorization fact = factor_cyclotomic(tw, tw.primitive_root_of_unity());
    Felem beta = tw.normal_element();

    SUBCASE("worked profile at b = 1, delta = 5") {
        DefiningStructure st = srbch_defining_structure(tw, fact, beta, 1, 5);
        // exponents 1,2,3,4: coset {1,4} gets k=2, cosets {2,8} and {3,12} get k=1
        std::vector<unsigned> got_k(st.comps.size(), 0);
        for (std::size_t i = 0; i < st.comps.size(); ++i)
            got_k[i] = static_cast<unsigned>(st.comps[i].j_set.size());
        CHECK(got_k == std::vector<unsigned>{0, 2, 1, 1, 0, 0, 0, 0, 0});
        CHECK(fact.degrees[1] == 2);
        CHECK(fact.degrees[2] == 2);
        CHECK(fact.degrees[3] == 2);
        CHECK(st.exact_dim >= 18);  // at least the bound
    }

    SUBCASE("delta = 2, b = 0: one pair at the coset of exponent 0") {
        DefiningStructure st = srbch_defining_structure(tw, fact, beta, 0, 2);
        CHECK(st.comps[0].j_set == std::vector<unsigned>{0});
        for (std::size_t i = 1; i < st.comps.size(); ++i) CHECK(st.comps[i].j_set.empty());
        // V_0 is spanned by s/d_0 = 4 Frobenius images of beta
        CHECK(st.comps[0].v_basis.size() <= 2);
        CHECK(st.exact_dim == 30 - 1 * st.comps[0].v_basis.size());
    }

    SUBCASE("exact dimension does not depend on the choice of normal beta") {
        std::vector<Felem> normals;
        for (Felem x = 1; x < tw.field_size() && normals.size() < 6; ++x)
            if (tw.is_normal(x)) normals.push_back(x);
        for (unsigned delta : {2u, 5u, 9u})
            for (unsigned b : {0u, 1u}) {
                unsigned dim0 = srbch_defining_structure(tw, fact, normals[0], b, delta).exact_dim;
                for (std::size_t i = 1; i < normals.size(); ++i)
                    CHECK(srbch_defining_structure(tw, fact, normals[i], b, delta).exact_dim ==
                          dim0);
            }
    }
}

TEST_CASE("subfield subcode") {
    Tower tw = Tower::build(2, 1, 2, 2, 3);
    const unsigned n = 6;

    SUBCASE("no parity rows: all of F^n") {
        Mat sub = subfield_subcode(tw, Mat(0, n));
        CHECK(sub.rows == n);
        CHECK(mat_rank(tw, sub) == n);
    }

    SUBCASE("parity already over F: dimension drops by the row count only") {
        Mat parity(1, n);
        const auto& fe = tw.subfield_elements(tw.deg_f());
        for (unsigned j = 0; j < n; ++j) parity.at(0, j) = fe[1 + j % (fe.size() - 1)];
        Mat sub = subfield_subcode(tw, parity);
        CHECK(sub.rows == n - 1);
    }

    SUBCASE("Delsarte floor on SR-BCH parities") {
        for (unsigned delta = 2; delta <= 6; ++delta) {
            SrBchCode code = srbch_construct(tw, 0, delta);
            CHECK(static_cast<long>(code.dim) >=
                  bound_delsarte(n, tw.s(), delta));
            CHECK(code.genmat.rows == code.dim);
        }
    }
}

TEST_CASE("construct cross-checks and table values") {
    SUBCASE("s = 1: the SR-BCH code is the CSC LRS code itself") {
        Tower tw = Tower::build(2, 1, 2, 1, 1);
        SrBchCode code = srbch_construct(tw, 0, 2);
        CHECK(code.dim == 1);  // n - delta + 1 = 1
        CHECK(code.eq33 == 1);
        CHECK(code.delsarte == 1);
        CHECK(code.singleton == 1);
        SrBchCode code_b1 = srbch_construct(tw, 1, 2);
        CHECK(code_b1.dim == 1);
    }
    SUBCASE("s = 4, b = 1, delta = 5: eq33 = 18") {
        Tower tw = Tower::build(2, 1, 2, 4, 15);
        SrBchCode code = srbch_construct(tw, 1, 5);
        CHECK(code.eq33 == 18);
        CHECK(code.singleton == 26);
        CHECK(code.delsarte == 14);
        CHECK(code.dim >= 18);
    }
    SUBCASE("s = 2, b = 0, delta = 3: eq33 = 2") {
        Tower tw = Tower::build(2, 1, 2, 2, 3);
        SrBchCode code = srbch_construct(tw, 0, 3);
        CHECK(code.eq33 == 2);
        CHECK(code.singleton == 4);
        CHECK(code.delsarte == 2);
        CHECK(code.dim == 2);
    }
    SUBCASE("assumptions are validated") {
        Tower bad = Tower::build(2, 1, 3, 2, 3);  // gcd(ell, m) = 3
        CHECK_THROWS_AS(srbch_construct(bad, 0, 3), Error);
        Tower tw = Tower::build(2, 1, 2, 2, 3);
        CHECK_THROWS_AS(srbch_construct(tw, 0, 1), Error);
        CHECK_THROWS_AS(srbch_construct(tw, 0, 7), Error);
    }
}

TEST_CASE("towers with q0 = p^e, e > 1") {
    // q0 = 4 = 2^2, s = 1: the subfield subcode step is trivial and the code is
    // the CSC linearized RS code itself
    Tower t1 = Tower::build(2, 2, 2, 1, 3);
    SrBchCode c1 = srbch_construct(t1, 0, 3);
    CHECK(c1.dim == 4);  // n - delta + 1
    CHECK(c1.eq33 == 4);

    // q0 = 4, s = 2, ell = 15: full subfield-subcode construction over F_16
    Tower t2 = Tower::build(2, 2, 2, 2, 15);
    SrBchCode c2 = srbch_construct(t2, 1, 4);
    CHECK(c2.n() == 30);
    CHECK(static_cast<long>(c2.dim) >= c2.eq33);
    CHECK(c2.parent.has_value());
}

TEST_CASE("prescribed distance on a small code") {
    Tower tw = Tower::build(2, 1, 2, 2, 3);
    Partition part{tw.ell(), tw.m()};
    for (unsigned b : {0u, 1u, 2u}) {
        SrBchCode code = srbch_construct(tw, b, 3);
        if (code.dim == 0) continue;
        CHECK(min_sum_rank_distance_bruteforce(tw, code.genmat, part, ext_q0(tw)) >= 3);
    }
    // a dimension-11 code still fits the full 2^22 enumeration budget
    Tower t7 = Tower::build(2, 1, 2, 3, 7);
    Partition p7{t7.ell(), t7.m()};
    SrBchCode big = srbch_construct(t7, 1, 2);
    REQUIRE(big.dim == 11);
    CHECK(min_sum_rank_distance_bruteforce(t7, big.genmat, p7, ext_q0(t7), 1ull << 22) >= 2);
}

TEST_CASE("construction sweep across characteristics and tower shapes") {
    struct Params {
        unsigned p, e, m, s, ell;
    };
    const std::vector<Params> towers = {
        {2, 1, 1, 2, 3},  {2, 1, 1, 3, 7},  {2, 1, 2, 2, 3}, {2, 1, 2, 3, 7},
        {2, 1, 2, 4, 5},  {2, 1, 3, 2, 1},  {2, 2, 2, 1, 3}, {2, 2, 2, 2, 5},
        {3, 1, 2, 1, 1},  {3, 1, 2, 2, 1},  {3, 1, 1, 2, 8}, {3, 1, 1, 2, 4},
        {5, 1, 2, 1, 1},  {5, 1, 1, 2, 3},
    };
    for (auto pr : towers) {
        Tower tw = Tower::build(pr.p, pr.e, pr.m, pr.s, pr.ell);
        if (std::gcd(tw.ell(), tw.m()) != 1) continue;
        const unsigned n = tw.ell() * tw.m();
        for (unsigned delta = 2; delta <= std::min(n, 5u); ++delta) {
            SrBchCode code = srbch_construct(tw, 1, delta);  // internal cross-check
            CHECK(static_cast<long>(code.dim) >= code.eq33);
            CHECK(code.eq33 >= code.delsarte);
            CHECK(code.eq33 <= code.singleton);
            CHECK(code.eq33 >= 0);
            CHECK(is_csc(tw, code.genmat, tw.ell(), tw.m()));
        }
    }
}

TEST_CASE("table generation") {
    SUBCASE("preset rows match the published row lists") {
        CHECK(preset_rows(1).size() == 2);
        CHECK(preset_rows(2).size() == 4);
        CHECK(preset_rows(3).size() == 12);
        CHECK(preset_rows(4).size() == 24);
        CHECK(preset_rows(5).size() == 28);
        CHECK(preset_rows(6).size() == 28);
        CHECK(preset_rows(7).size() == 28);
        CHECK_THROWS_AS(preset_rows(8), Error);
    }

    SUBCASE("spot values across the presets") {
        Tower t3 = Tower::build(2, 1, 2, 3, 7);
        auto rows = generate_table(t3, preset_rows(3));
        REQUIRE(rows.size() == 12);
        // (delta=2, b=0) -> (13, 12, 11) with the bound beating Delsarte
        CHECK(rows[0].singleton == 13);
        CHECK(rows[0].eq33 == 12);
        CHECK(rows[0].delsarte == 11);
        CHECK(rows[0].beats_delsarte);
        // (delta=2, b=1) -> (13, 11, 11), no boldface
        CHECK(rows[1].eq33 == 11);
        CHECK_FALSE(rows[1].beats_delsarte);
        // (delta=7, b=1) -> (8, 2, -4)
        CHECK(rows[11].singleton == 8);
        CHECK(rows[11].eq33 == 2);
        CHECK(rows[11].delsarte == -4);
    }

    SUBCASE("bound chain holds on every preset row") {
        for (unsigned s = 1; s <= 7; ++s) {
            Tower tw = Tower::build(2, 1, 2, s, (1u << s) - 1);
            for (const auto& row : generate_table(tw, preset_rows(s))) {
                CHECK(row.delsarte <= row.eq33);
                CHECK(row.eq33 <= row.singleton);
                CHECK(row.eq33 >= 0);
            }
        }
    }

    SUBCASE("CSV format, byte-stable ordering, optional exact dimension") {
        Tower tw = Tower::build(2, 1, 2, 2, 3);
        auto rows = generate_table(tw, {{3, 1}, {2, 0}, {3, 0}}, true);
        std::string csv = table_to_csv(rows);
        CHECK(csv ==
              "delta,b,singleton,eq33,delsarte,exact_dim,beats_delsarte\n"
              "2,0,5,4,4,4,false\n"
              "3,0,4,2,2,2,false\n"
              "3,1,4,2,2,2,false\n");
        auto no_exact = generate_table(tw, {{2, 0}}, false);
        CHECK(table_to_csv(no_exact) ==
              "delta,b,singleton,eq33,delsarte,exact_dim,beats_delsarte\n"
              "2,0,5,4,4,,false\n");
    }

    SUBCASE("row-parallel generation matches serial") {
        Tower tw = Tower::build(2, 1, 2, 4, 15);
        auto serial = generate_table(tw, preset_rows(4), false, 1);
        auto parallel = generate_table(tw, preset_rows(4), false, 4);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].delta == parallel[i].delta);
            CHECK(serial[i].eq33 == parallel[i].eq33);
        }
    }
}

TEST_CASE("exact dimensions bracket the bounds across the s = 4 sweep") {
    Tower tw = Tower::build(2, 1, 2, 4, 15);
    for (auto [delta, b] : preset_rows(4)) {
        SrBchCode code = srbch_construct(tw, b, delta);
        CHECK(static_cast<long>(code.dim) >= code.eq33);
        CHECK(static_cast<long>(code.dim) <= code.singleton);
        CHECK(code.eq33 >= code.delsarte);
    }
}

TEST_CASE("triple agreement with the defining-set route on a small tower") {
    Tower tw = Tower::build(2, 1, 2, 2, 3);
    CycFactorization fact = factor_cyclotomic(tw, tw.primitive_root_of_unity());
    for (unsigned b = 0; b < tw.ell(); ++b)
        for (unsigned delta = 2; delta <= 6; ++delta) {
            SrBchCode code = srbch_construct(tw, b, delta);
            // third, independent route: largest CSC code on the pairs of the definition
            std::vector<RootPair> pairs;
            for (unsigned j = 0; j + 2 <= delta; ++j)
                pairs.push_back({(b + j) % tw.ell(), tw.sigma(code.beta, j)});
            CscCode largest = largest_csc_from_root_pairs(tw, fact, pairs);
            CHECK(largest.dim == code.dim);
            CHECK(dimension_from_defining_set(tw, csc_defining_set(largest), fact) == code.dim);
            if (code.dim > 0) CHECK(same_row_space(tw, largest.genmat, code.genmat));
        }
}

TEST_CASE("JSON round trip") {
    Tower tw = Tower::build(2, 1, 2, 2, 3);
    SrBchCode code = srbch_construct(tw, 1, 3);
    std::string text = srbch_to_json(code);
    SrBchCode back = srbch_from_json(tw, text);
    CHECK(back.dim == code.dim);
    CHECK(back.genmat == code.genmat);
    CHECK(back.eq33 == code.eq33);
    CHECK_THROWS_AS(srbch_from_json(tw, "{}"), Error);
}
