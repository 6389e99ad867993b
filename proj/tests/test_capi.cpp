#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "lvb/lvb.h"

namespace {

using V = std::vector<int64_t>;

V take(lvb_seq * s)
{
    V v(lvb_seq_data(s), lvb_seq_data(s) + lvb_seq_size(s));
    lvb_seq_free(s);
    return v;
}

V const alpha{4, 3, 2, 1, 1};
V const nu{15, 14, 9, 4, 4};
V const lambda{8, 7, 6, 6, 5, 4, 3, 3, 2, 2, 0};

}  // namespace

TEST_CASE("forward and inverse through handles")
{
    lvb_seq * out = nullptr;
    REQUIRE(lvb_gamma_forward(alpha.data(), nu.data(), alpha.size(), &out) == LVB_OK);
    CHECK(take(out) == lambda);
    REQUIRE(lvb_gamma_via_diagrams(alpha.data(), nu.data(), alpha.size(), &out) == LVB_OK);
    CHECK(take(out) == lambda);

    lvb_seq * a = nullptr;
    lvb_seq * n = nullptr;
    REQUIRE(lvb_gamma_inverse(lambda.data(), lambda.size(), &a, &n) == LVB_OK);
    CHECK(take(a) == alpha);
    CHECK(take(n) == nu);

    REQUIRE(lvb_alg_A(alpha.data(), nu.data(), alpha.size(), &out) == LVB_OK);
    V mu = take(out);
    REQUIRE(lvb_two_rho(alpha.data(), alpha.size(), &out) == LVB_OK);
    V rho = take(out);
    REQUIRE(mu.size() == rho.size());
    V shifted;
    for (std::size_t i = 0; i < mu.size(); ++i)
        shifted.push_back(mu[i] + rho[i]);
    std::sort(shifted.rbegin(), shifted.rend());
    CHECK(shifted == lambda);
}

TEST_CASE("stages")
{
    lvb_stages * st = nullptr;
    REQUIRE(lvb_alg_A_stages(alpha.data(), nu.data(), alpha.size(), &st) == LVB_OK);
    CHECK(lvb_stages_count(st) == 4);
    lvb_seq const *sa, *sn, *ss, *sm;
    REQUIRE(lvb_stages_get(st, 0, &sa, &sn, &ss, &sm) == LVB_OK);
    CHECK(V(lvb_seq_data(ss), lvb_seq_data(ss) + lvb_seq_size(ss)) == V{4, 2, 1, 3, 5});
    CHECK(lvb_stages_get(st, 9, &sa, &sn, &ss, &sm) == LVB_ERR_INVALID_ARGUMENT);
    lvb_stages_free(st);
}

TEST_CASE("diagram functions")
{
    lvb_diagram * x = nullptr;
    lvb_diagram * y = nullptr;
    REQUIRE(lvb_alg_W(alpha.data(), nu.data(), alpha.size(), -1, &x, &y) == LVB_OK);
    CHECK(std::string(lvb_diagram_text(x)) == "4 5\n4 5 5\n4\n4 4 4 3\n4\n");
    lvb_diagram * e = nullptr;
    REQUIRE(lvb_e_map(x, &e) == LVB_OK);
    CHECK(std::string(lvb_diagram_text(e)) == std::string(lvb_diagram_text(y)));
    lvb_diagram * back = nullptr;
    REQUIRE(lvb_e_inverse(e, &back) == LVB_OK);
    CHECK(std::string(lvb_diagram_text(back)) == std::string(lvb_diagram_text(x)));

    lvb_seq * s = nullptr;
    REQUIRE(lvb_kappa(x, &s) == LVB_OK);
    CHECK(take(s) == nu);
    REQUIRE(lvb_shape_class(x, &s) == LVB_OK);
    CHECK(take(s) == alpha);
    REQUIRE(lvb_h_weight(x, &s) == LVB_OK);
    CHECK(take(s) == V{4, 4, 4, 4, 4, 5, 5, 4, 5, 4, 3});
    REQUIRE(lvb_eta(y, &s) == LVB_OK);
    CHECK(take(s) == lambda);
    int flag = 0;
    REQUIRE(lvb_is_distinguished(x, LVB_PARITY_ODD, &flag) == LVB_OK);
    CHECK(flag == 1);

    lvb_diagram * b = nullptr;
    REQUIRE(lvb_alg_B(lambda.data(), lambda.size(), -1, &b) == LVB_OK);
    CHECK(std::string(lvb_diagram_text(b)) == std::string(lvb_diagram_text(y)));

    lvb_diagram_free(b);
    lvb_diagram_free(back);
    lvb_diagram_free(e);
    lvb_diagram_free(x);
    lvb_diagram_free(y);
}

TEST_CASE("diagram construction")
{
    V data{1, 2, 3};
    std::size_t lens[] = {2, 1};
    lvb_diagram * d = nullptr;
    REQUIRE(lvb_diagram_from_rows(data.data(), lens, 2, &d) == LVB_OK);
    CHECK(lvb_diagram_rows(d) == 2);
    CHECK(lvb_diagram_row_length(d, 0) == 2);
    CHECK(lvb_diagram_row(d, 1)[0] == 3);
    CHECK(std::string(lvb_diagram_text(d)) == "1 2\n3\n");
    lvb_diagram_free(d);

    REQUIRE(lvb_diagram_parse("1 2\n3\n", &d) == LVB_OK);
    CHECK(lvb_diagram_rows(d) == 2);
    lvb_diagram_free(d);
    CHECK(lvb_diagram_parse("1 x\n", &d) == LVB_ERR_INVALID_ARGUMENT);
    CHECK(std::string(lvb_last_error()).size() > 0);
}

TEST_CASE("inverse pieces")
{
    lvb_diagram * c = nullptr;
    REQUIRE(lvb_clumps(lambda.data(), lambda.size(), &c) == LVB_OK);
    CHECK(lvb_diagram_rows(c) >= 1);
    lvb_diagram_free(c);
    V clump{3, 2, 1, 0};
    lvb_seq * m = nullptr;
    lvb_seq * r = nullptr;
    REQUIRE(lvb_majuscule_extract(clump.data(), clump.size(), -1, &m, &r) == LVB_OK);
    CHECK(take(m) == V{3, 1});
    CHECK(take(r) == V{2, 0});
}

TEST_CASE("oracles")
{
    V a{3, 2, 2, 1};
    V n{15, 8, 8, 4};
    int64_t v = 0;
    REQUIRE(lvb_min_norm_over_fillings(a.data(), n.data(), a.size(), 3, &v) == LVB_OK);
    CHECK(v == 189);

    V a1{2};
    V n1{7};
    lvb_diagram_list * l = nullptr;
    REQUIRE(lvb_enumerate_fillings(a1.data(), n1.data(), 1, 0, &l) == LVB_OK);
    CHECK(lvb_diagram_list_size(l) == 2);
    CHECK(std::string(lvb_diagram_text(lvb_diagram_list_get(l, 0))) == "3 4\n");
    lvb_diagram_list_free(l);

    REQUIRE(lvb_distinguished_fillings(alpha.data(), nu.data(), alpha.size(), 3, &l) == LVB_OK);
    CHECK(lvb_diagram_list_size(l) == 1);
    lvb_diagram_list_free(l);

    lvb_diagram * as = nullptr;
    lvb_diagram * ns = nullptr;
    REQUIRE(lvb_enumerate_omega(2, 2, &as, &ns) == LVB_OK);
    CHECK(lvb_diagram_rows(as) == 25);
    CHECK(lvb_diagram_rows(ns) == 25);
    lvb_diagram_free(as);
    lvb_diagram_free(ns);

    lvb_report * rep = nullptr;
    REQUIRE(lvb_roundtrip_sweep(3, 2, &rep) == LVB_OK);
    CHECK(lvb_report_ok(rep) == 1);
    CHECK(std::string(lvb_report_json(rep)).find("\"ok\":true") != std::string::npos);
    lvb_report_free(rep);
    REQUIRE(lvb_oracle_sweep(3, 1, -1, &rep) == LVB_OK);
    CHECK(lvb_report_ok(rep) == 1);
    lvb_report_free(rep);
}

TEST_CASE("error codes")
{
    lvb_seq * out = nullptr;
    V bad_alpha{1, 2};
    V n{0, 0};
    CHECK(lvb_alg_A(bad_alpha.data(), n.data(), 2, &out) == LVB_ERR_INVALID_ARGUMENT);
    V a{1, 1};
    V non_dom{0, 1};
    CHECK(lvb_gamma_forward(a.data(), non_dom.data(), 2, &out) == LVB_ERR_INVALID_ARGUMENT);
    CHECK(lvb_gamma_forward(a.data(), n.data(), 0, &out) == LVB_ERR_INVALID_ARGUMENT);
    CHECK(lvb_gamma_forward(nullptr, n.data(), 2, &out) == LVB_ERR_NULL_POINTER);
    CHECK(lvb_gamma_forward(a.data(), n.data(), 2, nullptr) == LVB_ERR_NULL_POINTER);
    V big{INT64_MAX, INT64_MAX};
    CHECK(lvb_gamma_forward(a.data(), big.data(), 2, &out) == LVB_ERR_OVERFLOW);
    V inc{0, 1};
    lvb_seq * b = nullptr;
    CHECK(lvb_gamma_inverse(inc.data(), 2, &out, &b) == LVB_ERR_INVALID_ARGUMENT);
    V wide{6};
    V z{0};
    int64_t v = 0;
    CHECK(lvb_min_norm_over_fillings(wide.data(), z.data(), 1, 100000, &v) == LVB_ERR_LIMIT);
    lvb_diagram * x = nullptr;
    lvb_diagram * y = nullptr;
    CHECK(lvb_alg_W(a.data(), n.data(), 2, 0, &x, &y) == LVB_ERR_INVALID_ARGUMENT);
    CHECK(std::string(lvb_status_name(LVB_ERR_LIMIT)).size() > 0);
    CHECK(std::string(lvb_status_name(LVB_OK)) != std::string(lvb_status_name(LVB_ERR_OVERFLOW)));
    // freeing null is a no-op
    lvb_seq_free(nullptr);
    lvb_diagram_free(nullptr);
    lvb_diagram_list_free(nullptr);
    lvb_stages_free(nullptr);
    lvb_report_free(nullptr);
}
