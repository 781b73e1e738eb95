#include <catch2/catch_amalgamated.hpp>

#include "braidkit/hopf.hpp"
#include "braidkit/presentation_json.hpp"
#include "braidkit/presentations.hpp"

using namespace braidkit;

TEST_CASE("SU_{q,phi}(2) tables", "[presentations]") {
    auto su = su_qphi2();
    CHECK(su->nf(su->antipode[static_cast<std::size_t>(su->index("gamma"))]) ==
          -Scalar::q() * Scalar::u(4) * su->g("gamma"));
    CHECK(su->counit[static_cast<std::size_t>(su->index("alpha"))] == Scalar(1));
    CHECK(su->counit[static_cast<std::size_t>(su->index("alpha*"))] == Scalar(1));
    // the counit axiom on alpha* forces the value 1
    auto d = coproduct(su, su->g("alpha*"));
    auto eps = [&](const Word& w) { return counit_word(*su, w); };
    CHECK(flatten(contract_slot(d, 0, eps)) == su->g("alpha*"));
    for (const auto& r : su->closed_relations) CHECK(counit(*su, r).is_zero());
}

TEST_CASE("U_{q,phi}(u-hat(2)) tables", "[presentations]") {
    auto U = uq_hat_u2();
    NCPoly e = U->g("e"), k = U->g("k"), ki = U->g("k^-1");
    CHECK(U->nf(e * k - Scalar::q() * Scalar::u(-4) * (k * e)).is_zero());
    CHECK(coproduct(U, e) == TensorPoly::simple({U, U}, {e, k}) + TensorPoly::simple({U, U}, {ki, e}));
    CHECK(antipode(*U, e) == -Scalar::q(-1) * Scalar::u(4) * e);
    CHECK(U->info(U->index("e")).delta() == -2);
    CHECK(U->info(U->index("f")).delta() == 2);
    CHECK(U->info(U->index("k")).delta() == 0);
    CHECK(U->info(U->index("k*")).delta() == 0);
}

TEST_CASE("U_{q,phi}(u(2)) tables", "[presentations]") {
    auto U = uq_u2();
    NCPoly e = U->g("e"), m = U->g("|k|"), V = U->g("U");
    CHECK(U->nf(e * m - Scalar::q() * (m * e)).is_zero());
    CHECK(coproduct(U, V) == TensorPoly::simple({U, U}, {V, V}));
    CHECK(antipode(*U, m) == U->g("|k|^-1"));
}

TEST_CASE("unbraided U_q(su(2)) tables", "[presentations]") {
    auto C = uq_su2_classical();
    NCPoly e = C->g("e"), f = C->g("f"), k = C->g("k"), ki = C->g("k^-1");
    Scalar q = Scalar::q();
    CHECK(C->nf(k * k - ki * ki - (f * e - e * f) * (q - Scalar::q(-1))).is_zero());
    CHECK(coproduct(C, e) == TensorPoly::simple({C, C}, {e, k}) + TensorPoly::simple({C, C}, {ki, e}));
    CHECK(C->star(k) == k);
    CHECK_FALSE(C->braided);
}

TEST_CASE("Podles sphere presentations", "[presentations]") {
    auto sp = podles_sphere();
    int e1 = sp->index("e1'"), e0 = sp->index("e0"), em1 = sp->index("em1'");
    Scalar q2 = Scalar::q(2), lam = Scalar::param("lambda");
    CHECK(sp->word_nf({e0, e1}) == NCPoly::word({e1, e0}, q2) + NCPoly::word({e1}, lam / (1 + q2)));
    CHECK(sp->info(e1).delta() == 2);
    CHECK(sp->info(e0).delta() == 0);
    CHECK(sp->info(em1).delta() == -2);
    CHECK(sp->star(NCPoly::gen(e1)) == NCPoly::gen(em1));

    auto spw = podles_sphere({false, 0, 0, false});
    int f0 = spw->index("e0"), fm1 = spw->index("em1'");
    CHECK(spw->word_nf({fm1, f0}) == NCPoly::word({f0, fm1}, Scalar::q(2) * Scalar::w(2)));
    CHECK_THROWS_AS(podles_sphere({false, 0, 0, true}), StarNotAdmissible);
}

TEST_CASE("JSON round trip", "[presentations][json]") {
    for (auto P : {su_qphi2(), uq_hat_u2(), uq_u2(), uq_su2_classical(), podles_sphere(),
                   podles_sphere({false, 0, 0, false}), sphere_unprimed(), sphere_alternate()}) {
        INFO(P->name);
        json doc = to_json(*P);
        auto Q = load_presentation(json::parse(doc.dump()));
        CHECK(same_presentation(*P, *Q));
        CHECK(to_json(*Q) == doc);
    }
}

TEST_CASE("JSON loader completes user relations", "[presentations][json]") {
    // quantum plane xy = q yx with a star; stated as a relation and completed by the loader
    json doc = json::parse(R"({
      "name": "plane",
      "parameters": [],
      "generators": [{"id": "x", "mu": 0, "nu": 0, "star": "y"}, {"id": "y", "mu": 0, "nu": 0, "star": "x"}],
      "relations": [{"lhs": ["y", "x"], "rhs": [{"coeff": {"num": [[1, [2]]]}, "word": ["x", "y"]}]}]
    })");
    auto P = load_presentation(doc);
    CHECK(P->word_nf({1, 0}) == NCPoly::word({0, 1}, Scalar::q()));
}

TEST_CASE("JSON loader errors", "[presentations][json]") {
    json good = to_json(*su_qphi2());

    json no_star = good;
    no_star["generators"][0].erase("star");
    CHECK_THROWS_AS(load_presentation(no_star), SchemaError);

    json bad_rel = good;
    bad_rel["verbatim"] = false;
    bad_rel["relations"].push_back(
        {{"lhs", {"alpha", "gamma"}}, {"rhs", {{{"coeff", 1}, {"word", {"alpha"}}}}}});
    CHECK_THROWS_AS(load_presentation(bad_rel), ValidationError);

    json unknown = good;
    unknown["relations"][0]["lhs"] = {"beta"};
    CHECK_THROWS_AS(load_presentation(unknown), ValidationError);

    json missing = good;
    missing.erase("generators");
    CHECK_THROWS_AS(load_presentation(missing), SchemaError);

    json bad_counit = good;
    bad_counit["counit"]["gamma"] = 1;
    CHECK_THROWS_AS(load_presentation(bad_counit), ValidationError);

    json bad_scalar = good;
    bad_scalar["counit"]["alpha"] = {{"den", json::array()}};
    CHECK_THROWS_AS(load_presentation(bad_scalar), SchemaError);
}
