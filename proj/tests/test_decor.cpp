#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsset/decor.hpp"

using namespace dsset;

TEST_CASE("flavor invariants") {
    auto x = simplex_dec(2, Flavor::MB);
    x.validate();
    // thin insertion repairs lean with a report
    std::vector<int> repaired;
    auto y = sharpen(x, Field::Thin, {SimplexKey{2, 0, {}}}, &repaired);
    CHECK(repaired == std::vector<int>{0});
    CHECK(y.dec.lean.count(0) == 1);
    y.validate();
    // SC carries no marking data
    auto sc = simplex_dec(2, Flavor::SC);
    CHECK_THROWS(sharpen(sc, Field::Marking, {SimplexKey{1, 0, {}}}));
}

TEST_CASE("sharpen") {
    auto d1 = simplex_dec(1, Flavor::Marked);
    auto sharp = sharpen_all(d1, Field::Marking);
    CHECK(sharp.dec.marked.size() == 1);
    // (Delta^2,flat,flat<{012}) -- the (C3) generator target
    auto d2 = simplex_dec(2, Flavor::MB);
    auto c3 = sharpen(d2, Field::Lean, {SimplexKey{2, 0, {}}});
    CHECK(c3.dec.lean.size() == 1);
    CHECK(c3.dec.thin.empty());
    // key not in base
    CHECK_THROWS(sharpen(d2, Field::Lean, {SimplexKey{2, 5, {}}}));
}

TEST_CASE("convert functors") {
    // D then R_ms = identity on MS objects
    auto ms = sharpen_all(simplex_dec(2, Flavor::MS), Field::Thin);
    auto rt = convert(convert(ms, ConvertFunctor::D), ConvertFunctor::R_ms);
    CHECK(rt == ms);
    // L applied to (Delta^2, flat, flat < sharp) = (Delta^2, flat, sharp)
    auto mb = sharpen_all(simplex_dec(2, Flavor::MB), Field::Lean);
    auto l = convert(mb, ConvertFunctor::L);
    CHECK(l.flavor == Flavor::MS);
    CHECK(l.dec.thin.size() == 1);
    // L o R_mb = id on MS objects
    auto rt2 = convert(convert(ms, ConvertFunctor::R_mb), ConvertFunctor::L);
    CHECK(rt2 == ms);
    // I applied to (Delta^1)^sharp: lean = thin = all
    auto m1 = sharpen_all(simplex_dec(1, Flavor::Marked), Field::Marking);
    auto i = convert(m1, ConvertFunctor::I);
    CHECK(i.flavor == Flavor::MB);
    CHECK(i.dec.marked.size() == 1);
    // G drops marking
    auto g = convert(ms, ConvertFunctor::G);
    CHECK(g.flavor == Flavor::SC);
    // flat_to_ms
    auto f = convert(g, ConvertFunctor::FlatToMs);
    CHECK(f.flavor == Flavor::MS);
    CHECK(f.dec.marked.empty());
    // flavor mismatch
    CHECK_THROWS(convert(ms, ConvertFunctor::L));
}

TEST_CASE("convert is functorial on identities") {
    auto ms = sharpen_all(simplex_dec(2, Flavor::MS), Field::Thin);
    auto mb = convert(ms, ConvertFunctor::D);
    auto idm = decorated_map(ms, ms, identity_map(ms.base).image);
    std::string why;
    CHECK(idm.valid(&why));
    auto idc = decorated_map(mb, mb, identity_map(mb.base).image);
    CHECK(idc.valid(&why));
}

TEST_CASE("decorated products") {
    // X x Delta^0 = X
    auto x = sharpen(simplex_dec(2, Flavor::MS), Field::Thin, {SimplexKey{2, 0, {}}});
    auto pt = simplex_dec(0, Flavor::MS);
    auto p = decorated_product(x, pt, 2);
    CHECK(p.dec.thin.size() == 1);
    CHECK(p.base.total_cells() == x.base.total_cells());

    // (Delta^1)^flat x (Delta^1)^sharp: only first-factor-constant edges marked
    auto flat = simplex_dec(1, Flavor::Marked);
    auto sharp = sharpen_all(simplex_dec(1, Flavor::Marked), Field::Marking);
    auto q = decorated_product(flat, sharp, 2);
    CHECK(q.base.cell_count(1) == 5);
    CHECK(q.dec.marked.size() == 2);

    // K tensor X := I(K) x X, componentwise
    auto ik = convert(sharp, ConvertFunctor::I);
    auto xmb = sharpen(simplex_dec(2, Flavor::MB), Field::Lean, {SimplexKey{2, 0, {}}});
    auto t = decorated_product(ik, xmb, 2);
    t.validate();
    CHECK(!t.dec.lean.empty());
}

TEST_CASE("decorated maps check decorations") {
    auto flat = simplex_dec(1, Flavor::Marked);
    auto sharp = sharpen_all(simplex_dec(1, Flavor::Marked), Field::Marking);
    MapTable t = identity_map(flat.base).image;
    auto up = decorated_map(flat, sharp, t);
    std::string why;
    CHECK(up.valid(&why));
    auto down = decorated_map(sharp, flat, t);
    CHECK_FALSE(down.valid(&why));
}

TEST_CASE("decorated json and dot") {
    auto x = sharpen_all(simplex_dec(2, Flavor::MB), Field::Lean);
    auto js = to_json(x);
    auto back = decorated_from_json(js);
    CHECK(back == x);
    auto dot = to_dot(x);
    CHECK(dot.find("->") != std::string::npos);
}
