#pragma once

#include "dsset/decor.hpp"

namespace dsset {

/* hom-category of a strict 2-category: objects are 1-cells, arrows are 2-cells */
struct HomCat {
    std::vector<std::string> one;
    struct Arrow {
        int src = -1, tgt = -1;
        std::string name;
        bool operator==(const Arrow&) const = default;
    };
    std::vector<Arrow> two; // identities included
    std::vector<int> id2;   // per 1-cell
    std::vector<std::vector<int>> vcomp; // vcomp[b][a] = b after a, -1 if not composable

    int n1() const { return static_cast<int>(one.size()); }
    int n2() const { return static_cast<int>(two.size()); }
    int find1(const std::string& n) const;
    int arrow_between(int f, int g) const; // unique arrow f => g, -1 if none/multiple
    bool operator==(const HomCat&) const = default;
};

struct TwoCat {
    std::vector<std::string> objects;
    std::vector<std::vector<HomCat>> hom; // hom[x][y]
    std::vector<int> id1;                 // index in hom[x][x]
    // composition tables: comp1_[x][y][z][f][g] = "g after f" in hom(x,z)
    std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> comp1_;
    std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> comp2_;

    int n_obj() const { return static_cast<int>(objects.size()); }
    int comp1(int x, int y, int z, int f, int g) const { return comp1_[x][y][z][f][g]; }
    int comp2(int x, int y, int z, int a, int b) const { return comp2_[x][y][z][a][b]; }
    // whiskering: f in hom(x,y), beta: g=>g' in hom(y,z) gives beta*f in hom(x,z)
    int whisker_r(int x, int y, int z, int f, int beta) const {
        return comp2(x, y, z, hom[x][y].id2[f], beta);
    }
    // alpha: f=>f' in hom(x,y), g in hom(y,z)
    int whisker_l(int x, int y, int z, int alpha, int g) const {
        return comp2(x, y, z, alpha, hom[y][z].id2[g]);
    }
    void allocate_tables();
    void validate(std::string ctx = "") const; // all strict 2-category laws, exhaustively

    bool invertible2(int x, int y, int a) const;
    // equivalence search: g and invertible 2-cells gf ~ id, fg ~ id
    bool equivalence1(int x, int y, int f) const;
    int find_obj(const std::string& n) const;
    bool operator==(const TwoCat&) const = default;
};

struct MarkedTwoCat {
    TwoCat cat;
    std::set<std::tuple<int, int, int>> marked1;            // (x,y,f)
    std::set<std::tuple<int, int, int>> co2;                // (x,y,arrow), used by El
    bool is_marked(int x, int y, int f) const { return marked1.count({x, y, f}) > 0; }
};

// ensure every equivalence is marked (the "natural" normalization)
MarkedTwoCat mark_equivalences(const TwoCat& c);
MarkedTwoCat with_marking(const TwoCat& c, std::set<std::tuple<int, int, int>> marks,
                          bool add_equivalences);

struct TwoFunctor {
    const TwoCat* src = nullptr;
    const TwoCat* dst = nullptr;
    std::vector<int> obj;
    std::vector<std::vector<std::vector<int>>> one; // one[x][y][f]
    std::vector<std::vector<std::vector<int>>> two; // two[x][y][a]

    int on_obj(int x) const { return obj[x]; }
    int on_one(int x, int y, int f) const { return one[x][y][f]; }
    int on_two(int x, int y, int a) const { return two[x][y][a]; }
    void validate(std::string ctx = "") const;
    bool operator==(const TwoFunctor&) const = default;
};

TwoFunctor identity_functor(const TwoCat& c);

// ---- basic constructions ----

TwoCat terminal_twocat();
TwoCat o_cat(const std::vector<int>& I);
TwoCat two_cat_from_poset(const Poset& p);          // locally discrete
TwoCat simplex_twocat(int n);                        // [n] as a 2-category
TwoCat full_subcat(const TwoCat& c, const std::vector<int>& objs);
TwoCat product_twocat(const TwoCat& a, const TwoCat& b);

/* locally discrete 2-category from explicit 1-categorical data;
 * comp entries: (x, y, z, f, g) -> g.f for nonidentity composable pairs */
TwoCat make_locally_discrete(std::vector<std::string> objects,
                             std::map<std::pair<int, int>, std::vector<std::string>> homs,
                             std::map<std::tuple<int, int, int, int, int>, int> comp);

// inclusion of a full subcategory as a functor
TwoFunctor subcat_inclusion(const TwoCat& sub, const TwoCat& big, const std::vector<int>& objs);

// ---- slices ----

/* lax slice of f at d: objects are morphisms u: d -> f(c) */
struct SliceObject {
    int c;  // object of the source category
    int u;  // 1-cell in hom(d, f(c))
    bool operator<(const SliceObject& o) const { return std::tie(c, u) < std::tie(o.c, o.u); }
};
struct LaxSlice {
    TwoCat cat;
    std::vector<SliceObject> objs;
    // per hom, the (alpha, theta) pair behind each 1-cell and epsilon behind each 2-cell
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> one_data;
    std::map<std::pair<int, int>, std::vector<int>> two_data;
};
LaxSlice lax_slice(const TwoFunctor& f, int d);

TwoCat o_slice(const std::vector<int>& I); // O^I_{min I} per the explicit description
// object names in o_slice are subset names; helper to find them
int o_slice_object(const TwoCat& s, const std::vector<int>& subset);

// ---- nerves ----

PresentedSSet duskin_nerve(const TwoCat& c, int D);
DecoratedSSet scaled_nerve(const TwoCat& c, int D = 3);                 // SC
DecoratedSSet marked_scaled_nerve(const MarkedTwoCat& c, int D = 3);    // MS

/* structured access to nerve cells */
struct DuskinCell {
    std::vector<int> x;                        // vertices
    std::map<std::pair<int, int>, int> f;      // edges, i<j
    std::map<std::tuple<int, int, int>, int> a; // coherence 2-cells, i<j<k
    bool operator<(const DuskinCell& o) const {
        return std::tie(x, f, a) < std::tie(o.x, o.f, o.a);
    }
    bool operator==(const DuskinCell&) const = default;
};

struct DuskinNerve {
    const TwoCat* cat = nullptr;
    PresentedSSet sset;
    std::vector<std::vector<DuskinCell>> cells; // per dim <= min(D,4), nondegenerate
    int cell_of(int dim, const DuskinCell& c) const;
    DuskinCell face(const DuskinCell& c, int i) const;
    // normal form of an arbitrary tuple
    SimplexKey key_of(const DuskinCell& c) const;
};
DuskinNerve duskin_nerve_full(const TwoCat& c, int D);

// apply a strict functor to a nerve cell
DuskinCell map_cell(const TwoFunctor& F, const DuskinCell& c);

// ---- Fr and El ----

struct FrResult {
    MarkedTwoCat marked;           // dagger marking
    std::vector<SliceObject> objs; // (c, u) with base object recorded separately
    std::vector<int> base;         // d0 per object
    std::set<std::tuple<int, int, int>> cartesian1;
    // data behind 1-cells: (a0, alpha0, theta)
    std::map<std::pair<int, int>, std::vector<std::tuple<int, int, int>>> one_data;
    // data behind 2-cells: (psi, zeta)
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> two_data;
};
FrResult fr_construction(const TwoFunctor& f, const MarkedTwoCat& marked_src);

TwoCat fr_fibre(const FrResult& fr, int d, std::vector<int>* obj_sel = nullptr);

/* 2Cat-valued functor on C, contravariant on 1-cells: val[y] -F(f)-> val[x] */
struct TwoCatDiagram {
    const TwoCat* base = nullptr;
    std::vector<TwoCat> val;
    std::map<std::tuple<int, int, int>, TwoFunctor> on_one; // (x,y,f) -> functor val[y]->val[x]
    // (x,y,arrow) -> components: per object u of val[y], a 1-cell F(f)(u) -> F(g)(u) in val[x]
    std::map<std::tuple<int, int, int>, std::vector<int>> on_two;
    void validate() const;
};

struct ElResult {
    MarkedTwoCat marked; // marked = Cartesian, co2 = coCartesian 2-cells
    std::vector<std::pair<int, int>> objs; // (x, x_minus)
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> one_data; // (f, f_minus)
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> two_data; // (alpha, alpha_minus)
};
ElResult el_construction(const TwoCatDiagram& F);

// ---- functor enumeration ----

std::vector<TwoFunctor> enumerate_two_functors(const TwoCat& a, const TwoCat& b,
                                               long node_budget = 2'000'000);

bool two_cat_isomorphic(const TwoCat& a, const TwoCat& b);

// ---- json ----

std::string to_json(const TwoCat& c);
TwoCat twocat_from_json(const std::string& js);
std::string to_json(const TwoFunctor& f);
TwoFunctor twofunctor_from_json(const std::string& js, const TwoCat& src, const TwoCat& dst);

} // namespace dsset
